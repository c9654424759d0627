//! Versioned JSON reports tying inputs to every computed invariant.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::{make_family, parse_braid, FamilySpec};
use crate::group::{abelian_verdict, link_group, AbelianVerdict, Caps, Presentation};
use crate::linking::{ComponentData, InvariantReport, LinkingMatrix, TorusLink};
use crate::Result;

pub const SCHEMA: u32 = 1;

/// How the basis pair was specified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinkInput {
    /// Explicit words; `b = Δ^{2N}` when `twist` is set and `braid_b` is absent.
    Words { strands: usize, braid_a: String, braid_b: Option<String>, twist: Option<i64> },
    /// A named family for `a` with `b = Δ^{2N}`.
    Family { family: FamilySpec, twist: i64 },
}

impl LinkInput {
    pub fn build(&self) -> Result<TorusLink> {
        match self {
            LinkInput::Words { strands, braid_a, braid_b, twist } => {
                let a = parse_braid(braid_a, *strands)?;
                match (braid_b, twist) {
                    (Some(b), _) => TorusLink::new(a, parse_braid(b, *strands)?),
                    (None, n) => Ok(TorusLink::with_full_twist(a, n.unwrap_or(1))),
                }
            }
            LinkInput::Family { family, twist } => {
                Ok(TorusLink::with_full_twist(make_family(family)?, *twist))
            }
        }
    }
}

/// Group of a link, using the central-twist shortcut when it applies.
pub fn group_of(link: &TorusLink) -> Result<Presentation> {
    if link.twist.is_some() {
        Ok(crate::group::presentation::link_group_unchecked(&link.a, &link.b))
    } else {
        link_group(&link.a, &link.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: LinkInput,
    /// Resolved words, in `s1^2 s3^-1` form.
    pub braid_a: String,
    pub braid_b: String,
    pub components: ComponentData,
    pub lk_a: LinkingMatrix,
    pub lk_b: LinkingMatrix,
    pub invariants: InvariantReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<AbelianVerdict>,
    /// Wall time of the whole computation in microseconds.
    pub elapsed_us: u64,
}

impl Report {
    /// Computes every invariant; the abelianness check runs only when `caps` is given.
    pub fn compute(input: &LinkInput, caps: Option<&Caps>) -> Result<Report> {
        let start = Instant::now();
        let link = input.build()?;
        let lk_a = link.lk_a()?;
        let lk_b = link.lk_b()?;
        let invariants = link.invariants()?;
        let verdict = match caps {
            Some(c) => Some(abelian_verdict(&group_of(&link)?, c)?),
            None => None,
        };
        Ok(Report {
            schema: SCHEMA,
            input: input.clone(),
            braid_a: link.a.to_string(),
            braid_b: match link.twist {
                Some(n) => format!("delta2^{n}"),
                None => link.b.to_string(),
            },
            components: link.components.clone(),
            lk_a,
            lk_b,
            invariants,
            verdict,
            elapsed_us: start.elapsed().as_micros() as u64,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }
}
