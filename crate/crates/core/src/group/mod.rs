//! Link-group presentations, abelianization and abelianness certificates.

pub mod presentation;
pub mod rewriting;
pub mod smith;

use serde::{Deserialize, Serialize};

pub use presentation::{add_commutator, link_group, Presentation};
pub use rewriting::{knuth_bendix, CapHit, Caps, RewritingSystem};
pub use smith::{abelianization, smith_normal_form, SmithForm};

use crate::artin::FreeWord;
use crate::error::{Error, Result};

/// Outcome of the abelianness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AbelianVerdict {
    Abelian { rank: usize },
    /// `[x_i, x_j]` (generators numbered from 1) with its nontrivial normal form.
    NonAbelian { i: usize, j: usize, witness: FreeWord, normal_form: FreeWord },
    Inconclusive { cap: CapHit, rules: usize, passes: usize },
}

impl AbelianVerdict {
    pub fn is_abelian(&self) -> bool {
        matches!(self, AbelianVerdict::Abelian { .. })
    }
}

impl std::fmt::Display for AbelianVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AbelianVerdict::Abelian { rank } => write!(f, "Abelian, rank {rank}"),
            AbelianVerdict::NonAbelian { i, j, normal_form, .. } => {
                write!(f, "NonAbelian, [x{i}, x{j}] = {normal_form}")
            }
            AbelianVerdict::Inconclusive { cap, rules, passes } => {
                write!(f, "Inconclusive ({cap:?} cap hit after {passes} passes, {rules} rules)")
            }
        }
    }
}

/// Completes the presentation and checks every commutator `[x_i, x_j]`, `i < j`.
///
/// An abelian verdict whose abelianization carries torsion is reported as an
/// internal error: these groups have free `H_1`.
pub fn abelian_verdict(p: &Presentation, caps: &Caps) -> Result<AbelianVerdict> {
    let sys = knuth_bendix(p, caps);
    verdict_from_system(p, &sys)
}

pub fn verdict_from_system(p: &Presentation, sys: &RewritingSystem) -> Result<AbelianVerdict> {
    if !sys.confluent {
        return Ok(AbelianVerdict::Inconclusive {
            cap: sys.cap_hit.unwrap_or(CapHit::Passes),
            rules: sys.stats.rules,
            passes: sys.stats.passes,
        });
    }
    let m = p.generator_count();
    for i in 1..=m {
        for j in i + 1..=m {
            let c = FreeWord::commutator(&FreeWord::generator(m, i), &FreeWord::generator(m, j));
            let nf = sys.reduce_word(&c);
            if !nf.is_empty() {
                return Ok(AbelianVerdict::NonAbelian { i, j, witness: c, normal_form: nf });
            }
        }
    }
    let sf = abelianization(p);
    if !sf.torsion().is_empty() {
        return Err(Error::Internal(format!(
            "abelian verdict with torsion in the abelianization: {:?}",
            sf.torsion()
        )));
    }
    Ok(AbelianVerdict::Abelian { rank: sf.free_rank() })
}
