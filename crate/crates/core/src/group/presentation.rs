use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::artin::{self, FreeWord};
use crate::braid::{braid_equal, BraidWord};
use crate::error::{Error, Result};

/// A finitely presented group `⟨x_1, …, x_m | relators⟩`.
///
/// Relators are freely reduced; empty and duplicate relators are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: usize,
    relators: Vec<FreeWord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Presentation {
    pub fn new(generators: usize, relators: impl IntoIterator<Item = FreeWord>) -> Result<Self> {
        let mut p = Presentation { generators, relators: Vec::new(), labels: None };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    pub fn free(generators: usize) -> Self {
        Presentation { generators, relators: Vec::new(), labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generators {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} generators",
                labels.len(),
                self.generators
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Appends a relator unless it is trivial or already present.
    pub fn push_relator(&mut self, r: FreeWord) -> Result<bool> {
        if r.rank() != self.generators {
            return Err(Error::DimensionMismatch(format!(
                "relator of rank {} in a presentation on {} generators",
                r.rank(),
                self.generators
            )));
        }
        let r = artin::free_reduce(r.letters(), self.generators)?;
        if r.is_empty() || self.relators.contains(&r) {
            return Ok(false);
        }
        self.relators.push(r);
        Ok(true)
    }

    /// One relator per line in `x1 x2 x1^-1` syntax, after a `# generators: m` header.
    pub fn to_text(&self) -> String {
        let mut s = format!("# generators: {}\n", self.generators);
        for r in &self.relators {
            writeln!(s, "{r}").unwrap();
        }
        s
    }

    /// Parses [`Presentation::to_text`] output. Without a header, `generators` must be given.
    pub fn parse_text(text: &str, generators: Option<usize>) -> Result<Presentation> {
        let mut count = generators;
        let mut lines = Vec::new();
        for line in text.lines() {
            let t = line.trim();
            if let Some(rest) = t.strip_prefix('#') {
                if let Some(v) = rest.trim().strip_prefix("generators:") {
                    let v = v.trim();
                    count = Some(v.parse().map_err(|_| Error::Syntax {
                        pos: 0,
                        msg: format!("bad generator count `{v}`"),
                    })?);
                }
                continue;
            }
            if !t.is_empty() {
                lines.push(t);
            }
        }
        let m = count.ok_or_else(|| Error::InvalidArgument("generator count unknown".into()))?;
        let relators = lines
            .into_iter()
            .map(|l| FreeWord::parse(l, m))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(m, relators)
    }
}

/// Link group of `S_m(a, b)`: generators `x_i`, relators `x_i^{-1} A^a(x_i)` and
/// `x_i^{-1} A^b(x_i)`.
pub fn link_group(a: &BraidWord, b: &BraidWord) -> Result<Presentation> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    if !braid_equal(&(a * b), &(b * a))? {
        return Err(Error::NonCommuting);
    }
    Ok(link_group_unchecked(a, b))
}

/// [`link_group`] without the commutativity check.
pub fn link_group_unchecked(a: &BraidWord, b: &BraidWord) -> Presentation {
    let m = a.strands();
    let mut p = Presentation::free(m);
    for braid in [a, b] {
        for (i, img) in artin::generator_images(braid).into_iter().enumerate() {
            let x = FreeWord::generator(m, i + 1);
            p.push_relator(x.inverse().mul(&img)).expect("ranks agree");
        }
    }
    p
}

/// Appends the commutator `[x_i, x_j]` (generators numbered from 1).
pub fn add_commutator(p: &Presentation, i: usize, j: usize) -> Result<Presentation> {
    let m = p.generator_count();
    for idx in [i, j] {
        if idx == 0 || idx > m {
            return Err(Error::IndexOutOfRange { index: idx, size: m });
        }
    }
    if i == j {
        return Err(Error::InvalidArgument(format!("commutator of x{i} with itself")));
    }
    let mut out = p.clone();
    let c = FreeWord::commutator(&FreeWord::generator(m, i), &FreeWord::generator(m, j));
    out.push_relator(c)?;
    Ok(out)
}
