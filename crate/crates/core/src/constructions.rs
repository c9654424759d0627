//! Genus-rank feasibility and two constructive families of abelian surface links,
//! modelled as link-group presentations with a ledger of component genera.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::artin::FreeWord;
use crate::group::{abelian_verdict, add_commutator, AbelianVerdict, Caps, Presentation};
use crate::{Error, Result};

/// Genera of the components of a surface link, one entry per component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusProfile {
    pub genera: Vec<u64>,
}

impl GenusProfile {
    pub fn new(genera: Vec<u64>) -> Self {
        GenusProfile { genera }
    }

    pub fn n(&self) -> usize {
        self.genera.len()
    }

    pub fn total(&self) -> u64 {
        self.genera.iter().sum()
    }

    /// Parses `1,1,0` style lists.
    pub fn parse(text: &str) -> Result<Self> {
        let genera = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u64>().map_err(|_| Error::InvalidArgument(format!("bad genus `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(GenusProfile { genera })
    }
}

/// The first sorted prefix violating `k(k-1) < 4 G_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixFailure {
    pub k: usize,
    /// `k(k-1)`
    pub pairs: u64,
    /// `4 G_k`
    pub bound: u64,
}

impl fmt::Display for PrefixFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "prefix k={}: {} < {} fails", self.k, self.pairs, self.bound)
    }
}

/// Checks every prefix of the ascending genus list; sub-multisets are dominated
/// by prefixes of the same size, so this covers all sublinks.
pub fn check_feasible(p: &GenusProfile) -> std::result::Result<(), PrefixFailure> {
    let mut sorted = p.genera.clone();
    sorted.sort_unstable();
    let mut prefix = 0u64;
    for (idx, g) in sorted.iter().enumerate() {
        prefix += g;
        let k = idx + 1;
        if k < 2 {
            continue;
        }
        let pairs = (k * (k - 1)) as u64;
        let bound = 4 * prefix;
        if pairs >= bound {
            return Err(PrefixFailure { k, pairs, bound });
        }
    }
    Ok(())
}

/// Necessary condition for an abelian surface link with this profile.
pub fn genus_rank_feasible(p: &GenusProfile) -> bool {
    check_feasible(p).is_ok()
}

/// One entry of a construction log. Generators and components are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// The starting link: `components` components with the given genera.
    Base { description: String, genera: Vec<u64> },
    /// A new component of genus `genus`, with generator `x_generator`.
    AddComponent { generator: usize, genus: u64 },
    /// Relator `[x_i, x_j]`, realized by a 1-handle on component `charged_to`.
    AddCommutator { i: usize, j: usize, charged_to: usize },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Base { description, genera } => write!(f, "base {description}, genera {genera:?}"),
            Step::AddComponent { generator, genus } => {
                write!(f, "add component x{generator} of genus {genus}")
            }
            Step::AddCommutator { i, j, charged_to } => {
                write!(f, "add [x{i}, x{j}], 1-handle on component {charged_to}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub presentation: Presentation,
    pub rank: usize,
    pub total_genus: u64,
    pub component_genera: Vec<u64>,
    pub steps: Vec<Step>,
    /// Filled in by [`ConstructionRecord::certify`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<AbelianVerdict>,
}

impl ConstructionRecord {
    fn base(presentation: Presentation, genera: Vec<u64>, description: String) -> Self {
        ConstructionRecord {
            rank: presentation.generator_count(),
            total_genus: genera.iter().sum(),
            component_genera: genera.clone(),
            steps: vec![Step::Base { description, genera }],
            presentation,
            verdict: None,
        }
    }

    pub fn profile(&self) -> GenusProfile {
        GenusProfile::new(self.component_genera.clone())
    }

    /// Number of commutator additions in the log.
    pub fn commutator_steps(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::AddCommutator { .. })).count()
    }

    fn commute(&mut self, i: usize, j: usize, charged_to: usize) -> Result<()> {
        self.presentation = add_commutator(&self.presentation, i, j)?;
        self.component_genera[charged_to - 1] += 1;
        self.total_genus += 1;
        self.steps.push(Step::AddCommutator { i, j, charged_to });
        Ok(())
    }

    /// Runs the abelianness check and stores the verdict. A completed verdict
    /// other than `Abelian(rank)` is an error.
    pub fn certify(mut self, caps: &Caps) -> Result<Self> {
        let v = abelian_verdict(&self.presentation, caps)?;
        match &v {
            AbelianVerdict::Abelian { rank } if *rank == self.rank => {}
            AbelianVerdict::Inconclusive { .. } => {}
            other => {
                return Err(Error::Internal(format!(
                    "construction of rank {} produced {other}",
                    self.rank
                )))
            }
        }
        self.verdict = Some(v);
        Ok(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    /// Human-readable step log.
    pub fn log(&self) -> String {
        let mut s = String::new();
        for (n, step) in self.steps.iter().enumerate() {
            s.push_str(&format!("{:>3}. {step}\n", n + 1));
        }
        s.push_str(&format!(
            "rank {}, total genus {}, genera {:?}\n",
            self.rank, self.total_genus, self.component_genera
        ));
        if let Some(v) = &self.verdict {
            s.push_str(&format!("verdict: {v}\n"));
        }
        s
    }
}

/// Rank-`n` tower: start from one unknotted sphere and repeatedly add a
/// component of genus equal to the current rank that commutes with everything.
pub fn plus_tower(n: usize) -> Result<ConstructionRecord> {
    if n == 0 {
        return Err(Error::InvalidArgument("plus_tower needs n >= 1".into()));
    }
    let mut rec = ConstructionRecord::base(Presentation::free(1), vec![0], "unknotted sphere".into());
    for rank in 1..n {
        let m = rank + 1;
        let mut p = Presentation::free(m);
        for r in rec.presentation.relators() {
            let widened = crate::artin::free_reduce(r.letters(), m)?;
            p.push_relator(widened)?;
        }
        for i in 1..m {
            p.push_relator(FreeWord::commutator(&FreeWord::generator(m, m), &FreeWord::generator(m, i)))?;
        }
        rec.presentation = p;
        rec.rank = m;
        rec.component_genera.push(rank as u64);
        rec.total_genus += rank as u64;
        rec.steps.push(Step::AddComponent { generator: m, genus: rank as u64 });
    }
    Ok(rec)
}

/// Commutator schedule applied after `[x_1, x_n]`: `(i, j, charged_to)`.
pub fn highgenus_schedule(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for s in (6..=n).rev() {
        for i in 2..=s - 3 {
            out.push((s, i, s));
        }
        out.push((1, s - 1, 1));
    }
    if n >= 5 {
        out.push((5, 2, 5));
    }
    out
}

/// Torus-link construction of rank `n > 4` and genus `(n^2 - 3n + 4)/2`.
///
/// Starts from the group of `S_n(σ_1^2 ⋯ σ_{n-1}^2, Δ^2)`: every `x_i` commutes
/// with `c = x_1 ⋯ x_n` and with its neighbours.
pub fn highgenus(n: usize) -> Result<ConstructionRecord> {
    if n <= 4 {
        return Err(Error::InvalidArgument(format!("highgenus needs n > 4, got {n}")));
    }
    let c = (1..=n).fold(FreeWord::identity(n), |acc, i| acc.mul(&FreeWord::generator(n, i)));
    let mut p = Presentation::free(n);
    for i in 1..=n {
        p.push_relator(FreeWord::commutator(&FreeWord::generator(n, i), &c))?;
    }
    for i in 1..n {
        p.push_relator(FreeWord::commutator(&FreeWord::generator(n, i), &FreeWord::generator(n, i + 1)))?;
    }
    let mut rec = ConstructionRecord::base(p, vec![1; n], format!("S_{n}(s1^2 ... s{}^2, delta2)", n - 1));
    rec.commute(1, n, 1)?;
    for (i, j, owner) in highgenus_schedule(n) {
        rec.commute(i, j, owner)?;
    }
    Ok(rec)
}
