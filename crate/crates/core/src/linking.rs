//! Components of a torus-covering T²-link and its linking invariants.
//!
//! Component `i` is the orbit of strands under the group generated by the
//! permutations of both basis braids. Components are numbered by their
//! smallest strand. All indices in this module are 0-based.

use serde::{Deserialize, Serialize};

use crate::braid::{self, permutation_of, BraidWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    A,
    B,
}

/// Orbit decomposition of the strands of a basis pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentData {
    pub n: usize,
    /// Strand positions (0-based) of each component, ascending.
    pub orbits: Vec<Vec<usize>>,
    /// Covering degree of each component.
    pub degrees: Vec<usize>,
    /// Cycles of the `a` permutation, grouped by component.
    pub a_cycles: Vec<Vec<Vec<usize>>>,
    /// Cycles of the `b` permutation, grouped by component.
    pub b_cycles: Vec<Vec<Vec<usize>>>,
}

impl ComponentData {
    /// Component index of every strand.
    pub fn block_of(&self) -> Vec<usize> {
        let m = self.degrees.iter().sum();
        let mut out = vec![0; m];
        for (i, orbit) in self.orbits.iter().enumerate() {
            for &s in orbit {
                out[s] = i;
            }
        }
        out
    }

    pub fn strands(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn cycles(&self, dir: Direction) -> &[Vec<Vec<usize>>] {
        match dir {
            Direction::A => &self.a_cycles,
            Direction::B => &self.b_cycles,
        }
    }
}

/// Orbits of the strands under both basis-braid permutations.
///
/// Rejects pairs that do not commute in the braid group.
pub fn components(a: &BraidWord, b: &BraidWord) -> Result<ComponentData> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    if !braid::braid_equal(&(a * b), &(b * a))? {
        return Err(Error::NonCommuting);
    }
    Ok(components_unchecked(a, b))
}

/// [`components`] without the commutativity check.
pub fn components_unchecked(a: &BraidWord, b: &BraidWord) -> ComponentData {
    let m = a.strands();
    let (pa, pb) = (permutation_of(a), permutation_of(b));

    let mut block = vec![usize::MAX; m];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if block[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut stack = vec![start];
        let mut orbit = Vec::new();
        block[start] = id;
        while let Some(s) = stack.pop() {
            orbit.push(s);
            for t in [pa.apply(s), pb.apply(s)] {
                if block[t] == usize::MAX {
                    block[t] = id;
                    stack.push(t);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let n = orbits.len();
    let group = |p: &braid::Permutation| {
        let mut per: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        for cycle in p.cycles() {
            per[block[cycle[0]]].push(cycle);
        }
        per
    };
    ComponentData {
        n,
        degrees: orbits.iter().map(Vec::len).collect(),
        a_cycles: group(&pa),
        b_cycles: group(&pb),
        orbits,
    }
}

/// Directional linking numbers `lk(A_i, Ã_j)`; the diagonal is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub direction: Direction,
    pub entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// Linking matrix of `w`, taking `A_i` to be the cycle of `w` through the
/// smallest strand of component `i`.
pub fn lk_matrix(w: &BraidWord, cd: &ComponentData, dir: Direction) -> Result<LinkingMatrix> {
    let choice = vec![0; cd.n];
    lk_matrix_with_choice(w, cd, dir, &choice)
}

/// Linking matrix with an explicit cycle choice: `choice[i]` indexes the
/// cycles of `w` inside component `i`, ordered by smallest strand.
pub fn lk_matrix_with_choice(
    w: &BraidWord,
    cd: &ComponentData,
    dir: Direction,
    choice: &[usize],
) -> Result<LinkingMatrix> {
    let m = cd.strands();
    if w.strands() != m {
        return Err(Error::StrandMismatch { left: w.strands(), right: m });
    }
    if choice.len() != cd.n {
        return Err(Error::DimensionMismatch(format!(
            "{} cycle choices for {} components",
            choice.len(),
            cd.n
        )));
    }
    let block = cd.block_of();

    // Cycles of w, grouped by component.
    let mut per: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cd.n];
    for cycle in permutation_of(w).cycles() {
        let b = block[cycle[0]];
        if cycle.iter().any(|&s| block[s] != b) {
            return Err(Error::InvalidArgument(
                "braid permutation mixes components of the given component data".into(),
            ));
        }
        per[b].push(cycle);
    }
    let mut chosen = vec![false; m];
    for (i, cycles) in per.iter().enumerate() {
        let c = cycles
            .get(choice[i])
            .ok_or(Error::IndexOutOfRange { index: choice[i], size: cycles.len() })?;
        for &s in c {
            chosen[s] = true;
        }
    }

    let n = cd.n;
    let mut sums = vec![vec![0i64; n]; n];
    let mut strand_at: Vec<usize> = (0..m).collect();
    for &g in w.letters() {
        let p = g.unsigned_abs() as usize - 1;
        let (s, t) = (strand_at[p], strand_at[p + 1]);
        let sign = g.signum() as i64;
        let (bs, bt) = (block[s], block[t]);
        if bs != bt {
            if chosen[s] {
                sums[bs][bt] += sign;
            }
            if chosen[t] {
                sums[bt][bs] += sign;
            }
        }
        strand_at.swap(p, p + 1);
    }

    for (i, row) in sums.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if *v % 2 != 0 {
                return Err(Error::Internal(format!(
                    "odd crossing sum {v} for components ({i}, {j})"
                )));
            }
            *v /= 2;
        }
    }
    Ok(LinkingMatrix { direction: dir, entries: sums })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `N(lk + m_i + m_j) mod 2`.
pub fn dlk_entry(n_twist: i64, lk: i64, mi: usize, mj: usize) -> u8 {
    (n_twist * (lk + mi as i64 + mj as i64)).rem_euclid(2) as u8
}

/// `N(lk + (m_i m_j / lcm)(lcm − 1)) mod 2`, with `lcm = lcm(m_i, m_j)`.
pub fn dlk_entry_lcm(n_twist: i64, lk: i64, mi: usize, mj: usize) -> u8 {
    let lcm = mi / gcd(mi, mj) * mj;
    let curves = (mi * mj / lcm) as i64;
    (n_twist * (lk + curves * (lcm as i64 - 1))).rem_euclid(2) as u8
}

/// Double linking numbers of `S_m(a, Δ^{2N})` from the `a`-direction matrix.
/// Diagonal entries are 0.
pub fn dlk_from_lk(lk_a: &LinkingMatrix, degrees: &[usize], n_twist: i64) -> Result<Vec<Vec<u8>>> {
    let n = lk_a.n();
    if degrees.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} degrees for a {n}x{n} linking matrix",
            degrees.len()
        )));
    }
    let mut out = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let lk = lk_a.get(i, j);
            let main = dlk_entry(n_twist, lk, degrees[i], degrees[j]);
            let lcm_form = dlk_entry_lcm(n_twist, lk, degrees[i], degrees[j]);
            if main != lcm_form {
                return Err(Error::Internal(format!(
                    "Dlk forms disagree at ({i}, {j}): {main} vs {lcm_form}"
                )));
            }
            out[i][j] = main;
        }
    }
    Ok(out)
}

/// Double linking numbers of `S_m(a, Δ^{2N})`.
pub fn dlk_delta(a: &BraidWord, n_twist: i64, cd: &ComponentData) -> Result<Vec<Vec<u8>>> {
    let lk_a = lk_matrix(a, cd, Direction::A)?;
    dlk_from_lk(&lk_a, &cd.degrees, n_twist)
}

/// Double linking number of any two components of `S_m(a, a^N)`.
pub fn dlk_selfpower(n: i64) -> u8 {
    n.rem_euclid(2) as u8
}

/// Triple linking numbers `Tlk[i][j][k]`; zero unless `i, j, k` are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TlkTensor {
    pub values: Vec<Vec<Vec<i64>>>,
}

impl TlkTensor {
    pub fn zeros(n: usize) -> Self {
        Self { values: vec![vec![vec![0; n]; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.values[i][j][k]
    }

    /// `Tlk[i][j][k] = −Tlk[k][j][i]` for all indices.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.values[i][j][k] == -self.values[k][j][i]))
        })
    }

    /// The cyclic triple `(Tlk_{i,j,k}, Tlk_{j,k,i}, Tlk_{k,i,j})`.
    pub fn cyclic(&self, i: usize, j: usize, k: usize) -> (i64, i64, i64) {
        (self.get(i, j, k), self.get(j, k, i), self.get(k, i, j))
    }
}

/// `Tlk_{i,j,k} = lk^a_{j,i} lk^b_{j,k} − lk^a_{j,k} lk^b_{j,i}`.
pub fn tlk(lk_a: &LinkingMatrix, lk_b: &LinkingMatrix) -> Result<TlkTensor> {
    let n = lk_a.n();
    if lk_b.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "linking matrices of size {n} and {}",
            lk_b.n()
        )));
    }
    let mut t = TlkTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                t.values[i][j][k] = lk_a.get(j, i) * lk_b.get(j, k) - lk_a.get(j, k) * lk_b.get(j, i);
            }
        }
    }
    Ok(t)
}

/// Triple linking numbers for `b = Δ^{2N}`, checked against
/// `N(m_k lk^a_{j,i} − m_i lk^a_{j,k})`.
pub fn tlk_full_twist(
    lk_a: &LinkingMatrix,
    lk_b: &LinkingMatrix,
    degrees: &[usize],
    n_twist: i64,
) -> Result<TlkTensor> {
    let t = tlk(lk_a, lk_b)?;
    let n = t.n();
    if degrees.len() != n {
        return Err(Error::DimensionMismatch(format!("{} degrees for {n} components", degrees.len())));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let short = n_twist
                    * (degrees[k] as i64 * lk_a.get(j, i) - degrees[i] as i64 * lk_a.get(j, k));
                if short != t.get(i, j, k) {
                    return Err(Error::Internal(format!(
                        "Tlk shortcut disagrees at ({i}, {j}, {k}): {} vs {short}",
                        t.get(i, j, k)
                    )));
                }
            }
        }
    }
    Ok(t)
}

/// `Σ_{i≠j, j≠k} |Tlk_{i,j,k}|`, a lower bound for the triple point number.
pub fn triple_point_lower_bound(t: &TlkTensor) -> u64 {
    let n = t.n();
    let mut total = 0u64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k {
                    total += t.get(i, j, k).unsigned_abs();
                }
            }
        }
    }
    total
}

/// Meridian coordinates of the images of the preferred basis curves of
/// component `j`: row 0 from the `a` direction, row 1 from `b`, entry `j` zeroed.
pub fn peripheral_matrix(j: usize, lk_a: &LinkingMatrix, lk_b: &LinkingMatrix) -> Result<[Vec<i64>; 2]> {
    let n = lk_a.n();
    if lk_b.n() != n {
        return Err(Error::DimensionMismatch(format!("linking matrices of size {n} and {}", lk_b.n())));
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, size: n });
    }
    let mut rows = [lk_a.entries[j].clone(), lk_b.entries[j].clone()];
    rows[0][j] = 0;
    rows[1][j] = 0;
    Ok(rows)
}

/// Peripheral rows of component `j` in the meridian coordinates of the other
/// components (column `j` removed), spanning its peripheral lattice.
pub fn peripheral_lattice(j: usize, rows: &[Vec<i64>; 2]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
        .collect()
}

/// Dlk, Tlk, the triple point lower bound and peripheral data of a link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Present when the second basis braid is a full twist power.
    pub dlk: Option<Vec<Vec<u8>>>,
    pub tlk: TlkTensor,
    pub triple_point_lower_bound: u64,
    pub peripheral: Vec<[Vec<i64>; 2]>,
}

/// A torus-covering T²-link given by a commuting basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusLink {
    pub a: BraidWord,
    pub b: BraidWord,
    /// `Some(N)` when `b = Δ^{2N}`.
    pub twist: Option<i64>,
    pub components: ComponentData,
}

impl TorusLink {
    pub fn new(a: BraidWord, b: BraidWord) -> Result<Self> {
        let components = components(&a, &b)?;
        Ok(Self { a, b, twist: None, components })
    }

    /// `S_m(a, Δ^{2N})`. The full twist is central, so no commutativity check is needed.
    pub fn with_full_twist(a: BraidWord, n_twist: i64) -> Self {
        let b = braid::full_twist(a.strands(), n_twist);
        let components = components_unchecked(&a, &b);
        Self { a, b, twist: Some(n_twist), components }
    }

    pub fn n(&self) -> usize {
        self.components.n
    }

    pub fn lk_a(&self) -> Result<LinkingMatrix> {
        lk_matrix(&self.a, &self.components, Direction::A)
    }

    pub fn lk_b(&self) -> Result<LinkingMatrix> {
        lk_matrix(&self.b, &self.components, Direction::B)
    }

    pub fn dlk(&self) -> Result<Option<Vec<Vec<u8>>>> {
        match self.twist {
            Some(n) => Ok(Some(dlk_from_lk(&self.lk_a()?, &self.components.degrees, n)?)),
            None => Ok(None),
        }
    }

    pub fn tlk(&self) -> Result<TlkTensor> {
        let (la, lb) = (self.lk_a()?, self.lk_b()?);
        match self.twist {
            Some(n) => tlk_full_twist(&la, &lb, &self.components.degrees, n),
            None => tlk(&la, &lb),
        }
    }

    pub fn invariants(&self) -> Result<InvariantReport> {
        let (la, lb) = (self.lk_a()?, self.lk_b()?);
        let dlk = match self.twist {
            Some(n) => Some(dlk_from_lk(&la, &self.components.degrees, n)?),
            None => None,
        };
        let t = match self.twist {
            Some(n) => tlk_full_twist(&la, &lb, &self.components.degrees, n)?,
            None => tlk(&la, &lb)?,
        };
        let peripheral = (0..self.n())
            .map(|j| peripheral_matrix(j, &la, &lb))
            .collect::<Result<Vec<_>>>()?;
        Ok(InvariantReport {
            dlk,
            triple_point_lower_bound: triple_point_lower_bound(&t),
            tlk: t,
            peripheral,
        })
    }
}
