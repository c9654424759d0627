//! Integer lattice membership by row echelon reduction over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-echelon basis of the lattice spanned by `rows`, with positive pivots.
pub fn echelon_basis(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut top = 0;
    for c in 0..cols {
        if top == m.len() {
            break;
        }
        // Euclid on column c among rows top.. until a single nonzero remains.
        loop {
            let pivot = (top..m.len())
                .filter(|&r| !m[r][c].is_zero())
                .min_by(|&x, &y| m[x][c].abs().cmp(&m[y][c].abs()));
            let Some(p) = pivot else { break };
            m.swap(top, p);
            let mut done = true;
            for r in top + 1..m.len() {
                if m[r][c].is_zero() {
                    continue;
                }
                let q = m[r][c].div_floor(&m[top][c]);
                let (head, tail) = m.split_at_mut(r);
                for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                    *x -= &q * y;
                }
                if !m[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < m.len() && !m[top][c].is_zero() {
            if m[top][c].is_negative() {
                for x in m[top].iter_mut() {
                    *x = -&*x;
                }
            }
            top += 1;
        }
    }
    m.truncate(top);
    m
}

/// Whether `v` is an integer combination of `rows`.
pub fn lattice_contains(rows: &[Vec<i64>], v: &[i64]) -> bool {
    if rows.iter().any(|r| r.len() != v.len()) {
        return false;
    }
    let basis = echelon_basis(rows);
    let mut rest: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    for row in &basis {
        let c = row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
        if rest[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = rest[c].div_rem(&row[c]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    rest.iter().all(Zero::is_zero)
}
