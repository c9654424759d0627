//! Freely reduced words in `F_m` and the Artin action of braids on them.
//!
//! Convention: `σ_j` sends `x_j ↦ x_{j+1}`, `x_{j+1} ↦ x_{j+1}^{-1} x_j x_{j+1}` and
//! fixes the other generators. Braid words act on the left, `A^{uv} = A^u ∘ A^v`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A freely reduced word over `x_1, …, x_rank`; letter `i > 0` is `x_i`, `-i` is `x_i^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "generator x{i} out of range for rank {rank}");
        Self { rank, letters: vec![i as i32] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        push_reduced(&mut letters, &other.letters);
        FreeWord { rank: self.rank, letters }
    }

    /// Commutator `a^{-1} b^{-1} a b`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &g in &self.letters {
            v[g.unsigned_abs() as usize - 1] += g.signum() as i64;
        }
        v
    }

    /// Parses `x1 x2^-1 x3^2`; `1` or an empty string is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in text.split_whitespace() {
            let pos = offset + text[offset..].find(tok).unwrap();
            offset = pos + tok.len();
            if tok == "1" {
                continue;
            }
            let syntax = |msg: String| Error::Syntax { pos, msg };
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => {
                    let n: i64 = e.parse().map_err(|_| syntax(format!("bad exponent `{e}`")))?;
                    (h, n)
                }
                None => (tok, 1),
            };
            let idx: usize = head
                .strip_prefix('x')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| syntax(format!("unknown token `{tok}`")))?;
            if idx == 0 || idx > rank {
                return Err(Error::GeneratorOutOfRange { index: idx as i64, strands: rank });
            }
            let g = if exp < 0 { -(idx as i32) } else { idx as i32 };
            for _ in 0..exp.unsigned_abs() {
                letters.push(g);
            }
        }
        free_reduce(&letters, rank)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == g {
                j += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let run = (j - i) as i64 * g.signum() as i64;
            if run == 1 {
                write!(f, "x{}", g.abs())?;
            } else {
                write!(f, "x{}^{}", g.abs(), run)?;
            }
            i = j;
        }
        Ok(())
    }
}

fn push_reduced(acc: &mut Vec<i32>, tail: &[i32]) {
    for &g in tail {
        if acc.last() == Some(&-g) {
            acc.pop();
        } else {
            acc.push(g);
        }
    }
}

/// Freely reduces a letter list.
pub fn free_reduce(letters: &[i32], rank: usize) -> Result<FreeWord> {
    for &g in letters {
        if g == 0 || g.unsigned_abs() as usize > rank {
            return Err(Error::GeneratorOutOfRange { index: g as i64, strands: rank });
        }
    }
    let mut out = Vec::with_capacity(letters.len());
    push_reduced(&mut out, letters);
    Ok(FreeWord { rank, letters: out })
}

/// `A^b(x_i)` for every generator, as reduced words.
pub fn generator_images(b: &BraidWord) -> Vec<FreeWord> {
    let m = b.strands();
    let mut images: Vec<Vec<i32>> = (1..=m as i32).map(|i| vec![i]).collect();
    // Appending a letter on the right composes its substitution on the inside:
    // A^{wσ}(x) = A^w(A^σ(x)), so new images are old images substituted into A^σ(x_i).
    for &g in b.letters() {
        let j = g.unsigned_abs() as usize - 1;
        let (lo, hi) = (images[j].clone(), images[j + 1].clone());
        if g > 0 {
            // x_j ↦ x_{j+1}, x_{j+1} ↦ x_{j+1}^{-1} x_j x_{j+1}
            let mut w = invert(&hi);
            push_reduced(&mut w, &lo);
            push_reduced(&mut w, &hi);
            images[j] = hi;
            images[j + 1] = w;
        } else {
            // x_j ↦ x_j x_{j+1} x_j^{-1}, x_{j+1} ↦ x_j
            let mut w = lo.clone();
            push_reduced(&mut w, &hi);
            push_reduced(&mut w, &invert(&lo));
            images[j] = w;
            images[j + 1] = lo;
        }
    }
    images.into_iter().map(|letters| FreeWord { rank: m, letters }).collect()
}

fn invert(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|g| -g).collect()
}

/// Substitutes generator images into `w`.
pub fn substitute(images: &[FreeWord], w: &FreeWord) -> FreeWord {
    let rank = images.first().map_or(w.rank, |x| x.rank);
    let mut out = Vec::new();
    for &g in &w.letters {
        let img = &images[g.unsigned_abs() as usize - 1].letters;
        if g > 0 {
            push_reduced(&mut out, img);
        } else {
            push_reduced(&mut out, &invert(img));
        }
    }
    FreeWord { rank, letters: out }
}

/// The reduced image `A^b(w)`.
pub fn artin_apply(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if b.strands() != w.rank {
        return Err(Error::StrandMismatch { left: b.strands(), right: w.rank });
    }
    Ok(substitute(&generator_images(b), w))
}
