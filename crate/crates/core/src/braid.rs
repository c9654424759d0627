//! Braid words, their underlying permutations and the named braid families.
//!
//! A braid word on `m` strands is a list of signed generator indices: `g > 0`
//! is the positive crossing `σ_g`, `g < 0` is `σ_{|g|}^{-1}`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::artin;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: g as i64, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        Self { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let reps = n.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The same word read on a larger strand count.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Shifts every generator index by `offset` and places the word on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&g| g.signum() * (g.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Sum of crossing signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    /// Panics on a strand mismatch; use [`BraidWord::concat`] for a checked product.
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs).expect("strand count mismatch in braid product")
    }
}

impl fmt::Display for BraidWord {
    /// Prints the word in the token grammar accepted by [`parse_braid`], folding runs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return Ok(());
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == g {
                j += 1;
            }
            let run = (j - i) as i64 * g.signum() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "s{}", g.abs())?;
            } else {
                write!(f, "s{}^{}", g.abs(), run)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// A permutation of strand positions, stored 0-based: `images[p]` is the
/// final position of the strand that starts at position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            if p >= images.len() || seen[p] {
                return Err(Error::InvalidArgument(format!("not a permutation: {images:?}")));
            }
            seen[p] = true;
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `next`: `p ↦ next(self(p))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&p| next.images[p]).collect() }
    }

    /// Cycles (0-based), each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

/// Underlying permutation: strand positions tracked bottom to top, each
/// letter swapping positions `|g|` and `|g|+1`.
pub fn permutation_of(b: &BraidWord) -> Permutation {
    let m = b.strands;
    // strand_at[pos] = starting position of the strand currently at pos
    let mut strand_at: Vec<usize> = (0..m).collect();
    for &g in &b.letters {
        let i = g.unsigned_abs() as usize - 1;
        strand_at.swap(i, i + 1);
    }
    let mut images = vec![0; m];
    for (pos, &s) in strand_at.iter().enumerate() {
        images[s] = pos;
    }
    Permutation { images }
}

/// Exact equality in the braid group, decided through the faithful Artin action.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch { left: a.strands, right: b.strands });
    }
    Ok(artin::generator_images(a) == artin::generator_images(b))
}

/// The full twist `(σ_1⋯σ_{m−1})^{mN}`.
pub fn full_twist(strands: usize, n: i64) -> BraidWord {
    let base: Vec<i32> = (1..strands as i32).collect();
    BraidWord { strands, letters: base }.pow(n * strands as i64)
}

/// Full twist of the first `m−1` strands, `(σ_1⋯σ_{m−2})^{m−1}`.
pub fn partial_full_twist(strands: usize) -> BraidWord {
    let base: Vec<i32> = (1..strands as i32 - 1).collect();
    BraidWord { strands, letters: base }.pow(strands as i64 - 1)
}

// ---------------------------------------------------------------------------
// Parsing

/// Parses a braid word.
///
/// Token form, whitespace separated: `s<i>`, `s<i>^<n>`, `delta2`, `delta2^<n>`,
/// `delta'2`. Compact form: comma-separated signed generator indices such as
/// `1,1,-2,3`. An empty or blank string is the identity.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(Error::InvalidArgument("strand count must be positive".into()));
    }
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let compact = text.contains(',')
        || trimmed.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+');
    let mut letters = Vec::new();
    if compact {
        parse_compact(text, strands, &mut letters)?;
    } else {
        let mut offset = lead;
        for tok in trimmed.split_whitespace() {
            let pos = offset + text[offset..].find(tok).unwrap();
            offset = pos + tok.len();
            parse_token(tok, pos, strands, &mut letters)?;
        }
    }
    BraidWord::new(strands, letters)
}

fn parse_compact(text: &str, strands: usize, out: &mut Vec<i32>) -> Result<()> {
    let mut pos = 0;
    for field in text.split(',') {
        let start = pos + (field.len() - field.trim_start().len());
        let f = field.trim();
        pos += field.len() + 1;
        if f.is_empty() {
            return Err(Error::Syntax { pos: start, msg: "empty entry in compact braid".into() });
        }
        let g: i64 = f.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("expected a signed integer, found `{f}`"),
        })?;
        check_index(g, strands)?;
        out.push(g as i32);
    }
    Ok(())
}

fn check_index(g: i64, strands: usize) -> Result<()> {
    if g == 0 || g.unsigned_abs() as usize >= strands {
        return Err(Error::GeneratorOutOfRange { index: g, strands });
    }
    Ok(())
}

fn parse_token(tok: &str, pos: usize, strands: usize, out: &mut Vec<i32>) -> Result<()> {
    let syntax = |off: usize, msg: String| Error::Syntax { pos: pos + off, msg };
    let (head, exp) = match tok.find('^') {
        Some(i) => {
            let e = &tok[i + 1..];
            let n: i64 = e
                .parse()
                .map_err(|_| syntax(i + 1, format!("bad exponent `{e}`")))?;
            (&tok[..i], Some(n))
        }
        None => (tok, None),
    };
    match head {
        "delta2" => {
            out.extend_from_slice(&full_twist(strands, exp.unwrap_or(1)).letters);
        }
        "delta'2" => {
            if exp.is_some() {
                return Err(syntax(head.len(), "`delta'2` takes no exponent".into()));
            }
            if strands < 2 {
                return Err(syntax(0, "`delta'2` needs at least two strands".into()));
            }
            out.extend_from_slice(&partial_full_twist(strands).letters);
        }
        _ => {
            let idx = head
                .strip_prefix('s')
                .ok_or_else(|| syntax(0, format!("unknown token `{tok}`")))?;
            let g: i64 = idx
                .parse()
                .ok()
                .filter(|&g: &i64| g > 0)
                .ok_or_else(|| syntax(1, format!("bad generator index `{idx}`")))?;
            check_index(g, strands)?;
            let n = exp.unwrap_or(1);
            let letter = if n < 0 { -(g as i32) } else { g as i32 };
            out.extend(std::iter::repeat_n(letter, n.unsigned_abs() as usize));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Families

/// How the descending factor of `Y_{k,l,e}` is read. The printed factor
/// `σ_{k+1}σ_{k−1}⋯σ_3` skips `σ_k`; `Consecutive` emits `σ_{k+1}σ_k⋯σ_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YVariant {
    Verbatim,
    #[default]
    Consecutive,
}

/// Sign triple `e ∈ {±1}³`.
pub type Signs = [i8; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum FamilySpec {
    X { k: u32, l: u32, e: Signs },
    Y { k: u32, l: u32, e: Signs, variant: YVariant },
    Z { k: u32, e: Signs },
    P { k: u32 },
    Q { k: u32 },
    FullTwist { strands: usize, n: i64 },
    PartialFullTwist { strands: usize },
}

impl FamilySpec {
    pub fn strands(&self) -> usize {
        match *self {
            FamilySpec::X { k, l, .. } | FamilySpec::Y { k, l, .. } => (k + l + 2) as usize,
            FamilySpec::Z { k, .. } => (k + 3) as usize,
            FamilySpec::P { k } => (k + 2) as usize,
            FamilySpec::Q { .. } => 3,
            FamilySpec::FullTwist { strands, .. } | FamilySpec::PartialFullTwist { strands } => {
                strands
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
        let signs_ok = |e: &Signs| e.iter().all(|&s| s == 1 || s == -1);
        match self {
            FamilySpec::X { k, l, e } | FamilySpec::Y { k, l, e, .. } => {
                if *k < 1 || *l < 1 {
                    return bad("X and Y need k, l >= 1");
                }
                if !signs_ok(e) {
                    return bad("signs must be +1 or -1");
                }
            }
            FamilySpec::Z { k, e } => {
                if *k < 1 {
                    return bad("Z needs k >= 1");
                }
                if !signs_ok(e) {
                    return bad("signs must be +1 or -1");
                }
            }
            FamilySpec::P { k } | FamilySpec::Q { k } => {
                if *k < 1 {
                    return bad("P and Q need k >= 1");
                }
            }
            FamilySpec::FullTwist { strands, .. } => {
                if *strands < 1 {
                    return bad("full twist needs at least one strand");
                }
            }
            FamilySpec::PartialFullTwist { strands } => {
                if *strands < 2 {
                    return bad("partial full twist needs at least two strands");
                }
            }
        }
        Ok(())
    }
}

fn ascending(from: i32, to: i32) -> impl Iterator<Item = i32> {
    from..=to
}

fn descending(from: i32, to: i32) -> impl Iterator<Item = i32> {
    (to..=from).rev()
}

fn power(g: i32, n: i32) -> impl Iterator<Item = i32> {
    std::iter::repeat_n(if n < 0 { -g } else { g }, n.unsigned_abs() as usize)
}

fn repeated(block: &[i32], n: i32) -> Vec<i32> {
    let base: Vec<i32> = if n < 0 {
        block.iter().rev().map(|g| -g).collect()
    } else {
        block.to_vec()
    };
    let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
    for _ in 0..n.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

/// Builds the braid word of a named family.
pub fn make_family(spec: &FamilySpec) -> Result<BraidWord> {
    spec.validate()?;
    let m = spec.strands();
    let mut w: Vec<i32> = Vec::new();
    match *spec {
        FamilySpec::X { k, l, e } => {
            let (k, l) = (k as i32, l as i32);
            w.extend(power(1, 2 * e[0] as i32));
            w.extend(ascending(2, k));
            w.extend(power(k + 1, 2 * e[1] as i32));
            w.extend(ascending(k + 2, k + l));
            w.extend(power(k + l + 1, 2 * e[2] as i32));
        }
        FamilySpec::Y { k, l, e, variant } => {
            let (k, l) = (k as i32, l as i32);
            let run: Vec<i32> = ascending(1, k + l).collect();
            w.extend(repeated(&run, (k + l + 1) * e[0] as i32));
            w.extend(descending(k + l + 1, k + 3));
            w.extend(power(k + 2, 2 * e[1] as i32));
            match variant {
                YVariant::Consecutive => w.extend(descending(k + 1, 3)),
                YVariant::Verbatim => {
                    w.push(k + 1);
                    w.extend(descending(k - 1, 3));
                }
            }
            w.extend(power(2, 2 * e[2] as i32));
        }
        FamilySpec::Z { k, e } => {
            let k = k as i32;
            let first: Vec<i32> = ascending(1, k + 1).collect();
            let second: Vec<i32> = ascending(2, k + 2).collect();
            w.extend(repeated(&first, (k + 2) * e[0] as i32));
            w.extend(repeated(&second, (k + 2) * e[1] as i32));
            w.extend(descending(k + 2, 4));
            w.extend(power(3, 2 * e[2] as i32));
        }
        FamilySpec::P { k } => {
            let k = k as i32;
            w.extend(ascending(1, k - 1));
            w.extend(power(k, 2));
            w.extend(power(k + 1, 2));
        }
        FamilySpec::Q { k } => {
            w.extend(power(1, 2));
            w.extend(power(2, 2 * k as i32));
        }
        FamilySpec::FullTwist { strands, n } => return Ok(full_twist(strands, n)),
        FamilySpec::PartialFullTwist { strands } => return Ok(partial_full_twist(strands)),
    }
    BraidWord::new(m, w)
}
