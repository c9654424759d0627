//! Shortlex Knuth–Bendix completion for group presentations.
//!
//! Symbols: `x_i ↦ 2(i−1)`, `x_i^{-1} ↦ 2(i−1)+1`, so the alphabet order is
//! `x_1 < x_1^{-1} < x_2 < x_2^{-1} < …`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use crate::artin::{self, FreeWord};

pub type Sym = u32;

pub fn sym_of(letter: i32) -> Sym {
    let i = letter.unsigned_abs() - 1;
    2 * i + u32::from(letter < 0)
}

pub fn letter_of(s: Sym) -> i32 {
    let i = (s / 2 + 1) as i32;
    if s % 2 == 1 {
        -i
    } else {
        i
    }
}

fn inv(s: Sym) -> Sym {
    s ^ 1
}

fn inverse_word(w: &[Sym]) -> Vec<Sym> {
    w.iter().rev().map(|&s| inv(s)).collect()
}

pub fn shortlex(a: &[Sym], b: &[Sym]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_rules: usize,
    pub max_len: usize,
    pub max_passes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_rules: 20_000, max_len: 200, max_passes: 50 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub lhs: Vec<Sym>,
    pub rhs: Vec<Sym>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub rules: usize,
    pub passes: usize,
    pub critical_pairs: usize,
    pub equations: usize,
    pub peak_rules: usize,
}

/// Why completion stopped before reaching confluence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CapHit {
    Rules,
    Length,
    Passes,
}

/// A string rewriting system over the group alphabet.
#[derive(Debug, Clone)]
pub struct RewritingSystem {
    generators: usize,
    rules: Vec<Option<Rule>>,
    index: FxHashMap<Vec<Sym>, usize>,
    len_counts: Vec<usize>,
    /// Rule ids by lhs length; may hold ids of removed rules.
    by_len: Vec<Vec<usize>>,
    alive: usize,
    pub confluent: bool,
    pub cap_hit: Option<CapHit>,
    pub stats: Stats,
}

impl RewritingSystem {
    fn empty(generators: usize) -> Self {
        RewritingSystem {
            generators,
            rules: Vec::new(),
            index: FxHashMap::default(),
            len_counts: Vec::new(),
            by_len: Vec::new(),
            alive: 0,
            confluent: false,
            cap_hit: None,
            stats: Stats::default(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Live rules in insertion order.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().flatten()
    }

    pub fn rule_count(&self) -> usize {
        self.alive
    }

    fn insert(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        let len = rule.lhs.len();
        if self.len_counts.len() <= len {
            self.len_counts.resize(len + 1, 0);
            self.by_len.resize(len + 1, Vec::new());
        }
        self.len_counts[len] += 1;
        self.by_len[len].push(id);
        self.index.insert(rule.lhs.clone(), id);
        self.rules.push(Some(rule));
        self.alive += 1;
        id
    }

    fn remove(&mut self, id: usize) -> Rule {
        let rule = self.rules[id].take().expect("rule is alive");
        self.index.remove(&rule.lhs);
        self.len_counts[rule.lhs.len()] -= 1;
        self.alive -= 1;
        rule
    }

    /// Rewrites `w` to its irreducible form.
    pub fn reduce(&self, w: &[Sym]) -> Vec<Sym> {
        let mut out: Vec<Sym> = Vec::with_capacity(w.len());
        let mut input: Vec<Sym> = w.iter().rev().copied().collect();
        'next: while let Some(s) = input.pop() {
            out.push(s);
            let n = out.len();
            for len in 1..self.len_counts.len().min(n + 1) {
                if self.len_counts[len] == 0 {
                    continue;
                }
                if let Some(&id) = self.index.get(&out[n - len..]) {
                    let rule = self.rules[id].as_ref().expect("indexed rules are alive");
                    out.truncate(n - len);
                    input.extend(rule.rhs.iter().rev());
                    continue 'next;
                }
            }
        }
        out
    }

    fn is_reducible(&self, w: &[Sym]) -> bool {
        for end in 1..=w.len() {
            for len in 1..self.len_counts.len().min(end + 1) {
                if self.len_counts[len] > 0 && self.index.contains_key(&w[end - len..end]) {
                    return true;
                }
            }
        }
        false
    }

    pub fn reduce_word(&self, w: &FreeWord) -> FreeWord {
        let syms: Vec<Sym> = w.letters().iter().map(|&g| sym_of(g)).collect();
        let nf: Vec<i32> = self.reduce(&syms).into_iter().map(letter_of).collect();
        artin::free_reduce(&nf, self.generators).expect("normal forms stay in range")
    }
}

/// Symmetrized equations from one relator: every cyclic rotation of `r` and
/// `r^{-1}`, split into a half and the inverse of the other half.
fn relator_equations(r: &[Sym]) -> Vec<(Vec<Sym>, Vec<Sym>)> {
    let mut out = Vec::new();
    let l = r.len();
    let h = l.div_ceil(2);
    for word in [r.to_vec(), inverse_word(r)] {
        for rot in 0..l {
            let w: Vec<Sym> = word[rot..].iter().chain(&word[..rot]).copied().collect();
            out.push((w[..h].to_vec(), inverse_word(&w[h..])));
        }
    }
    out
}

/// (total length, insertion order, lhs, rhs)
type Pending = Reverse<(usize, u64, Vec<Sym>, Vec<Sym>)>;

struct Completion<'a> {
    sys: RewritingSystem,
    caps: &'a Caps,
    /// Pending equations, shortest first; the counter keeps ordering deterministic.
    pending: BinaryHeap<Pending>,
    counter: u64,
    processed: Vec<bool>,
}

impl Completion<'_> {
    fn push(&mut self, a: Vec<Sym>, b: Vec<Sym>) {
        let key = a.len().max(b.len());
        self.counter += 1;
        self.pending.push(Reverse((key, self.counter, a, b)));
    }

    /// Orients and adds an equation, interreducing the system. Returns false when a cap stops it.
    fn add_equation(&mut self, a: &[Sym], b: &[Sym]) -> bool {
        self.sys.stats.equations += 1;
        let (a, b) = (self.sys.reduce(a), self.sys.reduce(b));
        let (lhs, rhs) = match shortlex(&a, &b) {
            Ordering::Equal => return true,
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
        };
        if lhs.len() > self.caps.max_len {
            self.sys.cap_hit = Some(CapHit::Length);
            return false;
        }
        // Longer rules whose lhs contains the new lhs become equations again;
        // rules whose rhs contains it get their rhs re-reduced afterwards.
        let mut requeue = Vec::new();
        let mut touched_rhs = Vec::new();
        for len in 1..self.sys.by_len.len() {
            if self.sys.len_counts[len] == 0 {
                self.sys.by_len[len].clear();
                continue;
            }
            let rules = &self.sys.rules;
            self.sys.by_len[len].retain(|&id| rules[id].is_some());
            for &id in &self.sys.by_len[len] {
                let rule = rules[id].as_ref().unwrap();
                if len > lhs.len() && contains(&rule.lhs, &lhs) {
                    requeue.push(id);
                } else if contains(&rule.rhs, &lhs) {
                    touched_rhs.push(id);
                }
            }
        }
        requeue.sort_unstable();
        for id in requeue {
            let r = self.sys.remove(id);
            self.push(r.lhs, r.rhs);
        }
        self.sys.insert(Rule { lhs, rhs });
        self.processed.push(false);
        for id in touched_rhs {
            let rhs = self.sys.rules[id].as_ref().unwrap().rhs.clone();
            let new_rhs = self.sys.reduce(&rhs);
            self.sys.rules[id].as_mut().unwrap().rhs = new_rhs;
        }
        self.sys.stats.peak_rules = self.sys.stats.peak_rules.max(self.sys.alive);
        if self.sys.alive > self.caps.max_rules {
            self.sys.cap_hit = Some(CapHit::Rules);
            return false;
        }
        true
    }

    fn drain(&mut self) -> bool {
        while let Some(Reverse((_, _, a, b))) = self.pending.pop() {
            if !self.add_equation(&a, &b) {
                return false;
            }
        }
        true
    }

    /// Critical pairs between rule `i` and itself and every processed live rule.
    fn overlaps_of(&mut self, i: usize) {
        let Some(ri) = self.sys.rules[i].clone() else { return };
        let partners: Vec<usize> = (0..self.sys.rules.len())
            .filter(|&j| j != i && self.processed[j] && self.sys.rules[j].is_some())
            .collect();
        self.pair(&ri, &ri);
        for j in partners {
            // Equations pushed by earlier pairs are not added until the next drain,
            // so rule j is still alive here.
            let rj = self.sys.rules[j].clone().expect("partner is alive");
            self.pair(&ri, &rj);
            self.pair(&rj, &ri);
        }
        self.processed[i] = true;
    }

    /// Overlaps of a suffix of `p.lhs` with a prefix of `q.lhs`.
    fn pair(&mut self, p: &Rule, q: &Rule) {
        let max = p.lhs.len().min(q.lhs.len());
        for k in 1..max {
            if p.lhs[p.lhs.len() - k..] != q.lhs[..k] {
                continue;
            }
            self.sys.stats.critical_pairs += 1;
            let mut left = p.rhs.clone();
            left.extend_from_slice(&q.lhs[k..]);
            let mut right = p.lhs[..p.lhs.len() - k].to_vec();
            right.extend_from_slice(&q.rhs);
            let (l, r) = (self.sys.reduce(&left), self.sys.reduce(&right));
            if l != r {
                self.push(l, r);
            }
        }
    }
}

fn contains(hay: &[Sym], needle: &[Sym]) -> bool {
    let Some((&first, rest)) = needle.split_first() else { return true };
    if needle.len() > hay.len() {
        return false;
    }
    (0..=hay.len() - needle.len()).any(|i| hay[i] == first && hay[i + 1..i + needle.len()] == *rest)
}

/// Runs shortlex completion on the symmetrized relators plus free cancellation.
///
/// Stops with `confluent = false` and `cap_hit` set when a cap is reached.
pub fn knuth_bendix(p: &Presentation, caps: &Caps) -> RewritingSystem {
    let m = p.generator_count();
    let mut c = Completion { sys: RewritingSystem::empty(m), caps, pending: BinaryHeap::new(), counter: 0, processed: Vec::new() };
    for g in 0..m as Sym {
        c.push(vec![2 * g, 2 * g + 1], vec![]);
        c.push(vec![2 * g + 1, 2 * g], vec![]);
    }
    for r in p.relators() {
        let syms: Vec<Sym> = r.letters().iter().map(|&g| sym_of(g)).collect();
        for (a, b) in relator_equations(&syms) {
            c.push(a, b);
        }
    }

    // Given-rule loop: each pass processes the rules that were unprocessed at
    // its start, shortest first, draining new equations after every rule so
    // that long rules are pruned before their overlaps are formed.
    for pass in 0..caps.max_passes {
        c.sys.stats.passes = pass + 1;
        if !c.drain() {
            return c.finish(false);
        }
        let mut todo: Vec<usize> = (0..c.sys.rules.len())
            .filter(|&i| !c.processed[i] && c.sys.rules[i].is_some())
            .collect();
        if todo.is_empty() {
            // Every pair of live rules has been checked and joins.
            return c.finish(true);
        }
        todo.sort_by_key(|&i| (c.sys.rules[i].as_ref().unwrap().lhs.len(), i));
        for i in todo {
            c.overlaps_of(i);
            if !c.drain() {
                return c.finish(false);
            }
        }
    }
    c.sys.cap_hit = Some(CapHit::Passes);
    c.finish(false)
}

impl Completion<'_> {
    fn finish(mut self, confluent: bool) -> RewritingSystem {
        for id in 0..self.sys.rules.len() {
            if let Some(rhs) = self.sys.rules[id].as_ref().map(|r| r.rhs.clone()) {
                let nf = self.sys.reduce(&rhs);
                self.sys.rules[id].as_mut().unwrap().rhs = nf;
            }
        }
        if confluent {
            debug_assert!(self.sys.rules().all(|r| !self.sys.is_reducible(&r.rhs)));
        }
        self.sys.confluent = confluent;
        self.sys.stats.rules = self.sys.alive;
        self.sys
    }
}
