//! Property suites shared by `properties.rs` and the acceptance target.
//!
//! Every suite runs a deterministic ChaCha stream so failures reproduce.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use surflink::artin::{artin_apply, free_reduce, generator_images, FreeWord};
use surflink::braid::{braid_equal, full_twist, make_family, BraidWord, FamilySpec, YVariant};
use surflink::group::presentation::link_group_unchecked;
use surflink::group::smith::{determinant, from_i64, mat_mul};
use surflink::group::rewriting::{sym_of, Sym};
use surflink::group::{add_commutator, knuth_bendix, smith_normal_form, Caps, Presentation, RewritingSystem};
use surflink::linking::{
    components, dlk_entry, dlk_entry_lcm, lk_matrix, lk_matrix_with_choice, tlk, tlk_full_twist, Direction, TorusLink,
};

pub const CASES: u32 = 256;

pub fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner().run(&strategy, test).map_err(|e| e.to_string())
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

/// Braid words on exactly `m` strands.
pub fn braid_on(m: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..m as i32, any::<bool>()).prop_map(|(g, pos)| if pos { g } else { -g });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(m, l).unwrap())
}

/// Braid words on 2..=7 strands.
pub fn braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=7).prop_flat_map(move |m| braid_on(m, max_len))
}

fn product(m: usize) -> FreeWord {
    (1..=m).fold(FreeWord::identity(m), |acc, i| acc.mul(&FreeWord::generator(m, i)))
}

pub fn artin_product() -> Result<(), String> {
    run(braid(14), |b| {
        let p = product(b.strands());
        let got = artin_apply(&b, &p).map_err(|e| fail(e.to_string()))?;
        prop_assert_eq!(got, p, "braid {}", b);
        Ok(())
    })
}

pub fn braid_relations() -> Result<(), String> {
    let strat =
        (3usize..=7).prop_flat_map(|m| (Just(m), 1..m as i32 - 1, 1..m as i32, braid_on(m, 6), braid_on(m, 6)));
    run(strat, |(m, i, j, u, v)| {
        let wrap = |core: &[i32]| {
            let mut l = u.letters().to_vec();
            l.extend_from_slice(core);
            l.extend_from_slice(v.letters());
            generator_images(&BraidWord::new(m, l).unwrap())
        };
        prop_assert_eq!(wrap(&[i, i + 1, i]), wrap(&[i + 1, i, i + 1]));
        if (i - j).abs() >= 2 {
            prop_assert_eq!(wrap(&[i, j]), wrap(&[j, i]));
        }
        prop_assert_eq!(wrap(&[j, -j]), wrap(&[]));
        Ok(())
    })
}

pub fn braid_equal_insertion() -> Result<(), String> {
    let strat = braid(12).prop_flat_map(|b| {
        let m = b.strands();
        let n = b.len();
        (Just(b), 0..=n, 1..m as i32, any::<bool>())
    });
    run(strat, |(b, pos, g, pos_first)| {
        let m = b.strands();
        let mut l = b.letters().to_vec();
        let pair = if pos_first { [g, -g] } else { [-g, g] };
        l.splice(pos..pos, pair);
        let inserted = BraidWord::new(m, l).unwrap();
        prop_assert!(braid_equal(&b, &inserted).unwrap());
        let mut shifted = b.letters().to_vec();
        shifted.push(g);
        prop_assert!(!braid_equal(&b, &BraidWord::new(m, shifted).unwrap()).unwrap());
        Ok(())
    })
}

/// Commuting pairs `(c^p, c^q)`: the `a`-cycles of `c^p` refine the components.
pub fn lk_cycle_choice() -> Result<(), String> {
    let strat = (braid(8), 1i64..=4, 1i64..=4);
    run(strat, |(c, p, q)| {
        let a = c.pow(p);
        let b = c.pow(q);
        let cd = components(&a, &b).map_err(|e| fail(e.to_string()))?;
        for dir in [Direction::A, Direction::B] {
            let w = if dir == Direction::A { &a } else { &b };
            let base = lk_matrix(w, &cd, dir).map_err(|e| fail(e.to_string()))?;
            let counts: Vec<usize> = cd.cycles(dir).iter().map(Vec::len).collect();
            // Walk every choice vector (products stay small for these sizes).
            let total: usize = counts.iter().product();
            for code in 0..total.min(64) {
                let mut rest = code;
                let choice: Vec<usize> = counts
                    .iter()
                    .map(|&n| {
                        let c = rest % n;
                        rest /= n;
                        c
                    })
                    .collect();
                let other = lk_matrix_with_choice(w, &cd, dir, &choice).map_err(|e| fail(e.to_string()))?;
                prop_assert_eq!(&other, &base, "choice {:?} for {}", choice, w);
            }
        }
        Ok(())
    })
}

pub fn lk_symmetry_full_twist() -> Result<(), String> {
    run((braid(12), -3i64..=3), |(a, n)| {
        let link = TorusLink::with_full_twist(a.clone(), n);
        let la = link.lk_a().map_err(|e| fail(e.to_string()))?;
        prop_assert!(la.is_symmetric(), "lk^a of {} not symmetric", a);
        for (i, cycles) in link.components.cycles(Direction::A).iter().enumerate() {
            prop_assert_eq!(cycles.len(), 1, "component {} of {} splits into several a-cycles", i, a);
        }
        let lb = link.lk_b().map_err(|e| fail(e.to_string()))?;
        for i in 0..link.n() {
            for j in 0..link.n() {
                if i != j {
                    prop_assert_eq!(lb.get(i, j), n * link.components.degrees[j] as i64);
                }
            }
        }
        Ok(())
    })
}

pub fn dlk_forms() -> Result<(), String> {
    let entries = (-40i64..40, 1usize..12, 1usize..12, -5i64..5);
    run((entries, braid(10), -2i64..=2), |((lk, mi, mj, n), a, tw)| {
        let link = TorusLink::with_full_twist(a, tw);
        let la = link.lk_a().map_err(|e| fail(e.to_string()))?;
        let d = &link.components.degrees;
        for i in 0..link.n() {
            for j in 0..link.n() {
                if i != j {
                    prop_assert_eq!(dlk_entry(tw, la.get(i, j), d[i], d[j]), dlk_entry_lcm(tw, la.get(i, j), d[i], d[j]));
                }
            }
        }
        // m_i m_j / lcm (lcm - 1) ≡ m_i + m_j (mod 2) for all degrees, so any lk agrees.
        prop_assert_eq!(dlk_entry(n, lk, mi, mj), dlk_entry_lcm(n, lk, mi, mj));
        Ok(())
    })
}

pub fn tlk_antisymmetry_shortcut() -> Result<(), String> {
    run((braid(12), -2i64..=2), |(a, n)| {
        let link = TorusLink::with_full_twist(a.clone(), n);
        let (la, lb) = (link.lk_a().unwrap(), link.lk_b().unwrap());
        let general = tlk(&la, &lb).map_err(|e| fail(e.to_string()))?;
        prop_assert!(general.is_antisymmetric());
        let short = tlk_full_twist(&la, &lb, &link.components.degrees, n).map_err(|e| fail(e.to_string()))?;
        prop_assert_eq!(&general, &short);
        let size = general.n();
        for i in 0..size {
            for j in 0..size {
                prop_assert_eq!(general.get(i, j, i), 0);
            }
        }
        Ok(())
    })
}

pub fn smith_properties() -> Result<(), String> {
    let strat = (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r));
    run(strat, |m| {
        let mm = from_i64(&m);
        let sf = smith_normal_form(&mm);
        let prod = mat_mul(&mat_mul(&sf.left, &mm), &sf.right);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { sf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &want);
            }
        }
        prop_assert!(determinant(&sf.left).abs().is_one());
        prop_assert!(determinant(&sf.right).abs().is_one());
        for d in &sf.diagonal {
            prop_assert!(!d.is_negative());
        }
        for w in sf.diagonal.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides, "{} does not divide {}", w[0], w[1]);
        }
        Ok(())
    })
}

/// A handful of presentations that complete quickly under default caps.
pub fn confluent_systems() -> Vec<(Presentation, RewritingSystem)> {
    let mut ps = Vec::new();
    let z2 = add_commutator(&Presentation::free(2), 1, 2).unwrap();
    let z3 = add_commutator(&add_commutator(&add_commutator(&Presentation::free(3), 1, 2).unwrap(), 1, 3).unwrap(), 2, 3)
        .unwrap();
    ps.push(z2);
    ps.push(z3);
    ps.push(Presentation::new(1, [FreeWord::parse("x1^5", 1).unwrap()]).unwrap());
    for spec in [
        FamilySpec::X { k: 1, l: 1, e: [1, 1, 1] },
        FamilySpec::Y { k: 1, l: 1, e: [1, -1, 1], variant: YVariant::Consecutive },
        FamilySpec::P { k: 3 },
        FamilySpec::Q { k: 3 },
    ] {
        let a = make_family(&spec).unwrap();
        let m = a.strands();
        ps.push(link_group_unchecked(&a, &full_twist(m, 1)));
    }
    ps.into_iter()
        .map(|p| {
            let sys = knuth_bendix(&p, &Caps::default());
            assert!(sys.confluent, "fixture presentation did not complete");
            (p, sys)
        })
        .collect()
}

pub fn rewriting_uniqueness() -> Result<(), String> {
    let systems = confluent_systems();
    let count = systems.len();
    let strat = (0..count).prop_flat_map(|idx| {
        let letters = || prop::collection::vec((1i32..=6, any::<bool>()), 0..16);
        (Just(idx), letters(), letters(), any::<prop::sample::Index>(), any::<prop::sample::Index>())
    });
    run(strat, |(idx, w, u, rel_idx, pos)| {
        let (p, sys) = &systems[idx];
        let m = p.generator_count() as i32;
        let letters = |v: &[(i32, bool)]| -> Vec<i32> {
            v.iter()
                .map(|&(g, s)| {
                    let g = (g - 1) % m + 1;
                    if s {
                        g
                    } else {
                        -g
                    }
                })
                .collect()
        };
        let syms = |l: &[i32]| -> Vec<Sym> { l.iter().map(|&g| sym_of(g)).collect() };
        let w = letters(&w);
        let u = free_reduce(&letters(&u), p.generator_count()).unwrap();
        let r = &p.relators()[rel_idx.index(p.relators().len())];
        // Insert u r u^{-1} at a random position: the same group element.
        let conj = u.mul(r).mul(&u.inverse());
        let at = pos.index(w.len() + 1);
        let mut v = w.clone();
        v.splice(at..at, conj.letters().iter().copied());
        // Unreduced words go straight to the rewriting system.
        let nw = sys.reduce(&syms(&w));
        let nv = sys.reduce(&syms(&v));
        prop_assert_eq!(&nw, &nv);
        prop_assert_eq!(sys.reduce(&nw), nw.clone(), "normal form is not irreducible");
        Ok(())
    })
}
