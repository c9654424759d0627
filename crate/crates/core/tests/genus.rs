mod common;

use proptest::prelude::*;
use surflink::constructions::{check_feasible, genus_rank_feasible, plus_tower, GenusProfile};

fn profile(g: &[u64]) -> GenusProfile {
    GenusProfile::new(g.to_vec())
}

#[test]
fn appending_a_largest_component_only_adds_one_prefix_check() {
    let strategy = (prop::collection::vec(0u64..6, 1..8), 0u64..4);
    common::runner()
        .run(&strategy, |(genera, extra)| {
            let max = *genera.iter().max().unwrap();
            let mut grown = genera.clone();
            grown.push(max + extra);
            let before = check_feasible(&profile(&genera));
            let after = check_feasible(&profile(&grown));
            match before {
                Ok(()) => {
                    if let Err(f) = after {
                        prop_assert_eq!(f.k, grown.len(), "{:?} -> {:?}", genera, grown);
                    }
                }
                Err(f) => prop_assert_eq!(after.unwrap_err(), f),
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn order_of_components_does_not_matter() {
    let strategy = prop::collection::vec(0u64..6, 0..8).prop_shuffle();
    common::runner()
        .run(&strategy, |a| {
            let mut sorted = a.clone();
            sorted.sort_unstable();
            prop_assert_eq!(genus_rank_feasible(&profile(&a)), genus_rank_feasible(&profile(&sorted)));
            Ok(())
        })
        .unwrap();
}

#[test]
fn plus_tower_profiles_are_feasible_with_slack() {
    for n in 1..=8usize {
        let r = plus_tower(n).unwrap();
        assert!(genus_rank_feasible(&r.profile()), "n={n}: {:?}", r.component_genera);
        if n > 1 {
            assert!(n * (n - 1) < 4 * r.total_genus as usize, "n={n}");
        }
    }
}

#[test]
fn small_profiles() {
    assert!(genus_rank_feasible(&profile(&[1, 1, 1, 1])));
    assert!(!genus_rank_feasible(&profile(&[1, 1, 1, 1, 1])));
    assert!(!genus_rank_feasible(&profile(&[0, 0])));
    assert!(genus_rank_feasible(&profile(&[0, 1])));
    assert!(genus_rank_feasible(&profile(&[])));
}
