mod common;

use std::cmp::Ordering;

use lyndon_core::word::{borders, fractional_power_of, lex_cmp, nontrivial_periods, primitive_root};
use lyndon_core::Word;
use proptest::prelude::*;

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u32..3, 1..=max_len)
        .prop_map(|letters| Word::from_letters(&common::ternary(), letters).unwrap())
}

fn has_period(w: &[u32], p: usize) -> bool {
    (0..w.len() - p).all(|i| w[i] == w[i + p])
}

#[test]
fn borders_match_brute_force() {
    for w in common::words(&common::binary(), 10) {
        let expected: Vec<Word> = (1..w.len())
            .filter(|&k| w.letters()[..k] == w.letters()[w.len() - k..])
            .map(|k| w.prefix(k))
            .collect();
        assert_eq!(borders(&w).unwrap(), expected, "{w}");
    }
}

proptest! {
    #[test]
    fn periods_correspond_to_borders(w in word_strategy(24)) {
        let periods = nontrivial_periods(&w).unwrap();
        let brute: Vec<usize> = (1..w.len()).filter(|&p| has_period(w.letters(), p)).collect();
        prop_assert_eq!(&periods, &brute);
        let border_lengths: Vec<usize> = borders(&w).unwrap().iter().map(|b| w.len() - b.len()).rev().collect();
        prop_assert_eq!(periods, border_lengths);
    }

    #[test]
    fn fractional_power_is_prefix_of_repetition(u in word_strategy(5), v in word_strategy(14)) {
        let reps = v.len().div_ceil(u.len());
        let expanded = u.pow(reps);
        let expected = v.is_prefix_of(&expanded);
        let r = fractional_power_of(&v, &u).unwrap();
        prop_assert_eq!(r.is_some(), expected);
        if let Some(r) = r {
            let (p, q) = r.as_fraction();
            prop_assert_eq!(p * u.len(), q * v.len());
            prop_assert_eq!(r.is_strict(), v.len() >= u.len());
        }
    }

    #[test]
    fn fractional_power_of_own_periodic_prefix(u in word_strategy(6), len in 0usize..20) {
        let v = u.periodic_prefix(len);
        prop_assert!(fractional_power_of(&v, &u).unwrap().is_some());
    }

    #[test]
    fn primitive_root_is_shortest(w in word_strategy(16)) {
        let (root, e) = primitive_root(&w).unwrap();
        prop_assert_eq!(root.pow(e), w.clone());
        for d in 1..root.len() {
            if w.len() % d == 0 {
                prop_assert_ne!(w.prefix(d).pow(w.len() / d), w.clone());
            }
        }
        prop_assert_eq!(primitive_root(&root).unwrap().1, 1);
    }

    #[test]
    fn lex_cmp_is_a_total_order(a in word_strategy(6), b in word_strategy(6), c in word_strategy(6)) {
        let ab = lex_cmp(&a, &b).unwrap();
        prop_assert_eq!(lex_cmp(&b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab.is_le() && lex_cmp(&b, &c).unwrap().is_le() {
            prop_assert!(lex_cmp(&a, &c).unwrap().is_le());
        }
    }
}
