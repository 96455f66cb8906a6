use std::sync::Arc;

use coxstar::demazure::{down, star, star_right_fold};
use coxstar::facemonoid::star_sets;
use coxstar::{CoxeterGroup, Element, SubsetJ};
use proptest::prelude::*;

const TYPES: &[&str] = &["A4", "B4", "D5", "F4", "H3", "I2(9)", "A2xB3"];

fn group_and_words(n_words: usize) -> impl Strategy<Value = (Arc<CoxeterGroup>, Vec<Vec<usize>>)> {
    prop::sample::select(TYPES).prop_flat_map(move |t| {
        let g = CoxeterGroup::parse(t).unwrap();
        let rank = g.rank();
        let words = prop::collection::vec(prop::collection::vec(1..=rank, 0..24), n_words);
        (Just(g), words)
    })
}

fn elements(g: &Arc<CoxeterGroup>, words: &[Vec<usize>]) -> Vec<Element> {
    words.iter().map(|w| g.from_word(w).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_word_round_trips((g, words) in group_and_words(1)) {
        let x = g.from_word(&words[0]).unwrap();
        prop_assert!(x.len() <= words[0].len());
        prop_assert_eq!(x.len() % 2, words[0].len() % 2);
        let word = x.canonical_word();
        prop_assert_eq!(word.len(), x.len());
        prop_assert_eq!(g.parse_word(&word.to_string()).unwrap(), x.clone());
        prop_assert_eq!(g.from_word(word.letters()).unwrap(), x);
    }

    #[test]
    fn star_bounds_and_associativity((g, words) in group_and_words(3)) {
        let e = elements(&g, &words);
        let xy = star(&e[0], &e[1]).unwrap();
        prop_assert!(e[0].bruhat_leq(&xy).unwrap());
        prop_assert!(e[1].bruhat_leq(&xy).unwrap());
        prop_assert!(xy.len() <= e[0].len() + e[1].len());
        prop_assert_eq!(star_right_fold(&e[0], &e[1]).unwrap(), xy.clone());
        let left = star(&xy, &e[2]).unwrap();
        let right = star(&e[0], &star(&e[1], &e[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn down_bounds((g, words) in group_and_words(2)) {
        let e = elements(&g, &words);
        let z = down(&e[0], &e[1]).unwrap();
        prop_assert!(z.bruhat_leq(&e[1]).unwrap());
        prop_assert!(z.len() + e[0].len() >= e[1].len());
        // x |> y = u y for some u <= x
        let u = z.mul(&e[1].inverse()).unwrap();
        prop_assert!(u.bruhat_leq(&e[0]).unwrap());
    }

    #[test]
    fn components_partition_subsets(t in prop::sample::select(TYPES), bits in any::<u64>()) {
        let g = CoxeterGroup::parse(t).unwrap();
        let j = SubsetJ::from_bits(bits).intersection(g.diagram().nodes());
        let parts = g.diagram().components_of(j);
        let mut union = SubsetJ::EMPTY;
        for p in &parts {
            prop_assert!(!p.is_empty());
            prop_assert!(g.diagram().is_connected(*p));
            prop_assert!(union.intersection(*p).is_empty());
            union = union.union(*p);
        }
        prop_assert_eq!(union, j);
        prop_assert_eq!(SubsetJ::parse(&j.to_string(), g.rank()).unwrap(), j);
    }

    #[test]
    fn star_sets_commute_and_lie_in_intersection(a in 0u64..128, b in 0u64..128) {
        let g = CoxeterGroup::parse("E7").unwrap();
        let (j1, j2) = (SubsetJ::from_bits(a), SubsetJ::from_bits(b));
        let j3 = star_sets(&g, j1, j2).unwrap();
        prop_assert_eq!(star_sets(&g, j2, j1).unwrap(), j3);
        prop_assert!(j3.is_subset(j1.intersection(j2)));
    }
}
