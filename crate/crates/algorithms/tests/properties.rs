//! Randomized invariants of the runners.

use algorithms::*;
use proptest::prelude::*;
use transforms::{hide_eval, ElementDistinctness, HiddenString};

fn hidden(max_len: usize, alphabet: u32) -> impl Strategy<Value = HiddenString> {
    prop::collection::vec(prop::option::weighted(0.4, 0..alphabet), 1..=max_len).prop_map(HiddenString::from_symbols)
}

proptest! {
    #[test]
    fn hide_ed_matches_brute_force(y in hidden(60, 40), seed: u64) {
        let d = y.base_length();
        prop_assume!(d > 0);
        let (out, rep) = run_hide_ed(&y, d, &CostModel::default(), seed).unwrap();
        prop_assert_eq!(out, hide_eval(&ElementDistinctness { arity: d }, &y).unwrap());
        prop_assert!(rep.reads as u64 <= rep.total);
        prop_assert_eq!(rep.total, rep.phases.iter().map(|(_, a)| a).sum::<u64>());
    }

    #[test]
    fn padding_with_stars_never_lowers_symmetric_charge(y in hidden(12, 2), extra in 1usize..40, mask in 0u32..512) {
        let n = y.base_length();
        prop_assume!(n > 0 && n <= 8);
        let p = SymmetricProfile::new((0..=n).map(|k| (mask >> k) & 1 == 1).collect()).unwrap();
        let mut s = y.symbols().to_vec();
        s.extend(std::iter::repeat_n(None, extra));
        let model = CostModel::default();
        let (a, ra) = run_hide_symmetric(&p, &y, &model).unwrap();
        let (b, rb) = run_hide_symmetric(&p, &HiddenString::from_symbols(s), &model).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(rb.total >= ra.total);
    }
}
