use lgraph::{
    default_params, enumerate_structure, objective_eval, scaling_target, stage_structure, v1_size, LGParams, LgError,
    Variant,
};
use num_bigint::BigUint;

const MS: [usize; 7] = [1 << 12, 1 << 14, 1 << 16, 1 << 18, 1 << 20, 1 << 22, 1 << 24];

fn ratios(variant: Variant, k: usize, d: usize) -> Vec<f64> {
    MS.iter()
        .map(|&m| objective_eval(&default_params(variant, k, d, m)).unwrap().total / scaling_target(variant, k, d, m))
        .collect()
}

fn assert_band(r: &[f64], lo: f64, hi: f64) {
    for v in r {
        assert!((lo..=hi).contains(v), "{v} outside [{lo}, {hi}]: {r:?}");
    }
}

// bands calibrated once against an independent high-precision evaluation
#[test]
fn triangle_objective_band() {
    assert_band(&ratios(Variant::Triangle, 3, 3), 5.947, 5.960);
}

#[test]
fn general_objective_bands() {
    assert_band(&ratios(Variant::General, 3, 2), 0.1565, 0.1569);
    assert_band(&ratios(Variant::General, 4, 2), 0.015733, 0.015766);
    assert_band(&ratios(Variant::General, 5, 2), 0.0022105, 0.0022163);
}

#[test]
fn objective_point_values() {
    let r = ratios(Variant::Triangle, 3, 3);
    assert!((r[0] - 5.954_253_514_64).abs() < 1e-8);
    let g = ratios(Variant::General, 4, 2);
    assert!((g[6] - 0.015_748_978_475_4).abs() < 1e-10);
}

#[test]
fn weights_shift_the_balance() {
    let mut p = default_params(Variant::Triangle, 3, 3, 1 << 16);
    let base = objective_eval(&p).unwrap();
    p.w2 *= 100.0;
    let skewed = objective_eval(&p).unwrap();
    assert!(skewed.negative > base.negative);
    assert!(skewed.positive < base.positive);
}

#[test]
fn structure_matches_enumeration() {
    let cases = [
        LGParams::with_sizes(Variant::Triangle, 3, 1, 8, 10, vec![1, 1]).unwrap(),
        LGParams::with_sizes(Variant::Triangle, 3, 1, 21, 30, vec![0, 0]).unwrap(),
        LGParams::with_sizes(Variant::General, 3, 1, 6, 10, vec![1, 0, 0]).unwrap(),
        LGParams::with_sizes(Variant::General, 3, 1, 7, 10, vec![1, 0, 0]).unwrap(),
        LGParams::with_sizes(Variant::General, 4, 1, 7, 10, vec![1, 0, 0, 0]).unwrap(),
    ];
    for p in cases {
        assert_eq!(stage_structure(&p).unwrap(), enumerate_structure(&p).unwrap(), "{p:?}");
    }
}

#[test]
fn degenerate_triangle_counts() {
    let p = LGParams::with_sizes(Variant::Triangle, 3, 1, 21, 30, vec![0, 0]).unwrap();
    let s = stage_structure(&p).unwrap();
    let counts: Vec<(u64, u64)> =
        s.iter().map(|c| (c.arcs.to_string().parse().unwrap(), c.vertices.to_string().parse().unwrap())).collect();
    assert_eq!(counts, vec![(0, 1), (0, 1), (63, 63), (1260, 1260), (23940, 11970)]);
}

#[test]
fn stage_two_one_arc_count() {
    let p = LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap();
    let s = stage_structure(&p).unwrap();
    assert_eq!(s[2].arcs, BigUint::from((30 - 19) * 15u32) * v1_size(&p));
}

#[test]
fn enumeration_is_capped() {
    let p = LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap();
    assert!(matches!(enumerate_structure(&p), Err(LgError::TooLarge(_))));
}
