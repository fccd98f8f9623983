use proptest::prelude::*;
use recording::*;

fn sim(n: u32, m: usize, k: usize, t: usize) -> Simulator {
    Simulator::new(SimConfig::uniform(n, m, k, t).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn recording_run_preserves_norm(seed in any::<u64>(), t in 0usize..=3) {
        let s = sim(3, 2, 2, 3);
        let alg = AlgorithmSpec::random(s.dims(), 3, seed);
        let st = s.run(&alg, &Mode::Recording, t).unwrap();
        prop_assert!((st.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oracles_are_unitary_on_random_states(seed in any::<u64>()) {
        let s = sim(3, 2, 1, 1);
        let alg = AlgorithmSpec::random(s.dims(), 1, seed);
        let st = s.run(&alg, &Mode::Recording, 1).unwrap();
        for which in [Which::Standard, Which::BasisChange, Which::FullRotation, Which::Recording] {
            let out = s.apply_oracle(&st, which).unwrap();
            prop_assert!((out.norm() - 1.0).abs() < 1e-12);
        }
        let fwd = s.apply_oracle(&st, Which::FullRotation).unwrap();
        let back = s.apply_oracle(&fwd, Which::FullRotationAdjoint).unwrap();
        prop_assert!(back.distance(&st).unwrap() < 1e-12);
    }

    #[test]
    fn support_fact(seed in any::<u64>(), t in 0usize..=3) {
        let s = sim(4, 3, 1, 3);
        let alg = AlgorithmSpec::random(s.dims(), 3, seed);
        let st = s.run(&alg, &Mode::Recording, t).unwrap();
        prop_assert!(st.support_violation(t) <= 1e-12);
    }

    #[test]
    fn filtering_never_increases_norm(seed in any::<u64>(), density in 0.0f64..=1.0) {
        let s = sim(3, 2, 1, 3);
        let alg = AlgorithmSpec::random(s.dims(), 3, seed);
        let pis = vec![Projector::Random { seed, density }; 2];
        let st = s.run(&alg, &Mode::Filtered(pis), 3).unwrap();
        prop_assert!(st.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn projector_and_complement_partition(seed in any::<u64>(), lo in 0i64..4) {
        let s = sim(3, 2, 1, 1);
        let p = Projector::Or(vec![
            Projector::Paths { l: 2, range: CountRange::at_least(lo) },
            Projector::Random { seed, density: 0.3 },
        ]);
        let a = p.mask(&s).unwrap();
        let b = Projector::not(p).mask(&s).unwrap();
        prop_assert_eq!(a.count() + b.count(), s.dims().total());
        prop_assert_eq!(a.and(&b).count(), 0);
    }

    #[test]
    fn leakage_matches_closed_form(w in proptest::collection::vec(0.01f64..1.0, 2..=6), bits in any::<u8>()) {
        let s: f64 = w.iter().sum();
        let dist: Vec<f64> = w.iter().map(|v| v / s).collect();
        let sigma1: Vec<bool> = (0..dist.len()).map(|i| bits >> i & 1 == 1).collect();
        let r = leakage_norm(&dist, &sigma1).unwrap();
        prop_assert!((r.norm - r.expected).abs() < 1e-9);
        prop_assert!(r.block_deviation < 1e-9);
    }

    #[test]
    fn rate_schedule_first_rate_and_b_floor(t in 0u64..1000, n in 2u64..1_000_000) {
        let s = RateSchedule::new(4, 2, n).unwrap();
        prop_assert_eq!(s.r(1, t), (t as u128 + 1).max(ceil_log2(n) as u128));
        for l in 2..=4 {
            prop_assert!(s.b(l, t) >= 2 * s.r(l - 1, t) * n as u128);
        }
    }
}
