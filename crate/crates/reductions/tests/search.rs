//! Search-to-decision correctness, call budget and noisy-oracle behaviour.

use graphcore::{cycle_edges_form_cycle, EdgeList};
use reductions::{planted_instance, search_to_decision, ExactOracle, NoisyOracle, SearchConfig};

/// Frozen from `examples/search_calibration.rs` at m ∈ {27, 81, 243}.
const CALL_CONSTANT_K3: f64 = 100.0;
const CALL_CONSTANT_K4: f64 = 140.0;

#[test]
fn exact_oracle_certificates_and_budget() {
    for (k, c) in [(3usize, CALL_CONSTANT_K3), (4, CALL_CONSTANT_K4)] {
        for m in [27usize, 81, 243] {
            for seed in 0..100u64 {
                let x = planted_instance(m, k, seed);
                let out = search_to_decision(&mut ExactOracle::new(), &x, k, SearchConfig::for_k(k));
                let cert = out.certificate.expect("planted cycle is found");
                assert_eq!(cert.indices.len(), k);
                assert!(cycle_edges_form_cycle(&x, &cert.indices));
                assert!(out.oracle_calls as f64 <= c * (m as f64).log2().powi(2), "k={k} m={m} seed={seed}");
            }
        }
    }
}

#[test]
fn triangle_at_m9() {
    let x = EdgeList::new(20, &[(1, 2), (3, 4), (5, 9), (2, 6), (11, 12), (1, 6), (13, 14), (7, 8), (15, 16)]).unwrap();
    let cert = search_to_decision(&mut ExactOracle::new(), &x, 3, SearchConfig::for_k(3)).certificate.unwrap();
    assert_eq!(cert.indices, vec![0, 3, 5]);
}

#[test]
fn noisy_oracle_mostly_succeeds() {
    let m = 27;
    let ok = (0..50u64)
        .filter(|&seed| {
            let x = planted_instance(m, 3, seed);
            let mut oracle = NoisyOracle::new(1.0 / 3.0, 1000 + seed);
            search_to_decision(&mut oracle, &x, 3, SearchConfig::for_k(3))
                .certificate
                .is_some_and(|c| cycle_edges_form_cycle(&x, &c.indices))
        })
        .count();
    assert!(ok >= 45, "{ok}/50");
}

#[test]
fn noisy_oracle_never_invents_a_certificate() {
    let x = EdgeList::new(40, &(1..40).map(|v| (v, v + 1)).collect::<Vec<_>>()).unwrap();
    for seed in 0..20 {
        let mut oracle = NoisyOracle::new(1.0 / 3.0, seed);
        assert!(search_to_decision(&mut oracle, &x, 3, SearchConfig::for_k(3)).certificate.is_none());
    }
}
