//! Prints the largest `oracle_calls / log2(m)^2` over planted instances.

use reductions::{planted_instance, search_to_decision, ExactOracle, SearchConfig};

fn main() {
    for k in [3usize, 4] {
        for m in [27usize, 81, 243] {
            let worst = (0..100u64)
                .map(|seed| {
                    let x = planted_instance(m, k, seed);
                    let out = search_to_decision(&mut ExactOracle::new(), &x, k, SearchConfig::for_k(k));
                    assert!(out.certificate.is_some());
                    out.oracle_calls as f64 / (m as f64).log2().powi(2)
                })
                .fold(0.0, f64::max);
            println!("k={k} m={m} max_ratio={worst:.3}");
        }
    }
}
