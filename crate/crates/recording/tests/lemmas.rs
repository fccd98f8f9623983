use graphcore::{colex_encode, Edge};
use recording::*;

fn params(n: u32, m: usize, t: usize) -> AuditParams {
    AuditParams { n, m, t, ..Default::default() }
}

fn all_pass(name: &str, p: &AuditParams, seeds: std::ops::Range<u64>) -> Vec<AuditRecord> {
    let recs = run_audit_seeds(name, p, seeds).unwrap();
    assert!(!recs.is_empty());
    for r in &recs {
        assert!(r.pass, "{name} failed: {r:?}");
    }
    recs
}

#[test]
fn recording_identity_twenty_algorithms() {
    let recs = all_pass("t-identity", &params(3, 2, 3), 0..20);
    assert_eq!(recs.len(), 20 * 4);
    assert!(recs.iter().all(|r| r.lhs <= 1e-9));
}

#[test]
fn corrupted_basis_change_is_detected() {
    let recs = all_pass("t-identity-corrupted", &params(3, 2, 3), 0..20);
    assert!(recs.iter().all(|r| r.rhs > 0.1));
}

#[test]
fn support_fact_on_identity_runs() {
    let recs = all_pass("support", &params(3, 2, 3), 0..20);
    assert!(recs.iter().all(|r| r.lhs <= 1e-12));
}

#[test]
fn query_table_matches_closed_form() {
    let sim = Simulator::new(SimConfig::uniform(3, 2, 1, 1).unwrap()).unwrap();
    assert!(sim.query_table_deviation().unwrap() <= 1e-12);
}

#[test]
fn leakage_norm_on_fifty_distributions() {
    all_pass("leakage", &params(3, 2, 3), 0..50);
}

#[test]
fn exclusion_and_mirroring_over_random_schedules() {
    all_pass("exclusion", &params(3, 2, 3), 0..100);
    let recs = all_pass("mirroring", &params(3, 2, 3), 0..100);
    // the binomial bound is exercised
    assert!(recs.len() > 100);
}

#[test]
fn recurrences_with_exact_boundaries() {
    for name in ["recurrence-wedge", "recurrence-triangle", "recurrence-path", "recurrence-cycle"] {
        let p = AuditParams { n: 4, m: 3, t: 3, l: 2, k: 3, ..Default::default() };
        let recs = all_pass(name, &p, 0..20);
        assert!(recs.iter().any(|r| r.params.contains_key("boundary")));
    }
}

#[test]
fn recurrence_boundaries_hold_exactly() {
    let sim = Simulator::new(SimConfig::uniform(4, 3, 2, 3).unwrap()).unwrap();
    let alg = AlgorithmSpec::random(sim.dims(), 3, 9);
    let tri = sim.check_recurrence(&alg, Recurrence::Triangle { r_star: 16 }, 3).unwrap();
    assert_eq!(tri.boundary[0].1, 0.0);
    let sched = RateSchedule::new(3, 2, 4).unwrap();
    let cyc = sim.check_recurrence(&alg, Recurrence::Cycle { schedule: sched }, 3).unwrap();
    assert_eq!(cyc.boundary[0].1, 0.0);
    let wedge = sim.check_recurrence(&alg, Recurrence::Wedge { delta: 4 }, 3).unwrap();
    assert!((wedge.boundary[0].1 - 1.0).abs() <= 1e-12);
    assert_eq!(wedge.boundary[1].1, 0.0);
}

#[test]
fn guessing_on_random_states() {
    all_pass("guessing", &params(4, 3, 1), 0..100);
    all_pass("guessing", &params(6, 3, 1), 0..100);
}

fn sym(u: u32, v: u32) -> usize {
    colex_encode(Edge::new(u, v)) as usize + 1
}

#[test]
fn guessing_without_output_is_zero() {
    let sim = Simulator::new(SimConfig::uniform(4, 3, 1, 1).unwrap()).unwrap();
    let x = sim.dims().x_len;
    let blocks = vec![GuessBlock { output: None, amps: vec![Complex64::new(1.0, 0.0); x] }];
    assert_eq!(sim.guessing_value(3, &blocks).unwrap(), 0.0);
}

#[test]
fn recorded_triangle_is_projected_out() {
    let sim = Simulator::new(SimConfig::uniform(4, 3, 1, 1).unwrap()).unwrap();
    let d = sim.dims();
    let b = vec![sym(1, 2), sym(2, 3), sym(1, 3)];
    let mut amps = vec![Complex64::new(0.0, 0.0); d.x_len];
    amps[d.encode_x(&b)] = Complex64::new(1.0, 0.0);
    let blocks = vec![GuessBlock { output: Some(GuessOutput { a: vec![0, 1, 2], b }), amps }];
    assert_eq!(sim.guessing_value(3, &blocks).unwrap(), 0.0);
}

#[test]
fn guessing_operator_norm_within_bound() {
    let sim = Simulator::new(SimConfig::uniform(6, 3, 1, 1).unwrap()).unwrap();
    let out = GuessOutput { a: vec![0, 1, 2], b: vec![sym(1, 2), sym(2, 3), sym(1, 3)] };
    let norm = sim.guessing_operator_norm(3, &out, 1).unwrap();
    assert!(norm > 0.0);
    assert!(norm <= guessing_bound_triangle(sim.dims().big_n) + 1e-9);
    let path = GuessOutput { a: vec![0, 1, 2], b: vec![sym(1, 2), sym(2, 3), sym(3, 4)] };
    assert_eq!(sim.guessing_operator_norm(3, &path, 1).unwrap(), 0.0);
}

#[test]
fn chernoff_regression() {
    // Pr[Bin(20, 0.3) ≥ 10] and (e·20·0.3/10)^10
    let tail = binomial_tail(20, 0.3, 10.0);
    assert!((tail - 0.047_961_897_331_343_4).abs() < 1e-12, "{tail}");
    let bound = chernoff_bound(20, 0.3, 10.0);
    assert!((bound - (std::f64::consts::E * 0.6).powi(10)).abs() < 1e-12);
    assert!(tail <= bound);
    all_pass("chernoff", &params(3, 2, 3), 0..200);
}

#[test]
fn degree_exclusion_holds() {
    all_pass("degree-exclusion", &params(4, 3, 3), 0..5);
}

#[test]
fn rate_schedule_regression() {
    let s = RateSchedule::new(3, 2, 1024).unwrap();
    assert_eq!(s.r(1, 32), 33);
    assert_eq!(s.r(2, 32), 16964);
    assert_eq!(s.r(3, 32), 576_744);
    assert_eq!(s.b(3, 32), 2 * 16964 * 1024 + 4 * 33 * 33);
}

#[test]
fn rate_claim_holds_for_large_n() {
    let s = RateSchedule::new(5, 2, 1 << 40).unwrap();
    for l in 3..=5 {
        for j in 1..=(l - 1) / 2 {
            for t in [0, 1, 100, 10_000] {
                assert!(s.check_claim(l, j, t).unwrap(), "l={l} j={j} t={t}");
            }
        }
    }
}

#[test]
fn unknown_audit_is_rejected() {
    assert!(matches!(run_audit("nope", &AuditParams::default(), 0), Err(SimError::UnknownAudit(_))));
}
