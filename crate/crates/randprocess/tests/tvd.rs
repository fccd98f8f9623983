use num_bigint::BigInt;
use num_rational::BigRational;
use randprocess::{bad_closed_form, check_binomial_identities, exact_tvd, mc_tvd, ExactTvd, ProcessError};

fn exact(n: u32, t: u32) -> ExactTvd {
    exact_tvd(n, t).unwrap()
}

#[test]
fn short_runs_are_indistinguishable() {
    for (n, t) in [(12, 1), (12, 2), (24, 1), (8, 2)] {
        let r = exact(n, t);
        assert_eq!(r.l1, "0", "({n},{t})");
        assert!(r.within_bound);
    }
}

#[test]
fn three_steps_on_eight_rows() {
    // frozen against an independent brute-force enumerator
    let r = exact(8, 3);
    assert_eq!(r.l1, "32/651");
    assert!((r.l1_f64 - 0.049_155_145_929_339_48).abs() < 1e-15);
    assert_eq!(r.bound, "9/2");
    assert!(r.within_bound);
    assert_eq!(r.bad, ["29/93".to_string(), "29/93".to_string()]);
    assert_eq!(r.bad_closed_form, "29/93");
    assert_eq!(r.transcripts, 1_999_872);
}

#[test]
fn bad_probability_matches_closed_form() {
    for (n, t, want) in [(12, 2, "1/13"), (8, 2, "1/9"), (24, 1, "0")] {
        let r = exact(n, t);
        assert!(r.bad_equal);
        assert_eq!(r.bad[0], want);
        assert_eq!(r.bad_closed_form, want);
    }
    assert_eq!(bad_closed_form(24, 2), BigRational::new(BigInt::from(1), BigInt::from(25)));
}

#[test]
fn transcript_counts() {
    // (2n²)(2(n² - 1)) ordered pairs of distinct cells with bits
    assert_eq!(exact(12, 2).transcripts, 288 * 286);
}

#[test]
fn binomial_identities_hold() {
    for t in 0..=6 {
        let r = check_binomial_identities(12, t).unwrap();
        assert!(r.pass, "t = {t}");
        assert_eq!(r.p0.len(), 1 << t);
    }
    let r = check_binomial_identities(12, 6).unwrap();
    assert_eq!(r.binomial_atom, "1/64");
    assert!(r.p0.iter().chain(&r.p1).all(|a| a == "1/64"));
}

#[test]
fn mc_brackets_exact_values() {
    let m = mc_tvd(8, 3, 20_000, 1).unwrap();
    assert!(m.brackets(32.0 / 651.0), "{m:?}");
    let z = mc_tvd(12, 1, 2_000, 1).unwrap();
    assert_eq!(z.estimate, 0.0);
    assert!(z.brackets(0.0));
}

#[test]
fn mc_interval_shrinks_with_trials() {
    let a = mc_tvd(8, 3, 4_000, 7).unwrap();
    let b = mc_tvd(8, 3, 16_000, 7).unwrap();
    assert!(b.width() < a.width(), "{} vs {}", a.width(), b.width());
    for m in [&a, &b] {
        assert!((0.0..=2.0).contains(&m.estimate));
        assert!(m.ci_low <= m.estimate && m.estimate <= m.ci_high);
    }
}

#[test]
fn mc_is_deterministic() {
    assert_eq!(mc_tvd(8, 3, 1_000, 3).unwrap(), mc_tvd(8, 3, 1_000, 3).unwrap());
}

#[test]
fn invalid_requests_are_rejected() {
    assert!(matches!(mc_tvd(8, 3, 10, 0), Err(ProcessError::Config(_))));
    assert!(matches!(exact_tvd(24, 3), Err(ProcessError::TooLarge { .. })));
    assert!(check_binomial_identities(12, 13).is_err());
}
