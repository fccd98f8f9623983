use lgraph::{active_arc_count, audit_feasibility, feasibility_sum, sample_triple, Edit, LGParams, LgError, Variant};

const ALL: [Edit; 3] = [Edit::Redirect, Edit::Noisy, Edit::Fault];

fn triangle() -> LGParams {
    LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap()
}

#[test]
fn triangle_feasibility_is_exactly_one() {
    let a = audit_feasibility(&triangle(), &ALL, 500, 1).unwrap();
    assert!(a.all_exact(), "{:?}", a.first_failure);
    assert!(a.fault_paths >= 50, "{} fault paths", a.fault_paths);
    assert!(a.max_float_error < 1e-9);
}

#[test]
fn general_k3_feasibility_is_exactly_one() {
    let p = LGParams::with_sizes(Variant::General, 3, 2, 640, 1400, vec![1; 3]).unwrap();
    let a = audit_feasibility(&p, &ALL, 100, 2).unwrap();
    assert!(a.all_exact(), "{:?}", a.first_failure);
    assert!(a.fault_paths > 0);
}

#[test]
fn general_k4_feasibility_is_exactly_one() {
    let p = LGParams::with_sizes(Variant::General, 4, 2, 2600, 5600, vec![1; 4]).unwrap();
    let a = audit_feasibility(&p, &ALL, 100, 3).unwrap();
    assert!(a.all_exact(), "{:?}", a.first_failure);
    assert!(a.fault_paths > 0);
}

#[test]
fn general_k3_with_larger_degree() {
    let p = LGParams::with_sizes(Variant::General, 3, 3, 2000, 5000, vec![1, 1, 0]).unwrap();
    let a = audit_feasibility(&p, &ALL, 12, 4).unwrap();
    assert!(a.all_exact(), "{:?}", a.first_failure);
}

#[test]
fn triangle_with_non_unit_weights_stays_exact() {
    let mut p = triangle();
    p.w = 3.0;
    p.w0 = vec![0.25];
    p.w1 = vec![7.0];
    p.w2 = 0.01;
    let a = audit_feasibility(&p, &ALL, 50, 5).unwrap();
    assert!(a.all_exact(), "{:?}", a.first_failure);
    assert!(a.max_float_error < 1e-9);
}

#[test]
fn active_arc_counts() {
    // 19 loaded indices plus three fans of 15
    assert_eq!(active_arc_count(&triangle()), 19 + 45);
    let p = LGParams::with_sizes(Variant::General, 3, 2, 640, 1400, vec![1; 3]).unwrap();
    assert_eq!(active_arc_count(&p), 315 + 15 + 225 + 3375);
    let mut rng = graphcore::rng::seeded(9);
    let t = sample_triple(&p, Edit::Redirect, &mut rng).unwrap();
    assert_eq!(feasibility_sum(&p, &t).unwrap().active_arcs, active_arc_count(&p));
}

#[test]
fn first_difference_at_a1_uses_the_alternating_fan() {
    let p = triangle();
    let mut rng = graphcore::rng::seeded(21);
    let mut seen = 0;
    for _ in 0..40 {
        let t = sample_triple(&p, Edit::Redirect, &mut rng).unwrap();
        let r = feasibility_sum(&p, &t).unwrap();
        if r.agree_on_r1 && r.first_cert_diff == Some(1) {
            // only the 15 stage II.1 arcs contribute
            assert_eq!(r.counted_arcs - stage_one_differences(&t), 15);
            seen += 1;
        }
        assert!(r.is_one());
    }
    assert!(seen > 0);
}

fn stage_one_differences(t: &lgraph::Triple) -> usize {
    t.order.iter().filter(|&&j| t.x.edge(j) != t.y.edge(j)).count()
}

#[test]
fn preconditions_are_enforced() {
    let p = triangle();
    let mut rng = graphcore::rng::seeded(4);
    let t = sample_triple(&p, Edit::Redirect, &mut rng).unwrap();

    let mut bad = t.clone();
    bad.cert.reverse();
    assert!(matches!(feasibility_sum(&p, &bad), Err(LgError::Precondition(_))));

    let mut bad = t.clone();
    bad.order.reverse();
    assert!(matches!(feasibility_sum(&p, &bad), Err(LgError::Precondition(_))));

    let mut bad = t.clone();
    bad.y = bad.x.clone();
    assert!(matches!(feasibility_sum(&p, &bad), Err(LgError::Precondition(_))));
}

#[test]
fn fault_edits_need_a_level_two_set() {
    let p = LGParams::with_sizes(Variant::General, 3, 2, 200, 400, vec![1, 0, 0]).unwrap();
    let mut rng = graphcore::rng::seeded(1);
    assert!(matches!(sample_triple(&p, Edit::Fault, &mut rng), Err(LgError::Param(_))));
    assert!(audit_feasibility(&p, &[Edit::Redirect, Edit::Noisy], 10, 1).unwrap().all_exact());
}

#[test]
fn audits_are_deterministic() {
    let p = triangle();
    let a = audit_feasibility(&p, &ALL, 30, 77).unwrap();
    let b = audit_feasibility(&p, &ALL, 30, 77).unwrap();
    assert_eq!(a, b);
}
