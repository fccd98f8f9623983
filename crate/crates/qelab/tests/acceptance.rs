//! Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned.
//!
//! Runs without the libtest harness so the lines always print; the process
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use algorithms::{run_hide_ed, run_hide_symmetric, walk_cost_optimize, CostModel, SymmetricProfile};
use itertools::Itertools;
use qelab::{run_suite, ExperimentConfig, ResultRecord};
use serde_json::{json, Value};
use transforms::{hide_eval, ElementDistinctness, HiddenString, SymmetricBoolean};

/// Amplitude and norm tolerance of the simulator criteria.
const SIM_TOL: f64 = 1e-9;
/// Tolerance of the exact-amplitude criteria.
const EXACT_TOL: f64 = 1e-12;

type Outcome = anyhow::Result<(bool, String)>;

fn run(suite: &str, params: Value, seeds: Option<&str>) -> anyhow::Result<Vec<ResultRecord>> {
    let mut cfg = json!({ "suite": suite, "params": params });
    if let Some(s) = seeds {
        cfg["seeds"] = json!(s);
    }
    Ok(run_suite(None, &ExperimentConfig::from_json(&cfg.to_string())?, false)?)
}

/// Pass count and worst slack over `recs`, each also checked against `tol`.
fn tally(recs: &[ResultRecord], tol: f64) -> (bool, String) {
    let ok = recs.iter().filter(|r| r.pass && r.slack <= tol).count();
    let worst = recs.iter().map(|r| r.slack).fold(f64::NEG_INFINITY, f64::max);
    (!recs.is_empty() && ok == recs.len(), format!("{ok}/{} records, worst slack {worst:.3e}", recs.len()))
}

fn metric<'a>(recs: &'a [ResultRecord], name: &'a str) -> impl Iterator<Item = &'a ResultRecord> {
    recs.iter().filter(move |r| r.metric == name)
}

fn lemma(audit: &str, seeds: &str, tol: f64) -> Outcome {
    let recs =
        run("recording-lemmas", json!({ "audits": [audit], "n": 3, "m": 2, "workspace": 2, "t": 3 }), Some(seeds))?;
    Ok(tally(&recs, tol))
}

fn c1() -> Outcome {
    let recs = run(
        "recording-lemmas",
        json!({ "audits": ["t-identity"], "n": 3, "m": 2, "workspace": 2, "t": 3 }),
        Some("0..20"),
    )?;
    let (pass, detail) = tally(&recs, SIM_TOL);
    let max = recs.iter().map(|r| r.value).fold(0.0, f64::max);
    Ok((pass && max <= SIM_TOL, format!("{detail}, max distance {max:.3e}")))
}

fn c2() -> Outcome {
    let recs = run(
        "recording-lemmas",
        json!({ "audits": ["support"], "n": 3, "m": 2, "workspace": 2, "t": 3 }),
        Some("0..20"),
    )?;
    let (pass, detail) = tally(&recs, 0.0);
    let max = recs.iter().map(|r| r.value).fold(0.0, f64::max);
    Ok((pass && max <= EXACT_TOL, format!("{detail}, max amplitude {max:.3e}")))
}

fn c3() -> Outcome {
    let recs =
        run("recording-lemmas", json!({ "audits": ["query-table"], "n": 3, "m": 2, "tol": EXACT_TOL }), Some("0..1"))?;
    Ok(tally(&recs, EXACT_TOL))
}

fn c4() -> Outcome {
    lemma("leakage", "0..50", SIM_TOL)
}

fn c5() -> Outcome {
    let (a, da) = lemma("exclusion", "0..100", SIM_TOL)?;
    let (b, db) = lemma("mirroring", "0..100", SIM_TOL)?;
    Ok((a && b, format!("exclusion {da}; mirroring {db}")))
}

fn c6() -> Outcome {
    let recs = run("recurrences", json!({ "n": 4, "m": 3, "t": 3, "l": 2, "k": 3 }), Some("0..20"))?;
    let (pass, detail) = tally(&recs, SIM_TOL);
    let families = ["recurrence-wedge", "recurrence-triangle", "recurrence-path", "recurrence-cycle"];
    let bounded = families.iter().all(|f| metric(&recs, f).any(|r| r.params.contains_key("boundary")));
    let boundary_max = recs.iter().filter(|r| r.params.contains_key("boundary")).map(|r| r.value).fold(0.0, f64::max);
    Ok((pass && bounded, format!("{detail}, boundary deviation {boundary_max:.1e}")))
}

fn c7() -> Outcome {
    let mut recs = Vec::new();
    for n in [4, 6] {
        recs.extend(run(
            "recording-lemmas",
            json!({ "audits": ["guessing"], "n": n, "m": 3, "t": 1 }),
            Some("0..100"),
        )?);
    }
    Ok(tally(&recs, SIM_TOL))
}

fn c8() -> Outcome {
    let tri = run("learning-graph-feasibility", json!({ "trials": 500, "min_fault_paths": 50 }), Some("1..2"))?;
    let k3 = run(
        "learning-graph-feasibility",
        json!({ "variant": "general", "k": 3, "m": 640, "n": 1400, "r": [1, 1, 1], "trials": 100, "min_fault_paths": 1 }),
        Some("2..3"),
    )?;
    let k4 = run(
        "learning-graph-feasibility",
        json!({ "variant": "general", "k": 4, "m": 2600, "n": 5600, "r": [1, 1, 1, 1], "trials": 100, "min_fault_paths": 1 }),
        Some("3..4"),
    )?;
    let exact = |recs: &[ResultRecord]| {
        metric(recs, "exact-ones").map(|r| r.exact.clone().unwrap_or_default()).collect::<Vec<_>>().join(",")
    };
    let faults = metric(&tri, "fault-paths").map(|r| r.value).sum::<f64>();
    let pass = [&tri, &k3, &k4].iter().all(|r| tally(r, 0.0).0);
    Ok((pass, format!("triangle {} ({faults} fault paths), k=3 {}, k=4 {}", exact(&tri), exact(&k3), exact(&k4))))
}

fn c9() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (variant, k, d) in [("triangle", 3, 3), ("general", 3, 2), ("general", 4, 2), ("general", 5, 2)] {
        let recs = run("objective-scan", json!({ "variant": variant, "k": k, "d": d }), None)?;
        let lo = recs.iter().map(|r| r.value).fold(f64::INFINITY, f64::min);
        let hi = recs.iter().map(|r| r.value).fold(f64::NEG_INFINITY, f64::max);
        pass &= tally(&recs, 0.0).0 && recs.len() == 7;
        parts.push(format!("{variant} k={k} d={d} [{lo:.6}, {hi:.6}]"));
    }
    Ok((pass, parts.join("; ")))
}

fn c10() -> Outcome {
    let recs = run("tvd", json!({}), None)?;
    let (pass, detail) = tally(&recs, 0.0);
    let l1: Vec<String> = metric(&recs, "l1")
        .map(|r| format!("({},{})={}", r.params["n"], r.params["t"], r.exact.as_deref().unwrap_or("?")))
        .collect();
    Ok((pass, format!("{detail}; l1 {}", l1.join(" "))))
}

fn c11() -> Outcome {
    let recs = run("reductions", json!({}), None)?;
    let (pass, detail) = tally(&recs, 0.0);
    let fractions: Vec<&str> = recs.iter().filter_map(|r| r.exact.as_deref()).collect();
    Ok((pass && recs.len() == 9, format!("{detail}; completeness {}", fractions.join(", "))))
}

fn hidden_inputs(m: usize, d: usize, alphabet: std::ops::Range<u32>) -> Vec<HiddenString> {
    let mut out = Vec::new();
    for pos in (0..m).combinations(d) {
        for vals in (0..d).map(|_| alphabet.clone()).multi_cartesian_product() {
            let mut s = vec![None; m];
            for (&p, &v) in pos.iter().zip(&vals) {
                s[p] = Some(v);
            }
            out.push(HiddenString::from_symbols(s));
        }
    }
    out
}

fn c12() -> Outcome {
    let model = CostModel::default();
    let ed = hidden_inputs(8, 2, 1..5);
    let mut ed_ok = 0;
    for (i, y) in ed.iter().enumerate() {
        let (out, _) = run_hide_ed(y, 2, &model, i as u64)?;
        ed_ok += usize::from(out == hide_eval(&ElementDistinctness { arity: 2 }, y)?);
    }
    let sym_inputs = hidden_inputs(8, 4, 0..2);
    let (mut sym_ok, mut sym_total) = (0, 0);
    for mask in 0u32..32 {
        let p = SymmetricProfile::new((0..=4).map(|k| (mask >> k) & 1 == 1).collect())?;
        let f = SymmetricBoolean { values: p.values().to_vec() };
        for y in &sym_inputs {
            let (out, _) = run_hide_symmetric(&p, y, &model)?;
            sym_total += 1;
            sym_ok += usize::from(out == hide_eval(&f, y)?);
        }
    }
    let mut walk = Vec::new();
    let mut walk_ok = true;
    for d in [16usize, 256, 4096] {
        let r = walk_cost_optimize(64 * d, d)? as f64;
        let target = (d as f64).powf(0.75).ceil();
        walk_ok &= r <= 2.0 * target && target <= 2.0 * r;
        walk.push(format!("d={d} r={r} target={target}"));
    }
    let pass = ed_ok == ed.len() && sym_ok == sym_total && walk_ok;
    Ok((pass, format!("hide-ed {ed_ok}/{}, hide-symmetric {sym_ok}/{sym_total}, {}", ed.len(), walk.join(", "))))
}

fn c13() -> Outcome {
    let recs = run("graph-facts", json!({ "n": 4096, "m": 4096, "trials": 200 }), Some("0..1"))?;
    let (pass, _) = tally(&recs, 0.0);
    let parts: Vec<String> = recs
        .iter()
        .map(|r| {
            let mark = if r.vacuous { " (vacuous)" } else { "" };
            format!("{} {:.3} ≥ {}{mark}", r.metric, r.value, r.bound)
        })
        .collect();
    Ok((pass, parts.join(", ")))
}

fn c14() -> Outcome {
    let recs = run("search-to-decision", json!({ "k": 3, "ms": [27, 81, 243] }), Some("0..100"))?;
    let (pass, detail) = tally(&recs, 0.0);
    let valid = metric(&recs, "certificate-valid").filter(|r| r.pass).count();
    let calls = metric(&recs, "oracle-calls").map(|r| r.value / r.bound).fold(0.0, f64::max);
    Ok((pass, format!("{detail}; {valid} valid certificates, max calls/budget {calls:.3}")))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "recording identity", budget: secs(10), run: c1 },
    Criterion { id: 2, name: "support fact", budget: None, run: c2 },
    Criterion { id: 3, name: "query-effect table", budget: None, run: c3 },
    Criterion { id: 4, name: "leakage norm", budget: None, run: c4 },
    Criterion { id: 5, name: "exclusion and mirroring", budget: secs(60), run: c5 },
    Criterion { id: 6, name: "progress recurrences", budget: None, run: c6 },
    Criterion { id: 7, name: "guessing bounds", budget: None, run: c7 },
    Criterion { id: 8, name: "learning-graph feasibility", budget: secs(300), run: c8 },
    Criterion { id: 9, name: "objective scaling", budget: None, run: c9 },
    Criterion { id: 10, name: "exact tvd and identities", budget: secs(300), run: c10 },
    Criterion { id: 11, name: "reduction soundness", budget: None, run: c11 },
    Criterion { id: 12, name: "idealized algorithms", budget: None, run: c12 },
    Criterion { id: 13, name: "graph facts", budget: secs(120), run: c13 },
    Criterion { id: 14, name: "search to decision", budget: None, run: c14 },
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_budget = c.budget.is_none_or(|b| elapsed <= b);
        let (pass, detail) = match outcome {
            Ok((pass, detail)) => (pass && in_budget, detail),
            Err(e) => (false, format!("error: {e:#}")),
        };
        let budget = c.budget.map_or(String::new(), |b| format!(" / {}s", b.as_secs()));
        println!(
            "{} {:>2} {:<28} {:>7.1}s{budget}  {detail}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
        if !pass {
            failed.push(c.id);
        }
    }
    println!("{}/{} criteria pass", CRITERIA.len() - failed.len(), CRITERIA.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing: {failed:?}");
        ExitCode::FAILURE
    }
}
