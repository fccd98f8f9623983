//! Named suites. Each expands into independent tasks run on the worker
//! pool; records come back in task order.

use std::collections::BTreeMap;
use std::time::Instant;

use graphcore::{cycle_edges_form_cycle, montecarlo_facts};
use lgraph::{audit_feasibility, default_params, objective_eval, scaling_target, Edit, LGParams, Variant};
use randprocess::{check_binomial_identities, exact_tvd, mc_tvd};
use rayon::prelude::*;
use recording::{run_audit, AuditParams};
use reductions::{exhaustive_checks, planted_instance, search_to_decision, ExactOracle, SearchConfig};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Arithmetic, ExperimentConfig, QelabError, Result, ResultRecord, SeedRange};

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "graph-facts",
    "reductions",
    "search-to-decision",
    "recording-lemmas",
    "recurrences",
    "learning-graph-feasibility",
    "objective-scan",
    "tvd",
    "tvd-exact",
    "tvd-mc",
    "tvd-identities",
];

type Params = BTreeMap<String, Value>;

fn module(suite: &str, e: impl std::fmt::Display) -> QelabError {
    QelabError::Module { suite: suite.to_string(), msg: e.to_string() }
}

fn parse<T: DeserializeOwned>(suite: &str, params: &Params) -> Result<T> {
    serde_json::from_value(Value::Object(params.clone().into_iter().collect()))
        .map_err(|e| QelabError::Config(format!("{suite} params: {e}")))
}

fn echo<T: Serialize>(p: &T) -> Params {
    match serde_json::to_value(p).expect("params serialize") {
        Value::Object(m) => m.into_iter().collect(),
        _ => Params::new(),
    }
}

fn with(mut p: Params, extra: &[(&str, Value)]) -> Params {
    for (k, v) in extra {
        p.insert(k.to_string(), v.clone());
    }
    p
}

fn arithmetic(suite: &str, cfg: &ExperimentConfig, allowed: &[Arithmetic]) -> Result<Arithmetic> {
    match cfg.arithmetic {
        None => Ok(allowed[0]),
        Some(a) if allowed.contains(&a) => Ok(a),
        Some(a) => Err(QelabError::Config(format!("{suite} does not support {a:?} arithmetic"))),
    }
}

fn seeds(cfg: &ExperimentConfig, default: SeedRange) -> SeedRange {
    cfg.seeds.unwrap_or(default)
}

fn no_seeds(suite: &str, cfg: &ExperimentConfig) -> Result<()> {
    match cfg.seeds {
        Some(_) => Err(QelabError::Config(format!("{suite} is exhaustive and takes no seeds"))),
        None => Ok(()),
    }
}

/// Runs `tasks` on the pool, stamping each task's records with its wall time when asked.
fn run_tasks<T, F>(tasks: Vec<T>, timing: bool, f: F) -> Result<Vec<ResultRecord>>
where
    T: Send,
    F: Fn(T) -> Result<Vec<ResultRecord>> + Sync + Send,
{
    let parts: Vec<Vec<ResultRecord>> = tasks
        .into_par_iter()
        .map(|t| {
            let start = Instant::now();
            let mut recs = f(t)?;
            if timing {
                let ms = start.elapsed().as_secs_f64() * 1e3;
                recs.iter_mut().for_each(|r| r.wall_ms = Some(ms));
            }
            Ok(recs)
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// Executes `suite` (or the config's suite) and returns its records.
pub fn run_suite(suite: Option<&str>, cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    let name = match (suite, cfg.suite.as_deref()) {
        (Some(a), Some(b)) if a != b => {
            return Err(QelabError::Config(format!("suite `{a}` given but config names `{b}`")));
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(QelabError::Config("no suite given".into())),
    };
    match name {
        "graph-facts" => graph_facts(cfg, timing),
        "reductions" => reductions_suite(cfg, timing),
        "search-to-decision" => search(cfg, timing),
        "recording-lemmas" => recording_suite(name, cfg, timing, LEMMA_AUDITS, &[]),
        "recurrences" => recording_suite(name, cfg, timing, RECURRENCE_AUDITS, &[("n", 4.into()), ("m", 3.into())]),
        "learning-graph-feasibility" => lgraph_feasibility(cfg, timing),
        "objective-scan" => objective_scan(cfg, timing),
        "tvd" => tvd_bundle(cfg, timing),
        "tvd-exact" => tvd_exact(cfg, timing),
        "tvd-mc" => tvd_mc(cfg, timing),
        "tvd-identities" => tvd_identities(cfg, timing),
        other => Err(QelabError::Config(format!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")))),
    }
}

// graph facts

/// Thresholds frozen from a 200-trial calibration at `n = m = 4096`.
pub(crate) const TRIANGLE_TAU: f64 = 0.65;
pub(crate) const DUPLICATE_TAU: f64 = 0.85;
pub(crate) const PARTITION_TAU: f64 = 0.0;

fn d_4096() -> u32 {
    4096
}
fn d_4096u() -> usize {
    4096
}
fn d_k3() -> usize {
    3
}
fn d_200() -> usize {
    200
}
fn d_maxdeg() -> f64 {
    0.95
}
fn d_tri() -> f64 {
    TRIANGLE_TAU
}
fn d_part() -> f64 {
    PARTITION_TAU
}
fn d_dup() -> f64 {
    DUPLICATE_TAU
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactsParams {
    #[serde(default = "d_4096")]
    n: u32,
    #[serde(default = "d_4096u")]
    m: usize,
    #[serde(default = "d_k3")]
    k: usize,
    #[serde(default = "d_200")]
    trials: usize,
    #[serde(default = "d_maxdeg")]
    maxdeg_min: f64,
    #[serde(default = "d_tri")]
    cycle_min: f64,
    #[serde(default = "d_part")]
    partition_min: f64,
    #[serde(default = "d_dup")]
    duplicate_min: f64,
}

fn graph_facts(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "graph-facts";
    arithmetic(S, cfg, &[Arithmetic::Float])?;
    let p: FactsParams = parse(S, &cfg.params)?;
    let base = echo(&p);
    let seeds = seeds(cfg, SeedRange { start: 0, end: 1 });
    run_tasks(seeds.range().collect(), timing, |seed| {
        let r = montecarlo_facts(p.n, p.m, p.k, p.trials, seed).map_err(|e| module(S, e))?;
        let ps = with(base.clone(), &[("seed", seed.into())]);
        Ok(vec![
            ResultRecord::at_least(S, ps.clone(), "maxdeg-fraction", r.maxdeg_fraction, p.maxdeg_min, 0.0),
            ResultRecord::at_least(S, ps.clone(), "cycle-fraction", r.cycle_fraction, p.cycle_min, 0.0),
            ResultRecord::at_least(S, ps.clone(), "partition-fraction", r.partition_fraction, p.partition_min, 0.0)
                .vacuous(p.partition_min <= 0.0),
            ResultRecord::at_least(S, ps, "duplicate-fraction", r.duplicate_fraction, p.duplicate_min, 0.0),
        ])
    })
}

// reductions

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NoParams {}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn fraction(a: usize, b: usize) -> String {
    let g = gcd(a, b).max(1);
    if b / g == 1 {
        format!("{}", a / g)
    } else {
        format!("{}/{}", a / g, b / g)
    }
}

fn reductions_suite(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "reductions";
    arithmetic(S, cfg, &[Arithmetic::Exact])?;
    no_seeds(S, cfg)?;
    let _: NoParams = parse(S, &cfg.params)?;
    run_tasks(vec![()], timing, |()| {
        let checks = exhaustive_checks().map_err(|e| module(S, e))?;
        Ok(checks
            .into_iter()
            .map(|c| {
                let metric = format!("{:?}/{}", c.reduction, c.property);
                let ps = with(
                    Params::new(),
                    &[("instances", c.instances.into()), ("runs", c.runs.into()), ("hits", c.hits.into())],
                );
                match c.expected {
                    Some((num, den)) => ResultRecord::exact_eq(
                        S,
                        ps,
                        &metric,
                        (&fraction(c.hits, c.runs), c.hits as f64 / c.runs as f64),
                        (&fraction(num, den), num as f64 / den as f64),
                    ),
                    None => ResultRecord::at_most(S, ps, &metric, c.violations as f64, 0.0, 0.0),
                }
            })
            .collect())
    })
}

// search to decision

/// Call constants frozen from a calibration at `m ∈ {27, 81, 243}`.
pub(crate) fn call_constant(k: usize) -> Option<f64> {
    match k {
        3 => Some(100.0),
        4 => Some(140.0),
        _ => None,
    }
}

fn d_ms_search() -> Vec<usize> {
    vec![27, 81, 243]
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchParams {
    #[serde(default = "d_k3")]
    k: usize,
    #[serde(default = "d_ms_search")]
    ms: Vec<usize>,
    #[serde(default)]
    call_constant: Option<f64>,
}

fn search(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "search-to-decision";
    arithmetic(S, cfg, &[Arithmetic::Exact])?;
    let p: SearchParams = parse(S, &cfg.params)?;
    let c = p
        .call_constant
        .or_else(|| call_constant(p.k))
        .ok_or_else(|| QelabError::Config(format!("no frozen call constant for k = {}; set call_constant", p.k)))?;
    if p.k < 3 || p.ms.iter().any(|&m| m < p.k) {
        return Err(QelabError::Config("need k ≥ 3 and every m ≥ k".into()));
    }
    let base = with(echo(&p), &[("call_constant", c.into())]);
    let seeds = seeds(cfg, SeedRange { start: 0, end: 100 });
    let tasks: Vec<(usize, u64)> = p.ms.iter().flat_map(|&m| seeds.range().map(move |s| (m, s))).collect();
    run_tasks(tasks, timing, |(m, seed)| {
        let x = planted_instance(m, p.k, seed);
        let out = search_to_decision(&mut ExactOracle::new(), &x, p.k, SearchConfig::for_k(p.k));
        let valid = out
            .certificate
            .as_ref()
            .is_some_and(|cert| cert.indices.len() == p.k && cycle_edges_form_cycle(&x, &cert.indices));
        let ps = with(base.clone(), &[("m", m.into()), ("seed", seed.into())]);
        let budget = c * (m as f64).log2().powi(2);
        Ok(vec![
            ResultRecord::at_least(S, ps.clone(), "certificate-valid", f64::from(u8::from(valid)), 1.0, 0.0),
            ResultRecord::at_most(S, ps, "oracle-calls", out.oracle_calls as f64, budget, 0.0),
        ])
    })
}

// recording simulator

const LEMMA_AUDITS: &[&str] = &["t-identity", "support", "query-table", "leakage", "exclusion", "mirroring"];
const RECURRENCE_AUDITS: &[&str] = &["recurrence-wedge", "recurrence-triangle", "recurrence-path", "recurrence-cycle"];

fn recording_suite(
    suite: &str,
    cfg: &ExperimentConfig,
    timing: bool,
    default_audits: &[&str],
    defaults: &[(&str, Value)],
) -> Result<Vec<ResultRecord>> {
    arithmetic(suite, cfg, &[Arithmetic::Float])?;
    let mut params = cfg.params.clone();
    let audits: Vec<String> = match params.remove("audits") {
        Some(v) => serde_json::from_value(v).map_err(|e| QelabError::Config(format!("{suite} audits: {e}")))?,
        None => default_audits.iter().map(|s| s.to_string()).collect(),
    };
    for (k, v) in defaults {
        params.entry(k.to_string()).or_insert_with(|| v.clone());
    }
    let p: AuditParams = parse(suite, &params)?;
    if let Some(bad) = audits.iter().find(|a| !recording::AUDITS.contains(&a.as_str())) {
        return Err(QelabError::Config(format!("unknown audit `{bad}`")));
    }
    let seeds = seeds(cfg, SeedRange { start: 0, end: 20 });
    let tasks: Vec<(&str, u64)> = audits.iter().flat_map(|a| seeds.range().map(move |s| (a.as_str(), s))).collect();
    run_tasks(tasks, timing, |(audit, seed)| {
        let recs = run_audit(audit, &p, seed).map_err(|e| module(suite, format!("{audit}: {e}")))?;
        Ok(recs
            .into_iter()
            .map(|r| ResultRecord {
                suite: suite.to_string(),
                params: r.params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect(),
                metric: r.audit,
                value: r.lhs,
                bound: r.rhs,
                slack: r.slack,
                tolerance: p.tol,
                vacuous: r.vacuous,
                pass: r.pass,
                exact: None,
                wall_ms: None,
            })
            .collect())
    })
}

// learning graph

fn d_triangle() -> Variant {
    Variant::Triangle
}
fn d_2() -> usize {
    2
}
fn d_30() -> usize {
    30
}
fn d_60() -> u32 {
    60
}
fn d_r() -> Vec<usize> {
    vec![1, 1]
}
fn d_500() -> usize {
    500
}
fn d_edits() -> Vec<Edit> {
    vec![Edit::Redirect, Edit::Noisy, Edit::Fault]
}
fn d_50() -> usize {
    50
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FeasParams {
    #[serde(default = "d_triangle")]
    variant: Variant,
    #[serde(default = "d_k3")]
    k: usize,
    #[serde(default = "d_2")]
    d: usize,
    #[serde(default = "d_30")]
    m: usize,
    #[serde(default = "d_60")]
    n: u32,
    #[serde(default = "d_r")]
    r: Vec<usize>,
    #[serde(default = "d_500")]
    trials: usize,
    #[serde(default = "d_edits")]
    edits: Vec<Edit>,
    #[serde(default = "d_50")]
    min_fault_paths: usize,
}

fn lgraph_feasibility(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "learning-graph-feasibility";
    let mode = arithmetic(S, cfg, &[Arithmetic::Exact, Arithmetic::Float])?;
    let p: FeasParams = parse(S, &cfg.params)?;
    let lg = LGParams::with_sizes(p.variant, p.k, p.d, p.m, p.n, p.r.clone())
        .map_err(|e| QelabError::Config(e.to_string()))?;
    let base = echo(&p);
    let seeds = seeds(cfg, SeedRange { start: 0, end: 1 });
    run_tasks(seeds.range().collect(), timing, |seed| {
        let a = audit_feasibility(&lg, &p.edits, p.trials, seed).map_err(|e| module(S, e))?;
        let ps = with(base.clone(), &[("seed", seed.into())]);
        let main = match mode {
            Arithmetic::Exact => {
                ResultRecord::at_least(S, ps.clone(), "exact-ones", a.exact_ones as f64, a.trials as f64, 0.0)
                    .with_exact(format!("{}/{}", a.exact_ones, a.trials))
            }
            Arithmetic::Float => ResultRecord::at_most(S, ps.clone(), "max-float-error", a.max_float_error, 0.0, 1e-9),
        };
        Ok(vec![
            main,
            ResultRecord::at_least(S, ps, "fault-paths", a.fault_paths as f64, p.min_fault_paths as f64, 0.0),
        ])
    })
}

fn d_ms_scan() -> Vec<usize> {
    (12..=24).step_by(2).map(|e| 1usize << e).collect()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScanParams {
    #[serde(default = "d_triangle")]
    variant: Variant,
    #[serde(default = "d_k3")]
    k: usize,
    #[serde(default = "d_k3")]
    d: usize,
    #[serde(default = "d_ms_scan")]
    ms: Vec<usize>,
    #[serde(default)]
    band: Option<(f64, f64)>,
}

/// Bands of `total / target` frozen after calibration against a
/// high-precision evaluation.
pub(crate) fn frozen_band(variant: Variant, k: usize, d: usize) -> Option<(f64, f64)> {
    match (variant, k, d) {
        (Variant::Triangle, 3, 3) => Some((5.947, 5.960)),
        (Variant::General, 3, 2) => Some((0.1565, 0.1569)),
        (Variant::General, 4, 2) => Some((0.015733, 0.015766)),
        (Variant::General, 5, 2) => Some((0.0022105, 0.0022163)),
        _ => None,
    }
}

fn objective_scan(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "objective-scan";
    arithmetic(S, cfg, &[Arithmetic::Float])?;
    no_seeds(S, cfg)?;
    let p: ScanParams = parse(S, &cfg.params)?;
    let (lo, hi) = p.band.or_else(|| frozen_band(p.variant, p.k, p.d)).ok_or_else(|| {
        QelabError::Config(format!("no frozen band for {:?} k={} d={}; set band", p.variant, p.k, p.d))
    })?;
    let base = with(echo(&p), &[("band", serde_json::json!([lo, hi]))]);
    run_tasks(p.ms.clone(), timing, |m| {
        let o = objective_eval(&default_params(p.variant, p.k, p.d, m)).map_err(|e| module(S, e))?;
        let ratio = o.total / scaling_target(p.variant, p.k, p.d, m);
        Ok(vec![ResultRecord::within(S, with(base.clone(), &[("m", m.into())]), "total/target", ratio, lo, hi)])
    })
}

// random process

fn d_12() -> u32 {
    12
}
fn d_1() -> u32 {
    1
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NtParams {
    #[serde(default = "d_12")]
    n: u32,
    #[serde(default = "d_1")]
    t: u32,
}

fn exact_records(suite: &str, n: u32, t: u32, with_bad: bool) -> Result<Vec<ResultRecord>> {
    let r = exact_tvd(n, t).map_err(|e| module(suite, e))?;
    let ps = with(Params::new(), &[("n", n.into()), ("t", t.into())]);
    let bound = 4.0 * f64::from(t * t) / f64::from(n);
    let mut l1 = ResultRecord::at_most(suite, ps.clone(), "l1", r.l1_f64, bound, 0.0).with_exact(r.l1.clone());
    l1.pass = r.within_bound;
    let mut out = vec![l1];
    if with_bad {
        let f = |s: &str| -> f64 {
            let (a, b) = s.split_once('/').unwrap_or((s, "1"));
            a.parse::<f64>().unwrap_or(f64::NAN) / b.parse::<f64>().unwrap_or(f64::NAN)
        };
        out.push(ResultRecord::exact_eq(
            suite,
            ps.clone(),
            "bad-p0-vs-p1",
            (&r.bad[0], f(&r.bad[0])),
            (&r.bad[1], f(&r.bad[1])),
        ));
        out.push(ResultRecord::exact_eq(
            suite,
            ps,
            "bad-vs-closed-form",
            (&r.bad[0], f(&r.bad[0])),
            (&r.bad_closed_form, f(&r.bad_closed_form)),
        ));
    }
    Ok(out)
}

fn identity_record(suite: &str, n: u32, t: u32) -> Result<ResultRecord> {
    let r = check_binomial_identities(n, t).map_err(|e| module(suite, e))?;
    let off = r.p0.iter().chain(&r.p1).filter(|a| **a != r.binomial_atom).count();
    let ps = with(Params::new(), &[("n", n.into()), ("t", t.into())]);
    Ok(ResultRecord::at_most(suite, ps, "atoms-off-binomial", off as f64, 0.0, 0.0).with_exact(r.binomial_atom))
}

fn tvd_exact(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "tvd-exact";
    arithmetic(S, cfg, &[Arithmetic::Exact])?;
    no_seeds(S, cfg)?;
    let p: NtParams = parse(S, &cfg.params)?;
    run_tasks(vec![()], timing, |()| exact_records(S, p.n, p.t, false))
}

fn d_6() -> u32 {
    6
}

fn tvd_identities(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "tvd-identities";
    arithmetic(S, cfg, &[Arithmetic::Exact])?;
    no_seeds(S, cfg)?;
    #[derive(Debug, Deserialize)]
    #[serde(deny_unknown_fields)]
    struct P {
        #[serde(default = "d_12")]
        n: u32,
        #[serde(default = "d_6")]
        t: u32,
    }
    let p: P = parse(S, &cfg.params)?;
    run_tasks(vec![()], timing, |()| Ok(vec![identity_record(S, p.n, p.t)?]))
}

fn d_8() -> u32 {
    8
}
fn d_3() -> u32 {
    3
}
fn d_20000() -> usize {
    20_000
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct McParams {
    #[serde(default = "d_8")]
    n: u32,
    #[serde(default = "d_3")]
    t: u32,
    #[serde(default = "d_20000")]
    trials: usize,
}

fn tvd_mc(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "tvd-mc";
    arithmetic(S, cfg, &[Arithmetic::Float])?;
    let p: McParams = parse(S, &cfg.params)?;
    let base = echo(&p);
    let bound = 4.0 * f64::from(p.t * p.t) / f64::from(p.n);
    let seeds = seeds(cfg, SeedRange { start: 0, end: 1 });
    // the estimator parallelizes internally, so seeds run in order
    let mut out = Vec::new();
    for seed in seeds.range() {
        out.extend(run_tasks(vec![seed], timing, |seed| {
            let m = mc_tvd(p.n, p.t, p.trials, seed).map_err(|e| module(S, e))?;
            let ps = with(
                base.clone(),
                &[("seed", seed.into()), ("ci_low", m.ci_low.into()), ("plug_in", m.plug_in.into())],
            );
            Ok(vec![
                ResultRecord::at_most(S, ps.clone(), "estimate", m.estimate, bound, 0.0),
                ResultRecord::at_most(S, ps, "ci-high", m.ci_high, bound, 0.0),
            ])
        })?);
    }
    Ok(out)
}

fn d_cases() -> Vec<(u32, u32)> {
    vec![(12, 1), (12, 2), (24, 1), (8, 3)]
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleParams {
    #[serde(default = "d_cases")]
    cases: Vec<(u32, u32)>,
    #[serde(default = "d_12")]
    identities_n: u32,
    #[serde(default = "d_6")]
    identities_t_max: u32,
}

fn tvd_bundle(cfg: &ExperimentConfig, timing: bool) -> Result<Vec<ResultRecord>> {
    const S: &str = "tvd";
    arithmetic(S, cfg, &[Arithmetic::Exact])?;
    no_seeds(S, cfg)?;
    let p: BundleParams = parse(S, &cfg.params)?;
    let mut out = Vec::new();
    for &(n, t) in &p.cases {
        out.extend(run_tasks(vec![()], timing, |()| exact_records(S, n, t, true))?);
    }
    let ts: Vec<u32> = (0..=p.identities_t_max).collect();
    out.extend(run_tasks(ts, timing, |t| Ok(vec![identity_record(S, p.identities_n, t)?]))?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(json: &str) -> ExperimentConfig {
        ExperimentConfig::from_json(json).unwrap()
    }

    #[test]
    fn tvd_exact_gives_one_passing_record() {
        let r = run_suite(Some("tvd-exact"), &cfg(r#"{"params":{"n":12,"t":1}}"#), false).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].pass);
        assert_eq!(r[0].exact.as_deref(), Some("0"));
    }

    #[test]
    fn unknown_suite_and_params_are_config_errors() {
        let e = run_suite(Some("nope"), &ExperimentConfig::default(), false).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_suite(Some("tvd-exact"), &cfg(r#"{"params":{"q":1}}"#), false).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_suite(Some("tvd-exact"), &cfg(r#"{"arithmetic":"float"}"#), false).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn mismatched_suite_names_are_rejected() {
        assert!(run_suite(Some("tvd"), &cfg(r#"{"suite":"reductions"}"#), false).is_err());
    }

    #[test]
    fn module_errors_carry_the_suite() {
        let e = run_suite(Some("tvd-exact"), &cfg(r#"{"params":{"n":24,"t":3}}"#), false).unwrap_err();
        assert!(matches!(e, QelabError::Module { ref suite, .. } if suite == "tvd-exact"));
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn fractions_reduce() {
        assert_eq!(fraction(6, 27), "2/9");
        assert_eq!(fraction(0, 5), "0");
    }
}
