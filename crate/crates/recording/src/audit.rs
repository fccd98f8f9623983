//! Named audit suites producing one record per checked inequality `lhs ≤ rhs`.

use std::collections::BTreeMap;

use graphcore::{colex_encode, Edge};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{
    binomial_tail, chernoff_bound, degree_exclusion_bound, guessing_bound_general, guessing_bound_triangle,
    leakage_norm, AlgorithmSpec, CountRange, GuessBlock, GuessOutput, Measure, Mode, Projector, RateSchedule,
    Recurrence, Result, SimConfig, SimError, Simulator,
};

/// Audit names accepted by [`run_audit`].
pub const AUDITS: &[&str] = &[
    "t-identity",
    "t-identity-corrupted",
    "support",
    "query-table",
    "leakage",
    "exclusion",
    "mirroring",
    "recurrence-wedge",
    "recurrence-triangle",
    "recurrence-path",
    "recurrence-cycle",
    "guessing",
    "chernoff",
    "degree-exclusion",
    "rate-claim",
];

fn d_n() -> u32 {
    3
}
fn d_m() -> usize {
    2
}
fn d_k() -> usize {
    2
}
fn d_t() -> usize {
    3
}
fn d_l() -> usize {
    2
}
fn d_cycle() -> usize {
    3
}
fn d_tol() -> f64 {
    1e-9
}

/// Parameters shared by the audits; unset overrides fall back to the
/// standard thresholds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditParams {
    #[serde(default = "d_n")]
    pub n: u32,
    #[serde(default = "d_m")]
    pub m: usize,
    /// Workspace dimension `K`.
    #[serde(default = "d_k")]
    pub workspace: usize,
    #[serde(default = "d_t")]
    pub t: usize,
    /// Degree threshold; wedge audits default to `⌈log n⌉²`, path and cycle audits to 2.
    #[serde(default)]
    pub delta: Option<u32>,
    /// Wedge threshold of the triangle audit; defaults to the standard `r*`.
    #[serde(default)]
    pub r_star: Option<u64>,
    #[serde(default = "d_l")]
    pub l: usize,
    #[serde(default = "d_cycle")]
    pub k: usize,
    #[serde(default = "d_tol")]
    pub tol: f64,
}

impl Default for AuditParams {
    fn default() -> Self {
        AuditParams {
            n: d_n(),
            m: d_m(),
            workspace: d_k(),
            t: d_t(),
            delta: None,
            r_star: None,
            l: d_l(),
            k: d_cycle(),
            tol: d_tol(),
        }
    }
}

/// One checked inequality; `pass` iff `lhs ≤ rhs + tol` (or the stated
/// comparison for negative controls).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub audit: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub vacuous: bool,
    pub pass: bool,
}

struct Ctx<'a> {
    name: &'a str,
    base: BTreeMap<String, f64>,
    tol: f64,
    out: Vec<AuditRecord>,
}

impl<'a> Ctx<'a> {
    fn new(name: &'a str, p: &AuditParams, seed: u64) -> Self {
        let base = [("n", p.n as f64), ("m", p.m as f64), ("K", p.workspace as f64), ("seed", seed as f64)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        Ctx { name, base, tol: p.tol, out: Vec::new() }
    }

    fn push(&mut self, extra: &[(&str, f64)], lhs: f64, rhs: f64) {
        self.push_tol(extra, lhs, rhs, self.tol);
    }

    fn push_tol(&mut self, extra: &[(&str, f64)], lhs: f64, rhs: f64, tol: f64) {
        let mut params = self.base.clone();
        for (k, v) in extra {
            params.insert(k.to_string(), *v);
        }
        let slack = lhs - rhs;
        self.out.push(AuditRecord {
            audit: self.name.to_string(),
            params,
            lhs,
            rhs,
            slack,
            vacuous: rhs >= 1.0,
            pass: slack <= tol,
        });
    }
}

fn uniform_sim(p: &AuditParams) -> Result<Simulator> {
    let mut cfg = SimConfig::uniform(p.n, p.m, p.workspace, p.t)?;
    cfg.tol = p.tol;
    Simulator::new(cfg)
}

/// Random distribution over `[len]`; some entries may be zero.
fn random_dist<G: Rng>(len: usize, rng: &mut G) -> Vec<f64> {
    let mut w: Vec<f64> =
        (0..len).map(|_| if rng.random_bool(0.2) { 0.0 } else { -rng.random::<f64>().max(1e-300).ln() }).collect();
    if w.iter().all(|&v| v == 0.0) {
        w[rng.random_range(0..len)] = 1.0;
    }
    let s: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= s);
    w
}

fn random_projector<G: Rng>(sim: &Simulator, rng: &mut G, depth: usize) -> Projector {
    let d = sim.dims();
    let choice = rng.random_range(0..if depth == 0 { 9 } else { 7 });
    match choice {
        0 => Projector::Zero,
        1 => Projector::Random { seed: rng.random(), density: rng.random() },
        2 => Projector::Paths { l: rng.random_range(1..=d.m), range: CountRange::at_least(rng.random_range(0..=3)) },
        3 => Projector::Degree { at_least: rng.random_range(1..=3), vertex: None },
        4 => Projector::Query(if rng.random_bool(0.3) { None } else { Some(rng.random_range(1..=d.big_n)) }),
        5 => Projector::EdgesOrDegree {
            range: CountRange::between(rng.random_range(0..=2), rng.random_range(1..=3)),
            delta: rng.random_range(1..=3),
        },
        6 => Projector::Identity,
        7 => Projector::not(random_projector(sim, rng, depth + 1)),
        _ => Projector::Or(vec![random_projector(sim, rng, depth + 1), random_projector(sim, rng, depth + 1)]),
    }
}

fn random_triangle<G: Rng>(n: u32, rng: &mut G) -> Vec<usize> {
    let mut vs: Vec<u32> = (1..=n).collect();
    vs.shuffle(rng);
    let mut b: Vec<usize> = [(vs[0], vs[1]), (vs[1], vs[2]), (vs[0], vs[2])]
        .iter()
        .map(|&(u, v)| colex_encode(Edge::new(u, v)) as usize + 1)
        .collect();
    b.shuffle(rng);
    b
}

/// Runs audit `name` for one seed.
pub fn run_audit(name: &str, p: &AuditParams, seed: u64) -> Result<Vec<AuditRecord>> {
    let mut ctx = Ctx::new(name, p, seed);
    let mut rng = graphcore::rng::seeded(seed);
    match name {
        "t-identity" => {
            let sim = uniform_sim(p)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            for t in 0..=p.t {
                let res = sim.verify_t_identity(&alg, t)?;
                ctx.push(&[("t", t as f64)], res, 0.0);
            }
        }
        "t-identity-corrupted" => {
            let mut cfg = SimConfig::uniform(p.n, p.m, p.workspace, p.t)?.with_corrupt_s(true);
            cfg.tol = p.tol;
            let sim = Simulator::new(cfg)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let res = sim.verify_t_identity(&alg, p.t)?;
            // detection: 0.1 ≤ residual
            ctx.push_tol(&[("t", p.t as f64)], 0.1, res, 0.0);
        }
        "support" => {
            let sim = uniform_sim(p)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let traj = sim.trajectory(&alg, p.t, |_| Ok(None))?;
            for (t, st) in traj.iter().enumerate() {
                ctx.push_tol(&[("t", t as f64)], st.support_violation(t), 1e-12, 0.0);
            }
        }
        "query-table" => {
            let cfg = SimConfig::uniform(p.n, p.m, 1, 1)?;
            let sim = Simulator::new(cfg)?;
            ctx.push_tol(&[], sim.query_table_deviation()?, 1e-12, 0.0);
        }
        "leakage" => {
            let big_n = rng.random_range(2..=6);
            let dist = random_dist(big_n, &mut rng);
            let mut sigma1: Vec<bool> = (0..big_n).map(|_| rng.random_bool(0.5)).collect();
            sigma1[rng.random_range(0..big_n)] = true;
            let r = leakage_norm(&dist, &sigma1)?;
            let extra = [("N", big_n as f64), ("p", r.p)];
            ctx.push(&extra, (r.norm - r.expected).abs(), 0.0);
            ctx.push(&extra, r.block_deviation, 0.0);
        }
        "exclusion" => {
            let sim = uniform_sim(p)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let t = rng.random_range(1..=p.t.max(1));
            let pis: Vec<_> = (1..t).map(|_| random_projector(&sim, &mut rng, 0)).collect();
            let pis_p: Vec<_> = (1..t).map(|_| random_projector(&sim, &mut rng, 0)).collect();
            let rec = random_projector(&sim, &mut rng, 0);
            let r = sim.check_exclusion(&alg, t, &pis, &pis_p, &rec)?;
            ctx.push(&[("t", t as f64), ("part", 0.0)], r.distance, r.sum);
            ctx.push(&[("t", t as f64), ("part", 1.0)], r.rec_lhs, r.rec_rhs);
        }
        "mirroring" => {
            let big_n = graphcore::num_pairs(p.n) as usize;
            let dists: Vec<Vec<f64>> = (0..p.m).map(|_| random_dist(big_n, &mut rng)).collect();
            let mut cfg = SimConfig::uniform(p.n, p.m, p.workspace, p.t)?.with_dists(dists)?;
            cfg.tol = p.tol;
            let sim = Simulator::new(cfg)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let sigma1: Vec<Vec<bool>> = (0..p.m).map(|_| (0..big_n).map(|_| rng.random_bool(0.4)).collect()).collect();
            let t = rng.random_range(0..=p.t);
            let big_gamma = rng.random_range(0..=p.m);
            let gamma = rng.random_range(0..=big_gamma);
            let r = sim.check_mirroring(&alg, t, big_gamma, gamma, &sigma1)?;
            let extra = [("t", t as f64), ("Gamma", big_gamma as f64), ("gamma", gamma as f64)];
            ctx.push(&extra, r.lhs, r.rhs());
            if let Some(b) = r.binomial_bound {
                ctx.push(&extra, r.op_norm_sqr, b);
            }
        }
        "recurrence-wedge" | "recurrence-triangle" | "recurrence-path" | "recurrence-cycle" => {
            let sim = uniform_sim(p)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let which = match name {
                "recurrence-wedge" => {
                    Recurrence::Wedge { delta: p.delta.unwrap_or_else(|| Recurrence::default_wedge_delta(p.n)) }
                }
                "recurrence-triangle" => {
                    Recurrence::Triangle { r_star: p.r_star.unwrap_or_else(|| Recurrence::default_r_star(p.n)) }
                }
                "recurrence-path" => Recurrence::Path {
                    l: p.l,
                    schedule: RateSchedule::new(p.k.max(3), p.delta.unwrap_or(2), p.n as u64)?,
                },
                _ => Recurrence::Cycle { schedule: RateSchedule::new(p.k, p.delta.unwrap_or(2), p.n as u64)? },
            };
            let rep = sim.check_recurrence(&alg, which, p.t)?;
            for (i, (_, v, e)) in rep.boundary.iter().enumerate() {
                // boundary values: |value − expected| ≤ 1e-12
                ctx.push_tol(&[("boundary", i as f64)], (v - e).abs(), 1e-12, 0.0);
            }
            for s in &rep.steps {
                let mut extra = vec![("t", s.t as f64)];
                if let Some(r) = s.r {
                    extra.push(("r", r as f64));
                }
                ctx.push(&extra, s.lhs, s.rhs);
            }
        }
        "guessing" => {
            let k = 3;
            if p.m < k {
                return Err(SimError::Param(format!("guessing needs m ≥ {k}")));
            }
            let sim = Simulator::new(SimConfig::uniform(p.n, p.m, 1, 1)?)?;
            let d = sim.dims();
            let mut positions: Vec<usize> = (0..p.m).collect();
            let mut outputs = Vec::new();
            for _ in 0..2 {
                positions.shuffle(&mut rng);
                outputs.push(Some(GuessOutput { a: positions[..k].to_vec(), b: random_triangle(p.n, &mut rng) }));
            }
            outputs.push(Some(GuessOutput { a: vec![0, 0, 1], b: random_triangle(p.n, &mut rng) }));
            outputs.push(None);
            let mut blocks: Vec<GuessBlock> = outputs
                .into_iter()
                .map(|output| GuessBlock {
                    output,
                    amps: (0..d.x_len)
                        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                        .collect(),
                })
                .collect();
            let norm: f64 = blocks.iter().flat_map(|b| &b.amps).map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            blocks.iter_mut().for_each(|b| b.amps.iter_mut().for_each(|z| *z /= norm));
            let value = sim.guessing_value(k, &blocks)?;
            ctx.push(&[("bound", 0.0)], value, guessing_bound_triangle(d.big_n));
            ctx.push(&[("bound", 1.0)], value, guessing_bound_general(k, d.big_n));
        }
        "chernoff" => {
            let m = rng.random_range(1..=30u64);
            let pr: f64 = if rng.random_bool(0.1) { 0.0 } else { rng.random() };
            let c = rng.random_range(0.05..=(m as f64 + 1.0));
            ctx.push(&[("m", m as f64), ("p", pr), ("c", c)], binomial_tail(m, pr, c), chernoff_bound(m, pr, c));
        }
        "degree-exclusion" => {
            let sim = uniform_sim(p)?;
            let alg = AlgorithmSpec::random(sim.dims(), p.t, seed);
            let traj = sim.trajectory(&alg, p.t, |_| Ok(None))?;
            for (t, st) in traj.iter().enumerate() {
                for delta in 1..=(p.m as u32 + 1) {
                    let mask = Projector::Degree { at_least: delta, vertex: None }.mask(&sim)?;
                    let lhs = st.projected_norm(&mask).powi(2);
                    ctx.push(&[("t", t as f64), ("delta", delta as f64)], lhs, degree_exclusion_bound(p.n, p.m, delta));
                }
            }
        }
        "rate-claim" => {
            let s = RateSchedule::new(p.k, p.delta.unwrap_or(2), p.n as u64)?;
            for l in 3..=p.k {
                for j in 1..=(l - 1) / 2 {
                    let lhs = s.r(j, p.t as u64) as f64 * s.r(l - 1 - j, p.t as u64) as f64;
                    let rhs = s.r(l - 1, p.t as u64) as f64 * p.n as f64;
                    ctx.push_tol(&[("l", l as f64), ("j", j as f64), ("t", p.t as f64)], lhs, rhs, 0.0);
                }
            }
        }
        other => return Err(SimError::UnknownAudit(other.to_string())),
    }
    Ok(ctx.out)
}

/// Runs audit `name` over a range of seeds in parallel, in seed order.
pub fn run_audit_seeds(name: &str, p: &AuditParams, seeds: std::ops::Range<u64>) -> Result<Vec<AuditRecord>> {
    let per: Vec<Vec<AuditRecord>> = seeds.into_par_iter().map(|s| run_audit(name, p, s)).collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Progress value helper for reports.
pub fn progress_at(sim: &Simulator, alg: &AlgorithmSpec, t: usize, m: Measure) -> Result<f64> {
    let st = sim.run(alg, &Mode::Recording, t)?;
    sim.progress(&st, m)
}
