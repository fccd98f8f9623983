//! Progress measures and per-step checks of the wedge, triangle, path and
//! cycle recurrences on filtered recording runs.

use serde::{Deserialize, Serialize};

use crate::{ceil_log2, AlgorithmSpec, Mask, RateSchedule, RecordingState, Result, SimError, Simulator, XStats};

/// Progress measure selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Measure {
    /// `‖Π^⋀_{[r,∞)} φ‖`.
    Wedges(i64),
    /// `‖Π^△ φ‖`.
    Triangle,
    /// `‖Π^{l}_{[r,∞)} φ‖`.
    Paths { l: usize, r: i64 },
    /// `‖Π^□_k φ‖`.
    Cycle(usize),
}

/// Recurrence selector for [`Simulator::check_recurrence`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Recurrence {
    /// `Λ'_{t+1,r} ≤ Λ'_{t,r} + 8√(t/n)·Λ'_{t,r−2Δ}` with `Π_Bad` = degree `≥ Δ`.
    Wedge { delta: u32 },
    /// `Δ*_{t+1} ≤ Δ*_t + 4√(r*/N)` with `Π*` = at least `r*` wedges.
    Triangle { r_star: u64 },
    /// `P^{l}_{t+1,r} ≤ P^{l}_{t,r} + 4√(B_l(t)/N)·P^{l}_{t,r−lΔ^{l−1}}` on `φ^{(l−1)}`.
    Path { l: usize, schedule: RateSchedule },
    /// `C'_{t+1} ≤ C'_t + 4√(r_{k−1}(t)/N)` on `φ^{(k−1)}`.
    Cycle { schedule: RateSchedule },
}

impl Recurrence {
    /// `Δ = ⌈log n⌉²`.
    pub fn default_wedge_delta(n: u32) -> u32 {
        ceil_log2(n as u64).pow(2)
    }

    /// `r* = ⌈n^{4/7}/log^{6/7} n⌉·2⌈log n⌉²`.
    pub fn default_r_star(n: u32) -> u64 {
        let nf = n as f64;
        let first = (nf.powf(4.0 / 7.0) / nf.log2().powf(6.0 / 7.0)).ceil() as u64;
        first * 2 * (ceil_log2(n as u64) as u64).pow(2)
    }
}

/// One inequality instance `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepSlack {
    pub t: usize,
    pub r: Option<i64>,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs − rhs`.
    pub slack: f64,
    /// `rhs ≥ 1`, so the inequality holds for any state.
    pub vacuous: bool,
}

/// Boundary values and per-step slacks of one recurrence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    /// `(name, value, expected)`.
    pub boundary: Vec<(String, f64, f64)>,
    pub steps: Vec<StepSlack>,
}

impl RecurrenceReport {
    pub fn max_slack(&self) -> f64 {
        self.steps.iter().map(|s| s.slack).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Whether every boundary value is within `tol` of its expected value.
    pub fn boundary_within(&self, tol: f64) -> bool {
        self.boundary.iter().all(|(_, v, e)| (v - e).abs() <= tol)
    }
}

/// `Σ_{i,u,w} |amp|²` per input label.
fn input_weights(state: &RecordingState) -> Vec<f64> {
    let d = state.dims();
    let mut w = vec![0.0; d.x_len];
    for (idx, z) in state.amps().iter().enumerate() {
        w[idx % d.x_len] += z.norm_sqr();
    }
    w
}

/// `‖Π φ‖` for an input predicate, from the per-label weights.
fn norm_where(weights: &[f64], table: &[XStats], pred: impl Fn(&XStats) -> bool) -> f64 {
    weights.iter().zip(table).filter(|(_, s)| pred(s)).map(|(w, _)| w).sum::<f64>().sqrt()
}

fn step(t: usize, r: Option<i64>, lhs: f64, rhs: f64) -> StepSlack {
    StepSlack { t, r, lhs, rhs, slack: lhs - rhs, vacuous: rhs >= 1.0 }
}

impl Simulator {
    pub fn progress(&self, state: &RecordingState, measure: Measure) -> Result<f64> {
        state.check_dims(self.dims())?;
        let w = input_weights(state);
        let table = self.table();
        Ok(match measure {
            Measure::Wedges(r) => norm_where(&w, table, |s| s.wedges() as i64 >= r),
            Measure::Triangle => norm_where(&w, table, |s| s.has_cycle(3)),
            Measure::Paths { l, r } => norm_where(&w, table, |s| s.path_count(l) as i64 >= r),
            Measure::Cycle(k) => norm_where(&w, table, |s| s.has_cycle(k)),
        })
    }

    /// `Π^{(l)}_{Bad,t}`: a vertex of degree `≥ Δ`, or at least `r_j(t)`
    /// length-`j` paths for some `1 ≤ j ≤ l`.
    pub fn bad_mask(&self, schedule: &RateSchedule, l: usize, t: usize) -> Mask {
        let d = self.dims();
        let rates: Vec<u128> = (1..=l).map(|j| schedule.r(j, t as u64)).collect();
        let xmask: Vec<bool> = self
            .table()
            .iter()
            .map(|s| {
                s.max_degree() >= schedule.delta
                    || rates.iter().enumerate().any(|(j, &r)| s.path_count(j + 1) as u128 >= r)
            })
            .collect();
        Mask::from_input(d, &xmask)
    }

    fn input_mask(&self, pred: impl Fn(&XStats) -> bool) -> Mask {
        let xmask: Vec<bool> = self.table().iter().map(pred).collect();
        Mask::from_input(self.dims(), &xmask)
    }

    /// Runs the filtered recording model required by `which` up to `t_max`
    /// and evaluates its inequality at every step `t < t_max` and every
    /// relevant threshold `r`.
    pub fn check_recurrence(&self, alg: &AlgorithmSpec, which: Recurrence, t_max: usize) -> Result<RecurrenceReport> {
        let big_n = self.dims().big_n as f64;
        let n = self.config().n as f64;
        let table = self.table();
        let mut boundary = Vec::new();
        let mut steps = Vec::new();
        match which {
            Recurrence::Wedge { delta } => {
                let bad = self.input_mask(|s| s.max_degree() >= delta);
                let traj = self.trajectory(alg, t_max, |_| Ok(Some(bad.clone())))?;
                let ws: Vec<Vec<f64>> = traj.iter().map(input_weights).collect();
                let lam = |t: usize, r: i64| norm_where(&ws[t], table, |s| s.wedges() as i64 >= r);
                let top = table.iter().map(|s| s.wedges()).max().unwrap_or(0) as i64 + 1;
                boundary.push(("Λ'_{0,0}".into(), lam(0, 0), 1.0));
                let tail = (1..=top).map(|r| lam(0, r)).fold(0.0, f64::max);
                boundary.push(("max_{r≥1} Λ'_{0,r}".into(), tail, 0.0));
                let shift = 2 * delta as i64;
                for t in 0..t_max {
                    let coef = 8.0 * (t as f64 / n).sqrt();
                    for r in 0..=top {
                        steps.push(step(t, Some(r), lam(t + 1, r), lam(t, r) + coef * lam(t, r - shift)));
                    }
                }
            }
            Recurrence::Triangle { r_star } => {
                let bad = self.input_mask(|s| s.wedges() >= r_star);
                let traj = self.trajectory(alg, t_max, |_| Ok(Some(bad.clone())))?;
                let ws: Vec<Vec<f64>> = traj.iter().map(input_weights).collect();
                let tri = |t: usize| norm_where(&ws[t], table, |s| s.has_cycle(3));
                boundary.push(("Δ*_0".into(), tri(0), 0.0));
                let inc = 4.0 * (r_star as f64 / big_n).sqrt();
                for t in 0..t_max {
                    steps.push(step(t, None, tri(t + 1), tri(t) + inc));
                }
            }
            Recurrence::Path { l, schedule } => {
                if l < 2 {
                    return Err(SimError::Param(format!("path recurrence needs l ≥ 2, got {l}")));
                }
                let traj = self.trajectory(alg, t_max, |j| Ok(Some(self.bad_mask(&schedule, l - 1, j))))?;
                let ws: Vec<Vec<f64>> = traj.iter().map(input_weights).collect();
                let p = |t: usize, r: i64| norm_where(&ws[t], table, |s| s.path_count(l) as i64 >= r);
                let top = table.iter().map(|s| s.path_count(l)).max().unwrap_or(0) as i64 + 1;
                let tail = (1..=top).map(|r| p(0, r)).fold(0.0, f64::max);
                boundary.push((format!("max_{{r≥1}} P^{{{l}}}_{{0,r}}"), tail, 0.0));
                let shift = (l as u128).saturating_mul((schedule.delta as u128).saturating_pow(l as u32 - 1));
                let shift = shift.min(i64::MAX as u128 / 2) as i64;
                for t in 0..t_max {
                    let coef = 4.0 * (schedule.b(l, t as u64) as f64 / big_n).sqrt();
                    for r in 0..=top {
                        steps.push(step(t, Some(r), p(t + 1, r), p(t, r) + coef * p(t, r - shift)));
                    }
                }
            }
            Recurrence::Cycle { schedule } => {
                let k = schedule.k;
                let traj = self.trajectory(alg, t_max, |j| Ok(Some(self.bad_mask(&schedule, k - 1, j))))?;
                let ws: Vec<Vec<f64>> = traj.iter().map(input_weights).collect();
                let c = |t: usize| norm_where(&ws[t], table, |s| s.has_cycle(k));
                boundary.push(("C'_0".into(), c(0), 0.0));
                for t in 0..t_max {
                    let inc = 4.0 * (schedule.r(k - 1, t as u64) as f64 / big_n).sqrt();
                    steps.push(step(t, None, c(t + 1), c(t) + inc));
                }
            }
        }
        Ok(RecurrenceReport { boundary, steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Mode, SimConfig};

    #[test]
    fn default_thresholds() {
        assert_eq!(Recurrence::default_wedge_delta(4), 4);
        assert_eq!(Recurrence::default_wedge_delta(1024), 100);
        // ⌈4^{4/7} / 2^{6/7}⌉ = ⌈1.216⌉ = 2, times 2·4
        assert_eq!(Recurrence::default_r_star(4), 16);
    }

    #[test]
    fn progress_beyond_max_is_zero() {
        let sim = Simulator::new(SimConfig::uniform(4, 3, 1, 3).unwrap()).unwrap();
        let alg = AlgorithmSpec::random(sim.dims(), 3, 2);
        let st = sim.run(&alg, &Mode::Recording, 3).unwrap();
        assert_eq!(sim.progress(&st, Measure::Wedges(4)).unwrap(), 0.0);
        assert_eq!(sim.progress(&st, Measure::Paths { l: 3, r: 5 }).unwrap(), 0.0);
        assert!((sim.progress(&st, Measure::Wedges(0)).unwrap() - 1.0).abs() < 1e-12);
        // tightening r never increases progress
        let mut last = f64::INFINITY;
        for r in 0..5 {
            let v = sim.progress(&st, Measure::Wedges(r)).unwrap();
            assert!(v <= last + 1e-15);
            last = v;
        }
    }
}
