//! Monte Carlo estimates of the `ℓ1` distance between `P_0` and `P_1`.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{to_f64, transcript_probability};
use crate::process::{simulate, ProcessConfig, Transcript};
use crate::{ProcessError, Result};

/// Smallest accepted trial count.
pub const MIN_TRIALS: usize = 1000;
const BOOTSTRAP: usize = 1000;

/// Monte Carlo estimate with a 95% percentile-bootstrap interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub n: u32,
    pub t: u32,
    pub trials: usize,
    /// Mean of `|Pr_0[x] - Pr_1[x]| / M(x)` over `x ~ M = (P_0 + P_1)/2`.
    pub estimate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    /// Plug-in `Σ_x |f_0(x) - f_1(x)|` over empirical frequencies, `trials` runs per process.
    pub plug_in: f64,
}

impl McEstimate {
    pub fn brackets(&self, value: f64) -> bool {
        self.ci_low <= value && value <= self.ci_high
    }

    pub fn width(&self) -> f64 {
        self.ci_high - self.ci_low
    }
}

/// Draws `trials` transcripts from the mixture and averages the exact
/// likelihood-ratio statistic; trial `i` uses `task_rng(seed, i)`.
pub fn mc_tvd(n: u32, t: u32, trials: usize, seed: u64) -> Result<McEstimate> {
    if trials < MIN_TRIALS {
        return Err(ProcessError::Config(format!("need at least {MIN_TRIALS} trials, got {trials}")));
    }
    let cfgs = ProcessConfig::pair(n, t)?;
    let values: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = graphcore::rng::task_rng(seed, i as u64);
            let which = usize::from(rng.random_bool(0.5));
            let x = simulate(&cfgs[which], &mut rng)?;
            let p0 = to_f64(&transcript_probability(&cfgs[0], &x)?);
            let p1 = to_f64(&transcript_probability(&cfgs[1], &x)?);
            Ok((p0 - p1).abs() / ((p0 + p1) / 2.0))
        })
        .collect::<Result<_>>()?;
    let estimate = mean(&values);

    let mut rng = graphcore::rng::task_rng(seed, u64::MAX);
    let mut boot: Vec<f64> = (0..BOOTSTRAP)
        .map(|_| (0..trials).map(|_| values[rng.random_range(0..trials)]).sum::<f64>() / trials as f64)
        .collect();
    boot.sort_by(f64::total_cmp);
    let ci_low = boot[BOOTSTRAP * 25 / 1000];
    let ci_high = boot[BOOTSTRAP * 975 / 1000 - 1];

    let counts: Vec<HashMap<Transcript, usize>> = cfgs
        .iter()
        .enumerate()
        .map(|(c, cfg)| {
            let runs: Vec<Transcript> = (0..trials)
                .into_par_iter()
                .map(|i| simulate(cfg, &mut graphcore::rng::task_rng(seed ^ (0x5eed << c), i as u64)))
                .collect::<Result<_>>()?;
            let mut h = HashMap::new();
            for r in runs {
                *h.entry(r).or_insert(0) += 1;
            }
            Ok(h)
        })
        .collect::<Result<_>>()?;
    let mut plug_in = 0.0;
    for key in counts[0].keys().chain(counts[1].keys().filter(|k| !counts[0].contains_key(*k))) {
        let f0 = *counts[0].get(key).unwrap_or(&0) as f64 / trials as f64;
        let f1 = *counts[1].get(key).unwrap_or(&0) as f64 / trials as f64;
        plug_in += (f0 - f1).abs();
    }
    Ok(McEstimate { n, t, trials, estimate, ci_low: ci_low.min(estimate), ci_high: ci_high.max(estimate), plug_in })
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_few_trials() {
        assert!(mc_tvd(12, 1, 10, 1).is_err());
    }

    #[test]
    fn one_step_estimate_is_zero() {
        let e = mc_tvd(12, 1, 1000, 3).unwrap();
        assert_eq!(e.estimate, 0.0);
        assert!(e.brackets(0.0));
        assert!((0.0..=2.0).contains(&e.plug_in));
    }
}
