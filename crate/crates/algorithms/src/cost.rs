//! Analytic charges for the quantum primitives.

use serde::{Deserialize, Serialize};

/// Constants of the charged primitives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostModel {
    /// Grover collect of `α` items among `β`: `⌈c_g √(αβ) log β⌉`.
    pub c_g: f64,
    /// Amplitude amplification of a subroutine succeeding with probability `p`.
    pub c_a: f64,
    /// Element distinctness on length `L`: `⌈c_e L^{2/3}⌉`.
    pub c_e: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel { c_g: 1.0, c_a: 1.0, c_e: 1.0 }
    }
}

fn log2_at_least_one(x: f64) -> f64 {
    x.max(2.0).log2()
}

impl CostModel {
    /// Collecting up to `alpha` marked items from a list of `beta`.
    pub fn grover_collect(&self, alpha: usize, beta: usize) -> u64 {
        if alpha == 0 {
            return 1;
        }
        let v = self.c_g * ((alpha * beta.max(1)) as f64).sqrt() * log2_at_least_one(beta as f64);
        (v.ceil() as u64).max(alpha as u64)
    }

    /// Amplifying a subroutine of cost `sub` that succeeds with probability `p`.
    pub fn amplitude_amplify(&self, sub: f64, p: f64) -> u64 {
        let p = p.clamp(f64::MIN_POSITIVE, 1.0);
        let v = self.c_a * sub / p.sqrt() * log2_at_least_one(2.0 / p);
        (v.ceil() as u64).max(1)
    }

    /// Element distinctness on a string of length `len`.
    pub fn ed_primitive(&self, len: usize) -> u64 {
        ((self.c_e * (len.max(1) as f64).powf(2.0 / 3.0)).ceil() as u64).max(1)
    }
}

/// Charges of one run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostReport {
    pub total: u64,
    pub phases: Vec<(String, u64)>,
    /// Input items returned to the algorithm by its primitives.
    pub reads: usize,
}

impl CostReport {
    pub fn charge(&mut self, phase: &str, amount: u64) {
        self.total += amount;
        match self.phases.iter_mut().find(|(p, _)| p == phase) {
            Some((_, a)) => *a += amount,
            None => self.phases.push((phase.to_string(), amount)),
        }
    }

    pub fn phase(&self, name: &str) -> u64 {
        self.phases.iter().find(|(p, _)| p == name).map_or(0, |(_, a)| *a)
    }
}
