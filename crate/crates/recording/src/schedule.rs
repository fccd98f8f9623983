//! Rate schedule `r_j(t)` bounding the recordable number of length-`j` paths
//! after `t` queries, and the connection count `B_l(t)`.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::{ceil_log2, Result, SimError};

/// `r_j(t) = max{⌈(ct/√n)^{2−4/2^j}(t+1)^{2/2^j}⌉, ⌈log n⌉}·jΔ^{j−1}` with
/// `c = 32e·k·Δ^{k/2}`. Values saturate at `u128::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSchedule {
    pub k: usize,
    pub delta: u32,
    pub n: u64,
}

fn to_u128(v: f64) -> u128 {
    if v.is_finite() && v < u128::MAX as f64 {
        v as u128
    } else {
        u128::MAX
    }
}

impl RateSchedule {
    pub fn new(k: usize, delta: u32, n: u64) -> Result<Self> {
        if k < 3 {
            return Err(SimError::Param(format!("k = {k} < 3")));
        }
        if delta == 0 {
            return Err(SimError::Param("Δ must be at least 1".into()));
        }
        if n < 2 {
            return Err(SimError::Param(format!("n = {n} < 2")));
        }
        Ok(RateSchedule { k, delta, n })
    }

    /// `c = 32e·k·Δ^{k/2}`.
    pub fn c(&self) -> f64 {
        32.0 * E * self.k as f64 * (self.delta as f64).powf(self.k as f64 / 2.0)
    }

    /// `s_j(t) = max{⌈(ct/√n)^{2−4/2^j}(t+1)^{2/2^j}⌉, ⌈log n⌉}`.
    pub fn s(&self, j: usize, t: u64) -> u128 {
        assert!(j >= 1, "path length starts at 1");
        let logn = ceil_log2(self.n) as u128;
        let first = if j == 1 {
            t as u128 + 1
        } else {
            let pj = 2f64.powi(j as i32);
            let base = self.c() * t as f64 / (self.n as f64).sqrt();
            to_u128((base.powf(2.0 - 4.0 / pj) * ((t + 1) as f64).powf(2.0 / pj)).ceil())
        };
        first.max(logn)
    }

    /// `r_j(t) = s_j(t)·jΔ^{j−1}`.
    pub fn r(&self, j: usize, t: u64) -> u128 {
        let factor = (j as u128).saturating_mul((self.delta as u128).saturating_pow(j as u32 - 1));
        self.s(j, t).saturating_mul(factor)
    }

    /// `B_l(t) = 2 r_{l−1}(t) n + 4 Σ_{j=1}^{⌊(l−1)/2⌋} r_j(t) r_{l−1−j}(t)` for `l ≥ 2`.
    pub fn b(&self, l: usize, t: u64) -> u128 {
        assert!(l >= 2, "B_l is defined for l ≥ 2");
        let mut acc = self.r(l - 1, t).saturating_mul(2).saturating_mul(self.n as u128);
        for j in 1..=(l - 1) / 2 {
            acc = acc.saturating_add(self.r(j, t).saturating_mul(self.r(l - 1 - j, t)).saturating_mul(4));
        }
        acc
    }

    /// Whether `r_j(t)·r_{l−1−j}(t) ≤ r_{l−1}(t)·n`.
    pub fn check_claim(&self, l: usize, j: usize, t: u64) -> Result<bool> {
        if l < 2 || j == 0 || j > (l - 1) / 2 {
            return Err(SimError::Param(format!("need l ≥ 2 and 1 ≤ j ≤ ⌊(l−1)/2⌋, got l = {l}, j = {j}")));
        }
        let lhs = self.r(j, t).checked_mul(self.r(l - 1 - j, t));
        let rhs = self.r(l - 1, t).checked_mul(self.n as u128);
        Ok(match (lhs, rhs) {
            (Some(a), Some(b)) => a <= b,
            (None, Some(_)) => false,
            (_, None) => true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rate_is_t_plus_one_or_log() {
        let s = RateSchedule::new(3, 2, 1024).unwrap();
        for t in 0..40 {
            assert_eq!(s.r(1, t), (t as u128 + 1).max(10));
        }
    }

    #[test]
    fn b2_has_no_cross_terms() {
        let s = RateSchedule::new(4, 3, 500).unwrap();
        for t in 0..20 {
            assert_eq!(s.b(2, t), 2 * s.r(1, t) * 500);
        }
    }

    #[test]
    fn rates_nondecreasing_in_t() {
        let s = RateSchedule::new(5, 2, 4096).unwrap();
        for j in 1..=5 {
            for t in 0..200 {
                assert!(s.r(j, t) <= s.r(j, t + 1));
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(RateSchedule::new(2, 1, 10).is_err());
        assert!(RateSchedule::new(3, 0, 10).is_err());
        let s = RateSchedule::new(3, 1, 10).unwrap();
        assert!(s.check_claim(3, 2, 1).is_err());
        assert!(s.check_claim(4, 1, 1).is_ok());
    }
}
