//! Simulation parameters and register layout.

use serde::{Deserialize, Serialize};

use crate::{Result, SimError};

/// Largest joint dimension the dense simulator accepts.
const MAX_DIM: usize = 1 << 24;

/// Parameters of one simulation: graph size, input length, workspace,
/// horizon and the per-index input distributions `D_i` over `[N]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n: u32,
    pub m: usize,
    /// Workspace dimension `K`.
    pub workspace: usize,
    /// Horizon `T`.
    pub horizon: usize,
    /// `dists[i][y-1]` is the probability of symbol `y` at index `i`.
    pub dists: Vec<Vec<f64>>,
    /// Amplitude tolerance `τ`.
    pub tol: f64,
    /// Negative control: flips the sign of `S_i|⊥⟩`.
    #[serde(default)]
    pub corrupt_s: bool,
}

impl SimConfig {
    /// Uniform `D_i` on every index.
    pub fn uniform(n: u32, m: usize, workspace: usize, horizon: usize) -> Result<Self> {
        let big_n = graphcore::num_pairs(n) as usize;
        let cfg = SimConfig {
            n,
            m,
            workspace,
            horizon,
            dists: vec![vec![1.0 / big_n.max(1) as f64; big_n]; m],
            tol: 1e-9,
            corrupt_s: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Replaces the input distributions.
    pub fn with_dists(mut self, dists: Vec<Vec<f64>>) -> Result<Self> {
        self.dists = dists;
        self.validate()?;
        Ok(self)
    }

    pub fn with_corrupt_s(mut self, corrupt: bool) -> Self {
        self.corrupt_s = corrupt;
        self
    }

    /// `N = C(n,2)`.
    pub fn big_n(&self) -> usize {
        graphcore::num_pairs(self.n) as usize
    }

    pub fn dims(&self) -> Dims {
        Dims::new(self.m, self.big_n(), self.workspace)
    }

    pub fn validate(&self) -> Result<()> {
        let big_n = self.big_n();
        if self.n < 2 {
            return Err(SimError::Config(format!("n = {} < 2", self.n)));
        }
        if self.m == 0 || self.workspace == 0 {
            return Err(SimError::Config("m and K must be positive".into()));
        }
        if self.tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Err(SimError::Config("tolerance must be positive".into()));
        }
        let x_len = (big_n + 1).checked_pow(self.m as u32);
        let total = x_len.and_then(|x| x.checked_mul(self.m * big_n * self.workspace));
        match total {
            Some(t) if t <= MAX_DIM => {}
            _ => return Err(SimError::Config(format!("joint dimension exceeds {MAX_DIM}"))),
        }
        if self.dists.len() != self.m {
            return Err(SimError::Config(format!("{} distributions for m = {}", self.dists.len(), self.m)));
        }
        for (i, d) in self.dists.iter().enumerate() {
            if d.len() != big_n {
                return Err(SimError::Config(format!("D_{i} has {} entries, N = {big_n}", d.len())));
            }
            if d.iter().any(|&p| p.is_nan() || p < 0.0) {
                return Err(SimError::Config(format!("D_{i} has a negative entry")));
            }
            let s: f64 = d.iter().sum();
            if (s - 1.0).abs() > 1e-9 {
                return Err(SimError::Config(format!("D_{i} sums to {s}")));
            }
        }
        Ok(())
    }
}

/// Register layout: index `((i·N + u)·K + w)·X + x` with `X = (N+1)^m` and
/// input digit `j` of `x` in base `N+1` at place `(N+1)^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    pub m: usize,
    pub big_n: usize,
    pub k: usize,
    pub base: usize,
    pub x_len: usize,
}

impl Dims {
    pub fn new(m: usize, big_n: usize, k: usize) -> Self {
        let base = big_n + 1;
        Dims { m, big_n, k, base, x_len: base.pow(m as u32) }
    }

    /// Dimension of the `(i, u, w)` factor.
    pub fn a_len(&self) -> usize {
        self.m * self.big_n * self.k
    }

    pub fn total(&self) -> usize {
        self.a_len() * self.x_len
    }

    pub fn a_index(&self, i: usize, u: usize, w: usize) -> usize {
        (i * self.big_n + u) * self.k + w
    }

    /// `(i, u, w)` of an `a` index.
    pub fn split_a(&self, a: usize) -> (usize, usize, usize) {
        (a / (self.big_n * self.k), (a / self.k) % self.big_n, a % self.k)
    }

    pub fn stride(&self, j: usize) -> usize {
        self.base.pow(j as u32)
    }

    /// Symbol at input position `j` (`0` is `⊥`).
    pub fn digit(&self, x: usize, j: usize) -> usize {
        (x / self.stride(j)) % self.base
    }

    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            out.push(x % self.base);
            x /= self.base;
        }
        out
    }

    pub fn encode_x(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.base + d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_round_trips() {
        let d = Dims::new(3, 6, 2);
        assert_eq!(d.x_len, 343);
        for a in 0..d.a_len() {
            let (i, u, w) = d.split_a(a);
            assert_eq!(d.a_index(i, u, w), a);
        }
        let x = d.encode_x(&[3, 0, 6]);
        assert_eq!(d.digits(x), vec![3, 0, 6]);
        assert_eq!(d.digit(x, 2), 6);
    }

    #[test]
    fn rejects_bad_distributions() {
        let cfg = SimConfig::uniform(3, 2, 1, 1).unwrap();
        assert!(cfg.clone().with_dists(vec![vec![0.5, 0.5, 0.5]; 2]).is_err());
        assert!(cfg.clone().with_dists(vec![vec![1.0, 0.0, 0.0]]).is_err());
        assert!(cfg.with_dists(vec![vec![0.2, 0.3, 0.5]; 2]).is_ok());
        assert!(SimConfig::uniform(1, 2, 1, 1).is_err());
        assert!(SimConfig::uniform(12, 4, 4, 1).is_err());
    }
}
