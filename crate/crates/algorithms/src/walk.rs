//! Cost of the Hamming-graph walk for `TriangleVertex` and its optimal tuple size.

use serde::{Deserialize, Serialize};

use crate::{AlgoError, Result};

/// The walk parameters for tuple size `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WalkTerms {
    pub setup: f64,
    pub update: f64,
    pub check: f64,
    pub epsilon: f64,
    pub delta: f64,
}

impl WalkTerms {
    pub fn new(m: usize, d: usize, r: usize) -> Result<Self> {
        if r == 0 || r > d {
            return Err(AlgoError::WalkRange { r, d });
        }
        let (m, d, r) = (m as f64, d as f64, r as f64);
        Ok(WalkTerms {
            setup: r * (m / d).sqrt() + m.sqrt(),
            update: (m / d).sqrt(),
            check: m.sqrt(),
            epsilon: (r / d).powi(2),
            delta: 1.0 / r,
        })
    }

    /// `S + (1/√ε)(U/√δ + C)`.
    pub fn total(&self) -> f64 {
        self.setup + (self.update / self.delta.sqrt() + self.check) / self.epsilon.sqrt()
    }
}

/// Walk cost with tuple size `r`, including a `log₂ m` error-reduction factor.
pub fn walk_cost_trivertex(m: usize, d: usize, r: usize) -> Result<f64> {
    Ok(WalkTerms::new(m, d, r)?.total() * (m.max(2) as f64).log2())
}

/// The integer `r ∈ [1, d]` minimizing [`walk_cost_trivertex`].
pub fn walk_cost_optimize(m: usize, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(AlgoError::WalkRange { r: 1, d });
    }
    let mut best = (1, f64::INFINITY);
    for r in 1..=d {
        let c = walk_cost_trivertex(m, d, r)?;
        if c < best.1 {
            best = (r, c);
        }
    }
    Ok(best.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_one_forces_r_one() {
        assert_eq!(walk_cost_optimize(100, 1).unwrap(), 1);
        assert!(walk_cost_trivertex(100, 4, 5).is_err());
        assert!(walk_cost_trivertex(100, 4, 0).is_err());
    }

    #[test]
    fn terms_at_small_point() {
        let t = WalkTerms::new(64, 4, 2).unwrap();
        assert_eq!(t.setup, 2.0 * 4.0 + 8.0);
        assert_eq!(t.epsilon, 0.25);
        // 16 + 2 · (4·√2 + 8)
        assert!((t.total() - (16.0 + 2.0 * (4.0 * 2f64.sqrt() + 8.0))).abs() < 1e-12);
    }
}
