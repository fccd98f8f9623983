//! Construction parameters: stage sizes and arc weights.

use serde::{Deserialize, Serialize};

use crate::{LgError, Result};

/// Which learning graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Two loading levels `R_1(Γ)`, `R_2(γ)` and three certificate stages.
    Triangle,
    /// `k` loading levels `R_i(d_1, .., d_{i-1}, D)` and `k` certificate stages.
    General,
}

/// Parameters of one learning graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LGParams {
    pub variant: Variant,
    /// Cycle length; always 3 for [`Variant::Triangle`].
    pub k: usize,
    /// Maximum degree of the domain.
    pub d: usize,
    /// Edge-list length.
    pub m: usize,
    /// Vertex count.
    pub n: u32,
    /// Per-level set sizes `r_1, r_2, ..`; two entries for the triangle variant, `k` otherwise.
    pub r: Vec<usize>,
    /// Stage I.1 weight (triangle variant only).
    pub w: f64,
    /// `w_0` for stage I.s, indexed by `s - 2`.
    pub w0: Vec<f64>,
    /// `w_1` for stage I.s, indexed by `s - 2`.
    pub w1: Vec<f64>,
    /// Stage II weight.
    pub w2: f64,
}

impl LGParams {
    /// Parameters with the given sizes and all weights 1.
    pub fn with_sizes(variant: Variant, k: usize, d: usize, m: usize, n: u32, r: Vec<usize>) -> Result<Self> {
        let levels = match variant {
            Variant::Triangle => 2,
            Variant::General => k,
        };
        let p =
            LGParams { variant, k, d, m, n, r, w: 1.0, w0: vec![1.0; levels - 1], w1: vec![1.0; levels - 1], w2: 1.0 };
        p.validate()?;
        Ok(p)
    }

    /// Number of loading levels.
    pub fn levels(&self) -> usize {
        match self.variant {
            Variant::Triangle => 2,
            Variant::General => self.k,
        }
    }

    /// Number of certificate-loading stages in stage II.
    pub fn cert_stages(&self) -> usize {
        match self.variant {
            Variant::Triangle => 3,
            Variant::General => self.k,
        }
    }

    /// `2^{2d} - 1`, the number of nonempty subsets of `[2d]`.
    pub fn subsets(&self) -> usize {
        (1usize << (2 * self.d)) - 1
    }

    /// Number of sets at level `i` (1-based).
    pub fn sets_at_level(&self, i: usize) -> usize {
        match (self.variant, i) {
            (Variant::Triangle, 1) => self.subsets(),
            (Variant::Triangle, _) => 2 * self.d,
            (Variant::General, _) => (2 * self.d).pow(i as u32 - 1) * self.subsets(),
        }
    }

    /// Indices loaded by every `R^{(1)}`: `Σ_i r_i · (sets at level i)`.
    pub fn total_loaded(&self) -> usize {
        (1..=self.levels()).map(|i| self.r[i - 1] * self.sets_at_level(i)).sum()
    }

    /// Checks everything but the fit of `R^{(1)}` into `[m]`.
    pub fn validate_shape(&self) -> Result<()> {
        if self.d == 0 || self.d > 6 {
            return Err(LgError::Param(format!("d = {} outside [1, 6]", self.d)));
        }
        match self.variant {
            Variant::Triangle if self.k != 3 => {
                return Err(LgError::Param(format!("triangle variant needs k = 3, got {}", self.k)))
            }
            Variant::General if self.k < 3 => return Err(LgError::Param(format!("k = {} < 3", self.k))),
            _ => {}
        }
        let levels = self.levels();
        if self.r.len() != levels {
            return Err(LgError::Param(format!("expected {levels} stage sizes, got {}", self.r.len())));
        }
        if self.w0.len() != levels - 1 || self.w1.len() != levels - 1 {
            return Err(LgError::Param(format!("expected {} per-stage weights", levels - 1)));
        }
        let weights = std::iter::once(self.w).chain(self.w0.iter().copied()).chain(self.w1.iter().copied());
        if weights.chain(std::iter::once(self.w2)).any(|w| !(w > 0.0 && w.is_finite())) {
            return Err(LgError::Param("weights must be positive and finite".into()));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_shape()?;
        if self.total_loaded() + self.cert_stages() > self.m {
            return Err(LgError::Param(format!(
                "R^(1) loads {} indices, too many for m = {}",
                self.total_loaded(),
                self.m
            )));
        }
        Ok(())
    }
}

/// Default parameters balancing the stage costs.
///
/// Triangle: `r_1 = ⌈m^{5/7}d^{3/7}/2^{(2/7)d}⌉`, `r_2 = ⌈2^{(6/7)d}m^{6/7}/d^{9/7}⌉`,
/// `w = 1`, `w_0 = 2^{-d}√(m/(r_1 d))`, `w_1 = 1/w_0`, `w_2 = √(r_1 r_2/m³)`.
///
/// General: `r_i = ⌈m^{1-1/2^{i+1}-1/(2^{i+1}(2^k-1))}⌉` for `i < k`, `r_k = 0`,
/// `w_{0,s} = ((2d)^{s(s-1)/4}2^{d(s-1)})^{-1}√(m^{s-1}/(r_1⋯r_{s-1}))`, `w_{1,s} = 1/w_{0,s}`,
/// `w_2 = √(r_1⋯r_{k-1}/m^k)`.
///
/// The sizes are asymptotic choices and are not checked against `m`.
pub fn default_params(variant: Variant, k: usize, d: usize, m: usize) -> LGParams {
    let mf = m as f64;
    let df = d as f64;
    match variant {
        Variant::Triangle => {
            let r1 = (mf.powf(5.0 / 7.0) * df.powf(3.0 / 7.0) / 2f64.powf(2.0 * df / 7.0)).ceil();
            let r2 = (2f64.powf(6.0 * df / 7.0) * mf.powf(6.0 / 7.0) / df.powf(9.0 / 7.0)).ceil();
            let w0 = 2f64.powf(-df) * (mf / (r1 * df)).sqrt();
            LGParams {
                variant,
                k: 3,
                d,
                m,
                n: 0,
                r: vec![r1 as usize, r2 as usize],
                w: 1.0,
                w0: vec![w0],
                w1: vec![1.0 / w0],
                w2: (r1 * r2 / mf.powi(3)).sqrt(),
            }
        }
        Variant::General => {
            let kf = k as f64;
            let mut r: Vec<usize> = (1..k)
                .map(|i| {
                    let p = 2f64.powi(i as i32 + 1);
                    mf.powf(1.0 - 1.0 / p - 1.0 / (p * (2f64.powf(kf) - 1.0))).ceil() as usize
                })
                .collect();
            r.push(0);
            let (mut w0, mut w1) = (Vec::new(), Vec::new());
            for s in 2..=k {
                let sf = s as f64;
                let prod: f64 = r[..s - 1].iter().map(|&v| v as f64).product();
                let v = (2.0 * df).powf(sf * (sf - 1.0) / 4.0).recip()
                    * 2f64.powf(df * (sf - 1.0)).recip()
                    * (mf.powf(sf - 1.0) / prod).sqrt();
                w0.push(v);
                w1.push(1.0 / v);
            }
            let prod: f64 = r[..k - 1].iter().map(|&v| v as f64).product();
            LGParams { variant, k, d, m, n: 0, r, w: 1.0, w0, w1, w2: (prod / mf.powf(kf)).sqrt() }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loaded_count_triangle() {
        let p = LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap();
        assert_eq!(p.total_loaded(), 19);
    }

    #[test]
    fn loaded_count_general() {
        let p = LGParams::with_sizes(Variant::General, 3, 2, 400, 800, vec![1, 1, 1]).unwrap();
        assert_eq!(p.total_loaded(), 15 + 60 + 240);
        assert!(LGParams::with_sizes(Variant::General, 3, 2, 100, 800, vec![1, 1, 1]).is_err());
    }

    #[test]
    fn defaults_are_positive() {
        let p = default_params(Variant::Triangle, 3, 3, 1 << 12);
        assert!(p.r.iter().all(|&r| r > 0));
        assert!((p.w0[0] * p.w1[0] - 1.0).abs() < 1e-12);
        let g = default_params(Variant::General, 4, 2, 1 << 16);
        assert_eq!(g.r.len(), 4);
        assert_eq!(g.r[3], 0);
        assert_eq!(g.w0.len(), 3);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(LGParams::with_sizes(Variant::Triangle, 4, 2, 30, 60, vec![1, 1]).is_err());
        assert!(LGParams::with_sizes(Variant::General, 3, 2, 400, 60, vec![1, 1]).is_err());
    }
}
