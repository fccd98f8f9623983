//! Query algorithms as sequences `U_0, .., U_T` of unitaries on the `(i, u, w)` factor.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::{Dims, Result, SimError};

/// Named generators for [`AlgorithmSpec::generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    /// Independent Haar-random unitaries from the seed.
    Random {
        seed: u64,
    },
    Identity,
    /// Moves `|0,0,0⟩` to `|0,1,0⟩` and then cycles the query index, so query
    /// `t` hits position `(t-1) mod m` with phase `1`.
    Targeted,
}

/// `U_0, .., U_T`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmSpec {
    dims: Dims,
    unitaries: Vec<DMatrix<Complex64>>,
}

/// Haar-random `d × d` unitary: QR of a complex Ginibre matrix with the
/// phases of `R`'s diagonal moved into `Q`.
pub fn haar_unitary<G: Rng + ?Sized>(d: usize, rng: &mut G) -> DMatrix<Complex64> {
    let z = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    });
    let qr = z.qr();
    let mut q = qr.q();
    let r = qr.r();
    for c in 0..d {
        let diag = r[(c, c)];
        let phase = if diag.norm() > 0.0 { diag / diag.norm() } else { Complex64::new(1.0, 0.0) };
        for row in 0..d {
            q[(row, c)] *= phase;
        }
    }
    q
}

fn unitarity_defect(u: &DMatrix<Complex64>) -> f64 {
    let d = u.nrows();
    (u.adjoint() * u - DMatrix::<Complex64>::identity(d, d)).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl AlgorithmSpec {
    /// Explicit matrices, each checked to be unitary within `tol`.
    pub fn from_matrices(dims: Dims, unitaries: Vec<DMatrix<Complex64>>, tol: f64) -> Result<Self> {
        if unitaries.is_empty() {
            return Err(SimError::Param("an algorithm needs at least U_0".into()));
        }
        for (step, u) in unitaries.iter().enumerate() {
            if u.nrows() != dims.a_len() || u.ncols() != dims.a_len() {
                return Err(SimError::Dimension { expected: dims.a_len(), got: u.nrows() });
            }
            let dev = unitarity_defect(u);
            if dev > tol {
                return Err(SimError::NotUnitary { step, dev });
            }
        }
        Ok(AlgorithmSpec { dims, unitaries })
    }

    /// `U_0, .., U_horizon` from a named generator.
    pub fn generate(dims: Dims, horizon: usize, generator: Generator) -> Self {
        let d = dims.a_len();
        let unitaries = match generator {
            Generator::Random { seed } => {
                let mut rng = graphcore::rng::seeded(seed);
                (0..=horizon).map(|_| haar_unitary(d, &mut rng)).collect()
            }
            Generator::Identity => vec![DMatrix::identity(d, d); horizon + 1],
            Generator::Targeted => (0..=horizon)
                .map(|t| {
                    let perm: Vec<usize> = (0..d)
                        .map(|a| {
                            let (i, u, w) = dims.split_a(a);
                            if t == 0 {
                                // swap |0,0,0⟩ and |0,1,0⟩
                                let u2 = match (i, u, w) {
                                    (0, 0, 0) if dims.big_n > 1 => 1,
                                    (0, 1, 0) => 0,
                                    _ => u,
                                };
                                dims.a_index(i, u2, w)
                            } else {
                                dims.a_index((i + 1) % dims.m, u, w)
                            }
                        })
                        .collect();
                    DMatrix::from_fn(d, d, |r, c| {
                        if perm[c] == r {
                            Complex64::new(1.0, 0.0)
                        } else {
                            Complex64::new(0.0, 0.0)
                        }
                    })
                })
                .collect(),
        };
        AlgorithmSpec { dims, unitaries }
    }

    pub fn random(dims: Dims, horizon: usize, seed: u64) -> Self {
        Self::generate(dims, horizon, Generator::Random { seed })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Largest `t` with `U_t` defined.
    pub fn horizon(&self) -> usize {
        self.unitaries.len() - 1
    }

    pub fn unitary(&self, t: usize) -> &DMatrix<Complex64> {
        &self.unitaries[t]
    }

    /// `(U_t ⊗ I) amps` in place.
    pub(crate) fn apply(&self, t: usize, amps: &mut [Complex64]) {
        let u = &self.unitaries[t];
        let (al, xl) = (self.dims.a_len(), self.dims.x_len);
        let old = amps.to_vec();
        for r in 0..al {
            let dst = &mut amps[r * xl..(r + 1) * xl];
            dst.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
            for c in 0..al {
                let coef = u[(r, c)];
                if coef == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let src = &old[c * xl..(c + 1) * xl];
                for (z, s) in dst.iter_mut().zip(src) {
                    *z += coef * s;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn haar_is_unitary() {
        let mut rng = graphcore::rng::seeded(7);
        for d in [1, 2, 5, 12] {
            assert!(unitarity_defect(&haar_unitary(d, &mut rng)) < 1e-12);
        }
    }

    #[test]
    fn generators_are_unitary() {
        let dims = Dims::new(2, 3, 2);
        for g in [Generator::Random { seed: 1 }, Generator::Identity, Generator::Targeted] {
            let alg = AlgorithmSpec::generate(dims, 3, g);
            assert_eq!(alg.horizon(), 3);
            for t in 0..=3 {
                assert!(unitarity_defect(alg.unitary(t)) < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let dims = Dims::new(1, 1, 1);
        let bad = vec![DMatrix::from_element(1, 1, Complex64::new(2.0, 0.0))];
        assert!(matches!(AlgorithmSpec::from_matrices(dims, bad, 1e-9), Err(SimError::NotUnitary { .. })));
    }
}
