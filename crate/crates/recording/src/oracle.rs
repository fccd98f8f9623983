//! Query operators: the standard phase oracle `O`, the basis change `S_i`,
//! the full rotation `T = I ⊗ ⊗_i S_i` and the recording query `R = S_D† O S_D`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::Dims;

/// Operator selector for [`crate::Simulator::apply_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    /// `O|i,u,w⟩|x⟩ = ω_N^{u·x_i}|i,u,w⟩|x⟩`, identity when `x_i = ⊥`.
    Standard,
    /// `S_D`: `S_i` on input position `i`, controlled by the query register.
    BasisChange,
    BasisChangeAdjoint,
    /// `T = I ⊗ ⊗_i S_i`.
    FullRotation,
    FullRotationAdjoint,
    /// `R = S_D† O S_D`.
    Recording,
}

/// `S` on `C^{[N] ∪ {⊥}}` (index 0 is `⊥`): swaps `|⊥⟩` and `|D⟩ = Σ_y √p_y |y⟩`
/// and fixes their orthogonal complement. With `corrupt`, `|⊥⟩ ↦ −|D⟩`.
pub fn s_matrix(dist: &[f64], corrupt: bool) -> DMatrix<Complex64> {
    let b = dist.len() + 1;
    let mut d = vec![0.0; b];
    for (y, p) in dist.iter().enumerate() {
        d[y + 1] = p.sqrt();
    }
    let sign = if corrupt { -1.0 } else { 1.0 };
    DMatrix::from_fn(b, b, |r, c| {
        let mut v = if r == c { 1.0 } else { 0.0 };
        // − |⊥⟩⟨⊥| − |D⟩⟨D| + |⊥⟩⟨D| ± |D⟩⟨⊥|
        if r == 0 && c == 0 {
            v -= 1.0;
        }
        v -= d[r] * d[c];
        if r == 0 {
            v += d[c];
        }
        if c == 0 {
            v += sign * d[r];
        }
        Complex64::new(v, 0.0)
    })
}

/// Row-major copy of a small square matrix.
pub(crate) fn flatten(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    let b = m.nrows();
    let mut out = Vec::with_capacity(b * b);
    for r in 0..b {
        for c in 0..b {
            out.push(m[(r, c)]);
        }
    }
    out
}

/// Applies the row-major `base × base` matrix `mat` to input digit `j` of the
/// `x_len` amplitudes in `block`.
pub(crate) fn apply_site(dims: &Dims, block: &mut [Complex64], j: usize, mat: &[Complex64]) {
    let b = dims.base;
    let s = dims.stride(j);
    let outer = dims.x_len / (s * b);
    let mut v = vec![Complex64::new(0.0, 0.0); b];
    for hi in 0..outer {
        for lo in 0..s {
            let off = hi * s * b + lo;
            for (d, slot) in v.iter_mut().enumerate() {
                *slot = block[off + d * s];
            }
            for r in 0..b {
                let row = &mat[r * b..(r + 1) * b];
                let mut acc = Complex64::new(0.0, 0.0);
                for (m, z) in row.iter().zip(&v) {
                    acc += m * z;
                }
                block[off + r * s] = acc;
            }
        }
    }
}

/// Multiplies each amplitude by `ω^{u·x_i}`.
pub(crate) fn apply_phase(dims: &Dims, block: &mut [Complex64], i: usize, u: usize, omega: &[Complex64]) {
    if u == 0 {
        return;
    }
    for (x, z) in block.iter_mut().enumerate() {
        let y = dims.digit(x, i);
        if y != 0 {
            *z *= omega[(u * y) % dims.big_n];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_swaps_bot_and_d() {
        let dist = [0.5, 0.25, 0.25];
        let s = s_matrix(&dist, false);
        let d: Vec<f64> = std::iter::once(0.0).chain(dist.iter().map(|p| p.sqrt())).collect();
        for r in 0..4 {
            assert!((s[(r, 0)].re - d[r]).abs() < 1e-15);
        }
        let sd: Vec<f64> = (0..4).map(|r| (0..4).map(|c| s[(r, c)].re * d[c]).sum()).collect();
        assert!((sd[0] - 1.0).abs() < 1e-15);
        assert!(sd[1..].iter().all(|v| v.abs() < 1e-15));
        let id = &s * s.adjoint();
        assert!((id - DMatrix::identity(4, 4)).norm() < 1e-14);
        // a vector orthogonal to |⊥⟩ and |D⟩ is fixed
        let e = [0.0, 0.0, 1.0, -1.0];
        let se: Vec<f64> = (0..4).map(|r| (0..4).map(|c| s[(r, c)].re * e[c]).sum()).collect();
        assert!(se.iter().zip(&e).all(|(a, b)| (a - b).abs() < 1e-15));
    }

    #[test]
    fn corrupted_s_is_unitary_and_different() {
        let dist = [1.0 / 3.0; 3];
        let s = s_matrix(&dist, false);
        let c = s_matrix(&dist, true);
        assert!((&c * c.adjoint() - DMatrix::identity(4, 4)).norm() < 1e-14);
        assert!((s - c).norm() > 1.0);
    }
}
