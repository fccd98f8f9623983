//! Dense joint state over `|i, u, w⟩|x⟩`.

use num_complex::Complex64;

use crate::{Dims, Mask, Result, SimError};

/// Amplitude vector in the layout of [`Dims`]; possibly unnormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordingState {
    dims: Dims,
    amps: Vec<Complex64>,
}

impl RecordingState {
    pub fn zeros(dims: Dims) -> Self {
        RecordingState { dims, amps: vec![Complex64::new(0.0, 0.0); dims.total()] }
    }

    /// `|a⟩|x⟩` with unit amplitude.
    pub fn basis(dims: Dims, a: usize, x: usize) -> Self {
        let mut s = Self::zeros(dims);
        s.amps[a * dims.x_len + x] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn from_amps(dims: Dims, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != dims.total() {
            return Err(SimError::Dimension { expected: dims.total(), got: amps.len() });
        }
        Ok(RecordingState { dims, amps })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amp(&self, a: usize, x: usize) -> Complex64 {
        self.amps[a * self.dims.x_len + x]
    }

    /// Input-register slice of block `a`.
    pub fn block(&self, a: usize) -> &[Complex64] {
        &self.amps[a * self.dims.x_len..(a + 1) * self.dims.x_len]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `‖self − other‖`.
    pub fn distance(&self, other: &RecordingState) -> Result<f64> {
        self.check_dims(other.dims)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt())
    }

    /// `‖Π self‖` for a diagonal projector given as a mask.
    pub fn projected_norm(&self, mask: &Mask) -> f64 {
        self.amps.iter().zip(mask.bits()).filter(|(_, &keep)| keep).map(|(z, _)| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `Π self`.
    pub fn project(&self, mask: &Mask) -> RecordingState {
        let mut out = self.clone();
        out.project_in_place(mask);
        out
    }

    pub fn project_in_place(&mut self, mask: &Mask) {
        for (z, &keep) in self.amps.iter_mut().zip(mask.bits()) {
            if !keep {
                *z = Complex64::new(0.0, 0.0);
            }
        }
    }

    /// `(I − Π) self`.
    pub fn exclude(&self, mask: &Mask) -> RecordingState {
        let mut out = self.clone();
        for (z, &drop) in out.amps.iter_mut().zip(mask.bits()) {
            if drop {
                *z = Complex64::new(0.0, 0.0);
            }
        }
        out
    }

    /// Largest modulus on labels whose input has more than `t` non-`⊥` entries.
    pub fn support_violation(&self, t: usize) -> f64 {
        let d = self.dims;
        let mut worst = 0.0f64;
        for (idx, z) in self.amps.iter().enumerate() {
            let x = idx % d.x_len;
            let nonbot = d.digits(x).iter().filter(|&&s| s != 0).count();
            if nonbot > t {
                worst = worst.max(z.norm());
            }
        }
        worst
    }

    pub(crate) fn check_dims(&self, dims: Dims) -> Result<()> {
        if self.dims != dims {
            return Err(SimError::Dimension { expected: dims.total(), got: self.dims.total() });
        }
        Ok(())
    }
}
