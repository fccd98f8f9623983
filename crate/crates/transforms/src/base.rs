//! Base functions `f : D ⊆ Σ^a → {0,1}` used under the transforms.

use std::collections::HashMap;

use crate::{Result, Symbol, TransformError};

/// A (partial) Boolean function of fixed arity.
pub trait BaseFunction: Sync {
    fn arity(&self) -> usize;

    /// Evaluates `f(x)`; inputs outside the domain are errors.
    fn eval(&self, x: &[Symbol]) -> Result<bool>;

    /// Checks the length before evaluating.
    fn eval_checked(&self, x: &[Symbol]) -> Result<bool> {
        if x.len() != self.arity() {
            return Err(TransformError::OutsideDomain(x.len()));
        }
        self.eval(x)
    }
}

/// `ED_a`: 1 iff two positions hold the same symbol.
#[derive(Debug, Clone, Copy)]
pub struct ElementDistinctness {
    pub arity: usize,
}

impl BaseFunction for ElementDistinctness {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        KDistinctness { k: 2, arity: self.arity }.eval(x)
    }
}

/// `k-DIST_a`: 1 iff some symbol occurs at `k` or more positions.
#[derive(Debug, Clone, Copy)]
pub struct KDistinctness {
    pub k: usize,
    pub arity: usize,
}

impl BaseFunction for KDistinctness {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        let mut count: HashMap<Symbol, usize> = HashMap::new();
        for &s in x {
            let c = count.entry(s).or_default();
            *c += 1;
            if *c >= self.k {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Symmetric Boolean function given by its value profile `f_0..f_a` on Hamming weights.
#[derive(Debug, Clone)]
pub struct SymmetricBoolean {
    pub values: Vec<bool>,
}

impl SymmetricBoolean {
    pub fn or(a: usize) -> Self {
        SymmetricBoolean { values: (0..=a).map(|w| w > 0).collect() }
    }

    pub fn and(a: usize) -> Self {
        SymmetricBoolean { values: (0..=a).map(|w| w == a).collect() }
    }

    /// Threshold function: 1 iff weight ≥ `t`.
    pub fn threshold(a: usize, t: usize) -> Self {
        SymmetricBoolean { values: (0..=a).map(|w| w >= t).collect() }
    }

    pub fn majority(a: usize) -> Self {
        Self::threshold(a, a / 2 + 1)
    }

    pub fn parity(a: usize) -> Self {
        SymmetricBoolean { values: (0..=a).map(|w| w % 2 == 1).collect() }
    }
}

impl BaseFunction for SymmetricBoolean {
    fn arity(&self) -> usize {
        self.values.len() - 1
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        if x.iter().any(|&s| s > 1) {
            return Err(TransformError::OutsideDomain(x.len()));
        }
        Ok(self.values[x.iter().filter(|&&s| s == 1).count()])
    }
}

/// Dictator on one position of a Boolean string.
#[derive(Debug, Clone, Copy)]
pub struct Dictator {
    pub arity: usize,
    pub position: usize,
}

impl BaseFunction for Dictator {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        match x[self.position] {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(TransformError::OutsideDomain(x.len())),
        }
    }
}

/// The one-bit identity function.
#[derive(Debug, Clone, Copy)]
pub struct IdentityBit;

impl BaseFunction for IdentityBit {
    fn arity(&self) -> usize {
        1
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        Dictator { arity: 1, position: 0 }.eval(x)
    }
}

/// Wraps a closure as a base function.
pub struct FnBase<F> {
    pub arity: usize,
    pub f: F,
}

impl<F: Fn(&[Symbol]) -> Result<bool> + Sync> BaseFunction for FnBase<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, x: &[Symbol]) -> Result<bool> {
        (self.f)(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinctness() {
        let ed = ElementDistinctness { arity: 3 };
        assert!(ed.eval(&[4, 2, 4]).unwrap());
        assert!(!ed.eval(&[4, 2, 3]).unwrap());
        let d3 = KDistinctness { k: 3, arity: 4 };
        assert!(d3.eval(&[5, 5, 1, 5]).unwrap());
        assert!(!d3.eval(&[5, 5, 1, 1]).unwrap());
    }

    #[test]
    fn symmetric_profiles() {
        assert!(SymmetricBoolean::or(3).eval(&[0, 1, 0]).unwrap());
        assert!(!SymmetricBoolean::majority(4).eval(&[1, 1, 0, 0]).unwrap());
        assert!(SymmetricBoolean::or(2).eval(&[2, 0]).is_err());
    }

    #[test]
    fn checked_eval_rejects_length() {
        assert!(ElementDistinctness { arity: 2 }.eval_checked(&[1, 2, 3]).is_err());
    }
}
