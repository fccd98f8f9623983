//! Weight profiles of symmetric Boolean functions.

use serde::{Deserialize, Serialize};
use transforms::BaseFunction;

use crate::{AlgoError, Result};

/// `f_0..f_n` together with `Γ(f)`, the plateau `[A, B]` and its value `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricProfile {
    values: Vec<bool>,
    gamma: usize,
    a: usize,
    b_end: usize,
    plateau: bool,
}

impl SymmetricProfile {
    /// Builds the profile from `f_0..f_n`. A constant profile has `Γ = n`,
    /// `A = 0` and `B = n`.
    pub fn new(values: Vec<bool>) -> Result<Self> {
        if values.len() < 2 {
            return Err(AlgoError::InconsistentProfile(values.len()));
        }
        let n = values.len() - 1;
        let gamma = (0..n)
            .filter(|&k| values[k] != values[k + 1])
            .map(|k| (2 * k as i64 - n as i64 + 1).unsigned_abs() as usize)
            .min();
        let (gamma, a, b_end) = match gamma {
            Some(g) => (g, (n - g).div_ceil(2), (n + g).saturating_sub(2).div_ceil(2)),
            None => (n, 0, n),
        };
        let plateau = values[a.min(n)];
        if (a..=b_end).any(|k| values[k] != plateau) {
            return Err(AlgoError::InconsistentProfile(values.len()));
        }
        Ok(SymmetricProfile { values, gamma, a, b_end, plateau })
    }

    /// Reads the profile off a base function on `n` bits, rejecting asymmetric ones.
    pub fn from_base<F: BaseFunction + ?Sized>(f: &F) -> Result<Self> {
        let n = f.arity();
        assert!(n <= 20, "exhaustive symmetry check is limited to 20 bits");
        let mut values: Vec<Option<bool>> = vec![None; n + 1];
        for mask in 0u32..(1 << n) {
            let x: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
            let w = mask.count_ones() as usize;
            let v = f.eval_checked(&x)?;
            match values[w] {
                Some(prev) if prev != v => return Err(AlgoError::NotSymmetric(w)),
                _ => values[w] = Some(v),
            }
        }
        Self::new(values.into_iter().map(|v| v.expect("every weight occurs")).collect())
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, k: usize) -> bool {
        self.values[k]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// `A = ⌈(n − Γ)/2⌉`.
    pub fn a(&self) -> usize {
        self.a
    }

    /// `B = ⌈(n + Γ − 2)/2⌉`.
    pub fn b(&self) -> usize {
        self.b_end
    }

    /// The constant value on `[A, B]`.
    pub fn plateau(&self) -> bool {
        self.plateau
    }

    /// `√(n(n − Γ))`, the quantum query complexity up to constants.
    pub fn q_proxy(&self) -> f64 {
        let n = self.n() as f64;
        (n * (n - self.gamma as f64)).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use transforms::{Dictator, SymmetricBoolean};

    #[test]
    fn or_and_majority() {
        let or = SymmetricProfile::from_base(&SymmetricBoolean::or(5)).unwrap();
        assert_eq!((or.gamma(), or.a(), or.b(), or.plateau()), (4, 1, 4, true));
        let maj = SymmetricProfile::from_base(&SymmetricBoolean::majority(4)).unwrap();
        assert_eq!(maj.gamma(), 1);
        assert_eq!((maj.a(), maj.b()), (2, 2));
        let par = SymmetricProfile::from_base(&SymmetricBoolean::parity(4)).unwrap();
        assert_eq!((par.gamma(), par.a(), par.b()), (1, 2, 2));
    }

    #[test]
    fn plateau_is_constant_for_all_profiles() {
        for n in 1..=7usize {
            for mask in 0u32..(1 << (n + 1)) {
                let values: Vec<bool> = (0..=n).map(|k| (mask >> k) & 1 == 1).collect();
                let p = SymmetricProfile::new(values.clone()).unwrap();
                assert!(p.a() <= p.b() + 1 && p.b() <= n);
                assert!((p.a()..=p.b()).all(|k| values[k] == p.plateau()));
            }
        }
    }

    #[test]
    fn dictator_is_rejected() {
        let d = Dictator { arity: 3, position: 0 };
        assert!(matches!(SymmetricProfile::from_base(&d), Err(AlgoError::NotSymmetric(_))));
    }
}
