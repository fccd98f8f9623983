//! `shuffle[f]` and the `k`-shuffled direct sum `shuffle^k[f]`.

use serde::{Deserialize, Serialize};

use crate::{BaseFunction, Result, Symbol, TransformError};

/// Entries `(value, origin)`; origins (0-based) form a permutation of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffledString {
    pub entries: Vec<(Symbol, usize)>,
}

impl ShuffledString {
    /// Recovers the pre-shuffle string, checking the permutation invariant.
    pub fn unshuffle(&self) -> Result<Vec<Symbol>> {
        let n = self.entries.len();
        let mut out: Vec<Option<Symbol>> = vec![None; n];
        for &(v, o) in &self.entries {
            if o >= n || out[o].is_some() {
                return Err(TransformError::NotPermutation(n));
            }
            out[o] = Some(v);
        }
        Ok(out.into_iter().map(|v| v.unwrap()).collect())
    }
}

/// Shuffles `x` by `pi`: entry `i` is `(x[pi[i]], pi[i])`.
pub fn shuffled(x: &[Symbol], pi: &[usize]) -> ShuffledString {
    ShuffledString { entries: pi.iter().map(|&o| (x[o], o)).collect() }
}

/// Evaluates `shuffle[f](x) = f(unshuffled x)`.
pub fn shuffle_eval<F: BaseFunction + ?Sized>(f: &F, x: &ShuffledString) -> Result<bool> {
    f.eval_checked(&x.unshuffle()?)
}

/// Entries `(value, copy)` with each copy label in `[k]` appearing `n` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffledDirectSumInput {
    pub k: usize,
    pub entries: Vec<(Symbol, usize)>,
}

impl ShuffledDirectSumInput {
    /// Splits by copy label preserving order.
    pub fn split(&self) -> Result<Vec<Vec<Symbol>>> {
        let len = self.entries.len();
        if self.k == 0 || !len.is_multiple_of(self.k) {
            return Err(TransformError::CopyShape { len, k: self.k });
        }
        let n = len / self.k;
        let mut copies = vec![Vec::with_capacity(n); self.k];
        for &(v, c) in &self.entries {
            if c >= self.k {
                return Err(TransformError::CopyShape { len, k: self.k });
            }
            copies[c].push(v);
        }
        for (copy, part) in copies.iter().enumerate() {
            if part.len() != n {
                return Err(TransformError::CopyCount { copy, count: part.len(), expected: n });
            }
        }
        Ok(copies)
    }
}

/// Evaluates `shuffle^k[f](x) = (f(v^(1)), …, f(v^(k)))`.
pub fn shuffle_dsum_eval<F: BaseFunction + ?Sized>(f: &F, x: &ShuffledDirectSumInput) -> Result<Vec<bool>> {
    x.split()?.iter().map(|v| f.eval_checked(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Dictator, IdentityBit, SymmetricBoolean};

    #[test]
    fn identity_shuffle() {
        let f = SymmetricBoolean::majority(3);
        let x = shuffled(&[1, 1, 0], &[0, 1, 2]);
        assert_eq!(shuffle_eval(&f, &x), f.eval(&[1, 1, 0]));
    }

    #[test]
    fn dictator_reads_origin_one() {
        // ((b,2),(a,1)) with a = 1, b = 0
        let x = ShuffledString { entries: vec![(0, 1), (1, 0)] };
        assert!(shuffle_eval(&Dictator { arity: 2, position: 0 }, &x).unwrap());
    }

    #[test]
    fn rejects_non_permutation() {
        let x = ShuffledString { entries: vec![(0, 1), (1, 1)] };
        assert_eq!(shuffle_eval(&IdentityBit, &x), Err(TransformError::NotPermutation(2)));
    }

    #[test]
    fn direct_sum_two_copies() {
        // ((0,2),(1,1)) with identity-bit
        let x = ShuffledDirectSumInput { k: 2, entries: vec![(0, 1), (1, 0)] };
        assert_eq!(shuffle_dsum_eval(&IdentityBit, &x).unwrap(), vec![true, false]);
    }

    #[test]
    fn direct_sum_unequal_copies() {
        let x = ShuffledDirectSumInput { k: 2, entries: vec![(0, 0), (1, 0)] };
        assert!(matches!(shuffle_dsum_eval(&IdentityBit, &x), Err(TransformError::CopyCount { .. })));
    }
}
