//! The constant-query sampling algorithm for ΣMAJ.

use rand::Rng;
use serde::{Deserialize, Serialize};
use transforms::{sigma_maj_classify, SigmaMajClass, SigmaMajInstance};

use crate::{AlgoError, Result};

/// Output and read count of one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaMajRun {
    pub output: bool,
    pub reads: usize,
}

/// Samples `samples` rows uniformly with replacement, calls a row dense when
/// more than half of `samples` uniform cells are 1, and outputs 0 iff more
/// than half the sampled rows are dense. Reads `samples²` cells.
pub fn run_sigma_maj_classical(x: &SigmaMajInstance, samples: usize, seed: u64) -> Result<SigmaMajRun> {
    if samples == 0 {
        return Err(AlgoError::NoSamples);
    }
    if sigma_maj_classify(x) == SigmaMajClass::Outside {
        return Err(AlgoError::OutsideDomain);
    }
    let n = x.n();
    let mut rng = graphcore::rng::seeded(seed);
    let mut dense_rows = 0;
    for _ in 0..samples {
        let i = rng.random_range(0..n);
        let ones = (0..samples).filter(|_| x.get(i, rng.random_range(0..n))).count();
        dense_rows += (2 * ones > samples) as usize;
    }
    Ok(SigmaMajRun { output: 2 * dense_rows <= samples, reads: samples * samples })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_is_zero() {
        let x = SigmaMajInstance::new(12, vec![true; 144]).unwrap();
        for seed in 0..50 {
            let run = run_sigma_maj_classical(&x, 9, seed).unwrap();
            assert!(!run.output);
            assert_eq!(run.reads, 81);
        }
    }

    #[test]
    fn outside_rejected() {
        let mut rows = vec![vec![false; 12]; 12];
        rows[0][..6].fill(true);
        let x = SigmaMajInstance::from_rows(&rows).unwrap();
        assert_eq!(run_sigma_maj_classical(&x, 9, 0), Err(AlgoError::OutsideDomain));
    }
}
