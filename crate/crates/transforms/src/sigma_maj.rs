//! ΣMAJ instances, their classification, and the two hard distributions `H_0`, `H_1`.

use rand::seq::{index::sample, SliceRandom};
use serde::{Deserialize, Serialize};

use crate::{Result, ShuffledString, TransformError};

/// An `n × n` Boolean matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaMajInstance {
    n: usize,
    bits: Vec<bool>,
}

/// Domain membership of a ΣMAJ input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaMajClass {
    D0,
    D1,
    Outside,
}

impl SigmaMajClass {
    /// The function value on the domain.
    pub fn value(self) -> Option<bool> {
        match self {
            SigmaMajClass::D0 => Some(false),
            SigmaMajClass::D1 => Some(true),
            SigmaMajClass::Outside => None,
        }
    }
}

impl SigmaMajInstance {
    pub fn new(n: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != n * n {
            return Err(TransformError::Shape(n));
        }
        Ok(SigmaMajInstance { n, bits })
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(TransformError::Shape(n));
        }
        Ok(SigmaMajInstance { n, bits: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.bits[i * self.n..(i + 1) * self.n].iter().filter(|&&b| b).count()
    }

    /// Row-major `0`/`1` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<bool>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(TransformError::Parse(format!("bad bit `{c}`"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(&rows)
    }

    /// Shuffles the `n²` cells by `pi`, origins `i·n + j`.
    pub fn shuffle(&self, pi: &[usize]) -> ShuffledString {
        ShuffledString { entries: pi.iter().map(|&o| (self.bits[o] as u32, o)).collect() }
    }

    /// Rebuilds the matrix from a shuffled cell list.
    pub fn unshuffle(n: usize, x: &ShuffledString) -> Result<Self> {
        let v = x.unshuffle()?;
        if v.iter().any(|&b| b > 1) {
            return Err(TransformError::OutsideDomain(v.len()));
        }
        Self::new(n, v.into_iter().map(|b| b == 1).collect())
    }
}

/// Classifies by row densities: dense rows have weight ≥ 2n/3, sparse ≤ n/3;
/// every row must be one or the other, and the dense count decides `D0`/`D1`.
pub fn sigma_maj_classify(x: &SigmaMajInstance) -> SigmaMajClass {
    let n = x.n;
    let mut dense = 0usize;
    for i in 0..n {
        let w = x.row_weight(i);
        if 3 * w >= 2 * n {
            dense += 1;
        } else if 3 * w > n {
            return SigmaMajClass::Outside;
        }
    }
    if 3 * dense >= 2 * n {
        SigmaMajClass::D0
    } else if 3 * dense <= n {
        SigmaMajClass::D1
    } else {
        SigmaMajClass::Outside
    }
}

/// A sample from `H_b` and its uniformly shuffled cell list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSample {
    pub instance: SigmaMajInstance,
    pub shuffled: ShuffledString,
    pub dense_rows: Vec<usize>,
}

/// Samples `H_0` (2n/3 rows of weight 3n/4, the rest empty) or `H_1`
/// (n/3 full rows, the rest of weight n/4), then shuffles all `n²` cells.
pub fn sample_h(b: bool, n: usize, seed: u64) -> Result<HSample> {
    if n == 0 || !n.is_multiple_of(12) {
        return Err(TransformError::NotMultipleOf12(n));
    }
    let mut rng = graphcore::rng::seeded(seed);
    let (s_size, dense_w, sparse_w) = if b { (n / 3, n, n / 4) } else { (2 * n / 3, 3 * n / 4, 0) };
    let mut dense_rows = sample(&mut rng, n, s_size).into_vec();
    dense_rows.sort_unstable();
    let mut bits = vec![false; n * n];
    for i in 0..n {
        let w = if dense_rows.binary_search(&i).is_ok() { dense_w } else { sparse_w };
        for j in sample(&mut rng, n, w) {
            bits[i * n + j] = true;
        }
    }
    let instance = SigmaMajInstance { n, bits };
    let mut pi: Vec<usize> = (0..n * n).collect();
    pi.shuffle(&mut rng);
    let shuffled = instance.shuffle(&pi);
    Ok(HSample { instance, shuffled, dense_rows })
}
