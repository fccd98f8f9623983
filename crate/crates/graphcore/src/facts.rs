//! Uniform sampling and Monte Carlo checks of the sparse random-graph facts.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{partition_exists, partition_size};
use crate::rng::{seeded, task_rng};
use crate::stats::{duplicate_fix_count, find_k_cycle, has_triangle, max_degree};
use crate::{colex_decode, num_pairs, EdgeList, GraphError, Result};

/// `m` edges drawn independently and uniformly from the `C(n,2)` pairs.
pub fn sample_uniform(n: u32, m: usize, seed: u64) -> Result<EdgeList> {
    sample_with(n, m, &mut seeded(seed))
}

pub(crate) fn sample_with<R: Rng>(n: u32, m: usize, rng: &mut R) -> Result<EdgeList> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    let pairs = num_pairs(n);
    let edges = (0..m).map(|_| colex_decode(rng.random_range(0..pairs))).collect();
    EdgeList::from_edges(n, edges)
}

/// The low-max-degree threshold `2 log n / log log n` (base 2).
pub fn maxdeg_threshold(n: u32) -> f64 {
    let l = (n as f64).log2();
    2.0 * l / l.log2()
}

/// Empirical frequencies of the random-graph events over seeded trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactsReport {
    pub n: u32,
    pub m: usize,
    pub k: usize,
    pub trials: usize,
    pub maxdeg_threshold: f64,
    pub part_size: usize,
    pub maxdeg_fraction: f64,
    pub cycle_fraction: f64,
    pub partition_fraction: f64,
    pub duplicate_fraction: f64,
}

/// Runs `trials` independent samples and reports the fraction of graphs with
/// low max degree, a `k`-cycle, a size-`⌈log n⌉` partition, and fewer than
/// `k` duplicate deletions.
pub fn montecarlo_facts(n: u32, m: usize, k: usize, trials: usize, seed: u64) -> Result<FactsReport> {
    if k < 3 {
        return Err(GraphError::CycleLength(k));
    }
    let thr = maxdeg_threshold(n);
    let b = partition_size(n);
    let hits: Vec<[bool; 4]> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let x = sample_with(n, m, &mut task_rng(seed, t as u64))?;
            let cyc = if k == 3 { has_triangle(&x) } else { find_k_cycle(&x, k)?.is_some() };
            Ok([(max_degree(&x) as f64) <= thr, cyc, partition_exists(&x, b), duplicate_fix_count(&x) < k])
        })
        .collect::<Result<_>>()?;
    let frac = |j: usize| hits.iter().filter(|h| h[j]).count() as f64 / trials.max(1) as f64;
    Ok(FactsReport {
        n,
        m,
        k,
        trials,
        maxdeg_threshold: thr,
        part_size: b,
        maxdeg_fraction: frac(0),
        cycle_fraction: frac(1),
        partition_fraction: frac(2),
        duplicate_fraction: frac(3),
    })
}

/// How a vertex-avoidance probability was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AvoidanceMethod {
    Enumeration,
    LowerBound,
}

/// Result of [`vertex_avoidance_prob`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AvoidanceResult {
    pub value: f64,
    /// Exact rational value when enumeration was used.
    #[serde(skip)]
    pub exact: Option<BigRational>,
    /// The bound `1 − tds/(m − td + 1)`, when its denominator is positive.
    pub bound: Option<f64>,
    pub method: AvoidanceMethod,
}

const ENUMERATION_LIMIT: u128 = 1_000_000;

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u128::MAX;
        }
    }
    acc
}

/// Probability that a uniform size-`s` subset of positions touches no vertex of `t_set`.
pub fn vertex_avoidance_prob(x: &EdgeList, t_set: &[u32], s: usize) -> Result<AvoidanceResult> {
    let m = x.m();
    if s > m {
        return Err(GraphError::SubsetSize { s, m });
    }
    let td = (t_set.len() * max_degree(x)) as f64;
    let denom = m as f64 - td + 1.0;
    let bound = (denom > 0.0).then(|| 1.0 - td * s as f64 / denom);
    if binom(m, s) <= ENUMERATION_LIMIT {
        let avoid: Vec<bool> = x.edges().iter().map(|e| !t_set.iter().any(|&v| e.touches(v))).collect();
        let (mut good, mut total) = (0u64, 0u64);
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            total += 1;
            if idx.iter().all(|&i| avoid[i]) {
                good += 1;
            }
            // next combination in lexicographic order
            let mut j = s;
            while j > 0 && idx[j - 1] == m - s + j - 1 {
                j -= 1;
            }
            if j == 0 {
                break;
            }
            idx[j - 1] += 1;
            for l in j..s {
                idx[l] = idx[l - 1] + 1;
            }
        }
        let exact = BigRational::new(BigInt::from(good), BigInt::from(total));
        Ok(AvoidanceResult {
            value: good as f64 / total as f64,
            exact: Some(exact),
            bound,
            method: AvoidanceMethod::Enumeration,
        })
    } else {
        Ok(AvoidanceResult {
            value: bound.unwrap_or(0.0).max(0.0),
            exact: None,
            bound,
            method: AvoidanceMethod::LowerBound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn two_vertices_give_one_pair() {
        let x = sample_uniform(2, 3, 17).unwrap();
        assert!(x.edges().iter().all(|e| (e.lo(), e.hi()) == (1, 2)));
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_uniform(30, 40, 5).unwrap(), sample_uniform(30, 40, 5).unwrap());
        assert_ne!(sample_uniform(30, 40, 5).unwrap(), sample_uniform(30, 40, 6).unwrap());
    }

    #[test]
    fn rejects_single_vertex() {
        assert_eq!(sample_uniform(1, 3, 0), Err(GraphError::TooFewVertices(1)));
    }

    #[test]
    fn avoidance_examples() {
        let x = EdgeList::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let r = vertex_avoidance_prob(&x, &[2], 1).unwrap();
        assert_eq!(r.method, AvoidanceMethod::Enumeration);
        assert_eq!(r.exact.unwrap(), BigRational::new(1.into(), 3.into()));
        assert!(vertex_avoidance_prob(&x, &[2], 0).unwrap().exact.unwrap().is_one());
        assert!(vertex_avoidance_prob(&x, &[], 2).unwrap().exact.unwrap().is_one());
        assert!(vertex_avoidance_prob(&x, &[], 4).is_err());
    }

    #[test]
    fn empty_graph_facts() {
        let r = montecarlo_facts(64, 0, 3, 10, 1).unwrap();
        assert_eq!(r.partition_fraction, 1.0);
        assert_eq!(r.cycle_fraction, 0.0);
        assert_eq!(r.maxdeg_fraction, 1.0);
        assert_eq!(r.duplicate_fraction, 1.0);
    }

    #[test]
    fn facts_deterministic() {
        let a = montecarlo_facts(128, 128, 3, 20, 9).unwrap();
        let b = montecarlo_facts(128, 128, 3, 20, 9).unwrap();
        assert_eq!(a, b);
    }
}
