//! Search-to-decision for k-cycle with an amplified bounded-error decision oracle.

use graphcore::{cycle_edges_form_cycle, find_k_cycle, has_triangle, Certificate, Edge, EdgeList};
use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Decides whether a length-`m` edge list contains a `k`-cycle, possibly with error.
pub trait DecisionOracle {
    fn decide(&mut self, x: &EdgeList, k: usize) -> bool;
}

/// Always correct. Remembers the last answer, since amplification repeats queries.
#[derive(Debug, Default, Clone)]
pub struct ExactOracle {
    last: Option<(EdgeList, usize, bool)>,
}

impl ExactOracle {
    pub fn new() -> Self {
        Self::default()
    }
}

fn exact(x: &EdgeList, k: usize) -> bool {
    if k == 3 {
        has_triangle(x)
    } else {
        find_k_cycle(x, k).map(|c| c.is_some()).unwrap_or(false)
    }
}

impl DecisionOracle for ExactOracle {
    fn decide(&mut self, x: &EdgeList, k: usize) -> bool {
        if let Some((y, j, ans)) = &self.last {
            if *j == k && y == x {
                return *ans;
            }
        }
        let ans = exact(x, k);
        self.last = Some((x.clone(), k, ans));
        ans
    }
}

/// Flips the correct answer independently with probability `error`.
pub struct NoisyOracle {
    pub error: f64,
    rng: ChaCha8Rng,
}

impl NoisyOracle {
    pub fn new(error: f64, seed: u64) -> Self {
        NoisyOracle { error, rng: graphcore::rng::seeded(seed) }
    }
}

impl DecisionOracle for NoisyOracle {
    fn decide(&mut self, x: &EdgeList, k: usize) -> bool {
        let truth = exact(x, k);
        truth ^ self.rng.random_bool(self.error)
    }
}

/// Amplification and stopping parameters.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Assumed error bound of the underlying oracle.
    pub max_error: f64,
    /// Each majority vote errs with probability at most `m^(−failure_exponent)`.
    pub failure_exponent: f64,
    /// Below this many candidate positions the certificate is read off directly.
    pub base_size: usize,
}

impl SearchConfig {
    pub fn for_k(k: usize) -> Self {
        SearchConfig { max_error: 1.0 / 3.0, failure_exponent: 2.0, base_size: 2 * k }
    }
}

/// Result of [`search_to_decision`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub certificate: Option<Certificate>,
    /// Total calls to the underlying oracle, amplification included.
    pub oracle_calls: usize,
    /// Amplified decisions made.
    pub decisions: usize,
    /// Shrinking rounds performed.
    pub rounds: usize,
}

/// Smallest odd `r` with `Pr[Bin(r, p) > r/2] ≤ target`.
pub fn majority_reps(p: f64, target: f64) -> usize {
    assert!((0.0..0.5).contains(&p), "oracle error must be below 1/2");
    let tail = |r: usize| -> f64 {
        let mut ln_c = 0.0;
        let mut total = 0.0;
        for j in 0..=r {
            if j > 0 {
                ln_c += ((r - j + 1) as f64).ln() - (j as f64).ln();
            }
            if 2 * j > r {
                total += (ln_c + j as f64 * p.ln() + (r - j) as f64 * (1.0 - p).ln()).exp();
            }
        }
        total
    };
    (1..).step_by(2).find(|&r| p == 0.0 || tail(r) <= target).expect("tail decreases to zero")
}

struct Amplified<'a, O: DecisionOracle> {
    oracle: &'a mut O,
    reps: usize,
    calls: usize,
    decisions: usize,
}

impl<O: DecisionOracle> Amplified<'_, O> {
    fn decide(&mut self, x: &EdgeList, k: usize) -> bool {
        self.decisions += 1;
        let mut yes = 0;
        for _ in 0..self.reps {
            self.calls += 1;
            yes += self.oracle.decide(x, k) as usize;
        }
        2 * yes > self.reps
    }
}

/// The edges at `keep` (original order) followed by a fresh matching up to length `m`.
fn padded(x: &EdgeList, keep: &[usize]) -> EdgeList {
    let pad = x.m() - keep.len();
    let mut edges: Vec<Edge> = keep.iter().map(|&i| x.edge(i)).collect();
    let n = x.n();
    edges.extend((0..pad as u32).map(|t| Edge::new(n + 2 * t + 1, n + 2 * t + 2)));
    EdgeList::from_edges(n + 2 * pad as u32, edges).expect("fresh vertices are in range")
}

/// Finds a `k`-cycle certificate using only decision calls on length-`m` inputs.
///
/// Each round splits the candidate positions into `k + 1` contiguous parts and
/// keeps the first union of `k` parts the oracle accepts; the last union is
/// taken without a call when the first `k` are rejected.
pub fn search_to_decision<O: DecisionOracle>(
    oracle: &mut O,
    x: &EdgeList,
    k: usize,
    config: SearchConfig,
) -> SearchOutcome {
    let m = x.m();
    let reps = majority_reps(config.max_error, (m.max(2) as f64).powf(-config.failure_exponent));
    let mut amp = Amplified { oracle, reps, calls: 0, decisions: 0 };
    let mut cand: Vec<usize> = (0..m).collect();
    let mut rounds = 0;
    let found = amp.decide(x, k);
    if found {
        while cand.len() > config.base_size.max(k + 1) {
            rounds += 1;
            let s = cand.len();
            let bounds: Vec<usize> = (0..=k + 1).map(|p| p * s / (k + 1)).collect();
            let without = |drop: usize| -> Vec<usize> {
                cand.iter()
                    .enumerate()
                    .filter(|(t, _)| *t < bounds[drop] || *t >= bounds[drop + 1])
                    .map(|(_, &i)| i)
                    .collect()
            };
            let mut next = None;
            for drop in 0..k {
                let trial = without(drop);
                if amp.decide(&padded(x, &trial), k) {
                    next = Some(trial);
                    break;
                }
            }
            cand = next.unwrap_or_else(|| without(k));
        }
    }
    let certificate = if found {
        find_k_cycle(&x.select(&cand), k).ok().flatten().and_then(|c| {
            let mut indices: Vec<usize> = c.indices.iter().map(|&t| cand[t]).collect();
            indices.sort_unstable();
            cycle_edges_form_cycle(x, &indices).then_some(Certificate { indices, kind: c.kind })
        })
    } else {
        None
    };
    SearchOutcome { certificate, oracle_calls: amp.calls, decisions: amp.decisions, rounds }
}

/// A uniform sparse list of `m − k` edges on `4m` vertices plus a planted
/// `k`-cycle, in shuffled order.
pub fn planted_instance(m: usize, k: usize, seed: u64) -> EdgeList {
    assert!(m >= k && k >= 3, "need m ≥ k ≥ 3");
    let mut rng = graphcore::rng::seeded(seed);
    let n = 4 * m as u32;
    let mut edges: Vec<Edge> = (0..m - k)
        .map(|_| loop {
            let (a, b) = (rng.random_range(1..=n), rng.random_range(1..=n));
            if a != b {
                break Edge::new(a, b);
            }
        })
        .collect();
    let cyc: Vec<u32> = index::sample(&mut rng, n as usize, k).iter().map(|v| v as u32 + 1).collect();
    edges.extend((0..k).map(|i| Edge::new(cyc[i], cyc[(i + 1) % k])));
    edges.shuffle(&mut rng);
    EdgeList::from_edges(n, edges).expect("vertices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_planted_triangle() {
        let x =
            EdgeList::new(12, &[(1, 2), (3, 4), (5, 6), (2, 7), (8, 9), (1, 7), (10, 11), (4, 12), (6, 12)]).unwrap();
        let out = search_to_decision(&mut ExactOracle::new(), &x, 3, SearchConfig::for_k(3));
        assert_eq!(out.certificate.unwrap().indices, vec![0, 3, 5]);
    }

    #[test]
    fn no_instance_is_absent() {
        let x = EdgeList::new(10, &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 7)]).unwrap();
        let out = search_to_decision(&mut ExactOracle::new(), &x, 3, SearchConfig::for_k(3));
        assert!(out.certificate.is_none());
        assert_eq!(out.decisions, 1);
    }

    #[test]
    fn majority_reps_meets_target() {
        assert_eq!(majority_reps(0.0, 1e-9), 1);
        assert_eq!(majority_reps(1.0 / 3.0, 0.5), 1);
        // Pr[Bin(3, 1/3) ≥ 2] = 7/27
        assert_eq!(majority_reps(1.0 / 3.0, 7.0 / 27.0), 3);
        assert!(majority_reps(1.0 / 3.0, 1e-4) > majority_reps(1.0 / 3.0, 1e-2));
    }

    #[test]
    fn padding_keeps_length_and_adds_no_cycle() {
        let x = EdgeList::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let p = padded(&x, &[0, 2]);
        assert_eq!(p.m(), 4);
        assert!(!has_triangle(&p));
    }
}
