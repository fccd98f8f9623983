//! Exact transcript distributions by enumeration in rational arithmetic.
//!
//! Trajectories sharing a transcript prefix are merged per hidden state
//! (the row labels), since the future law depends only on the state.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::process::{bit_and_label, with_label, Hidden, ProcessConfig, Step, Visible, Q};
use crate::{ProcessError, Result};

/// Largest `(2n²)^t` accepted by the enumerators.
pub const ENUMERATION_CAP: u128 = 5_000_000;

/// Per-trajectory probabilities; all denominators divide a product of `O(t)`
/// small factors, and overflow is reported rather than wrapped.
type R = Ratio<i128>;

fn wide(q: Q) -> R {
    R::new(i128::from(*q.numer()), i128::from(*q.denom()))
}

fn big(r: &R) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn add(a: &R, b: &R) -> Result<R> {
    a.checked_add(b).ok_or(ProcessError::Overflow)
}

fn mul(a: &R, b: &R) -> Result<R> {
    a.checked_mul(b).ok_or(ProcessError::Overflow)
}

type Belief = BTreeMap<Hidden, R>;

/// Exact comparison of the two canonical processes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactTvd {
    pub n: u32,
    pub t: u32,
    /// `Σ_x |Pr_0[x] - Pr_1[x]|`, as a reduced fraction.
    pub l1: String,
    pub l1_f64: f64,
    /// `4t²/n`.
    pub bound: String,
    pub within_bound: bool,
    /// `Pr_0[Bad]` and `Pr_1[Bad]` from the enumeration.
    pub bad: [String; 2],
    pub bad_equal: bool,
    /// `1 - Π_{s<t} (n² - sn)/(n² - s)`.
    pub bad_closed_form: String,
    pub transcripts: u64,
}

fn guard(n: u32, t: u32) -> Result<()> {
    let leaves = (2 * u128::from(n) * u128::from(n)).checked_pow(t);
    match leaves {
        Some(l) if l <= ENUMERATION_CAP => Ok(()),
        _ => Err(ProcessError::TooLarge { n, t }),
    }
}

/// One step of the belief over hidden states for the transcript extended by `(i, j, b)`.
fn advance(cfg: &ProcessConfig, v: &Visible, belief: &Belief, i: u32, b: bool, pick: &R) -> Result<Belief> {
    let mut out = Belief::new();
    for (h, p) in belief {
        for (bit, l, q) in bit_and_label(cfg, v, h, i)? {
            if bit != b || q == Q::from_integer(0) {
                continue;
            }
            let w = mul(&mul(p, pick)?, &wide(q))?;
            let e = out.entry(with_label(h, i, l)).or_insert_with(R::zero);
            *e = add(e, &w)?;
        }
    }
    Ok(out)
}

fn total(b: &Belief) -> Result<R> {
    b.values().try_fold(R::zero(), |acc, p| add(&acc, p))
}

#[derive(Default)]
struct Acc {
    l1: R,
    bad: [R; 2],
    leaves: u64,
}

/// Cross-subtree totals in arbitrary precision.
#[derive(Default)]
struct Total {
    l1: BigRational,
    bad: [BigRational; 2],
    leaves: u64,
}

impl Total {
    fn merge(mut self, o: Acc) -> Total {
        self.l1 += big(&o.l1);
        self.bad[0] += big(&o.bad[0]);
        self.bad[1] += big(&o.bad[1]);
        self.leaves += o.leaves;
        self
    }
}

struct Walk<'a> {
    cfgs: &'a [ProcessConfig; 2],
    v: Visible,
    rows: Vec<u32>,
}

impl Walk<'_> {
    fn descend(&mut self, depth: u32, beliefs: [Belief; 2], acc: &mut Acc) -> Result<()> {
        if depth == self.cfgs[0].t {
            let (p0, p1) = (total(&beliefs[0])?, total(&beliefs[1])?);
            acc.l1 = add(&acc.l1, &(p0 - p1).abs())?;
            let mut rows = self.rows.clone();
            rows.sort_unstable();
            if rows.windows(2).any(|w| w[0] == w[1]) {
                acc.bad[0] = add(&acc.bad[0], &p0)?;
                acc.bad[1] = add(&acc.bad[1], &p1)?;
            }
            acc.leaves += 1;
            return Ok(());
        }
        let pick = R::new(1, i128::from(self.v.remaining()));
        let n = self.v.n;
        for i in 1..=n {
            for j in 1..=n {
                if self.v.is_seen(i, j) {
                    continue;
                }
                for b in [false, true] {
                    self.step(depth, &beliefs, Step { i, j, b }, &pick, acc)?;
                }
            }
        }
        Ok(())
    }

    fn step(&mut self, depth: u32, beliefs: &[Belief; 2], s: Step, pick: &R, acc: &mut Acc) -> Result<()> {
        let next = [
            advance(&self.cfgs[0], &self.v, &beliefs[0], s.i, s.b, pick)?,
            advance(&self.cfgs[1], &self.v, &beliefs[1], s.i, s.b, pick)?,
        ];
        if next.iter().all(|b| b.is_empty()) {
            return Ok(());
        }
        self.v.push(s);
        self.rows.push(s.i);
        let r = self.descend(depth + 1, next, acc);
        self.rows.pop();
        self.v.pop(s);
        r
    }
}

fn start(n: u32) -> Belief {
    let mut b = Belief::new();
    b.insert(Hidden::new(n), R::one());
    b
}

/// Exact `ℓ1` distance between the transcript laws of `P_0` and `P_1`,
/// together with both `Pr[Bad]` values.
pub fn exact_tvd(n: u32, t: u32) -> Result<ExactTvd> {
    let cfgs = ProcessConfig::pair(n, t)?;
    guard(n, t)?;
    let acc = if t == 0 {
        Total { leaves: 1, ..Total::default() }
    } else {
        // first steps in parallel
        let firsts: Vec<Step> =
            (1..=n).flat_map(|i| (1..=n).flat_map(move |j| [false, true].map(|b| Step { i, j, b }))).collect();
        firsts
            .par_iter()
            .map(|&s| {
                let mut w = Walk { cfgs: &cfgs, v: Visible::new(n), rows: Vec::new() };
                let mut acc = Acc::default();
                let pick = R::new(1, i128::from(n * n));
                w.step(0, &[start(n), start(n)], s, &pick, &mut acc)?;
                Ok(acc)
            })
            .collect::<Result<Vec<Acc>>>()?
            .into_iter()
            .fold(Total::default(), Total::merge)
    };
    let bound = BigRational::new(BigInt::from(4 * u64::from(t) * u64::from(t)), BigInt::from(n));
    let closed = bad_closed_form(n, t);
    Ok(ExactTvd {
        n,
        t,
        l1: acc.l1.to_string(),
        l1_f64: to_f64(&acc.l1),
        within_bound: acc.l1 <= bound,
        bound: bound.to_string(),
        bad_equal: acc.bad[0] == acc.bad[1],
        bad: [acc.bad[0].to_string(), acc.bad[1].to_string()],
        bad_closed_form: closed.to_string(),
        transcripts: acc.leaves,
    })
}

/// `1 - Π_{s=1}^{t-1} (n² - sn)/(n² - s)`.
pub fn bad_closed_form(n: u32, t: u32) -> BigRational {
    let n2 = BigInt::from(u64::from(n) * u64::from(n));
    let mut prod = BigRational::one();
    for s in 1..t {
        let s = BigInt::from(s);
        prod *= BigRational::new(&n2 - &s * BigInt::from(n), &n2 - &s);
    }
    BigRational::one() - prod
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact probability of one transcript under `cfg` (forward pass over
/// hidden states in arbitrary precision, so any length is accepted).
pub fn transcript_probability(cfg: &ProcessConfig, x: &[Step]) -> Result<BigRational> {
    let mut v = Visible::new(cfg.n);
    let mut belief: BTreeMap<Hidden, BigRational> = BTreeMap::new();
    belief.insert(Hidden::new(cfg.n), BigRational::one());
    for &s in x {
        if s.i == 0 || s.i > cfg.n || s.j == 0 || s.j > cfg.n || v.is_seen(s.i, s.j) {
            return Ok(BigRational::zero());
        }
        let pick = BigRational::new(BigInt::one(), BigInt::from(v.remaining()));
        let mut out: BTreeMap<Hidden, BigRational> = BTreeMap::new();
        for (h, p) in &belief {
            for (bit, l, q) in bit_and_label(cfg, &v, h, s.i)? {
                if bit == s.b && q != Q::from_integer(0) {
                    let w = p * &pick * BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
                    *out.entry(with_label(h, s.i, l)).or_insert_with(BigRational::zero) += w;
                }
            }
        }
        belief = out;
        v.push(s);
    }
    Ok(belief.values().sum())
}
