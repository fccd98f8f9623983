//! The process `P(α, β, γ)`: configuration, state and sequential sampling.

use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{ProcessError, Result};

/// Exact rational probability used by the process.
pub type Q = Ratio<i64>;

/// Parameters of `P(α, β, γ)` on an `n × n` grid run for `t` steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProcessConfig {
    pub alpha: Q,
    pub beta: Q,
    pub gamma: Q,
    pub n: u32,
    pub t: u32,
}

impl ProcessConfig {
    pub fn new(alpha: Q, beta: Q, gamma: Q, n: u32, t: u32) -> Result<Self> {
        let c = ProcessConfig { alpha, beta, gamma, n, t };
        c.validate()?;
        Ok(c)
    }

    /// `P_0 = P(3/4, 0, 2/3)`.
    pub fn p0(n: u32, t: u32) -> Result<Self> {
        Self::new(Q::new(3, 4), Q::from_integer(0), Q::new(2, 3), n, t)
    }

    /// `P_1 = P(1, 1/4, 1/3)`.
    pub fn p1(n: u32, t: u32) -> Result<Self> {
        Self::new(Q::from_integer(1), Q::new(1, 4), Q::new(1, 3), n, t)
    }

    /// The canonical pair `(P_0, P_1)`.
    pub fn pair(n: u32, t: u32) -> Result<[Self; 2]> {
        Ok([Self::p0(n, t)?, Self::p1(n, t)?])
    }

    pub fn validate(&self) -> Result<()> {
        let zero = Q::from_integer(0);
        let half = Q::new(1, 2);
        let one = Q::from_integer(1);
        if !(zero <= self.beta && self.beta < half && half < self.alpha && self.alpha <= one) {
            return Err(ProcessError::Config("need 0 ≤ β < 1/2 < α ≤ 1".into()));
        }
        if self.gamma < zero || self.gamma > one {
            return Err(ProcessError::Config("need γ ∈ [0, 1]".into()));
        }
        if self.n == 0 {
            return Err(ProcessError::Config("n must be positive".into()));
        }
        if u64::from(self.t) > u64::from(self.n) * u64::from(self.n) {
            return Err(ProcessError::Config(format!("t = {} exceeds n² = {}", self.t, self.n * self.n)));
        }
        Ok(())
    }
}

/// Row label chosen on first visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Dense,
    Sparse,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::Dense => Label::Sparse,
            Label::Sparse => Label::Dense,
        }
    }
}

/// One output triple `(i, j, b)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Step {
    pub i: u32,
    pub j: u32,
    pub b: bool,
}

pub type Transcript = Vec<Step>;

/// State determined by the transcript: `SEEN`, `M_i`, `N_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Visible {
    pub n: u32,
    seen: Vec<bool>,
    pub seen_count: u32,
    pub m: Vec<u32>,
    pub nn: Vec<u32>,
}

impl Visible {
    pub fn new(n: u32) -> Self {
        let n_us = n as usize;
        Visible { n, seen: vec![false; n_us * n_us], seen_count: 0, m: vec![0; n_us + 1], nn: vec![0; n_us + 1] }
    }

    fn cell(&self, i: u32, j: u32) -> usize {
        (i as usize - 1) * self.n as usize + (j as usize - 1)
    }

    pub fn is_seen(&self, i: u32, j: u32) -> bool {
        self.seen[self.cell(i, j)]
    }

    /// Records step `s`.
    pub fn push(&mut self, s: Step) {
        let c = self.cell(s.i, s.j);
        self.seen[c] = true;
        self.seen_count += 1;
        self.nn[s.i as usize] += 1;
        self.m[s.i as usize] += u32::from(s.b);
    }

    /// Undoes [`Visible::push`].
    pub fn pop(&mut self, s: Step) {
        let c = self.cell(s.i, s.j);
        self.seen[c] = false;
        self.seen_count -= 1;
        self.nn[s.i as usize] -= 1;
        self.m[s.i as usize] -= u32::from(s.b);
    }

    /// Pairs still available.
    pub fn remaining(&self) -> u32 {
        self.n * self.n - self.seen_count
    }
}

/// Row labels assigned so far, with the `|DENSE|`, `|SPARSE|` counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hidden {
    pub labels: Vec<Option<Label>>,
    pub dense: u32,
    pub sparse: u32,
}

impl Hidden {
    pub fn new(n: u32) -> Self {
        Hidden { labels: vec![None; n as usize + 1], dense: 0, sparse: 0 }
    }

    fn set(&mut self, i: u32, l: Label) {
        if self.labels[i as usize].is_none() {
            match l {
                Label::Dense => self.dense += 1,
                Label::Sparse => self.sparse += 1,
            }
            self.labels[i as usize] = Some(l);
        }
    }
}

fn checked(p: Q, what: &'static str) -> Result<Q> {
    if p < Q::from_integer(0) || p > Q::from_integer(1) {
        return Err(ProcessError::Probability { what, value: p.to_string() });
    }
    Ok(p)
}

/// `p_dense = (γn - |DENSE|) / (n - |DENSE| - |SPARSE|)`.
pub fn p_dense(cfg: &ProcessConfig, h: &Hidden) -> Result<Q> {
    let n = i64::from(cfg.n);
    let free = n - i64::from(h.dense) - i64::from(h.sparse);
    if free == 0 {
        return Err(ProcessError::Probability { what: "p_dense", value: "undefined".into() });
    }
    checked((cfg.gamma * n - i64::from(h.dense)) / free, "p_dense")
}

/// `Pr[b = 1]` on row `i` with label `l`: `p_1 = (αn - M_i)/(n - N_i)` or `q_1 = (βn - M_i)/(n - N_i)`.
pub fn bit_one(cfg: &ProcessConfig, v: &Visible, i: u32, l: Label) -> Result<Q> {
    let n = i64::from(cfg.n);
    let (m, nn) = (i64::from(v.m[i as usize]), i64::from(v.nn[i as usize]));
    if n == nn {
        return Err(ProcessError::Probability { what: "bit", value: "undefined".into() });
    }
    match l {
        Label::Dense => checked((cfg.alpha * n - m) / (n - nn), "p_1"),
        Label::Sparse => checked((cfg.beta * n - m) / (n - nn), "q_1"),
    }
}

/// Distribution of `(b, label of row i)` given the state, excluding the
/// uniform choice of `(i, j)`.
pub fn bit_and_label(cfg: &ProcessConfig, v: &Visible, h: &Hidden, i: u32) -> Result<Vec<(bool, Label, Q)>> {
    let one = Q::from_integer(1);
    let branches = match h.labels[i as usize] {
        Some(l) => vec![(l, one)],
        None => {
            let pd = p_dense(cfg, h)?;
            vec![(Label::Dense, pd), (Label::Sparse, one - pd)]
        }
    };
    let mut out = Vec::with_capacity(4);
    for (l, pl) in branches {
        if pl == Q::from_integer(0) {
            continue;
        }
        let p1 = bit_one(cfg, v, i, l)?;
        out.push((true, l, pl * p1));
        out.push((false, l, pl * (one - p1)));
    }
    Ok(out)
}

/// Hidden state after row `i` is labelled `l`.
pub fn with_label(h: &Hidden, i: u32, l: Label) -> Hidden {
    let mut h2 = h.clone();
    h2.set(i, l);
    h2
}

/// Draws `true` with exact rational probability `p`.
fn bernoulli<G: Rng>(p: Q, rng: &mut G) -> bool {
    rng.random_range(0..*p.denom()) < *p.numer()
}

/// Runs the process once, sampling every choice exactly.
pub fn simulate<G: Rng>(cfg: &ProcessConfig, rng: &mut G) -> Result<Transcript> {
    cfg.validate()?;
    let mut v = Visible::new(cfg.n);
    let mut h = Hidden::new(cfg.n);
    let mut out = Vec::with_capacity(cfg.t as usize);
    for _ in 0..cfg.t {
        // uniform over unseen cells
        let mut r = rng.random_range(0..v.remaining());
        let (mut i, mut j) = (0, 0);
        'scan: for a in 1..=cfg.n {
            for b in 1..=cfg.n {
                if !v.is_seen(a, b) {
                    if r == 0 {
                        (i, j) = (a, b);
                        break 'scan;
                    }
                    r -= 1;
                }
            }
        }
        let label = match h.labels[i as usize] {
            Some(l) => l,
            None if bernoulli(p_dense(cfg, &h)?, rng) => Label::Dense,
            None => Label::Sparse,
        };
        let b = bernoulli(bit_one(cfg, &v, i, label)?, rng);
        h.set(i, label);
        let s = Step { i, j, b };
        v.push(s);
        out.push(s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_configs_validate() {
        assert!(ProcessConfig::pair(12, 2).is_ok());
        assert!(ProcessConfig::new(Q::new(1, 2), Q::from_integer(0), Q::new(1, 2), 4, 1).is_err());
        assert!(ProcessConfig::p0(3, 10).is_err());
    }

    #[test]
    fn first_step_dense_probability_is_gamma() {
        let [p0, p1] = ProcessConfig::pair(12, 1).unwrap();
        let h = Hidden::new(12);
        assert_eq!(p_dense(&p0, &h).unwrap(), Q::new(2, 3));
        assert_eq!(p_dense(&p1, &h).unwrap(), Q::new(1, 3));
    }

    #[test]
    fn dense_rows_of_p1_always_emit_one() {
        let p1 = ProcessConfig::p1(6, 1).unwrap();
        let mut v = Visible::new(6);
        for j in 1..=4 {
            assert_eq!(bit_one(&p1, &v, 2, Label::Dense).unwrap(), Q::from_integer(1));
            v.push(Step { i: 2, j, b: true });
        }
    }

    #[test]
    fn simulation_is_deterministic_and_distinct() {
        let p0 = ProcessConfig::p0(12, 100).unwrap();
        let a = simulate(&p0, &mut rand_chacha_seeded(5)).unwrap();
        assert_eq!(a, simulate(&p0, &mut rand_chacha_seeded(5)).unwrap());
        let mut cells: Vec<(u32, u32)> = a.iter().map(|s| (s.i, s.j)).collect();
        cells.sort_unstable();
        cells.dedup();
        assert_eq!(cells.len(), 100);
        assert!(simulate(&ProcessConfig::p0(6, 0).unwrap(), &mut rand_chacha_seeded(1)).unwrap().is_empty());
    }

    fn rand_chacha_seeded(seed: u64) -> impl Rng {
        graphcore::rng::seeded(seed)
    }
}
