//! Diagonal projectors given by predicates over basis labels `|i,u,w⟩|x⟩`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Dims, Result, SimError, Simulator, XStats};

/// Half-open count range `[lo, hi)`; `hi = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRange {
    pub lo: i64,
    pub hi: Option<i64>,
}

impl CountRange {
    /// `[lo, ∞)`.
    pub fn at_least(lo: i64) -> Self {
        CountRange { lo, hi: None }
    }

    /// `[lo, hi)`.
    pub fn between(lo: i64, hi: i64) -> Self {
        CountRange { lo, hi: Some(hi) }
    }

    pub fn contains(&self, v: u64) -> bool {
        let v = v as i64;
        v >= self.lo && self.hi.is_none_or(|h| v < h)
    }
}

/// Predicate defining a diagonal projector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Projector {
    Zero,
    Identity,
    /// `G(x)` contains a `k`-cycle (`Π^△` for `k = 3`).
    Cycle(usize),
    /// Number of length-`l` paths in `G(x)` lies in the range (`Π^⋀_R` for `l = 2`).
    Paths {
        l: usize,
        range: CountRange,
    },
    /// Edge count in the range, or some vertex of degree `≥ delta`.
    EdgesOrDegree {
        range: CountRange,
        delta: u32,
    },
    /// Degree `≥ at_least` at `vertex`, or at some vertex when `None`.
    Degree {
        at_least: u32,
        vertex: Option<u32>,
    },
    /// `Π_y`: `u ≠ 0` and `x_i = y`, with `None` for `y = ⊥`.
    Query(Option<usize>),
    /// At least `at_least` positions `j` with `x_j ∈ sigma1[j]` (`sigma1[j][y-1]`).
    Hamming {
        sigma1: Vec<Vec<bool>>,
        at_least: usize,
    },
    /// Membership of each basis label drawn independently with probability `density`.
    Random {
        seed: u64,
        density: f64,
    },
    Not(Box<Projector>),
    And(Vec<Projector>),
    Or(Vec<Projector>),
}

/// Diagonal of a projector over the full joint index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask(Vec<bool>);

impl Mask {
    /// Lifts a predicate on input labels to the joint index.
    pub(crate) fn from_input(dims: Dims, xmask: &[bool]) -> Mask {
        let mut bits = Vec::with_capacity(dims.total());
        for _ in 0..dims.a_len() {
            bits.extend_from_slice(xmask);
        }
        Mask(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Mask {
        Mask(self.0.iter().map(|b| !b).collect())
    }

    pub fn and(&self, other: &Mask) -> Mask {
        Mask(self.0.iter().zip(&other.0).map(|(a, b)| *a && *b).collect())
    }

    pub fn or(&self, other: &Mask) -> Mask {
        Mask(self.0.iter().zip(&other.0).map(|(a, b)| *a || *b).collect())
    }
}

impl Projector {
    pub fn not(p: Projector) -> Projector {
        Projector::Not(Box::new(p))
    }

    /// Whether the predicate reads only the input register.
    fn input_only(&self) -> bool {
        match self {
            Projector::Query(_) | Projector::Random { .. } => false,
            Projector::Not(p) => p.input_only(),
            Projector::And(ps) | Projector::Or(ps) => ps.iter().all(Projector::input_only),
            _ => true,
        }
    }

    fn holds_on_x(&self, stats: &XStats, digits: &[usize]) -> bool {
        match self {
            Projector::Zero => false,
            Projector::Identity => true,
            Projector::Cycle(k) => stats.has_cycle(*k),
            Projector::Paths { l, range } => range.contains(stats.path_count(*l)),
            Projector::EdgesOrDegree { range, delta } => range.contains(stats.edges) || stats.max_degree() >= *delta,
            Projector::Degree { at_least, vertex } => match vertex {
                Some(v) => stats.degrees.get(*v as usize - 1).copied().unwrap_or(0) >= *at_least,
                None => stats.max_degree() >= *at_least,
            },
            Projector::Hamming { sigma1, at_least } => {
                let w = digits.iter().enumerate().filter(|(j, &d)| d != 0 && sigma1[*j][d - 1]).count();
                w >= *at_least
            }
            Projector::Not(p) => !p.holds_on_x(stats, digits),
            Projector::And(ps) => ps.iter().all(|p| p.holds_on_x(stats, digits)),
            Projector::Or(ps) => ps.iter().any(|p| p.holds_on_x(stats, digits)),
            Projector::Query(_) | Projector::Random { .. } => unreachable!("not an input predicate"),
        }
    }

    fn validate(&self, sim: &Simulator) -> Result<()> {
        let d = sim.dims();
        match self {
            Projector::Paths { l, .. } if *l == 0 || *l > d.m => {
                Err(SimError::Param(format!("path length {l} outside [1, {}]", d.m)))
            }
            Projector::Cycle(k) if *k < 3 => Err(SimError::Param(format!("cycle length {k} < 3"))),
            Projector::Degree { vertex: Some(v), .. } if *v == 0 || *v > sim.config().n => {
                Err(SimError::Param(format!("vertex {v} outside [1, {}]", sim.config().n)))
            }
            Projector::Query(Some(y)) if *y == 0 || *y > d.big_n => {
                Err(SimError::Param(format!("symbol {y} outside [1, {}]", d.big_n)))
            }
            Projector::Hamming { sigma1, .. } if sigma1.len() != d.m || sigma1.iter().any(|s| s.len() != d.big_n) => {
                Err(SimError::Param("partition shape does not match (m, N)".into()))
            }
            Projector::Random { density, .. } if !(0.0..=1.0).contains(density) => {
                Err(SimError::Param(format!("density {density} outside [0, 1]")))
            }
            Projector::Not(p) => p.validate(sim),
            Projector::And(ps) | Projector::Or(ps) => ps.iter().try_for_each(|p| p.validate(sim)),
            _ => Ok(()),
        }
    }

    /// Diagonal of the projector over the joint index of `sim`.
    pub fn mask(&self, sim: &Simulator) -> Result<Mask> {
        self.validate(sim)?;
        let d = sim.dims();
        if self.input_only() {
            let table = sim.table();
            let xmask: Vec<bool> = (0..d.x_len).map(|x| self.holds_on_x(&table[x], &d.digits(x))).collect();
            return Ok(Mask::from_input(d, &xmask));
        }
        match self {
            Projector::Query(y) => {
                let mut bits = vec![false; d.total()];
                for a in 0..d.a_len() {
                    let (i, u, _) = d.split_a(a);
                    if u == 0 {
                        continue;
                    }
                    for x in 0..d.x_len {
                        let xi = d.digit(x, i);
                        bits[a * d.x_len + x] = match y {
                            None => xi == 0,
                            Some(s) => xi == *s,
                        };
                    }
                }
                Ok(Mask(bits))
            }
            Projector::Random { seed, density } => {
                let mut rng = graphcore::rng::seeded(*seed);
                Ok(Mask((0..d.total()).map(|_| rng.random_bool(*density)).collect()))
            }
            Projector::Not(p) => Ok(p.mask(sim)?.complement()),
            Projector::And(ps) => {
                let mut acc = Projector::Identity.mask(sim)?;
                for p in ps {
                    acc = acc.and(&p.mask(sim)?);
                }
                Ok(acc)
            }
            Projector::Or(ps) => {
                let mut acc = Projector::Zero.mask(sim)?;
                for p in ps {
                    acc = acc.or(&p.mask(sim)?);
                }
                Ok(acc)
            }
            _ => unreachable!("input-only predicates handled above"),
        }
    }
}
