//! Entries of the arc matrices `X_j^{R,S}` in units of `q`, kept as exact
//! Laurent polynomials in the square roots of the weights.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::LGParams;

/// A weight symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Weight {
    /// Stage I.1 weight `w` (triangle variant).
    W,
    /// `w_0` of stage I.s.
    W0(usize),
    /// `w_1` of stage I.s.
    W1(usize),
    W2,
}

impl Weight {
    pub fn value(&self, p: &LGParams) -> f64 {
        match *self {
            Weight::W => p.w,
            Weight::W0(s) => p.w0[s - 2],
            Weight::W1(s) => p.w1[s - 2],
            Weight::W2 => p.w2,
        }
    }
}

/// Product of weights with half-integer exponents, stored doubled.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Weight, i32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    /// `w^{half/2}`.
    pub fn sqrt_pow(w: Weight, half: i32) -> Self {
        let mut m = Monomial::one();
        if half != 0 {
            m.0.insert(w, half);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (w, e) in &other.0 {
            let v = out.entry(*w).or_insert(0);
            *v += e;
            if *v == 0 {
                out.remove(w);
            }
        }
        Monomial(out)
    }

    pub fn eval(&self, p: &LGParams) -> f64 {
        self.0.iter().map(|(w, e)| w.value(p).powf(*e as f64 / 2.0)).product()
    }
}

/// Finite sum of rational multiples of monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Monomial, Ratio<i64>>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), Ratio::from_integer(c));
        p
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, Ratio::from_integer(c));
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Ratio<i64>) {
        let v = self.0.entry(m.clone()).or_insert_with(|| Ratio::from_integer(0));
        *v += c;
        if *v == Ratio::from_integer(0) {
            self.0.remove(&m);
        }
    }

    pub fn add(&mut self, other: &Poly) {
        for (m, c) in &other.0 {
            self.add_term(m.clone(), *c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The value when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Ratio<i64>> {
        match self.0.len() {
            0 => Some(Ratio::from_integer(0)),
            1 => self.0.get(&Monomial::one()).copied(),
            _ => None,
        }
    }

    pub fn eval(&self, p: &LGParams) -> f64 {
        self.0.iter().map(|(m, c)| (*c.numer() as f64 / *c.denom() as f64) * m.eval(p)).sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (w, e) in &m.0 {
                write!(f, "·{w:?}^({e}/2)")?;
            }
        }
        Ok(())
    }
}

/// Arc stage, which selects the vector definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArcKind {
    /// Stage I.1.
    StageOne,
    /// Stage I.s, `s ≥ 2`.
    StageLevel(usize),
    /// Stage II.s with its sign on NO inputs.
    StageTwo { s: usize, sign: i64 },
}

/// How an input relates to an arc `A_j^{R,S}` and an assignment `α_R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Role {
    /// `f(z)`.
    pub positive: bool,
    /// `z` satisfies `α_R`.
    pub satisfies: bool,
    /// `A_j^{R,S} ∈ Act(z)`; ignored for NO inputs.
    pub active: bool,
    /// `α_S^z(j) ≠ *`.
    pub uncovered: bool,
}

/// Entries `(ψ[z], φ[z])` of the rank-one factors of `Y_{α_R}`; `None` is 0.
pub fn vectors(p: &LGParams, kind: ArcKind, z: Role) -> [Option<(Monomial, i64)>; 2] {
    if !z.satisfies || (z.positive && !z.active) {
        return [None, None];
    }
    match kind {
        ArcKind::StageOne => {
            let w = match p.variant {
                crate::Variant::Triangle => {
                    let half = if z.positive { -1 } else { 1 };
                    Monomial::sqrt_pow(Weight::W, half)
                }
                crate::Variant::General => Monomial::one(),
            };
            [Some((w, 1)), None]
        }
        ArcKind::StageLevel(s) => {
            let (w0, w1) = (Weight::W0(s), Weight::W1(s));
            if z.positive {
                if z.uncovered {
                    [Some((Monomial::sqrt_pow(w1, -1), 1)), None]
                } else {
                    [None, Some((Monomial::sqrt_pow(w0, -1), 1))]
                }
            } else {
                let phi = z.uncovered.then(|| (Monomial::sqrt_pow(w0, 1), 1));
                [Some((Monomial::sqrt_pow(w1, 1), 1)), phi]
            }
        }
        ArcKind::StageTwo { sign, .. } => {
            if z.positive {
                [Some((Monomial::sqrt_pow(Weight::W2, -1), 1)), None]
            } else {
                [Some((Monomial::sqrt_pow(Weight::W2, 1), sign)), None]
            }
        }
    }
}

/// `X_j^{R,S}[a, b] / q = Σ_v v[a]·v[b]` over the two vectors.
pub fn entry_from_vectors(p: &LGParams, kind: ArcKind, a: Role, b: Role) -> Poly {
    let va = vectors(p, kind, a);
    let vb = vectors(p, kind, b);
    let mut out = Poly::zero();
    for (x, y) in va.iter().zip(&vb) {
        if let (Some((mx, sx)), Some((my, sy))) = (x, y) {
            out.add(&Poly::term(mx.mul(my), sx * sy));
        }
    }
    out
}

/// Row or column of a block table: a YES or NO input with its uncover status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Yes { uncovered: bool },
    No { uncovered: bool },
}

/// The block-table entry `X_j^{R,S}[a, b] / q` for two inputs that agree on
/// `R`, with the arc active for the YES inputs.
pub fn block_form(p: &LGParams, kind: ArcKind, a: Status, b: Status) -> Poly {
    use Status::*;
    let one = Poly::constant(1);
    let pw = |w: Weight, half: i32| Poly::term(Monomial::sqrt_pow(w, half), 1);
    match kind {
        ArcKind::StageOne => match (p.variant, a, b) {
            (crate::Variant::General, _, _) => one,
            (_, Yes { .. }, Yes { .. }) => pw(Weight::W, -2),
            (_, No { .. }, No { .. }) => pw(Weight::W, 2),
            _ => one,
        },
        ArcKind::StageLevel(s) => {
            let (w0, w1) = (Weight::W0(s), Weight::W1(s));
            match (a, b) {
                (Yes { uncovered: u }, Yes { uncovered: v }) => match (u, v) {
                    (true, true) => pw(w1, -2),
                    (false, false) => pw(w0, -2),
                    _ => Poly::zero(),
                },
                (Yes { uncovered: u }, No { uncovered: v }) | (No { uncovered: v }, Yes { uncovered: u }) => {
                    if u || v {
                        one
                    } else {
                        Poly::zero()
                    }
                }
                (No { uncovered: u }, No { uncovered: v }) => {
                    let mut e = pw(w1, 2);
                    if u && v {
                        e.add(&pw(w0, 2));
                    }
                    e
                }
            }
        }
        ArcKind::StageTwo { sign, .. } => match (a, b) {
            (Yes { .. }, Yes { .. }) => pw(Weight::W2, -2),
            (No { .. }, No { .. }) => pw(Weight::W2, 2),
            _ => Poly::constant(sign),
        },
    }
}
