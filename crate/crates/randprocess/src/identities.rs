//! The mixed bit distributions of both processes against `Bin(t, 1/2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::process::{bit_one, Label, ProcessConfig, Visible, Q};
use crate::{ProcessError, Result};

/// Largest `t` accepted by [`check_binomial_identities`].
pub const MAX_T: u32 = 12;

/// Atom probabilities over `x² ∈ {0,1}^t`, indexed by the bit mask.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: u32,
    pub t: u32,
    pub p0: Vec<String>,
    pub p1: Vec<String>,
    /// Every atom of `Bin(t, 1/2)` as a bit string: `2^{-t}`.
    pub binomial_atom: String,
    pub pass: bool,
}

fn big(q: Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// `Σ_u Pr[W = u] Π_k Pr[b_k | label u_k]` on distinct fresh rows, where
/// `W` is i.i.d. dense with probability `γ(P_0) = 2/3`; `P_1` uses the
/// flipped labels `ū`.
fn mixed(cfg: &ProcessConfig, flip: bool, w_dense: &BigRational, t: u32) -> Result<Vec<BigRational>> {
    let fresh = Visible::new(cfg.n);
    let bias = |l: Label| -> Result<BigRational> { Ok(big(bit_one(cfg, &fresh, 1, l)?)) };
    let (dense, sparse) = (bias(Label::Dense)?, bias(Label::Sparse)?);
    let one = BigRational::one();
    let mut atoms = vec![BigRational::zero(); 1 << t];
    for u in 0u32..(1 << t) {
        let pw: BigRational = (0..t).map(|k| if u >> k & 1 == 1 { w_dense.clone() } else { &one - w_dense }).product();
        for (x, atom) in atoms.iter_mut().enumerate() {
            let mut p = pw.clone();
            for k in 0..t {
                let is_dense = (u >> k & 1 == 1) != flip;
                let q1 = if is_dense { &dense } else { &sparse };
                p *= if x >> k & 1 == 1 { q1.clone() } else { &one - q1 };
            }
            *atom += p;
        }
    }
    Ok(atoms)
}

/// Checks exactly that both mixed distributions equal `Bin(t, 1/2)` atom by atom.
pub fn check_binomial_identities(n: u32, t: u32) -> Result<IdentityReport> {
    if t > MAX_T {
        return Err(ProcessError::Config(format!("t = {t} exceeds {MAX_T}")));
    }
    let [c0, c1] = ProcessConfig::pair(n, t.max(1).min(n * n))?;
    let w = big(c0.gamma);
    let p0 = mixed(&c0, false, &w, t)?;
    let p1 = mixed(&c1, true, &w, t)?;
    let atom = BigRational::new(BigInt::one(), BigInt::from(2u32).pow(t));
    let pass = p0.iter().chain(&p1).all(|p| *p == atom);
    Ok(IdentityReport {
        n,
        t,
        p0: p0.iter().map(ToString::to_string).collect(),
        p1: p1.iter().map(ToString::to_string).collect(),
        binomial_atom: atom.to_string(),
        pass,
    })
}
