//! Numeric checks of the framework lemmas: query-effect table, leakage,
//! exclusion, mirroring, guessing, Chernoff and degree exclusion.

use std::f64::consts::E;

use graphcore::{colex_decode, find_k_cycle, EdgeList};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::{ceil_log2, s_matrix, AlgorithmSpec, Mode, Projector, RecordingState, Result, SimError, Simulator, Which};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Leakage operator `L = Π₀ S† Π₁ S Π₀` on one index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LeakageReport {
    /// `p = Pr[y ∈ Σ₁]`.
    pub p: f64,
    /// Operator norm of `L`.
    pub norm: f64,
    /// `p(1 − p)`.
    pub expected: f64,
    /// Largest deviation of `⟨k|L|l⟩` from `p√(p_k p_l)` over `k, l ∈ Σ₀`.
    pub block_deviation: f64,
}

/// Builds `L` for the distribution `dist` over `[N]` and the partition given
/// by `sigma1[y-1]`, and compares it with the closed form.
pub fn leakage_norm(dist: &[f64], sigma1: &[bool]) -> Result<LeakageReport> {
    if sigma1.len() != dist.len() {
        return Err(SimError::Param("partition length differs from N".into()));
    }
    let b = dist.len() + 1;
    let s = s_matrix(dist, false);
    let proj =
        |one: bool| {
            DMatrix::from_fn(b, b, |r, c| {
                if r == c && r > 0 && sigma1[r - 1] == one {
                    Complex64::new(1.0, 0.0)
                } else {
                    ZERO
                }
            })
        };
    let (p0, p1) = (proj(false), proj(true));
    let l = &p0 * s.adjoint() * &p1 * &s * &p0;
    let norm = l.clone().singular_values().max();
    let p: f64 = dist.iter().zip(sigma1).filter(|(_, &one)| one).map(|(q, _)| q).sum();
    let mut block_deviation = 0.0f64;
    for k in 1..b {
        for j in 1..b {
            if sigma1[k - 1] || sigma1[j - 1] {
                continue;
            }
            let want = p * (dist[k - 1] * dist[j - 1]).sqrt();
            block_deviation = block_deviation.max((l[(k, j)] - want).norm());
        }
    }
    Ok(LeakageReport { p, norm, expected: p * (1.0 - p), block_deviation })
}

/// `(e·p·m / c)^c`.
pub fn chernoff_bound(m: u64, p: f64, c: f64) -> f64 {
    (E * p * m as f64 / c).powf(c)
}

/// `Pr[Bin(m, p) ≥ c]` by direct summation.
pub fn binomial_tail(m: u64, p: f64, c: f64) -> f64 {
    let start = c.max(0.0).ceil() as u64;
    (start..=m)
        .map(|j| {
            let lc = ln_choose(m, j);
            let term = if p == 0.0 {
                if j == 0 {
                    0.0
                } else {
                    f64::NEG_INFINITY
                }
            } else if p == 1.0 {
                if j == m {
                    0.0
                } else {
                    f64::NEG_INFINITY
                }
            } else {
                j as f64 * p.ln() + (m - j) as f64 * (1.0 - p).ln()
            };
            (lc + term).exp()
        })
        .sum()
}

fn ln_choose(m: u64, j: u64) -> f64 {
    (1..=j).map(|i| ((m - j + i) as f64).ln() - (i as f64).ln()).sum()
}

fn choose(m: u64, j: u64) -> f64 {
    if j > m {
        0.0
    } else {
        ln_choose(m, j).exp().round()
    }
}

/// Right-hand side of the degree-exclusion bound on `‖Π^deg_{≥Δ} φ_t‖²`:
/// `2n(2em/(nL))^L + 2n(2em/(nΔ))^Δ (emn/(2L))^L` with `L = ⌈log n⌉`.
pub fn degree_exclusion_bound(n: u32, m: usize, delta: u32) -> f64 {
    let (nf, mf, df) = (n as f64, m as f64, delta as f64);
    let l = ceil_log2(n as u64) as f64;
    2.0 * nf * (2.0 * E * mf / (nf * l)).powf(l)
        + 2.0 * nf * (2.0 * E * mf / (nf * df)).powf(df) * (E * mf * nf / (2.0 * l)).powf(l)
}

/// `min(1, √(54/N))`.
pub fn guessing_bound_triangle(big_n: usize) -> f64 {
    (54.0 / big_n as f64).sqrt().min(1.0)
}

/// `min(1, √(k²(k+3)/(2N)))`.
pub fn guessing_bound_general(k: usize, big_n: usize) -> f64 {
    let kf = k as f64;
    (kf * kf * (kf + 3.0) / (2.0 * big_n as f64)).sqrt().min(1.0)
}

/// Output substring `(a_1..a_k, b_1..b_k)`: positions and claimed symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessOutput {
    pub a: Vec<usize>,
    /// Symbols in `1..=N`.
    pub b: Vec<usize>,
}

/// Input-register vector attached to one output value; `None` is a label
/// without an output substring.
#[derive(Debug, Clone, PartialEq)]
pub struct GuessBlock {
    pub output: Option<GuessOutput>,
    pub amps: Vec<Complex64>,
}

/// Exclusion Lemma quantities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExclusionReport {
    /// `‖α_t − α'_t‖`.
    pub distance: f64,
    /// `Σ_{i=1}^{t-1} ‖Π'_i (I − Π_i) α_i‖`.
    pub sum: f64,
    /// `‖Π_rec α_t‖`.
    pub rec_lhs: f64,
    /// `‖Π_rec α'_t‖ + sum`.
    pub rec_rhs: f64,
}

impl ExclusionReport {
    pub fn slack(&self) -> f64 {
        self.distance - self.sum
    }

    pub fn rec_slack(&self) -> f64 {
        self.rec_lhs - self.rec_rhs
    }
}

/// Mirroring Lemma quantities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MirroringReport {
    /// `‖Π_{≥Γ} φ_t‖²`.
    pub lhs: f64,
    /// `Pr[|x| ≥ γ]`.
    pub tail: f64,
    /// `‖Π_{≥Γ} T P_{<γ}‖²`.
    pub op_norm_sqr: f64,
    /// `C(m,Γ)·C(m,<γ)·p^{Γ−γ}`, present when `Γ ≥ γ`.
    pub binomial_bound: Option<f64>,
}

impl MirroringReport {
    pub fn rhs(&self) -> f64 {
        2.0 * self.tail + 2.0 * self.op_norm_sqr
    }

    pub fn slack(&self) -> f64 {
        self.lhs - self.rhs()
    }

    pub fn moreover_slack(&self) -> Option<f64> {
        self.binomial_bound.map(|b| self.op_norm_sqr - b)
    }
}

impl Simulator {
    /// Largest deviation between `R|i,u,w⟩|x⟩` and the closed-form table over
    /// every basis input; requires uniform `D_i`.
    pub fn query_table_deviation(&self) -> Result<f64> {
        let d = self.dims();
        let big_n = d.big_n;
        let uniform = 1.0 / big_n as f64;
        if self.config().dists.iter().flatten().any(|&p| (p - uniform).abs() > 1e-15) {
            return Err(SimError::Param("the query table assumes uniform D_i".into()));
        }
        let rn = (big_n as f64).sqrt();
        let mut worst = 0.0f64;
        for a in 0..d.a_len() {
            let (i, u, _) = d.split_a(a);
            for x in 0..d.x_len {
                let out = self.apply_oracle(&RecordingState::basis(d, a, x), Which::Recording)?;
                let xi = d.digit(x, i);
                let base_x = x - xi * d.stride(i);
                let mut expect = vec![ZERO; d.base];
                if u == 0 {
                    expect[xi] = Complex64::new(1.0, 0.0);
                } else if xi == 0 {
                    for y in 1..=big_n {
                        expect[y] = self.omega(u * y) / rn;
                    }
                } else {
                    let wx = self.omega(u * xi);
                    expect[0] = wx / rn;
                    for y in 1..=big_n {
                        expect[y] = if y == xi {
                            (1.0 + wx * (big_n as f64 - 2.0)) / big_n as f64
                        } else {
                            (1.0 - self.omega(u * y) - wx) / big_n as f64
                        };
                    }
                }
                for a2 in 0..d.a_len() {
                    for x2 in 0..d.x_len {
                        let want = if a2 == a && x2 - d.digit(x2, i) * d.stride(i) == base_x {
                            expect[d.digit(x2, i)]
                        } else {
                            ZERO
                        };
                        worst = worst.max((out.amp(a2, x2) - want).norm());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Exclusion Lemma at time `t ≥ 1` with schedules `Π_1..Π_{t-1}` and `Π'_1..Π'_{t-1}`.
    pub fn check_exclusion(
        &self,
        alg: &AlgorithmSpec,
        t: usize,
        pis: &[Projector],
        pis_prime: &[Projector],
        rec: &Projector,
    ) -> Result<ExclusionReport> {
        let expected = t.saturating_sub(1);
        for s in [pis, pis_prime] {
            if s.len() != expected {
                return Err(SimError::Schedule { expected, got: s.len() });
            }
        }
        let m = pis.iter().map(|p| p.mask(self)).collect::<Result<Vec<_>>>()?;
        let mp = pis_prime.iter().map(|p| p.mask(self)).collect::<Result<Vec<_>>>()?;
        let alpha = self.trajectory(alg, t, |j| Ok(Some(m[j - 1].clone())))?;
        let alpha_p = self.trajectory(alg, t, |j| Ok(Some(m[j - 1].or(&mp[j - 1]))))?;
        let sum: f64 = (1..t).map(|i| alpha[i].projected_norm(&mp[i - 1].and(&m[i - 1].complement()))).sum();
        let rec_mask = rec.mask(self)?;
        Ok(ExclusionReport {
            distance: alpha[t].distance(&alpha_p[t])?,
            sum,
            rec_lhs: alpha[t].projected_norm(&rec_mask),
            rec_rhs: alpha_p[t].projected_norm(&rec_mask) + sum,
        })
    }

    /// Mirroring Lemma for the partition `sigma1[i][y-1]` at time `t`.
    pub fn check_mirroring(
        &self,
        alg: &AlgorithmSpec,
        t: usize,
        big_gamma: usize,
        gamma: usize,
        sigma1: &[Vec<bool>],
    ) -> Result<MirroringReport> {
        let d = self.dims();
        let hamming = Projector::Hamming { sigma1: sigma1.to_vec(), at_least: big_gamma };
        let mask = hamming.mask(self)?;
        let phi = self.run(alg, &Mode::Recording, t)?;
        let lhs = phi.projected_norm(&mask).powi(2);

        let ps: Vec<f64> = (0..d.m)
            .map(|i| self.config().dists[i].iter().zip(&sigma1[i]).filter(|(_, &o)| o).map(|(q, _)| q).sum())
            .collect();
        // Poisson-binomial distribution of |x|
        let mut dist = vec![1.0];
        for &p in &ps {
            let mut next = vec![0.0; dist.len() + 1];
            for (w, q) in dist.iter().enumerate() {
                next[w] += q * (1.0 - p);
                next[w + 1] += q * p;
            }
            dist = next;
        }
        let tail: f64 = dist.iter().skip(gamma).sum();

        let weight = |x: usize| -> usize {
            d.digits(x).iter().enumerate().filter(|(j, &y)| y != 0 && sigma1[*j][y - 1]).count()
        };
        let full = |x: usize| d.digits(x).iter().all(|&y| y != 0);
        let cols: Vec<usize> = (0..d.x_len).filter(|&x| full(x) && weight(x) < gamma).collect();
        let rows: Vec<usize> = (0..d.x_len).filter(|&x| weight(x) >= big_gamma).collect();
        let op_norm_sqr = if cols.is_empty() || rows.is_empty() {
            0.0
        } else {
            let mut mat = DMatrix::from_element(rows.len(), cols.len(), ZERO);
            for (c, &x) in cols.iter().enumerate() {
                let mut v = vec![ZERO; d.x_len];
                v[x] = Complex64::new(1.0, 0.0);
                self.rotate_input(&mut v, false);
                for (r, &y) in rows.iter().enumerate() {
                    mat[(r, c)] = v[y];
                }
            }
            mat.singular_values().max().powi(2)
        };
        let binomial_bound = (big_gamma >= gamma).then(|| {
            let m = d.m as u64;
            let below: f64 = (0..gamma as u64).map(|j| choose(m, j)).sum();
            let p = ps.iter().copied().fold(0.0, f64::max);
            choose(m, big_gamma as u64) * below * p.powi((big_gamma - gamma) as i32)
        });
        Ok(MirroringReport { lhs, tail, op_norm_sqr, binomial_bound })
    }

    fn success_support(&self, k: usize, out: &GuessOutput) -> Result<Option<Vec<bool>>> {
        let d = self.dims();
        if out.a.len() != k || out.b.len() != k {
            return Err(SimError::Param(format!("output substring must have {k} + {k} entries")));
        }
        if out.a.iter().any(|&a| a >= d.m) || out.b.iter().any(|&b| b == 0 || b > d.big_n) {
            return Err(SimError::Param("output entry out of range".into()));
        }
        let mut sorted = out.a.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return Ok(None);
        }
        let edges = out.b.iter().map(|&b| colex_decode(b as u64 - 1)).collect();
        let g = EdgeList::from_edges(self.config().n, edges)?;
        if find_k_cycle(&g, k)?.is_none() {
            return Ok(None);
        }
        Ok(Some((0..d.x_len).map(|x| out.a.iter().zip(&out.b).all(|(&a, &b)| d.digit(x, a) == b)).collect()))
    }

    /// `A v = Π_succ T' (I − Π^cycle_k) v` for one output value.
    fn guess_apply(&self, k: usize, succ: &[bool], v: &[Complex64]) -> Vec<Complex64> {
        let table = self.table();
        let mut w: Vec<Complex64> =
            v.iter().enumerate().map(|(x, z)| if table[x].has_cycle(k) { ZERO } else { *z }).collect();
        self.rotate_input(&mut w, false);
        w.iter().zip(succ).map(|(z, &s)| if s { *z } else { ZERO }).collect()
    }

    fn guess_apply_adjoint(&self, k: usize, succ: &[bool], v: &[Complex64]) -> Vec<Complex64> {
        let table = self.table();
        let mut w: Vec<Complex64> = v.iter().zip(succ).map(|(z, &s)| if s { *z } else { ZERO }).collect();
        self.rotate_input(&mut w, true);
        w.iter().enumerate().map(|(x, z)| if table[x].has_cycle(k) { ZERO } else { *z }).collect()
    }

    /// `‖Π_succ T (I − Π^cycle_k) |φ⟩‖` for a state given as output-labelled blocks.
    pub fn guessing_value(&self, k: usize, blocks: &[GuessBlock]) -> Result<f64> {
        let d = self.dims();
        if d.big_n < k {
            return Err(SimError::Param(format!("N = {} < k = {k}", d.big_n)));
        }
        let mut total = 0.0;
        for b in blocks {
            if b.amps.len() != d.x_len {
                return Err(SimError::Dimension { expected: d.x_len, got: b.amps.len() });
            }
            let Some(out) = &b.output else { continue };
            let Some(succ) = self.success_support(k, out)? else { continue };
            total += self.guess_apply(k, &succ, &b.amps).iter().map(|z| z.norm_sqr()).sum::<f64>();
        }
        Ok(total.sqrt())
    }

    /// Operator norm of `Π_succ T (I − Π^cycle_k)` for one output value, by
    /// power iteration on `A†A`.
    pub fn guessing_operator_norm(&self, k: usize, out: &GuessOutput, seed: u64) -> Result<f64> {
        let d = self.dims();
        let Some(succ) = self.success_support(k, out)? else { return Ok(0.0) };
        let mut rng = graphcore::rng::seeded(seed);
        let mut v: Vec<Complex64> =
            (0..d.x_len).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
        let mut est = 0.0;
        for _ in 0..500 {
            let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if nv == 0.0 {
                return Ok(0.0);
            }
            v.iter_mut().for_each(|z| *z /= nv);
            let av = self.guess_apply(k, &succ, &v);
            let next = av.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let converged = (next - est).abs() < 1e-14;
            est = next;
            v = self.guess_apply_adjoint(k, &succ, &av);
            if converged {
                break;
            }
        }
        Ok(est)
    }
}
