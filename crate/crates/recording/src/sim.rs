//! The simulator: oracle application and runs in the standard, recording and
//! filtered modes.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::oracle::{apply_phase, apply_site, flatten, s_matrix};
use crate::{AlgorithmSpec, Dims, Mask, Projector, RecordingState, Result, SimConfig, SimError, Which, XStats};

/// Run mode for [`Simulator::run`].
#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    /// `U_t O ⋯ O U_0 |0⟩|D⟩`.
    Standard,
    /// `U_t R ⋯ R U_0 |0⟩|⊥^m⟩`.
    Recording,
    /// Recording with `(I − Π_j)` inserted after `U_j` for `j = 1..t-1`;
    /// the schedule lists `Π_1, .., Π_{t-1}`.
    Filtered(Vec<Projector>),
}

/// Owns a configuration together with the precomputed `S_i`, `S_i†`, roots of
/// unity and per-input graph statistics.
#[derive(Debug)]
pub struct Simulator {
    cfg: SimConfig,
    dims: Dims,
    s: Vec<Vec<Complex64>>,
    s_adj: Vec<Vec<Complex64>>,
    omega: Vec<Complex64>,
    table: OnceLock<Vec<XStats>>,
}

impl Simulator {
    pub fn new(cfg: SimConfig) -> Result<Self> {
        cfg.validate()?;
        let dims = cfg.dims();
        let mats: Vec<_> = cfg.dists.iter().map(|d| s_matrix(d, cfg.corrupt_s)).collect();
        let s = mats.iter().map(flatten).collect();
        let s_adj = mats.iter().map(|m| flatten(&m.adjoint())).collect();
        let big_n = dims.big_n;
        let omega = (0..big_n).map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / big_n as f64)).collect();
        Ok(Simulator { cfg, dims, s, s_adj, omega, table: OnceLock::new() })
    }

    pub fn config(&self) -> &SimConfig {
        &self.cfg
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// `ω_N^k`.
    pub fn omega(&self, k: usize) -> Complex64 {
        self.omega[k % self.dims.big_n]
    }

    /// Graph statistics indexed by input label.
    pub fn table(&self) -> &[XStats] {
        self.table
            .get_or_init(|| crate::graph::build_table(self.cfg.n, &self.dims).expect("symbols decode to valid edges"))
    }

    pub fn mask(&self, p: &Projector) -> Result<Mask> {
        p.mask(self)
    }

    /// `|0,0,0⟩|⊥^m⟩`.
    pub fn initial_recording(&self) -> RecordingState {
        RecordingState::basis(self.dims, 0, 0)
    }

    /// `|0,0,0⟩|D⟩` with `|D⟩ = ⊗_i Σ_y √p_{i,y} |y⟩`.
    pub fn initial_standard(&self) -> RecordingState {
        let d = self.dims;
        let mut st = RecordingState::zeros(d);
        let amps = st.amps_mut();
        for x in 0..d.x_len {
            let digits = d.digits(x);
            if digits.contains(&0) {
                continue;
            }
            let p: f64 = digits.iter().enumerate().map(|(i, &y)| self.cfg.dists[i][y - 1]).product();
            amps[x] = Complex64::new(p.sqrt(), 0.0);
        }
        st
    }

    /// Applies one of `O`, `S_D`, `S_D†`, `T`, `T†`, `R`.
    pub fn apply_oracle(&self, state: &RecordingState, which: Which) -> Result<RecordingState> {
        let mut out = state.clone();
        self.apply_oracle_in_place(&mut out, which)?;
        Ok(out)
    }

    pub fn apply_oracle_in_place(&self, state: &mut RecordingState, which: Which) -> Result<()> {
        state.check_dims(self.dims)?;
        let d = self.dims;
        let xl = d.x_len;
        let amps = state.amps_mut();
        for a in 0..d.a_len() {
            let (i, u, _) = d.split_a(a);
            let block = &mut amps[a * xl..(a + 1) * xl];
            match which {
                Which::Standard => apply_phase(&d, block, i, u, &self.omega),
                Which::BasisChange => apply_site(&d, block, i, &self.s[i]),
                Which::BasisChangeAdjoint => apply_site(&d, block, i, &self.s_adj[i]),
                Which::FullRotation => (0..d.m).for_each(|j| apply_site(&d, block, j, &self.s[j])),
                Which::FullRotationAdjoint => (0..d.m).for_each(|j| apply_site(&d, block, j, &self.s_adj[j])),
                Which::Recording => {
                    if u != 0 {
                        apply_site(&d, block, i, &self.s[i]);
                        apply_phase(&d, block, i, u, &self.omega);
                        apply_site(&d, block, i, &self.s_adj[i]);
                    }
                }
            }
        }
        Ok(())
    }

    /// `T'` on a single input-register vector of length `X`.
    pub(crate) fn rotate_input(&self, v: &mut [Complex64], adjoint: bool) {
        for j in 0..self.dims.m {
            let mat = if adjoint { &self.s_adj[j] } else { &self.s[j] };
            apply_site(&self.dims, v, j, mat);
        }
    }

    fn check_alg(&self, alg: &AlgorithmSpec, t: usize) -> Result<()> {
        if alg.dims() != self.dims {
            return Err(SimError::Dimension { expected: self.dims.a_len(), got: alg.dims().a_len() });
        }
        if t > alg.horizon() {
            return Err(SimError::Horizon { t, horizon: alg.horizon() });
        }
        Ok(())
    }

    /// State after `t` queries in the given mode.
    pub fn run(&self, alg: &AlgorithmSpec, mode: &Mode, t: usize) -> Result<RecordingState> {
        match mode {
            Mode::Standard => Ok(self.standard_trajectory(alg, t)?.pop().expect("non-empty")),
            Mode::Recording => Ok(self.trajectory(alg, t, |_| Ok(None))?.pop().expect("non-empty")),
            Mode::Filtered(schedule) => {
                let expected = t.saturating_sub(1);
                if schedule.len() != expected {
                    return Err(SimError::Schedule { expected, got: schedule.len() });
                }
                let masks = schedule.iter().map(|p| p.mask(self)).collect::<Result<Vec<_>>>()?;
                Ok(self.trajectory(alg, t, |j| Ok(Some(masks[j - 1].clone())))?.pop().expect("non-empty"))
            }
        }
    }

    /// `ψ_0, .., ψ_t` in the standard model.
    pub fn standard_trajectory(&self, alg: &AlgorithmSpec, t: usize) -> Result<Vec<RecordingState>> {
        self.check_alg(alg, t)?;
        let mut st = self.initial_standard();
        alg.apply(0, st.amps_mut());
        let mut out = vec![st.clone()];
        for s in 1..=t {
            self.apply_oracle_in_place(&mut st, Which::Standard)?;
            alg.apply(s, st.amps_mut());
            out.push(st.clone());
        }
        Ok(out)
    }

    /// Recording-model states `φ_0, .., φ_t` where `φ_{j+1} = U_{j+1} R (I − Π_j) φ_j`
    /// and `filter(j)` supplies `Π_j` for `j ≥ 1` (`None` skips the filter).
    pub fn trajectory<F>(&self, alg: &AlgorithmSpec, t: usize, mut filter: F) -> Result<Vec<RecordingState>>
    where
        F: FnMut(usize) -> Result<Option<Mask>>,
    {
        self.check_alg(alg, t)?;
        let mut st = self.initial_recording();
        alg.apply(0, st.amps_mut());
        let mut out = vec![st.clone()];
        for s in 1..=t {
            if s >= 2 {
                if let Some(mask) = filter(s - 1)? {
                    st = st.exclude(&mask);
                }
            }
            self.apply_oracle_in_place(&mut st, Which::Recording)?;
            alg.apply(s, st.amps_mut());
            out.push(st.clone());
        }
        Ok(out)
    }

    /// `‖φ_t − T ψ_t‖` for one algorithm.
    pub fn verify_t_identity(&self, alg: &AlgorithmSpec, t: usize) -> Result<f64> {
        let phi = self.run(alg, &Mode::Recording, t)?;
        let mut psi = self.run(alg, &Mode::Standard, t)?;
        self.apply_oracle_in_place(&mut psi, Which::FullRotation)?;
        phi.distance(&psi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Generator;

    fn sim(n: u32, m: usize, k: usize) -> Simulator {
        Simulator::new(SimConfig::uniform(n, m, k, 3).unwrap()).unwrap()
    }

    #[test]
    fn t_maps_d_to_bot() {
        let s = sim(3, 2, 1);
        let st = s.apply_oracle(&s.initial_standard(), Which::FullRotation).unwrap();
        assert!(st.distance(&s.initial_recording()).unwrap() < 1e-14);
    }

    #[test]
    fn oracles_preserve_norm() {
        let s = sim(3, 2, 2);
        let alg = AlgorithmSpec::random(s.dims(), 3, 5);
        let st = s.run(&alg, &Mode::Recording, 2).unwrap();
        for w in [Which::Standard, Which::BasisChange, Which::BasisChangeAdjoint, Which::FullRotation, Which::Recording]
        {
            let out = s.apply_oracle(&st, w).unwrap();
            assert!((out.norm() - 1.0).abs() < 1e-12, "{w:?}");
        }
    }

    #[test]
    fn recording_is_s_dagger_o_s() {
        let s = sim(3, 2, 1);
        let alg = AlgorithmSpec::random(s.dims(), 3, 9);
        let st = s.run(&alg, &Mode::Recording, 1).unwrap();
        let mut manual = s.apply_oracle(&st, Which::BasisChange).unwrap();
        s.apply_oracle_in_place(&mut manual, Which::Standard).unwrap();
        s.apply_oracle_in_place(&mut manual, Which::BasisChangeAdjoint).unwrap();
        let direct = s.apply_oracle(&st, Which::Recording).unwrap();
        assert!(manual.distance(&direct).unwrap() < 1e-13);
    }

    #[test]
    fn zero_step_run_is_u0_on_bot() {
        let s = sim(3, 2, 1);
        let alg = AlgorithmSpec::random(s.dims(), 2, 3);
        let st = s.run(&alg, &Mode::Recording, 0).unwrap();
        let d = s.dims();
        for a in 0..d.a_len() {
            assert!((st.amp(a, 0) - alg.unitary(0)[(a, 0)]).norm() < 1e-15);
        }
        assert!(s.verify_t_identity(&alg, 0).unwrap() < 1e-14);
    }

    #[test]
    fn empty_filter_equals_recording() {
        let s = sim(3, 2, 1);
        let alg = AlgorithmSpec::random(s.dims(), 3, 4);
        let a = s.run(&alg, &Mode::Recording, 1).unwrap();
        let b = s.run(&alg, &Mode::Filtered(vec![]), 1).unwrap();
        assert_eq!(a, b);
        let zeros = vec![Projector::Zero; 2];
        let c = s.run(&alg, &Mode::Filtered(zeros), 3).unwrap();
        assert_eq!(c, s.run(&alg, &Mode::Recording, 3).unwrap());
        assert!(matches!(s.run(&alg, &Mode::Filtered(vec![]), 3), Err(SimError::Schedule { .. })));
        assert!(matches!(s.run(&alg, &Mode::Recording, 4), Err(SimError::Horizon { .. })));
    }

    #[test]
    fn targeted_algorithm_records_each_position() {
        let s = sim(3, 2, 1);
        let alg = AlgorithmSpec::generate(s.dims(), 2, Generator::Targeted);
        let st = s.run(&alg, &Mode::Recording, 2).unwrap();
        let d = s.dims();
        let both: f64 = (0..d.a_len())
            .flat_map(|a| (0..d.x_len).map(move |x| (a, x)))
            .filter(|&(_, x)| d.digits(x).iter().all(|&y| y != 0))
            .map(|(a, x)| st.amp(a, x).norm_sqr())
            .sum();
        assert!(both > 0.1);
    }
}
