//! The per-`R^{(1)}` feasibility sum `Σ_{A ∈ Act(x,R^{(1)}), x_j ≠ y_j} X_j^{R,S}[x,y] / q`.

use graphcore::{max_degree, EdgeList};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{
    assignment_of, choose_certificate, entry_from_vectors, is_consistent, is_positive, sample_triple, ArcKind, Edit,
    LGParams, Layout, LgError, Poly, Result, Role, Triple, Variant, Vertex,
};

/// Outcome of one feasibility evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    /// Exact value `(numerator, denominator)` when the sum is weight-free.
    pub exact: Option<(i64, i64)>,
    /// Symbolic sum, for display.
    pub symbolic: String,
    /// The same sum with each entry evaluated in floating point at the parameter weights.
    pub float_value: f64,
    /// `x` and `y` agree on `R^{(1)}`.
    pub agree_on_r1: bool,
    /// First certificate position (1-based) where `x` and `y` differ.
    pub first_cert_diff: Option<usize>,
    /// Loaded deeper-level indices `j` with `y_j` incident to `y_{a_s}`, `s` before the first difference.
    pub faulty: usize,
    /// `x, y` agree on `R^{(1)}`, differ first past `a_1`, and some loaded index is faulty.
    pub fault_path: bool,
    pub active_arcs: usize,
    /// Active arcs with `x_j ≠ y_j`.
    pub counted_arcs: usize,
}

impl FeasibilityReport {
    /// Whether the sum is exactly 1.
    pub fn is_one(&self) -> bool {
        self.exact == Some((1, 1))
    }
}

struct Walk<'a> {
    p: &'a LGParams,
    layout: &'a Layout,
    x: &'a EdgeList,
    y: &'a EdgeList,
    cert: &'a [usize],
    sum: Poly,
    float_sum: f64,
    active: usize,
    counted: usize,
}

impl Walk<'_> {
    fn add(&mut self, kind: ArcKind, j: usize, x_role: Role, y_role: Role) {
        self.active += 1;
        if self.x.edge(j) == self.y.edge(j) {
            return;
        }
        self.counted += 1;
        let e = entry_from_vectors(self.p, kind, x_role, y_role);
        self.float_sum += e.eval(self.p);
        self.sum.add(&e);
    }

    /// Stage II.s arcs out of `vertex`, then recursion into their heads.
    fn stage_two(&mut self, s: usize, choices: &mut Vec<u32>, vertex: &mut Vertex) -> Result<()> {
        let agree = assignment_of(self.layout, vertex, self.x) == assignment_of(self.layout, vertex, self.y);
        let j = self.cert[s - 1];
        for c in self.layout.branches(s, choices) {
            choices.push(c);
            let sign = self.layout.sign(s, choices);
            let xr = Role { positive: true, satisfies: true, active: true, uncovered: true };
            let yr = Role { positive: false, satisfies: agree, active: false, uncovered: true };
            self.add(ArcKind::StageTwo { s, sign }, j, xr, yr);
            if s < self.p.cert_stages() {
                let label = self.layout.target(s, choices);
                vertex.load(label, j)?;
                self.stage_two(s + 1, choices, vertex)?;
                vertex.unload(label);
            }
            choices.pop();
        }
        Ok(())
    }
}

fn check_preconditions(p: &LGParams, layout: &Layout, t: &Triple) -> Result<()> {
    let bad = |m: &str| Err(LgError::Precondition(m.to_string()));
    if t.x.m() != p.m || t.y.m() != p.m {
        return bad("input length differs from m");
    }
    if max_degree(&t.x) > p.d || max_degree(&t.y) > p.d {
        return bad("input outside the degree-bounded domain");
    }
    if !is_positive(&t.x, p.k)? {
        return bad("x is not a YES instance");
    }
    if is_positive(&t.y, p.k)? {
        return bad("y is not a NO instance");
    }
    if t.cert != choose_certificate(&t.x, p.variant, p.k)? {
        return bad("certificate is not the chosen C(x)");
    }
    if !t.r1.has_stage_one_sizes(layout) {
        return bad("R^(1) has the wrong set sizes");
    }
    if !is_consistent(&t.x, &t.cert, &t.r1) {
        return bad("R^(1) is not consistent with x");
    }
    let mut sorted = t.order.clone();
    sorted.sort_unstable();
    let mut loaded: Vec<usize> = t.r1.loaded().collect();
    loaded.sort_unstable();
    if sorted != loaded {
        return bad("loading order is not a permutation of the loaded indices");
    }
    let levels: Vec<usize> = t.order.iter().map(|&j| layout.label(t.r1.label_of(j).unwrap()).level).collect();
    if levels.windows(2).any(|w| w[0] > w[1]) {
        return bad("loading order is not level-ascending");
    }
    Ok(())
}

/// Evaluates the feasibility sum over `Act(x, R^{(1)})`, normalized by `q`.
pub fn feasibility_sum(p: &LGParams, t: &Triple) -> Result<FeasibilityReport> {
    p.validate()?;
    let layout = Layout::new(p);
    check_preconditions(p, &layout, t)?;
    let mut walk = Walk {
        p,
        layout: &layout,
        x: &t.x,
        y: &t.y,
        cert: &t.cert,
        sum: Poly::zero(),
        float_sum: 0.0,
        active: 0,
        counted: 0,
    };

    // stage I along the path ∅ = T_0 → .. → T_r = R^{(1)}
    let mut v = Vertex::empty(&layout);
    let mut ax = assignment_of(&layout, &v, &t.x);
    let mut ay = assignment_of(&layout, &v, &t.y);
    for &j in &t.order {
        let label = t.r1.label_of(j).expect("checked");
        let agree = ax == ay;
        v.load(label, j)?;
        let (sx, sy) = (assignment_of(&layout, &v, &t.x), assignment_of(&layout, &v, &t.y));
        let level = layout.label(label).level;
        let kind = if level == 1 { ArcKind::StageOne } else { ArcKind::StageLevel(level) };
        let xr = Role { positive: true, satisfies: true, active: true, uncovered: sx.uncovers(j) };
        let yr = Role { positive: false, satisfies: agree, active: false, uncovered: sy.uncovers(j) };
        walk.add(kind, j, xr, yr);
        ax = sx;
        ay = sy;
    }
    let agree_on_r1 = ax == ay;

    // stage II
    walk.stage_two(1, &mut Vec::new(), &mut v)?;

    let first_cert_diff = t.cert.iter().position(|&a| t.x.edge(a) != t.y.edge(a)).map(|i| i + 1);
    let faulty = count_faulty(p, &layout, t, first_cert_diff.unwrap_or(0));
    let exact = walk.sum.as_constant().map(|c: Ratio<i64>| (*c.numer(), *c.denom()));
    Ok(FeasibilityReport {
        exact,
        symbolic: walk.sum.to_string(),
        float_value: walk.float_sum,
        agree_on_r1,
        first_cert_diff,
        faulty,
        fault_path: agree_on_r1 && first_cert_diff.is_some_and(|l| l >= 2) && faulty > 0,
        active_arcs: walk.active,
        counted_arcs: walk.counted,
    })
}

/// Faulty indices: `j` loaded at level `s + 1` with `y_j` incident to
/// `y_{a_s}` for `s < l`; the triangle variant only has `s = 1`.
fn count_faulty(p: &LGParams, layout: &Layout, t: &Triple, l: usize) -> usize {
    let stages: Vec<usize> = match p.variant {
        Variant::Triangle => (l >= 2).then_some(1).into_iter().collect(),
        Variant::General => (1..l.min(p.levels())).collect(),
    };
    stages
        .into_iter()
        .map(|s| {
            let ya = t.y.edge(t.cert[s - 1]);
            (0..layout.len())
                .filter(|&lb| layout.label(lb).level == s + 1)
                .flat_map(|lb| t.r1.set(lb))
                .filter(|&&j| t.y.edge(j).incident(&ya))
                .count()
        })
        .sum()
}

/// Number of active arcs in `Act(x, R^{(1)})`: `r + 3(2^{2d}-1)` for the
/// triangle variant, `r + Σ_{i=1}^k (2^{2d}-1)^i` in general.
pub fn active_arc_count(p: &LGParams) -> usize {
    let b = p.subsets();
    p.total_loaded()
        + match p.variant {
            Variant::Triangle => 3 * b,
            Variant::General => (1..=p.k).map(|i| b.pow(i as u32)).sum(),
        }
}

/// Aggregate of a batch of feasibility evaluations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityAudit {
    pub trials: usize,
    /// Triples whose sum is exactly 1.
    pub exact_ones: usize,
    pub fault_paths: usize,
    /// Largest `|float value - 1|`.
    pub max_float_error: f64,
    /// First failing report, if any.
    pub first_failure: Option<FeasibilityReport>,
}

impl FeasibilityAudit {
    pub fn all_exact(&self) -> bool {
        self.exact_ones == self.trials
    }
}

/// Evaluates `trials` sampled triples in parallel; trial `i` draws from
/// `task_rng(seed, i)` and uses `edits[i % edits.len()]`.
pub fn audit_feasibility(p: &LGParams, edits: &[Edit], trials: usize, seed: u64) -> Result<FeasibilityAudit> {
    if edits.is_empty() {
        return Err(LgError::Param("no edit strategies given".into()));
    }
    let reports: Vec<FeasibilityReport> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = graphcore::rng::task_rng(seed, i as u64);
            let t = sample_triple(p, edits[i % edits.len()], &mut rng)?;
            feasibility_sum(p, &t)
        })
        .collect::<Result<_>>()?;
    Ok(FeasibilityAudit {
        trials,
        exact_ones: reports.iter().filter(|r| r.is_one()).count(),
        fault_paths: reports.iter().filter(|r| r.fault_path).count(),
        max_float_error: reports.iter().map(|r| (r.float_value - 1.0).abs()).fold(0.0, f64::max),
        first_failure: reports.into_iter().find(|r| !r.is_one()),
    })
}
