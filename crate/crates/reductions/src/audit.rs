//! Exhaustive soundness and completeness checks over each reduction's
//! randomness at the smallest nontrivial sizes.

use graphcore::{colex_decode, find_k_cycle, num_pairs, Edge, EdgeList};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use transforms::{hide_eval, ElementDistinctness, HiddenString};

use crate::{
    ed_to_dense_triangle_with, hide3dist_to_trivertex_with, hide_ed_to_triedge_with, k_collision, kdist_to_kcycle_with,
    partition_kcycle_to_or_kdist, three_sum, tri_edge, tri_vertex, triangle_to_3sum_with, triedge_to_hide_ed,
    ReductionError, ReductionName, Result,
};

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCheck {
    pub reduction: ReductionName,
    /// `soundness`, `completeness` or `equivalence`.
    pub property: String,
    /// Input instances examined.
    pub instances: usize,
    /// Successful runs over all random choices (completeness only).
    pub hits: usize,
    /// Runs over all random choices.
    pub runs: usize,
    /// Runs or instances contradicting the property.
    pub violations: usize,
    /// Required `hits / runs` for completeness checks, as `(num, den)`.
    pub expected: Option<(usize, usize)>,
    pub pass: bool,
}

fn labels(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m).map(move |_| 0..k).multi_cartesian_product()
}

fn strings(m: usize, alphabet: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..m).map(move |_| 0..alphabet).multi_cartesian_product()
}

fn hidden_strings(m: usize, s: u32) -> impl Iterator<Item = HiddenString> {
    (0..m)
        .map(move |_| (0..=s).map(|z| (z > 0).then_some(z)).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(HiddenString::from_symbols)
}

fn bits(m: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..m).map(|_| [false, true]).multi_cartesian_product()
}

fn all_pairs(n: u32) -> Vec<Edge> {
    (0..num_pairs(n)).map(colex_decode).collect()
}

#[derive(Default)]
struct Tally {
    instances: usize,
    hits: usize,
    runs: usize,
    violations: usize,
}

impl Tally {
    fn soundness(self, reduction: ReductionName) -> ReductionCheck {
        ReductionCheck {
            reduction,
            property: "soundness".into(),
            instances: self.instances,
            hits: self.hits,
            runs: self.runs,
            violations: self.violations,
            expected: None,
            pass: self.violations == 0 && self.runs > 0,
        }
    }

    fn completeness(self, reduction: ReductionName, num: usize, den: usize) -> ReductionCheck {
        ReductionCheck {
            reduction,
            property: "completeness".into(),
            instances: self.instances,
            hits: self.hits,
            runs: self.runs,
            violations: self.violations,
            expected: Some((num, den)),
            pass: self.violations == 0 && self.runs > 0,
        }
    }
}

/// No `k`-collision maps to no `k`-cycle, `k ∈ {3, 4}`, `m ≤ 4`, alphabet 3.
fn kdist_sound() -> Result<ReductionCheck> {
    let mut t = Tally::default();
    for k in 3..=4usize {
        for m in 1..=4usize {
            for x in strings(m, 3).filter(|x| k_collision(x, k).is_none()) {
                t.instances += 1;
                for p in labels(m, k) {
                    t.runs += 1;
                    t.violations += usize::from(find_k_cycle(&kdist_to_kcycle_with(&x, k, &p)?, k)?.is_some());
                }
            }
        }
    }
    Ok(t.soundness(ReductionName::KDistToKCycle))
}

/// A single 3-collision at `m = 3` becomes a triangle for exactly 2/9 of the labelings.
fn kdist_complete() -> Result<ReductionCheck> {
    let mut t = Tally { instances: 1, ..Tally::default() };
    for p in labels(3, 3) {
        t.runs += 1;
        t.hits += usize::from(find_k_cycle(&kdist_to_kcycle_with(&[2, 2, 2], 3, &p)?, 3)?.is_some());
    }
    t.violations = usize::from(9 * t.hits != 2 * t.runs);
    Ok(t.completeness(ReductionName::KDistToKCycle, 2, 9))
}

/// Triangle-free lists on `n = 4`, `m = 3`, every permutation and sign pattern.
fn three_sum_sound() -> Result<ReductionCheck> {
    let signs: Vec<Vec<(i8, i8)>> =
        (0..3).map(|_| [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)]).multi_cartesian_product().collect();
    let pairs = all_pairs(4);
    let mut t = Tally::default();
    for e in (0..3).map(|_| pairs.iter().copied()).multi_cartesian_product() {
        let x = EdgeList::from_edges(4, e)?;
        if find_k_cycle(&x, 3)?.is_some() {
            continue;
        }
        t.instances += 1;
        for perm in (0..3).permutations(3) {
            for s in &signs {
                t.runs += 1;
                t.violations += usize::from(three_sum(&triangle_to_3sum_with(&x, &perm, s)?).is_some());
            }
        }
    }
    Ok(t.soundness(ReductionName::TriangleTo3Sum))
}

/// Duplicate-free lists on `n = 4`, `m ≤ 3`, every target pair without a triangle.
fn triedge_sound() -> Result<ReductionCheck> {
    let pairs = all_pairs(4);
    let mut t = Tally::default();
    for m in 0..=3usize {
        for e in pairs.iter().copied().permutations(m) {
            let x = EdgeList::from_edges(4, e)?;
            for target in pairs.iter().filter(|p| !tri_edge(&x, p.lo(), p.hi())) {
                t.instances += 1;
                t.runs += 1;
                let y = triedge_to_hide_ed(&x, target.lo(), target.hi())?.output;
                let ed = ElementDistinctness { arity: y.base_length() };
                t.violations += usize::from(hide_eval(&ed, &y).map_err(|e| ReductionError::BadRecord(e.to_string()))?);
            }
        }
    }
    Ok(t.soundness(ReductionName::TriEdgeToHideEd))
}

/// Collision-free hidden strings, `m ≤ 4`, `s = m`, every side choice.
fn hide_ed_sound() -> Result<ReductionCheck> {
    let mut t = Tally::default();
    for m in 1..=4usize {
        let s = m as u32;
        for y in hidden_strings(m, s).filter(|y| k_collision(&y.subsequence(), 2).is_none()) {
            t.instances += 1;
            for c in bits(m) {
                t.runs += 1;
                t.violations += usize::from(tri_edge(&hide_ed_to_triedge_with(&y, s, &c)?, s + 1, s + 2));
            }
        }
    }
    Ok(t.soundness(ReductionName::HideEdToTriEdge))
}

fn trivertex_runs(y: &HiddenString) -> Result<(usize, usize)> {
    let mut hits = 0;
    let mut runs = 0;
    for p in labels(y.len(), 3) {
        let out = hide3dist_to_trivertex_with(y, &p)?;
        runs += 1;
        hits += usize::from(tri_vertex(&out.graph, out.target));
    }
    Ok((hits, runs))
}

/// No 3-collision, `m ≤ 4`, alphabet 2, every labeling.
fn trivertex_sound() -> Result<ReductionCheck> {
    let mut t = Tally::default();
    for m in 1..=4usize {
        for y in hidden_strings(m, 2).filter(|y| k_collision(&y.subsequence(), 3).is_none()) {
            t.instances += 1;
            let (hits, runs) = trivertex_runs(&y)?;
            t.runs += runs;
            t.violations += hits;
        }
    }
    Ok(t.soundness(ReductionName::Hide3DistToTriVertex))
}

/// Every hidden string at `m = 3` with a 3-collision hits for exactly 2/9 of the labelings.
fn trivertex_complete() -> Result<ReductionCheck> {
    let mut t = Tally::default();
    for y in hidden_strings(3, 2).filter(|y| k_collision(&y.subsequence(), 3).is_some()) {
        t.instances += 1;
        let (hits, runs) = trivertex_runs(&y)?;
        t.violations += usize::from(9 * hits != 2 * runs);
        t.hits += hits;
        t.runs += runs;
    }
    Ok(t.completeness(ReductionName::Hide3DistToTriVertex, 2, 9))
}

/// `b = 3`, two parts on `[6]`, all duplicate-free intra-part lists with
/// `m ≤ 4`: the family has a collision iff the graph has a triangle.
fn partition_equivalence() -> Result<ReductionCheck> {
    let parts = vec![vec![1, 2, 3], vec![4, 5, 6]];
    let intra: Vec<Edge> =
        [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)].iter().map(|&(a, b)| Edge::new(a, b)).collect();
    let mut t = Tally::default();
    for m in 0..=4usize {
        for e in intra.iter().copied().permutations(m) {
            let x = EdgeList::from_edges(6, e)?;
            let fam = partition_kcycle_to_or_kdist(&x, &parts, 3)?;
            let cycle = find_k_cycle(&x, 3)?.is_some();
            t.instances += 1;
            t.runs += 1;
            t.hits += usize::from(cycle);
            t.violations += usize::from(fam.any_collision() != cycle);
        }
    }
    let mut c = t.soundness(ReductionName::PartitionKCycleToOrKDist);
    c.property = "equivalence".into();
    Ok(c)
}

/// Distinct pair strings at `n = 2` map to triangle-free graphs for every side choice.
fn dense_sound() -> Result<ReductionCheck> {
    let cells = [(1u32, 1u32), (1, 2), (2, 1), (2, 2)];
    let mut t = Tally::default();
    for x in cells.iter().copied().permutations(4) {
        t.instances += 1;
        for s in bits(4) {
            t.runs += 1;
            t.violations += usize::from(find_k_cycle(&ed_to_dense_triangle_with(&x, 2, &s)?, 3)?.is_some());
        }
    }
    Ok(t.soundness(ReductionName::EdToDenseTriangle))
}

/// Soundness of all seven reductions, the two 2/9 completeness fractions
/// and the partition equivalence.
pub fn exhaustive_checks() -> Result<Vec<ReductionCheck>> {
    Ok(vec![
        kdist_sound()?,
        three_sum_sound()?,
        triedge_sound()?,
        hide_ed_sound()?,
        trivertex_sound()?,
        partition_equivalence()?,
        dense_sound()?,
        kdist_complete()?,
        trivertex_complete()?,
    ])
}
