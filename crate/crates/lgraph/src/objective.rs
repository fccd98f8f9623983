//! Closed-form complexity accounting and the vertex/arc structure per stage.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::{LGParams, Layout, LgError, Result, Variant};

/// Contribution of one stage on negative and positive inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageCost {
    pub stage: String,
    pub negative: f64,
    pub positive: f64,
}

/// Per-stage costs and the total `max(Σ negative, Σ positive)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Objective {
    pub stages: Vec<StageCost>,
    pub negative: f64,
    pub positive: f64,
    pub total: f64,
}

/// Evaluates the stage formulas with constant factors dropped. The sizes
/// are not required to fit into `[m]`, so asymptotic defaults are accepted.
pub fn objective_eval(p: &LGParams) -> Result<Objective> {
    p.validate_shape()?;
    let m = p.m as f64;
    let d = p.d as f64;
    let two_d = 2.0 * d;
    let four_d = 2f64.powf(2.0 * d);
    let r: Vec<f64> = p.r.iter().map(|&v| v as f64).collect();
    let mut stages = Vec::new();
    match p.variant {
        Variant::Triangle => {
            stages.push(StageCost {
                stage: "I.1".into(),
                negative: four_d * r[0] * p.w,
                positive: four_d * r[0] / p.w,
            });
            let wedge = r[0] * r[1] * d * d * four_d / m;
            let (w0, w1) = (p.w0[0], p.w1[0]);
            stages.push(StageCost {
                stage: "I.2".into(),
                negative: wedge * w0 + r[1] * d * w1,
                positive: wedge / w1 + r[1] * d / w0,
            });
            stages.push(StageCost {
                stage: "II".into(),
                negative: four_d * m.powi(3) * p.w2 / (r[0] * r[1]),
                positive: 3.0 * (four_d - 1.0) / p.w2,
            });
        }
        Variant::General => {
            stages.push(StageCost { stage: "I.1".into(), negative: four_d * r[0], positive: four_d * r[0] });
            for s in 2..=p.k {
                let sf = s as f64;
                let prod: f64 = r[..s].iter().product();
                let chain = prod * two_d.powf((sf * sf + sf - 2.0) / 2.0) * 2f64.powf(2.0 * d * sf) / m.powf(sf - 1.0);
                let direct = r[s - 1] * two_d.powf(sf - 1.0) * four_d;
                let (w0, w1) = (p.w0[s - 2], p.w1[s - 2]);
                stages.push(StageCost {
                    stage: format!("I.{s}"),
                    negative: chain * w0 + direct * w1,
                    positive: chain / w1 + direct / w0,
                });
            }
            let k = p.k as f64;
            let prod: f64 = r[..p.k - 1].iter().product();
            let active: f64 = (1..=p.k).map(|i| (four_d - 1.0).powi(i as i32)).sum();
            stages.push(StageCost {
                stage: "II".into(),
                negative: 2f64.powf(2.0 * d * k) * m.powf(k) * p.w2 / prod,
                positive: active / p.w2,
            });
        }
    }
    let negative = stages.iter().map(|s| s.negative).sum::<f64>();
    let positive = stages.iter().map(|s| s.positive).sum::<f64>();
    Ok(Objective { stages, negative, positive, total: negative.max(positive) })
}

/// The leading-order complexity the defaults are tuned to:
/// `2^{(12/7)d}d^{3/7}m^{5/7}` for the triangle variant and
/// `(2d)^{(k²+k-6)/4}2^{2dk}m^{3/4-1/(2^{k+2}-4)}` in general.
pub fn scaling_target(variant: Variant, k: usize, d: usize, m: usize) -> f64 {
    let (m, d) = (m as f64, d as f64);
    match variant {
        Variant::Triangle => 2f64.powf(12.0 * d / 7.0) * d.powf(3.0 / 7.0) * m.powf(5.0 / 7.0),
        Variant::General => {
            let k = k as f64;
            (2.0 * d).powf((k * k + k - 6.0) / 4.0)
                * 2f64.powf(2.0 * d * k)
                * m.powf(0.75 - 1.0 / (2f64.powf(k + 2.0) - 4.0))
        }
    }
}

/// Vertex and arc counts of one stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    /// Arcs in the stage.
    pub arcs: BigUint,
    /// Vertices at the heads of the stage's arcs (`V^{(1)}` for stage I).
    pub vertices: BigUint,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// `|V^{(1)}| = m! / ((m - r)! Π_labels r_label!)`.
pub fn v1_size(p: &LGParams) -> BigUint {
    let layout = Layout::new(p);
    let r = p.total_loaded();
    let denom = (0..layout.len()).fold(factorial(p.m - r), |acc, l| acc * factorial(layout.size(l)));
    factorial(p.m) / denom
}

/// Counts per stage from the closed forms.
pub fn stage_structure(p: &LGParams) -> Result<Vec<StageCount>> {
    p.validate()?;
    let v1 = v1_size(p);
    let big = |v: usize| BigUint::from(v);
    let b = p.subsets();
    let r = p.total_loaded();
    let mut out = Vec::new();
    match p.variant {
        Variant::Triangle => {
            out.push(StageCount { stage: "I.1".into(), arcs: big(p.r[0] * b) * &v1, vertices: v1.clone() });
            out.push(StageCount { stage: "I.2".into(), arcs: big(2 * p.d * p.r[1]) * &v1, vertices: v1.clone() });
            let arcs1 = big((p.m - r) * b) * &v1;
            let v2 = &arcs1 / big(p.r[0] + 1);
            let arcs2 = big(p.m - r - 1) * &v2;
            let v3 = &arcs2 / big(p.r[1] + 1);
            let arcs3 = big(p.m - r - 2) * &v3;
            let v4 = &arcs3 / big(p.r[1] + 2);
            out.push(StageCount { stage: "II.1".into(), arcs: arcs1, vertices: v2 });
            out.push(StageCount { stage: "II.2".into(), arcs: arcs2, vertices: v3 });
            out.push(StageCount { stage: "II.3".into(), arcs: arcs3, vertices: v4 });
        }
        Variant::General => {
            for s in 1..=p.k {
                let arcs = big(p.r[s - 1] * p.sets_at_level(s)) * &v1;
                out.push(StageCount { stage: format!("I.{s}"), arcs, vertices: v1.clone() });
            }
            let mut vs = v1;
            for s in 1..=p.k {
                let arcs = big((p.m - r - s + 1) * b) * &vs;
                vs = &arcs / big(p.r[s - 1] + 1);
                out.push(StageCount { stage: format!("II.{s}"), arcs, vertices: vs.clone() });
            }
        }
    }
    Ok(out)
}

/// Largest `|V^{(1)}|` accepted by [`enumerate_structure`].
pub const ENUMERATION_CAP: u64 = 100_000;

/// Counts per stage by building every vertex and arc explicitly.
pub fn enumerate_structure(p: &LGParams) -> Result<Vec<StageCount>> {
    p.validate()?;
    if v1_size(p) > BigUint::from(ENUMERATION_CAP) {
        return Err(LgError::TooLarge(format!("|V^(1)| exceeds {ENUMERATION_CAP}")));
    }
    let layout = Layout::new(p);
    let mut v1 = Vec::new();
    fill(&layout, 0, &mut vec![false; p.m], &mut vec![Vec::new(); layout.len()], &mut v1);
    let v1_count = BigUint::from(v1.len());
    let mut out = Vec::new();
    // every stage I arc lies on the path to exactly one V^(1) vertex
    let mut per_level = vec![0usize; p.levels()];
    for v in &v1 {
        for l in 0..layout.len() {
            per_level[layout.label(l).level - 1] += v[l].len();
        }
    }
    for (i, c) in per_level.iter().enumerate() {
        out.push(StageCount { stage: format!("I.{}", i + 1), arcs: BigUint::from(*c), vertices: v1_count.clone() });
    }
    // vertices of V^(s) are tagged with their branch choices
    let mut frontier: Vec<(Vec<u32>, Vec<Vec<usize>>)> = v1.into_iter().map(|v| (Vec::new(), v)).collect();
    for s in 1..=p.cert_stages() {
        let mut arcs = 0usize;
        let mut next: HashSet<(Vec<u32>, Vec<Vec<usize>>)> = HashSet::new();
        for (choices, sets) in &frontier {
            let loaded: HashSet<usize> = sets.iter().flatten().copied().collect();
            for c in layout.branches(s, choices) {
                let mut ch = choices.clone();
                ch.push(c);
                let label = layout.target(s, &ch);
                for j in (0..p.m).filter(|j| !loaded.contains(j)) {
                    arcs += 1;
                    let mut head = sets.clone();
                    let pos = head[label].binary_search(&j).unwrap_err();
                    head[label].insert(pos, j);
                    next.insert((ch.clone(), head));
                }
            }
        }
        out.push(StageCount {
            stage: format!("II.{s}"),
            arcs: BigUint::from(arcs),
            vertices: BigUint::from(next.len()),
        });
        frontier = next.into_iter().collect();
    }
    Ok(out)
}

/// All ways to fill labels `l..` with disjoint sorted sets of the layout sizes.
fn fill(layout: &Layout, l: usize, used: &mut [bool], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if l == layout.len() {
        out.push(cur.clone());
        return;
    }
    choose(layout, l, 0, used, cur, out);
}

fn choose(
    layout: &Layout,
    l: usize,
    from: usize,
    used: &mut [bool],
    cur: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if cur[l].len() == layout.size(l) {
        fill(layout, l + 1, used, cur, out);
        return;
    }
    for j in from..used.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        cur[l].push(j);
        choose(layout, l, j + 1, used, cur, out);
        cur[l].pop();
        used[j] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_triangle_counts_match_enumeration() {
        let p = LGParams::with_sizes(Variant::Triangle, 3, 1, 8, 10, vec![1, 1]).unwrap();
        assert_eq!(v1_size(&p), BigUint::from(6720u32));
        assert_eq!(stage_structure(&p).unwrap(), enumerate_structure(&p).unwrap());
    }

    #[test]
    fn empty_last_level_has_no_stage_arcs() {
        let p = LGParams::with_sizes(Variant::General, 3, 1, 8, 10, vec![1, 0, 0]).unwrap();
        let s = stage_structure(&p).unwrap();
        assert_eq!(s[2].arcs, BigUint::from(0u32));
    }

    #[test]
    fn defaults_balance_first_stage() {
        let p = crate::default_params(Variant::Triangle, 3, 3, 1 << 20);
        let o = objective_eval(&p).unwrap();
        let ratio = o.stages[0].negative / scaling_target(Variant::Triangle, 3, 3, 1 << 20);
        assert!((ratio - 1.0).abs() < 1e-2, "{ratio}");
    }
}
