//! Set labels of a learning-graph vertex and the stage II loading rules.

use std::collections::HashMap;

use crate::{LGParams, Variant};

/// One set label. For the general variant this is `R_level(prefix, set)`;
/// the triangle variant uses `R_1(set)` and `R_2(γ)` with `prefix = [γ]`, `set = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub level: usize,
    /// `d_1, .., d_{level-1}` in `1..=2d`.
    pub prefix: Vec<u8>,
    /// Bitmask of `D ⊆ [2d]`, bit `γ-1` for `γ`.
    pub set: u32,
}

/// `μ(D)`, the least element of a nonempty subset mask.
pub fn mu(set: u32) -> u8 {
    debug_assert!(set != 0);
    set.trailing_zeros() as u8 + 1
}

/// All labels of a construction with their dependency sets.
#[derive(Debug, Clone)]
pub struct Layout {
    variant: Variant,
    d: usize,
    labels: Vec<Label>,
    ids: HashMap<Label, usize>,
    /// `deps[l]`: labels whose loaded indices form `N(R, d_1, .., d_{i-1})` for label `l`.
    deps: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

impl Layout {
    pub fn new(p: &LGParams) -> Self {
        let two_d = 2 * p.d;
        let full: u32 = (1u32 << two_d) - 1;
        let mut labels = Vec::new();
        match p.variant {
            Variant::Triangle => {
                labels.extend((1..=full).map(|set| Label { level: 1, prefix: vec![], set }));
                labels.extend((1..=two_d as u8).map(|g| Label { level: 2, prefix: vec![g], set: 0 }));
            }
            Variant::General => {
                let mut prefixes: Vec<Vec<u8>> = vec![vec![]];
                for level in 1..=p.k {
                    for pre in &prefixes {
                        labels.extend((1..=full).map(|set| Label { level, prefix: pre.clone(), set }));
                    }
                    prefixes = prefixes
                        .iter()
                        .flat_map(|pre| {
                            (1..=two_d as u8).map(move |g| {
                                let mut v = pre.clone();
                                v.push(g);
                                v
                            })
                        })
                        .collect();
                }
            }
        }
        let ids: HashMap<Label, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let deps = labels
            .iter()
            .map(|l| {
                if l.level == 1 {
                    return vec![];
                }
                let (head, last) = l.prefix.split_at(l.level - 2);
                let bit = 1u32 << (last[0] - 1);
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, o)| o.level == l.level - 1 && o.prefix == head && o.set & bit != 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let sizes = labels.iter().map(|l| p.r[l.level - 1]).collect();
        Layout { variant: p.variant, d: p.d, labels, ids, deps, sizes }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> &Label {
        &self.labels[id]
    }

    pub fn id(&self, label: &Label) -> Option<usize> {
        self.ids.get(label).copied()
    }

    pub fn deps(&self, id: usize) -> &[usize] {
        &self.deps[id]
    }

    /// Set size of label `id` in every `R^{(1)}`.
    pub fn size(&self, id: usize) -> usize {
        self.sizes[id]
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Nonempty subsets of `[2d]` as masks.
    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        1..(1u32 << (2 * self.d))
    }

    /// Branch choices available at stage II.s given earlier choices: every
    /// nonempty subset, except in the triangle variant after stage II.1,
    /// where the stage II.1 choice `Γ` is carried along.
    pub fn branches(&self, s: usize, prev: &[u32]) -> Vec<u32> {
        match (self.variant, s) {
            (Variant::Triangle, 1) | (Variant::General, _) => self.subsets().collect(),
            (Variant::Triangle, _) => vec![prev[0]],
        }
    }

    /// Label receiving `a_s` at stage II.s, where `choices` has length `s`.
    pub fn target(&self, s: usize, choices: &[u32]) -> usize {
        let label = match (self.variant, s) {
            (Variant::Triangle, 1) => Label { level: 1, prefix: vec![], set: choices[0] },
            (Variant::Triangle, _) => Label { level: 2, prefix: vec![mu(choices[0])], set: 0 },
            (Variant::General, _) => {
                Label { level: s, prefix: choices[..s - 1].iter().map(|&c| mu(c)).collect(), set: choices[s - 1] }
            }
        };
        self.ids[&label]
    }

    /// Sign of the stage II.s vector entries on NO inputs: `(-1)^{1+|Γ|}` for
    /// the triangle variant, `(-1)^{s+Σ|D_i|}` in general.
    pub fn sign(&self, s: usize, choices: &[u32]) -> i64 {
        let e = match self.variant {
            Variant::Triangle => 1 + choices[0].count_ones() as usize,
            Variant::General => s + choices.iter().map(|c| c.count_ones() as usize).sum::<usize>(),
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_layout() {
        let p = LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap();
        let l = Layout::new(&p);
        assert_eq!(l.len(), 15 + 4);
        let g1 = l.id(&Label { level: 2, prefix: vec![1], set: 0 }).unwrap();
        // Γ ∋ 1: 8 of the 15 nonempty subsets of [4]
        assert_eq!(l.deps(g1).len(), 8);
        assert_eq!(l.target(2, &[0b0110, 0b0110]), l.id(&Label { level: 2, prefix: vec![2], set: 0 }).unwrap());
        assert_eq!(l.sign(1, &[0b1]), 1);
        assert_eq!(l.sign(1, &[0b11]), -1);
    }

    #[test]
    fn general_layout() {
        let p = LGParams::with_sizes(Variant::General, 3, 1, 40, 60, vec![1, 1, 1]).unwrap();
        let l = Layout::new(&p);
        assert_eq!(l.len(), 3 + 6 + 12);
        let lab = Label { level: 3, prefix: vec![2, 1], set: 0b11 };
        let id = l.id(&lab).unwrap();
        // level-2 sets with prefix [2] and D ∋ 1
        let deps: Vec<&Label> = l.deps(id).iter().map(|&i| l.label(i)).collect();
        assert_eq!(deps.len(), 2);
        assert!(deps.iter().all(|d| d.level == 2 && d.prefix == vec![2] && d.set & 1 == 1));
        assert_eq!(l.sign(2, &[0b1, 0b11]), -1);
        assert_eq!(mu(0b100), 3);
    }
}
