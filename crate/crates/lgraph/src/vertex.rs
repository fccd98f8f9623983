//! Learning-graph vertices (arrays of disjoint index sets) and assignments.

use graphcore::{Edge, EdgeList};
use serde::{Deserialize, Serialize};

use crate::{Layout, LgError, Result};

/// A vertex: one index set per label, pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    sets: Vec<Vec<usize>>,
}

impl Vertex {
    /// The source vertex with every set empty.
    pub fn empty(layout: &Layout) -> Self {
        Vertex { sets: vec![Vec::new(); layout.len()] }
    }

    pub fn from_sets(layout: &Layout, sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != layout.len() {
            return Err(LgError::Shape(format!("{} sets for {} labels", sets.len(), layout.len())));
        }
        let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != total {
            return Err(LgError::Shape("vertex sets are not pairwise disjoint".into()));
        }
        Ok(Vertex { sets })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, label: usize) -> &[usize] {
        &self.sets[label]
    }

    /// `∪R`.
    pub fn loaded(&self) -> impl Iterator<Item = usize> + '_ {
        self.sets.iter().flatten().copied()
    }

    pub fn loaded_count(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.sets.iter().any(|s| s.contains(&j))
    }

    /// Label holding `j`, if loaded.
    pub fn label_of(&self, j: usize) -> Option<usize> {
        self.sets.iter().position(|s| s.contains(&j))
    }

    /// Loads `j` into `label`; errors if `j` is already loaded.
    pub fn load(&mut self, label: usize, j: usize) -> Result<()> {
        if self.contains(j) {
            return Err(LgError::Shape(format!("index {j} loaded twice")));
        }
        self.sets[label].push(j);
        Ok(())
    }

    /// Removes the most recent index loaded into `label`.
    pub fn unload(&mut self, label: usize) -> Option<usize> {
        self.sets[label].pop()
    }

    /// Whether `self` has exactly the `R^{(1)}` set sizes.
    pub fn has_stage_one_sizes(&self, layout: &Layout) -> bool {
        self.sets.iter().enumerate().all(|(l, s)| s.len() == layout.size(l))
    }
}

/// Value of an assignment at one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Entry {
    Unloaded,
    Star,
    Edge(Edge),
}

/// `α_R^z` as a map from `[m]` to entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment(Vec<Entry>);

impl Assignment {
    pub fn get(&self, j: usize) -> Entry {
        self.0[j]
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    /// Whether `α(j) ≠ *` for a loaded `j`.
    pub fn uncovers(&self, j: usize) -> bool {
        matches!(self.0[j], Entry::Edge(_))
    }
}

/// The unique assignment on `r` that `z` satisfies: level-1 indices reveal
/// `z_t`; an index in a deeper set reveals `z_t` iff `z_t` is incident to a
/// revealed edge in its dependency sets; otherwise `*`.
pub fn assignment_of(layout: &Layout, r: &Vertex, z: &EdgeList) -> Assignment {
    let mut a = vec![Entry::Unloaded; z.m()];
    // labels are ordered by level, so dependencies are filled first
    for l in 0..layout.len() {
        let deps = layout.deps(l);
        for &t in r.set(l) {
            let e = z.edge(t);
            let shown = layout.label(l).level == 1
                || deps.iter().any(|&dl| r.set(dl).iter().any(|&k| matches!(a[k], Entry::Edge(f) if e.incident(&f))));
            a[t] = if shown { Entry::Edge(e) } else { Entry::Star };
        }
    }
    Assignment(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{LGParams, Label, Variant};

    fn tri_layout() -> Layout {
        Layout::new(&LGParams::with_sizes(Variant::Triangle, 3, 1, 12, 20, vec![1, 1]).unwrap())
    }

    #[test]
    fn empty_vertex_gives_empty_assignment() {
        let l = tri_layout();
        let z = EdgeList::new(6, &[(1, 2), (3, 4)]).unwrap();
        let a = assignment_of(&l, &Vertex::empty(&l), &z);
        assert!(a.entries().iter().all(|e| *e == Entry::Unloaded));
    }

    #[test]
    fn level_two_reveals_only_incident_edges() {
        let l = tri_layout();
        let z = EdgeList::new(8, &[(1, 2), (2, 3), (5, 6), (7, 8)]).unwrap();
        let mut v = Vertex::empty(&l);
        let g1 = l.id(&Label { level: 1, prefix: vec![], set: 0b01 }).unwrap();
        let g2 = l.id(&Label { level: 1, prefix: vec![], set: 0b10 }).unwrap();
        let c1 = l.id(&Label { level: 2, prefix: vec![1], set: 0 }).unwrap();
        let c2 = l.id(&Label { level: 2, prefix: vec![2], set: 0 }).unwrap();
        v.load(g1, 0).unwrap();
        v.load(g2, 2).unwrap();
        v.load(c1, 1).unwrap();
        v.load(c2, 3).unwrap();
        let a = assignment_of(&l, &v, &z);
        assert_eq!(a.get(0), Entry::Edge(Edge::new(1, 2)));
        // {2,3} touches {1,2} in R_1({1}), which feeds γ = 1
        assert_eq!(a.get(1), Entry::Edge(Edge::new(2, 3)));
        // {7,8} touches nothing in R_1({2})
        assert_eq!(a.get(3), Entry::Star);
        assert!(v.load(c1, 0).is_err());
        // evaluation is deterministic
        assert_eq!(a, assignment_of(&l, &v, &z));
    }
}
