//! k-distinctness to k-cycle, and k-cycle on a partitioned domain to OR of k-distinctness.

use graphcore::{Edge, EdgeList};
use serde::{Deserialize, Serialize};

use crate::{
    draw_parts, PartitionMode, RandomnessRecord, Reader, ReductionError, ReductionName, ReductionOutcome, Result,
};

fn layer_vertex(z: u32, layer: usize, k: usize) -> u32 {
    z * k as u32 + layer as u32 + 1
}

/// Output edge `j`: `{(x_j, ℓ), (x_j, ℓ+1 mod k)}` where `ℓ` is the part of `j`.
pub fn kdist_symbol(x: &Reader<u32>, j: usize, k: usize, parts: &[usize]) -> Edge {
    let z = x.get(j);
    let l = parts[j];
    Edge::new(layer_vertex(z, l, k), layer_vertex(z, (l + 1) % k, k))
}

/// Replays the reduction with explicit part labels.
pub fn kdist_to_kcycle_with(x: &[u32], k: usize, parts: &[usize]) -> Result<EdgeList> {
    if k < 3 {
        return Err(ReductionError::CycleLength);
    }
    if parts.len() != x.len() || parts.iter().any(|&p| p >= k) {
        return Err(ReductionError::BadRecord("part labels".into()));
    }
    let s = x.iter().max().map_or(1, |&z| z + 1);
    let reader = Reader::new(x);
    let edges = (0..x.len()).map(|j| kdist_symbol(&reader, j, k, parts)).collect();
    Ok(EdgeList::from_edges(s * k as u32, edges)?)
}

/// Maps a string to an edge list whose `k`-cycles come only from `k`-collisions.
///
/// In balanced mode the string is first padded with fresh symbols to a
/// multiple of `k`.
pub fn kdist_to_kcycle(x: &[u32], k: usize, mode: PartitionMode, seed: u64) -> Result<ReductionOutcome<EdgeList>> {
    let mut x = x.to_vec();
    if mode == PartitionMode::Balanced {
        let fresh = x.iter().max().map_or(0, |&z| z + 1);
        let pad = (k - x.len() % k) % k;
        x.extend((0..pad as u32).map(|t| fresh + t));
    }
    let parts = draw_parts(x.len(), k, mode, seed)?;
    let output = kdist_to_kcycle_with(&x, k, &parts)?;
    Ok(ReductionOutcome { output, record: RandomnessRecord::Parts(parts), reduction: ReductionName::KDistToKCycle })
}

/// Symbol of `y^(j)`: a part tuple when the edge is consecutive in it, else the edge itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum YSymbol {
    Tuple { part: usize, j: usize },
    Edge(Edge),
}

/// The `b^k` strings `y^(j)` built from a partitioned, duplicate-free edge list.
///
/// Tuples `(v_1, …, v_k)` range over `P_ℓ^k` in base-`b` digit order. A tuple
/// with a repeated vertex never absorbs an edge, so a collision always spells
/// out a simple cycle.
pub struct KDistFamily<'a> {
    x: &'a EdgeList,
    parts: Vec<Vec<u32>>,
    part_of: Vec<usize>,
    k: usize,
    b: usize,
}

impl<'a> KDistFamily<'a> {
    pub fn len(&self) -> usize {
        self.b.pow(self.k as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The tuple `P_ℓ^k[j]`.
    pub fn tuple(&self, part: usize, j: usize) -> Vec<u32> {
        let mut d = j;
        let mut t = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            t.push(self.parts[part][d % self.b]);
            d /= self.b;
        }
        t.reverse();
        t
    }

    /// `y^(j)_i`, computed from `x_i` alone.
    pub fn symbol(&self, reader: &Reader<Edge>, j: usize, i: usize) -> YSymbol {
        let e = reader.get(i);
        let part = self.part_of[e.lo() as usize];
        let t = self.tuple(part, j);
        let distinct = (0..self.k).all(|a| (a + 1..self.k).all(|c| t[a] != t[c]));
        if distinct && (0..self.k).any(|r| Edge::new(t[r], t[(r + 1) % self.k]) == e) {
            YSymbol::Tuple { part, j }
        } else {
            YSymbol::Edge(e)
        }
    }

    /// The whole string `y^(j)`.
    pub fn y(&self, j: usize) -> Vec<YSymbol> {
        let reader = Reader::new(self.x.edges());
        (0..self.x.m()).map(|i| self.symbol(&reader, j, i)).collect()
    }

    /// Whether some `y^(j)` has a `k`-collision.
    pub fn any_collision(&self) -> bool {
        (0..self.len()).any(|j| crate::k_collision(&self.y(j), self.k).is_some())
    }
}

/// Validates the partitioned domain and returns the lazy family of strings.
pub fn partition_kcycle_to_or_kdist<'a>(x: &'a EdgeList, parts: &[Vec<u32>], k: usize) -> Result<KDistFamily<'a>> {
    if k < 3 {
        return Err(ReductionError::CycleLength);
    }
    let b = parts.first().map_or(0, Vec::len);
    if parts.iter().any(|p| p.len() != b) {
        return Err(ReductionError::PartSize(b));
    }
    let mut part_of = vec![usize::MAX; x.n() as usize + 1];
    for (l, p) in parts.iter().enumerate() {
        for &v in p {
            if v == 0 || v > x.n() || part_of[v as usize] != usize::MAX {
                return Err(ReductionError::BadRecord("parts must partition [n]".into()));
            }
            part_of[v as usize] = l;
        }
    }
    if part_of[1..].contains(&usize::MAX) {
        return Err(ReductionError::BadRecord("parts must cover [n]".into()));
    }
    let mut seen = std::collections::HashMap::new();
    for (i, e) in x.edges().iter().enumerate() {
        if part_of[e.lo() as usize] != part_of[e.hi() as usize] {
            return Err(ReductionError::CrossPartEdge(i));
        }
        if let Some(&first) = seen.get(e) {
            return Err(ReductionError::DuplicateEdge(first, i));
        }
        seen.insert(*e, i);
    }
    Ok(KDistFamily { x, parts: parts.to_vec(), part_of, k, b })
}
