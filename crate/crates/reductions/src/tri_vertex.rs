//! Hidden 3-distinctness to triangle-vertex.

use graphcore::{Edge, EdgeList};
use serde::{Deserialize, Serialize};
use transforms::HiddenString;

use crate::{
    draw_parts, PartitionMode, RandomnessRecord, Reader, ReductionError, ReductionName, ReductionOutcome, Result,
};

/// An edge list with a distinguished target vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriVertexInstance {
    pub graph: EdgeList,
    pub target: u32,
}

const V: u32 = 1;
const U: u32 = 2;

/// Edge `i`: `{a^X, v}`, `{a^Y, v}` or `{a^X, a^Y}` by part for a symbol `a`; `{u, *_i}` for `*`.
pub fn vertex_symbol(x: &Reader<Option<u32>>, i: usize, alphabet: u32, parts: &[usize]) -> Edge {
    let ax = |a: u32| 3 + a;
    let ay = |a: u32| 3 + alphabet + a;
    match x.get(i) {
        Some(a) => match parts[i] {
            0 => Edge::new(ax(a), V),
            1 => Edge::new(ay(a), V),
            _ => Edge::new(ax(a), ay(a)),
        },
        None => Edge::new(U, 3 + 2 * alphabet + i as u32),
    }
}

/// Replays the reduction with explicit part labels (0 = X, 1 = Y, 2 = Z).
pub fn hide3dist_to_trivertex_with(x: &HiddenString, parts: &[usize]) -> Result<TriVertexInstance> {
    let m = x.len();
    if parts.len() != m || parts.iter().any(|&p| p > 2) {
        return Err(ReductionError::BadRecord("part labels".into()));
    }
    let alphabet = x.symbols().iter().flatten().max().map_or(1, |&a| a + 1);
    let reader = Reader::new(x.symbols());
    let edges = (0..m).map(|i| vertex_symbol(&reader, i, alphabet, parts)).collect();
    Ok(TriVertexInstance { graph: EdgeList::from_edges(3 + 2 * alphabet + m as u32, edges)?, target: V })
}

/// Random X/Y/Z split, then the vertex gadget.
pub fn hide3dist_to_trivertex(
    x: &HiddenString,
    mode: PartitionMode,
    seed: u64,
) -> Result<ReductionOutcome<TriVertexInstance>> {
    let parts = draw_parts(x.len(), 3, mode, seed)?;
    let output = hide3dist_to_trivertex_with(x, &parts)?;
    Ok(ReductionOutcome {
        output,
        record: RandomnessRecord::Parts(parts),
        reduction: ReductionName::Hide3DistToTriVertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri_vertex;

    #[test]
    fn split_collision_forms_triangle_at_v() {
        let x = HiddenString::from_symbols(vec![Some(4), None, Some(4), Some(4)]);
        let y = hide3dist_to_trivertex_with(&x, &[0, 0, 1, 2]).unwrap();
        assert!(tri_vertex(&y.graph, y.target));
        let (ax, ay) = (3 + 4, 3 + 5 + 4);
        for e in [Edge::new(ax, V), Edge::new(ay, V), Edge::new(ax, ay)] {
            assert!(y.graph.edges().contains(&e));
        }
    }

    #[test]
    fn all_star_is_a_star_at_u() {
        let x = HiddenString::from_symbols(vec![None; 3]);
        let y = hide3dist_to_trivertex(&x, PartitionMode::Balanced, 1).unwrap().output;
        assert!(y.graph.edges().iter().all(|e| e.touches(U)));
        assert!(!tri_vertex(&y.graph, y.target));
    }
}
