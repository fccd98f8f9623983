//! Degree, path and cycle statistics at the level of edge positions.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::{EdgeList, GraphError, Result};

/// What kind of object a certificate's indices witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    KCycle,
    KCollision,
    ThreeSum,
}

/// Positions (0-based, strictly increasing) that witness a positive instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub indices: Vec<usize>,
    pub kind: CertificateKind,
}

/// Statistic selector for [`count_subgraphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    MaxDegree,
    Path(usize),
    CycleExists(usize),
}

/// Summary statistics of an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub path_counts: BTreeMap<usize, u64>,
    pub cycle_found: Option<Certificate>,
    pub duplicate_fix_count: usize,
}

/// Maximum vertex degree, parallel edges counted separately.
pub fn max_degree(x: &EdgeList) -> usize {
    x.degrees().into_iter().max().unwrap_or(0)
}

/// Number of sets of `l` edge positions whose edges form a simple path of length `l`.
pub fn path_count(x: &EdgeList, l: usize) -> Result<u64> {
    if l == 0 {
        return Err(GraphError::PathLength);
    }
    let adj = x.adjacency();
    let mut on_path = vec![false; x.n() as usize + 1];
    let mut directed = 0u64;
    fn walk(v: u32, left: usize, adj: &[Vec<(u32, usize)>], on_path: &mut [bool], total: &mut u64) {
        if left == 0 {
            *total += 1;
            return;
        }
        for &(w, _) in &adj[v as usize] {
            if !on_path[w as usize] {
                on_path[w as usize] = true;
                walk(w, left - 1, adj, on_path, total);
                on_path[w as usize] = false;
            }
        }
    }
    for s in 1..=x.n() {
        on_path[s as usize] = true;
        walk(s, l, &adj, &mut on_path, &mut directed);
        on_path[s as usize] = false;
    }
    // every path is traversed once from each end
    Ok(directed / 2)
}

/// Evaluates one statistic: max degree, an `l`-path count, or `k`-cycle existence (0/1).
pub fn count_subgraphs(x: &EdgeList, pattern: Pattern) -> Result<u64> {
    match pattern {
        Pattern::MaxDegree => Ok(max_degree(x) as u64),
        Pattern::Path(l) => path_count(x, l),
        Pattern::CycleExists(k) => Ok(find_k_cycle(x, k)?.is_some() as u64),
    }
}

/// Lexicographically smallest increasing index tuple whose edges form a `k`-cycle.
pub fn find_k_cycle(x: &EdgeList, k: usize) -> Result<Option<Certificate>> {
    if k < 3 {
        return Err(GraphError::CycleLength(k));
    }
    let adj = x.adjacency();
    let mut best: Option<Vec<usize>> = None;
    let mut verts: Vec<u32> = Vec::with_capacity(k);
    let mut pos: Vec<usize> = Vec::with_capacity(k);
    let mut on_path = vec![false; x.n() as usize + 1];

    struct Ctx<'a> {
        adj: &'a [Vec<(u32, usize)>],
        k: usize,
        start: u32,
    }

    fn extend(
        ctx: &Ctx,
        verts: &mut Vec<u32>,
        pos: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut Option<Vec<usize>>,
    ) {
        let v = *verts.last().unwrap();
        if verts.len() == ctx.k {
            for &(w, p) in &ctx.adj[v as usize] {
                if w == ctx.start {
                    let mut t = pos.clone();
                    t.push(p);
                    t.sort_unstable();
                    if best.as_ref().is_none_or(|b| t < *b) {
                        *best = Some(t);
                    }
                }
            }
            return;
        }
        for &(w, p) in &ctx.adj[v as usize] {
            if w > ctx.start && !on_path[w as usize] {
                on_path[w as usize] = true;
                verts.push(w);
                pos.push(p);
                extend(ctx, verts, pos, on_path, best);
                pos.pop();
                verts.pop();
                on_path[w as usize] = false;
            }
        }
    }

    for s in 1..=x.n() {
        let ctx = Ctx { adj: &adj, k, start: s };
        verts.clear();
        pos.clear();
        verts.push(s);
        on_path[s as usize] = true;
        extend(&ctx, &mut verts, &mut pos, &mut on_path, &mut best);
        on_path[s as usize] = false;
    }
    Ok(best.map(|indices| Certificate { indices, kind: CertificateKind::KCycle }))
}

/// Fast triangle test through neighbor-set intersection.
pub fn has_triangle(x: &EdgeList) -> bool {
    let n = x.n() as usize;
    let mut nbrs: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for e in x.edges() {
        nbrs[e.lo() as usize].push(e.hi());
        nbrs[e.hi() as usize].push(e.lo());
    }
    for l in nbrs.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }
    let mut mark = vec![false; n + 1];
    for u in 1..=n {
        for &w in &nbrs[u] {
            mark[w as usize] = true;
        }
        for &v in &nbrs[u] {
            if (v as usize) > u && nbrs[v as usize].iter().any(|&w| w as usize > v as usize && mark[w as usize]) {
                return true;
            }
        }
        for &w in &nbrs[u] {
            mark[w as usize] = false;
        }
    }
    false
}

/// True when the given edges are exactly the edges of one simple cycle.
pub fn cycle_edges_form_cycle(x: &EdgeList, indices: &[usize]) -> bool {
    let k = indices.len();
    if k < 3 {
        return false;
    }
    let mut deg: HashMap<u32, usize> = HashMap::new();
    for &i in indices {
        if i >= x.m() {
            return false;
        }
        let e = x.edge(i);
        *deg.entry(e.lo()).or_default() += 1;
        *deg.entry(e.hi()).or_default() += 1;
    }
    if deg.len() != k || deg.values().any(|&d| d != 2) {
        return false;
    }
    // 2-regular on k vertices with k edges: a single cycle iff connected
    let mut seen = vec![indices[0]];
    let mut frontier = vec![x.edge(indices[0]).lo()];
    let mut visited: Vec<u32> = frontier.clone();
    while let Some(v) = frontier.pop() {
        for &i in indices {
            let e = x.edge(i);
            if let Some(w) = e.other(v) {
                if !seen.contains(&i) {
                    seen.push(i);
                }
                if !visited.contains(&w) {
                    visited.push(w);
                    frontier.push(w);
                }
            }
        }
    }
    visited.len() == k
}

/// Minimum number of deletions that leave no repeated edge: `Σ (multiplicity − 1)`.
pub fn duplicate_fix_count(x: &EdgeList) -> usize {
    let mut mult: HashMap<crate::Edge, usize> = HashMap::new();
    for e in x.edges() {
        *mult.entry(*e).or_default() += 1;
    }
    mult.values().map(|&c| c - 1).sum()
}

/// Max degree, path counts for `1..=max_path`, the first `k`-cycle, and duplicates.
pub fn graph_stats(x: &EdgeList, max_path: usize, k: usize) -> Result<GraphStats> {
    let mut path_counts = BTreeMap::new();
    for l in 1..=max_path {
        path_counts.insert(l, path_count(x, l)?);
    }
    Ok(GraphStats {
        max_degree: max_degree(x),
        path_counts,
        cycle_found: find_k_cycle(x, k)?,
        duplicate_fix_count: duplicate_fix_count(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u32, p: &[(u32, u32)]) -> EdgeList {
        EdgeList::new(n, p).unwrap()
    }

    #[test]
    fn wedges_in_triangle() {
        assert_eq!(path_count(&el(3, &[(1, 2), (2, 3), (1, 3)]), 2).unwrap(), 3);
    }

    #[test]
    fn parallel_pair_is_not_a_wedge() {
        assert_eq!(path_count(&el(3, &[(1, 2), (1, 2), (2, 3)]), 2).unwrap(), 2);
    }

    #[test]
    fn single_paths_equal_m() {
        let x = el(4, &[(1, 2), (1, 2), (3, 4)]);
        assert_eq!(path_count(&x, 1).unwrap(), 3);
    }

    #[test]
    fn cycle_examples() {
        let t = find_k_cycle(&el(3, &[(1, 2), (2, 3), (1, 3)]), 3).unwrap().unwrap();
        assert_eq!(t.indices, vec![0, 1, 2]);
        assert!(find_k_cycle(&el(4, &[(1, 2), (2, 3), (3, 4)]), 3).unwrap().is_none());
        let c4 = find_k_cycle(&el(6, &[(1, 2), (3, 4), (2, 3), (1, 4), (5, 6)]), 4).unwrap().unwrap();
        assert_eq!(c4.indices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cycle_prefers_smallest_tuple() {
        let x = el(4, &[(3, 4), (1, 2), (2, 3), (1, 3), (2, 4)]);
        // triangles {1,2,3} -> (1,2,3) and {2,3,4} -> (0,2,4)
        assert_eq!(find_k_cycle(&x, 3).unwrap().unwrap().indices, vec![0, 2, 4]);
    }

    #[test]
    fn out_of_range_lengths() {
        let x = el(3, &[(1, 2)]);
        assert_eq!(path_count(&x, 0), Err(GraphError::PathLength));
        assert_eq!(find_k_cycle(&x, 2), Err(GraphError::CycleLength(2)));
    }

    #[test]
    fn duplicates() {
        assert_eq!(duplicate_fix_count(&el(3, &[(1, 2), (2, 1), (1, 2), (2, 3)])), 2);
    }

    #[test]
    fn triangle_fast_path_agrees() {
        assert!(has_triangle(&el(5, &[(4, 5), (1, 2), (2, 3), (1, 3)])));
        assert!(!has_triangle(&el(5, &[(1, 2), (2, 3), (3, 4), (4, 1)])));
    }

    #[test]
    fn stats_summary() {
        let s = graph_stats(&el(3, &[(1, 2), (2, 3), (1, 3)]), 3, 3).unwrap();
        assert_eq!(s.path_counts[&1], 3);
        assert_eq!(s.path_counts[&3], 0);
        assert_eq!(s.max_degree, 2);
        assert!(s.cycle_found.is_some());
    }
}
