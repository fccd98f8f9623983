//! Element distinctness on `n²` pairs to triangle on `3n` vertices.

use graphcore::{Edge, EdgeList};
use rand::Rng;

use crate::{RandomnessRecord, Reader, ReductionError, ReductionName, ReductionOutcome, Result};

/// Output edge `t`: spine `(j^A, j^B)` for `t < n`, else the pair `x_i = (j, k)`
/// as `(j^A, k^C)` or `(j^B, k^C)` by side, with `i = t − n`.
pub fn dense_symbol(x: &Reader<(u32, u32)>, t: usize, n: u32, sides: &[bool]) -> Edge {
    let (a, b, c) = (|j: u32| j, |j: u32| n + j, |k: u32| 2 * n + k);
    if t < n as usize {
        let j = t as u32 + 1;
        return Edge::new(a(j), b(j));
    }
    let i = t - n as usize;
    let (j, k) = x.get(i);
    Edge::new(if sides[i] { b(j) } else { a(j) }, c(k))
}

/// Replays the reduction; `sides[i]` puts position `i` in `B`.
pub fn ed_to_dense_triangle_with(x: &[(u32, u32)], n: u32, sides: &[bool]) -> Result<EdgeList> {
    if x.len() != (n * n) as usize || sides.len() != x.len() {
        return Err(ReductionError::BadRecord("input must have n² pairs and one side each".into()));
    }
    if let Some(&(j, k)) = x.iter().find(|&&(j, k)| j == 0 || k == 0 || j > n || k > n) {
        return Err(ReductionError::Symbol(j.max(k)));
    }
    let reader = Reader::new(x);
    let edges = (0..x.len() + n as usize).map(|t| dense_symbol(&reader, t, n, sides)).collect();
    Ok(EdgeList::from_edges(3 * n, edges)?)
}

/// Random `A`/`B` split of the positions, then the layered graph with `m = n² + n`.
pub fn ed_to_dense_triangle(x: &[(u32, u32)], n: u32, seed: u64) -> Result<ReductionOutcome<EdgeList>> {
    let mut rng = graphcore::rng::seeded(seed);
    let sides: Vec<bool> = (0..x.len()).map(|_| rng.random()).collect();
    let output = ed_to_dense_triangle_with(x, n, &sides)?;
    Ok(ReductionOutcome {
        output,
        record: RandomnessRecord::Choices(sides),
        reduction: ReductionName::EdToDenseTriangle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::find_k_cycle;

    #[test]
    fn split_duplicate_makes_triangle() {
        let x = [(1, 2), (2, 2), (1, 2), (2, 1)];
        let y = ed_to_dense_triangle_with(&x, 2, &[false, false, true, false]).unwrap();
        assert_eq!(y.m(), 6);
        let c = find_k_cycle(&y, 3).unwrap().unwrap();
        let want = [Edge::new(1, 3), Edge::new(1, 6), Edge::new(3, 6)];
        for i in c.indices {
            assert!(want.contains(&y.edge(i)));
        }
    }

    #[test]
    fn spine_always_present() {
        let x = [(1, 1), (1, 2), (2, 1), (2, 2)];
        let y = ed_to_dense_triangle(&x, 2, 3).unwrap().output;
        assert_eq!(&y.edges()[..2], &[Edge::new(1, 3), Edge::new(2, 4)]);
    }
}
