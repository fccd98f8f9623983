//! Per-input graph statistics of `G(x)`, the simple graph on `[n]` whose edge
//! set is the set of distinct non-`⊥` symbols of `x`.

use graphcore::{colex_decode, find_k_cycle, path_count, Edge, EdgeList};

use crate::{Dims, Result};

/// `⌈log₂ n⌉` for `n ≥ 1`.
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// Statistics of `G(x)` for one input label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XStats {
    /// Number of non-`⊥` positions.
    pub nonbot: usize,
    /// Number of distinct edges.
    pub edges: u64,
    /// `degrees[v-1]` in `G(x)`.
    pub degrees: Vec<u32>,
    /// `paths[l-1]` = number of length-`l` paths, `l = 1..=m`.
    pub paths: Vec<u64>,
    /// `cycles[k-3]` = whether `G(x)` has a `k`-cycle, `k = 3..=m`.
    pub cycles: Vec<bool>,
}

impl XStats {
    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn wedges(&self) -> u64 {
        self.path_count(2)
    }

    pub fn path_count(&self, l: usize) -> u64 {
        self.paths.get(l.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn has_cycle(&self, k: usize) -> bool {
        k >= 3 && self.cycles.get(k - 3).copied().unwrap_or(false)
    }
}

/// Statistics for every input label of `dims`.
pub(crate) fn build_table(n: u32, dims: &Dims) -> Result<Vec<XStats>> {
    let mut out = Vec::with_capacity(dims.x_len);
    for x in 0..dims.x_len {
        let digits = dims.digits(x);
        let nonbot = digits.iter().filter(|&&d| d != 0).count();
        let mut edges: Vec<Edge> = digits.iter().filter(|&&d| d != 0).map(|&d| colex_decode(d as u64 - 1)).collect();
        edges.sort();
        edges.dedup();
        let g = EdgeList::from_edges(n, edges)?;
        let degrees = g.degrees()[1..].iter().map(|&d| d as u32).collect();
        let paths = (1..=dims.m).map(|l| path_count(&g, l)).collect::<graphcore::Result<Vec<_>>>()?;
        let cycles =
            (3..=dims.m).map(|k| find_k_cycle(&g, k).map(|c| c.is_some())).collect::<graphcore::Result<Vec<_>>>()?;
        out.push(XStats { nonbot, edges: g.m() as u64, degrees, paths, cycles });
    }
    Ok(out)
}
