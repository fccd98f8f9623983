use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{GraphError, Result};

/// An unordered pair `{u, v}` with `u < v`, vertices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: u32,
    v: u32,
}

impl Edge {
    /// Builds the pair in canonical order. Panics on a self-loop.
    pub fn new(a: u32, b: u32) -> Self {
        assert_ne!(a, b, "self-loop {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn lo(&self) -> u32 {
        self.u
    }

    pub fn hi(&self) -> u32 {
        self.v
    }

    pub fn touches(&self, w: u32) -> bool {
        self.u == w || self.v == w
    }

    /// True when the two edges share at least one endpoint.
    pub fn incident(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// The endpoint that is not `w`, if `w` is an endpoint.
    pub fn other(&self, w: u32) -> Option<u32> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Number of unordered pairs over `[n]`.
pub fn num_pairs(n: u32) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Colexicographic rank of a pair, 0-based: `{1,2} -> 0, {1,3} -> 1, {2,3} -> 2, {1,4} -> 3, ...`.
pub fn colex_encode(e: Edge) -> u64 {
    let (u, v) = (e.u as u64, e.v as u64);
    (v - 1) * (v - 2) / 2 + (u - 1)
}

/// Inverse of [`colex_encode`].
pub fn colex_decode(code: u64) -> Edge {
    // largest v with (v-1)(v-2)/2 <= code
    let mut v = ((1.0 + (8.0 * code as f64 + 1.0).sqrt()) / 2.0).floor() as u64 + 1;
    while (v - 1) * (v - 2) / 2 > code {
        v -= 1;
    }
    while v * (v - 1) / 2 <= code {
        v += 1;
    }
    let u = code - (v - 1) * (v - 2) / 2 + 1;
    Edge::new(u as u32, v as u32)
}

/// A length-`m` sequence of unordered pairs over `[n]`; repeated edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeList {
    n: u32,
    edges: Vec<Edge>,
}

impl EdgeList {
    /// Validates endpoints and builds the list.
    pub fn new(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u });
            }
            edges.push(Edge::new(u, v));
        }
        Ok(EdgeList { n, edges })
    }

    /// Builds from already-canonical edges; endpoints are still checked.
    pub fn from_edges(n: u32, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        for (index, e) in edges.iter().enumerate() {
            if e.hi() > n {
                return Err(GraphError::EndpointOutOfRange { index, u: e.lo(), v: e.hi(), n });
            }
        }
        Ok(EdgeList { n, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sub-list at the given positions, in the given order.
    pub fn select(&self, positions: &[usize]) -> EdgeList {
        EdgeList { n: self.n, edges: positions.iter().map(|&i| self.edges[i]).collect() }
    }

    /// Applies a vertex relabeling `sigma` (0-based slice indexed by `v - 1`).
    pub fn relabel(&self, sigma: &[u32]) -> EdgeList {
        let edges =
            self.edges.iter().map(|e| Edge::new(sigma[e.lo() as usize - 1], sigma[e.hi() as usize - 1])).collect();
        EdgeList { n: self.n, edges }
    }

    /// Reorders the edge sequence: position `i` of the result holds edge `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> EdgeList {
        self.select(perm)
    }

    /// Adjacency lists of `(neighbor, edge position)`, indexed by vertex (slot 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<(u32, usize)>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.lo() as usize].push((e.hi(), i));
            adj[e.hi() as usize].push((e.lo(), i));
        }
        adj
    }

    /// Degree of each vertex counting multiplicity (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n as usize + 1];
        for e in &self.edges {
            deg[e.lo() as usize] += 1;
            deg[e.hi() as usize] += 1;
        }
        deg
    }

    /// Canonical text form: `n m` then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            s.push_str(&format!("{} {}\n", e.lo(), e.hi()));
        }
        s
    }
}

impl FromStr for EdgeList {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let parse_err = |line: usize, msg: &str| GraphError::Parse { line: line + 1, msg: msg.to_string() };
        let (hl, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 2 {
            return Err(parse_err(hl, "header must be `n m`"));
        }
        let n: u32 = head[0].parse().map_err(|_| parse_err(hl, "bad n"))?;
        let m: usize = head[1].parse().map_err(|_| parse_err(hl, "bad m"))?;
        let mut pairs = Vec::with_capacity(m);
        for (ln, line) in lines {
            let tok: Vec<&str> = line.split_whitespace().collect();
            if tok.len() != 2 {
                return Err(parse_err(ln, "edge line must be `u v`"));
            }
            let u: u32 = tok[0].parse().map_err(|_| parse_err(ln, "bad vertex"))?;
            let v: u32 = tok[1].parse().map_err(|_| parse_err(ln, "bad vertex"))?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(parse_err(hl, &format!("header says {m} edges, found {}", pairs.len())));
        }
        EdgeList::new(n, &pairs)
    }
}

impl fmt::Display for EdgeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
