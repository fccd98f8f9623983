//! Brute-force evaluators of the target problems.

use std::collections::HashMap;
use std::hash::Hash;

use graphcore::{Certificate, CertificateKind, EdgeList};

use crate::Vec4;

/// Lexicographically smallest `k` positions holding one symbol, if any.
pub fn k_collision<T: Eq + Hash>(y: &[T], k: usize) -> Option<Certificate> {
    let mut at: HashMap<&T, Vec<usize>> = HashMap::new();
    for (i, s) in y.iter().enumerate() {
        at.entry(s).or_default().push(i);
    }
    at.into_values()
        .filter(|p| p.len() >= k)
        .map(|p| p[..k].to_vec())
        .min()
        .map(|indices| Certificate { indices, kind: CertificateKind::KCollision })
}

/// Lexicographically smallest triple of distinct positions summing to zero.
pub fn three_sum(y: &[Vec4]) -> Option<Certificate> {
    let mut at: HashMap<Vec4, Vec<usize>> = HashMap::new();
    for (i, v) in y.iter().enumerate() {
        at.entry(*v).or_default().push(i);
    }
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            let need = [-(y[i][0] + y[j][0]), -(y[i][1] + y[j][1]), -(y[i][2] + y[j][2]), -(y[i][3] + y[j][3])];
            if let Some(l) = at.get(&need).and_then(|p| p.iter().find(|&&l| l > j)) {
                return Some(Certificate { indices: vec![i, j, *l], kind: CertificateKind::ThreeSum });
            }
        }
    }
    None
}

/// True iff some `w` is adjacent to both `u` and `v`.
pub fn tri_edge(x: &EdgeList, u: u32, v: u32) -> bool {
    let n = x.n() as usize;
    let (mut nu, mut nv) = (vec![false; n + 1], vec![false; n + 1]);
    for e in x.edges() {
        if let Some(w) = e.other(u) {
            if w != v {
                nu[w as usize] = true;
            }
        }
        if let Some(w) = e.other(v) {
            if w != u {
                nv[w as usize] = true;
            }
        }
    }
    (1..=n).any(|w| nu[w] && nv[w])
}

/// True iff some triangle contains vertex `v`.
pub fn tri_vertex(x: &EdgeList, v: u32) -> bool {
    let mut nb = vec![false; x.n() as usize + 1];
    for e in x.edges() {
        if let Some(w) = e.other(v) {
            nb[w as usize] = true;
        }
    }
    x.edges().iter().any(|e| !e.touches(v) && nb[e.lo() as usize] && nb[e.hi() as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collision_positions() {
        assert_eq!(k_collision(&[3, 1, 3, 1, 3], 2).unwrap().indices, vec![0, 2]);
        assert_eq!(k_collision(&[3, 1, 3, 1, 3], 3).unwrap().indices, vec![0, 2, 4]);
        assert!(k_collision(&[3, 1, 3], 3).is_none());
    }

    #[test]
    fn three_sum_needs_distinct_positions() {
        assert!(three_sum(&[[0, 0, 0, 0]]).is_none());
        assert_eq!(three_sum(&[[1, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 0]]).unwrap().indices, vec![0, 1, 2]);
    }

    #[test]
    fn triangle_predicates() {
        let x = EdgeList::new(5, &[(1, 3), (2, 3), (4, 5)]).unwrap();
        assert!(tri_edge(&x, 1, 2));
        assert!(!tri_edge(&x, 1, 4));
        let y = EdgeList::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert!(tri_vertex(&y, 1));
        assert!(!tri_vertex(&y, 4));
    }
}
