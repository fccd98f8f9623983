//! Whether the vertex set splits into parts of size `b` with every edge inside a part.

use crate::EdgeList;

/// Part size `⌈log₂ n⌉` used by the partition fact.
pub fn partition_size(n: u32) -> usize {
    (n as f64).log2().ceil().max(1.0) as usize
}

fn component_sizes(x: &EdgeList) -> Vec<usize> {
    let n = x.n() as usize;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for e in x.edges() {
        let (a, b) = (find(&mut parent, e.lo() as usize), find(&mut parent, e.hi() as usize));
        if a != b {
            parent[a] = b;
        }
    }
    let mut size = vec![0usize; n + 1];
    for v in 1..=n {
        let r = find(&mut parent, v);
        size[r] += 1;
    }
    size.into_iter().filter(|&s| s > 1).collect()
}

fn exact_pack(items: &[usize], bins: &mut [usize], cap: usize, i: usize) -> bool {
    if i == items.len() {
        return true;
    }
    let mut tried_empty = false;
    for b in 0..bins.len() {
        if bins[b] + items[i] > cap {
            continue;
        }
        if bins[b] == 0 {
            if tried_empty {
                continue;
            }
            tried_empty = true;
        }
        bins[b] += items[i];
        if exact_pack(items, bins, cap, i + 1) {
            return true;
        }
        bins[b] -= items[i];
    }
    false
}

/// Decides whether `[n]`, padded with isolated vertices to a multiple of `b`,
/// splits into parts of size `b` so that every edge lies inside one part.
///
/// First-fit-decreasing on nontrivial component sizes; when that fails and
/// `n ≤ 40`, an exact branch-and-bound search decides.
pub fn partition_exists(x: &EdgeList, b: usize) -> bool {
    let n = x.n() as usize;
    let parts = n.div_ceil(b);
    let mut items = component_sizes(x);
    if items.iter().any(|&s| s > b) {
        return false;
    }
    items.sort_unstable_by(|a, b| b.cmp(a));
    let mut bins = vec![0usize; parts];
    let ffd = items.iter().all(|&s| {
        if let Some(slot) = bins.iter_mut().find(|f| **f + s <= b) {
            *slot += s;
            true
        } else {
            false
        }
    });
    if ffd {
        return true;
    }
    if n <= 40 {
        let mut bins = vec![0usize; parts];
        return exact_pack(&items, &mut bins, b, 0);
    }
    false
}
