//! Certificates, consistent `R^{(1)}` vertices and sampled `(x, y, R^{(1)})` triples.

use graphcore::{cycle_edges_form_cycle, find_k_cycle, max_degree, Edge, EdgeList};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{assignment_of, Entry, LGParams, Layout, LgError, Result, Variant, Vertex};

const RETRY_CAP: usize = 100_000;

/// `f(z)`: whether `z` contains a `k`-cycle.
pub fn is_positive(z: &EdgeList, k: usize) -> Result<bool> {
    Ok(find_k_cycle(z, k)?.is_some())
}

/// Ordered certificate `C(x) = (a_1, .., a_k)`, 0-based.
///
/// Triangle variant: the lexicographically smallest increasing triple.
/// General variant: the lexicographically smallest sequence of distinct
/// indices whose edges form a `k`-cycle with `x_{a_i}` incident to `x_{a_{i+1}}`.
pub fn choose_certificate(x: &EdgeList, variant: Variant, k: usize) -> Result<Vec<usize>> {
    let cert = match variant {
        Variant::Triangle => find_k_cycle(x, 3)?.map(|c| c.indices),
        Variant::General => {
            let mut seq = Vec::with_capacity(k);
            (0..x.m()).find_map(|a| {
                seq.clear();
                seq.push(a);
                extend_chain(x, k, &mut seq).then(|| seq.clone())
            })
        }
    };
    cert.ok_or(LgError::NoCertificate)
}

fn extend_chain(x: &EdgeList, k: usize, seq: &mut Vec<usize>) -> bool {
    if seq.len() == k {
        return cycle_edges_form_cycle(x, seq);
    }
    let last = x.edge(*seq.last().unwrap());
    for b in 0..x.m() {
        if !seq.contains(&b) && x.edge(b).incident(&last) {
            seq.push(b);
            if extend_chain(x, k, seq) {
                return true;
            }
            seq.pop();
        }
    }
    false
}

/// Whether the certificate edges are vertex disjoint from the edges loaded in `r1`.
pub fn is_consistent(x: &EdgeList, cert: &[usize], r1: &Vertex) -> bool {
    r1.loaded().all(|t| cert.iter().all(|&a| !x.edge(a).incident(&x.edge(t))))
}

/// `(x, y, R^{(1)})` with the stage I loading order of `R^{(1)}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Triple {
    pub x: EdgeList,
    pub y: EdgeList,
    pub r1: Vertex,
    /// `t_1, .., t_r`, lower levels first.
    pub order: Vec<usize>,
    pub cert: Vec<usize>,
}

/// How the NO instance of a sampled triple was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edit {
    /// One certificate edge redirected to a fresh vertex.
    Redirect,
    /// A redirect plus random rewrites at other positions.
    Noisy,
    /// A redirect that frees a certificate vertex, plus a loaded deeper-level
    /// edge attached to it.
    Fault,
}

/// Uniformly random disjoint sets with the `R^{(1)}` sizes.
fn random_r1<G: Rng>(layout: &Layout, m: usize, rng: &mut G) -> Vertex {
    let mut pool: Vec<usize> = (0..m).collect();
    pool.shuffle(rng);
    let mut it = pool.into_iter();
    let sets = (0..layout.len()).map(|l| it.by_ref().take(layout.size(l)).collect()).collect();
    Vertex::from_sets(layout, sets).expect("drawn without replacement")
}

/// Loading order: levels ascending, shuffled within a level.
fn stage_one_order<G: Rng>(layout: &Layout, r1: &Vertex, rng: &mut G) -> Vec<usize> {
    let top = (0..layout.len()).map(|l| layout.label(l).level).max().unwrap_or(0);
    let mut order = Vec::new();
    for level in 1..=top {
        let mut lv: Vec<usize> =
            (0..layout.len()).filter(|&l| layout.label(l).level == level).flat_map(|l| r1.set(l).to_vec()).collect();
        lv.shuffle(rng);
        order.extend(lv);
    }
    order
}

/// Rejection sampler for a vertex of `V^{(1)}` consistent with `x`.
pub fn sample_consistent<G: Rng>(
    layout: &Layout,
    x: &EdgeList,
    cert: &[usize],
    rng: &mut G,
) -> Result<(Vertex, usize)> {
    for tries in 1..=RETRY_CAP {
        let r1 = random_r1(layout, x.m(), rng);
        if is_consistent(x, cert, &r1) {
            return Ok((r1, tries));
        }
    }
    Err(LgError::RetryCap("consistent R^(1)"))
}

fn degrees(z: &[Edge], n: u32) -> Vec<usize> {
    let mut deg = vec![0; n as usize + 1];
    for e in z {
        deg[e.lo() as usize] += 1;
        deg[e.hi() as usize] += 1;
    }
    deg
}

/// A YES instance with maximum degree `≤ d`: a planted `k`-cycle at random
/// positions, the rest random edges respecting the degree cap.
pub fn sample_yes<G: Rng>(p: &LGParams, rng: &mut G) -> Result<EdgeList> {
    let (n, m, k, d) = (p.n, p.m, p.k, p.d);
    if d < 2 || (n as usize) < k + 2 {
        return Err(LgError::Param("a YES instance needs d ≥ 2 and n ≥ k + 2".into()));
    }
    let mut verts: Vec<u32> = (1..=n).collect();
    verts.shuffle(rng);
    let cyc: Vec<Edge> = (0..k).map(|i| Edge::new(verts[i], verts[(i + 1) % k])).collect();
    let mut pos: Vec<usize> = (0..m).collect();
    pos.shuffle(rng);
    let mut slots: Vec<Option<Edge>> = vec![None; m];
    for (e, &i) in cyc.iter().zip(&pos) {
        slots[i] = Some(*e);
    }
    let mut deg = degrees(&cyc, n);
    for slot in slots.iter_mut().filter(|s| s.is_none()) {
        let e = (0..RETRY_CAP)
            .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
            .find(|&(u, v)| u != v && deg[u as usize] < d && deg[v as usize] < d)
            .ok_or(LgError::RetryCap("degree-capped edge"))?;
        deg[e.0 as usize] += 1;
        deg[e.1 as usize] += 1;
        *slot = Some(Edge::new(e.0, e.1));
    }
    Ok(EdgeList::from_edges(n, slots.into_iter().map(Option::unwrap).collect())?)
}

fn fresh_vertex<G: Rng>(z: &[Edge], n: u32, rng: &mut G) -> Option<u32> {
    let deg = degrees(z, n);
    let free: Vec<u32> = (1..=n).filter(|&v| deg[v as usize] == 0).collect();
    free.choose(rng).copied()
}

/// Samples a triple per the edit strategy. `x` must satisfy the domain and
/// the sampler retries the NO-instance edit until `y` has maximum degree `≤ d`
/// and no `k`-cycle.
pub fn sample_triple<G: Rng>(p: &LGParams, edit: Edit, rng: &mut G) -> Result<Triple> {
    p.validate()?;
    let layout = Layout::new(p);
    let k = p.k;
    if edit == Edit::Fault && p.r.get(1).is_none_or(|&r2| r2 == 0) {
        return Err(LgError::Param("fault edits need a nonempty level-2 set".into()));
    }
    for _ in 0..1000 {
        let x = sample_yes(p, rng)?;
        let cert = choose_certificate(&x, p.variant, k)?;
        let (r1, _) = sample_consistent(&layout, &x, &cert, rng)?;
        let order = stage_one_order(&layout, &r1, rng);
        let ax = assignment_of(&layout, &r1, &x);
        for _ in 0..100 {
            if let Some(y) = edit_no_instance(p, &layout, &x, &cert, &r1, &ax, edit, rng)? {
                return Ok(Triple { x, y, r1, order, cert });
            }
        }
    }
    Err(LgError::RetryCap("NO instance"))
}

#[allow(clippy::too_many_arguments)]
fn edit_no_instance<G: Rng>(
    p: &LGParams,
    layout: &Layout,
    x: &EdgeList,
    cert: &[usize],
    r1: &Vertex,
    ax: &crate::Assignment,
    edit: Edit,
    rng: &mut G,
) -> Result<Option<EdgeList>> {
    let k = cert.len();
    let mut z: Vec<Edge> = x.edges().to_vec();
    let n = p.n;
    match edit {
        Edit::Redirect | Edit::Noisy => {
            let s = rng.random_range(0..k);
            let e = z[cert[s]];
            let keep = if rng.random_bool(0.5) { e.lo() } else { e.hi() };
            let Some(f) = fresh_vertex(&z, n, rng) else { return Ok(None) };
            z[cert[s]] = Edge::new(keep, f);
            if edit == Edit::Noisy {
                for _ in 0..rng.random_range(1..=3) {
                    let i = rng.random_range(0..p.m);
                    if cert.contains(&i) {
                        continue;
                    }
                    let (u, v) = (rng.random_range(1..=n), rng.random_range(1..=n));
                    if u != v {
                        z[i] = Edge::new(u, v);
                    }
                }
            }
        }
        Edit::Fault => {
            // first difference at position l ≥ 2 (1-based); faults at level s + 1 against a_s
            let l = rng.random_range(2..=k);
            let s = match p.variant {
                Variant::Triangle => 1,
                Variant::General => l - 1,
            };
            let fault_level = s + 1;
            if fault_level > p.levels() || p.r[fault_level - 1] == 0 {
                return Ok(None);
            }
            let (es, el) = (z[cert[s - 1]], z[cert[l - 1]]);
            let Some(shared) = [el.lo(), el.hi()].into_iter().find(|&v| es.touches(v)) else { return Ok(None) };
            let keep = el.other(shared).unwrap();
            let Some(f) = fresh_vertex(&z, n, rng) else { return Ok(None) };
            z[cert[l - 1]] = Edge::new(keep, f);
            let candidates: Vec<usize> = (0..layout.len())
                .filter(|&lb| layout.label(lb).level == fault_level)
                .flat_map(|lb| r1.set(lb).to_vec())
                .filter(|&j| ax.get(j) == Entry::Star)
                .collect();
            let Some(&j) = candidates.choose(rng) else { return Ok(None) };
            let others: Vec<Edge> = z.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, e)| *e).collect();
            let Some(g) = fresh_vertex(&others, n, rng) else { return Ok(None) };
            z[j] = Edge::new(shared, g);
        }
    }
    let y = EdgeList::from_edges(n, z)?;
    if max_degree(&y) > p.d || is_positive(&y, p.k)? {
        return Ok(None);
    }
    Ok(Some(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_certificate_is_smallest_increasing() {
        let x = EdgeList::new(9, &[(7, 8), (8, 9), (1, 2), (2, 3), (4, 5), (1, 3), (7, 9)]).unwrap();
        assert_eq!(choose_certificate(&x, Variant::Triangle, 3).unwrap(), vec![0, 1, 6]);
    }

    #[test]
    fn general_certificate_is_a_chain() {
        let x = EdgeList::new(8, &[(5, 6), (1, 2), (3, 4), (2, 3), (4, 1)]).unwrap();
        let c = choose_certificate(&x, Variant::General, 4).unwrap();
        assert_eq!(c, vec![1, 3, 2, 4]);
        for w in c.windows(2) {
            assert!(x.edge(w[0]).incident(&x.edge(w[1])));
        }
        assert!(choose_certificate(&x, Variant::General, 3).is_err());
    }

    #[test]
    fn consistency_is_vertex_disjointness() {
        let p = LGParams::with_sizes(Variant::Triangle, 3, 1, 9, 12, vec![1, 0]).unwrap();
        let layout = Layout::new(&p);
        let x =
            EdgeList::new(12, &[(1, 2), (2, 3), (1, 3), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (5, 7)]).unwrap();
        let cert = choose_certificate(&x, Variant::Triangle, 3).unwrap();
        let mut sets = vec![vec![]; layout.len()];
        sets[0] = vec![3];
        sets[1] = vec![4];
        sets[2] = vec![5];
        let bad = Vertex::from_sets(&layout, sets.clone()).unwrap();
        assert!(!is_consistent(&x, &cert, &bad));
        sets[0] = vec![6];
        let good = Vertex::from_sets(&layout, sets).unwrap();
        assert!(is_consistent(&x, &cert, &good));
    }

    #[test]
    fn sampled_triples_meet_preconditions() {
        let p = LGParams::with_sizes(Variant::Triangle, 3, 2, 30, 60, vec![1, 1]).unwrap();
        let layout = Layout::new(&p);
        let mut rng = graphcore::rng::seeded(5);
        for edit in [Edit::Redirect, Edit::Noisy, Edit::Fault] {
            let t = sample_triple(&p, edit, &mut rng).unwrap();
            assert!(is_positive(&t.x, 3).unwrap() && !is_positive(&t.y, 3).unwrap());
            assert!(max_degree(&t.x) <= 2 && max_degree(&t.y) <= 2);
            assert!(t.r1.has_stage_one_sizes(&layout));
            assert!(is_consistent(&t.x, &t.cert, &t.r1));
            assert_eq!(t.order.len(), 19);
        }
    }
}
