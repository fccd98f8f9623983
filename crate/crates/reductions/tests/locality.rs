//! Each output symbol reads at most one input symbol, and records replay exactly.

use graphcore::{Edge, EdgeList};
use reductions::*;
use reductions::{Reader, ReductionOutcome};
use transforms::HiddenString;

#[test]
fn seeded_runs_replay_from_records() {
    let x = [3u32, 1, 3, 4, 3, 2];
    let out: ReductionOutcome<EdgeList> = kdist_to_kcycle(&x, 3, PartitionMode::Independent, 5).unwrap();
    let RandomnessRecord::Parts(p) = &out.record else { panic!() };
    assert_eq!(kdist_to_kcycle_with(&x, 3, p).unwrap(), out.output);

    let g = EdgeList::new(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (2, 5)]).unwrap();
    let out = triangle_to_3sum(&g, 9).unwrap();
    let RandomnessRecord::PermutationSigns { permutation, signs } = &out.record else { panic!() };
    assert_eq!(triangle_to_3sum_with(&g, permutation, signs).unwrap(), out.output);

    let y = HiddenString::from_symbols(vec![Some(1), None, Some(1), Some(2)]);
    let out = hide_ed_to_triedge(&y, 4, 2).unwrap();
    let RandomnessRecord::Choices(c) = &out.record else { panic!() };
    assert_eq!(hide_ed_to_triedge_with(&y, 4, c).unwrap(), out.output);

    let y = HiddenString::from_symbols(vec![Some(1), None, Some(1), Some(1), None, Some(2)]);
    let out = hide3dist_to_trivertex(&y, PartitionMode::Balanced, 3).unwrap();
    let RandomnessRecord::Parts(p) = &out.record else { panic!() };
    assert_eq!(hide3dist_to_trivertex_with(&y, p).unwrap(), out.output);

    let d = [(1u32, 2u32), (2, 2), (1, 2), (2, 1)];
    let out = ed_to_dense_triangle(&d, 2, 4).unwrap();
    let RandomnessRecord::Choices(c) = &out.record else { panic!() };
    assert_eq!(ed_to_dense_triangle_with(&d, 2, c).unwrap(), out.output);
}

#[test]
fn kdist_family_symbols_read_one_edge() {
    let x = EdgeList::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6)]).unwrap();
    let fam = partition_kcycle_to_or_kdist(&x, &[vec![1, 2, 3], vec![4, 5, 6]], 3).unwrap();
    let reader = Reader::new(x.edges());
    for j in 0..fam.len() {
        for i in 0..x.m() {
            reader.reset();
            let sym = fam.symbol(&reader, j, i);
            assert!(reader.reads() <= 1);
            if let YSymbol::Edge(e) = sym {
                assert_eq!(e, x.edge(i));
            }
        }
    }
}

#[test]
fn triedge_forward_reads_one_edge() {
    let x = EdgeList::new(5, &[(1, 5), (3, 4), (1, 2), (2, 5)]).unwrap();
    let y = triedge_to_hide_ed(&x, 1, 2).unwrap().output;
    assert_eq!(y.symbols(), &[Some(5), None, None, Some(5)]);
    let edges: Vec<Edge> = x.edges().to_vec();
    let reader = Reader::new(&edges);
    for i in 0..x.m() {
        reader.reset();
        let _ = hide_symbol(&reader, i, 1, 2);
        assert_eq!(reader.reads(), 1);
    }
}

#[test]
fn string_reductions_read_one_symbol() {
    let x = [3u32, 1, 3, 4, 3, 2];
    let parts = [0usize, 1, 2, 2, 1, 0];
    let r = Reader::new(&x);
    for j in 0..x.len() {
        r.reset();
        kdist_symbol(&r, j, 3, &parts);
        assert_eq!(r.reads(), 1);
    }
    let h = [Some(1u32), None, Some(1), Some(2), None, Some(1)];
    let r = Reader::new(&h);
    let choices = [true, false, true, true, false, false];
    for i in 0..h.len() {
        r.reset();
        edge_symbol(&r, i, 6, &choices);
        assert_eq!(r.reads(), 1);
        r.reset();
        vertex_symbol(&r, i, 3, &parts);
        assert!(r.reads() <= 1);
    }
    let g = EdgeList::new(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (2, 5)]).unwrap();
    let r = Reader::new(g.edges());
    let perm = [5usize, 0, 3, 1, 2, 4];
    for i in 0..g.m() {
        r.reset();
        sum_symbol(&r, i, &perm, &[(1, -1); 6]);
        assert_eq!(r.reads(), 1);
    }
    let d = [(1u32, 2u32), (2, 2), (1, 2), (2, 1)];
    let r = Reader::new(&d);
    for t in 0..(d.len() + 2) {
        r.reset();
        dense_symbol(&r, t, 2, &[true, false, true, false]);
        assert!(r.reads() <= 1);
    }
}
