//! Triangle-edge and hidden element distinctness, both directions.

use std::collections::HashMap;

use graphcore::{Edge, EdgeList};
use rand::Rng;
use transforms::HiddenString;

use crate::{RandomnessRecord, Reader, ReductionError, ReductionName, ReductionOutcome, Result};

/// `x̃_i`: `*` for edges missing the target or equal to it, otherwise the far endpoint.
pub fn hide_symbol(x: &Reader<Edge>, i: usize, u: u32, v: u32) -> Option<u32> {
    let e = x.get(i);
    let target = Edge::new(u, v);
    if e == target {
        return None;
    }
    e.other(u).or_else(|| e.other(v))
}

/// Maps a duplicate-free edge list and target edge `{u, v}` to a `hide_m[ED_d]` input.
pub fn triedge_to_hide_ed(x: &EdgeList, u: u32, v: u32) -> Result<ReductionOutcome<HiddenString>> {
    let mut seen: HashMap<Edge, usize> = HashMap::new();
    for (i, e) in x.edges().iter().enumerate() {
        if let Some(&first) = seen.get(e) {
            return Err(ReductionError::DuplicateEdge(first, i));
        }
        seen.insert(*e, i);
    }
    let reader = Reader::new(x.edges());
    let symbols = (0..x.m()).map(|i| hide_symbol(&reader, i, u, v)).collect();
    Ok(ReductionOutcome {
        output: HiddenString::from_symbols(symbols),
        record: RandomnessRecord::None,
        reduction: ReductionName::TriEdgeToHideEd,
    })
}

/// Edge `i` of the reverse map: `{s+1, ỹ_i}` or `{s+2, ỹ_i}` by the choice bit,
/// and `{s+3, i+1}` for `*`.
pub fn edge_symbol(y: &Reader<Option<u32>>, i: usize, s: u32, choices: &[bool]) -> Edge {
    match y.get(i) {
        Some(z) => Edge::new(if choices[i] { s + 2 } else { s + 1 }, z),
        None => Edge::new(s + 3, i as u32 + 1),
    }
}

/// Replays the reverse map with explicit choices; target edge is `{s+1, s+2}`.
pub fn hide_ed_to_triedge_with(y: &HiddenString, s: u32, choices: &[bool]) -> Result<EdgeList> {
    let m = y.len();
    if (s as usize) < m {
        return Err(ReductionError::AlphabetTooSmall { s: s as usize, m });
    }
    if choices.len() != m {
        return Err(ReductionError::BadRecord("one choice per position".into()));
    }
    let mut count: HashMap<u32, usize> = HashMap::new();
    for z in y.symbols().iter().flatten() {
        if *z == 0 || *z > s {
            return Err(ReductionError::Symbol(*z));
        }
        *count.entry(*z).or_default() += 1;
    }
    let pairs: usize = count.values().map(|&c| c * (c - 1) / 2).sum();
    if pairs > 1 {
        return Err(ReductionError::TooManyCollisions);
    }
    let reader = Reader::new(y.symbols());
    let edges = (0..m).map(|i| edge_symbol(&reader, i, s, choices)).collect();
    Ok(EdgeList::from_edges(s + 3, edges)?)
}

/// Maps a `hide_m[ED'_d]` input over `[s]` to a triangle-edge instance with target `{s+1, s+2}`.
pub fn hide_ed_to_triedge(y: &HiddenString, s: u32, seed: u64) -> Result<ReductionOutcome<EdgeList>> {
    let mut rng = graphcore::rng::seeded(seed);
    let choices: Vec<bool> = (0..y.len()).map(|_| rng.random()).collect();
    let output = hide_ed_to_triedge_with(y, s, &choices)?;
    Ok(ReductionOutcome {
        output,
        record: RandomnessRecord::Choices(choices),
        reduction: ReductionName::HideEdToTriEdge,
    })
}
