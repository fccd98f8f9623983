//! Triangle to 3-sum over `Z^4`.

use graphcore::{Edge, EdgeList};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{RandomnessRecord, Reader, ReductionError, ReductionName, ReductionOutcome, Result};

pub type Vec4 = [i64; 4];

/// Output symbol `i`: the permuted edge as a block-tagged signed vector.
/// Block 0 writes the endpoints as `(lo, hi)`, blocks 1 and 2 as `(hi, lo)`.
pub fn sum_symbol(x: &Reader<Edge>, i: usize, permutation: &[usize], signs: &[(i8, i8)]) -> Vec4 {
    let m = permutation.len();
    let e = x.get(permutation[i]);
    let block = 3 * i / m;
    let (a, b) = if block == 0 { (e.lo() as i64, e.hi() as i64) } else { (e.hi() as i64, e.lo() as i64) };
    let (s1, s2) = (signs[i].0 as i64, signs[i].1 as i64);
    match block {
        0 => [0, s1 * a, s2 * b, -1],
        1 => [s1 * a, 0, s2 * b, -2],
        _ => [s1 * a, s2 * b, 0, 3],
    }
}

/// Replays the reduction with an explicit permutation and signs.
pub fn triangle_to_3sum_with(x: &EdgeList, permutation: &[usize], signs: &[(i8, i8)]) -> Result<Vec<Vec4>> {
    let m = x.m();
    if !m.is_multiple_of(3) {
        return Err(ReductionError::NotDivisible { m, k: 3 });
    }
    let mut seen = vec![false; m];
    if permutation.len() != m
        || signs.len() != m
        || permutation.iter().any(|&p| p >= m || std::mem::replace(&mut seen[p], true))
    {
        return Err(ReductionError::BadRecord("permutation or signs".into()));
    }
    if signs.iter().any(|&(a, b)| a.abs() != 1 || b.abs() != 1) {
        return Err(ReductionError::BadRecord("signs must be ±1".into()));
    }
    let reader = Reader::new(x.edges());
    Ok((0..m).map(|i| sum_symbol(&reader, i, permutation, signs)).collect())
}

/// Random permutation and signs, then the block-tagged vectors.
pub fn triangle_to_3sum(x: &EdgeList, seed: u64) -> Result<ReductionOutcome<Vec<Vec4>>> {
    let mut rng = graphcore::rng::seeded(seed);
    let mut permutation: Vec<usize> = (0..x.m()).collect();
    permutation.shuffle(&mut rng);
    let mut sign = || if rng.random::<bool>() { 1i8 } else { -1 };
    let signs: Vec<(i8, i8)> = (0..x.m()).map(|_| (sign(), sign())).collect();
    let output = triangle_to_3sum_with(x, &permutation, &signs)?;
    Ok(ReductionOutcome {
        output,
        record: RandomnessRecord::PermutationSigns { permutation, signs },
        reduction: ReductionName::TriangleTo3Sum,
    })
}
