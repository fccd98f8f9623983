//! Hiding algorithms: the permutation-and-blocks algorithm for `hide_m[ED_d]`
//! and the two-phase collect algorithm for symmetric Boolean `f`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use transforms::{HiddenString, Symbol, TransformError};

use crate::{AlgoError, CostModel, CostReport, Result, SymmetricProfile};

/// Below this `d` all non-`*` symbols are collected directly.
const DIRECT_COLLECT_MAX_D: usize = 4;

fn has_repeat(symbols: impl Iterator<Item = Symbol>) -> bool {
    let mut seen = HashSet::new();
    symbols.into_iter().any(|s| !seen.insert(s))
}

/// Decides `hide_m[ED_d](y)`.
///
/// For small `d` every non-`*` symbol is Grover-collected. Otherwise a uniform
/// permutation is applied, the string is cut into `d` blocks of `⌈m/d⌉`, each
/// block is compacted to its at most `⌈log d⌉` non-`*` symbols, and the
/// element-distinctness primitive runs on the compacted string with each query
/// costing one block collect. A block overflow triggers a fresh permutation;
/// the failed attempt is charged in full.
pub fn run_hide_ed(y: &HiddenString, d: usize, model: &CostModel, seed: u64) -> Result<(bool, CostReport)> {
    let found = y.symbols().iter().filter(|s| s.is_some()).count();
    if found != d {
        return Err(TransformError::NonStarCount { expected: d, found }.into());
    }
    if d == 0 {
        return Err(AlgoError::AllStar);
    }
    let m = y.len();
    let mut report = CostReport::default();
    if d <= DIRECT_COLLECT_MAX_D {
        report.charge("collect_all", model.grover_collect(d, m));
        report.reads += d;
        return Ok((has_repeat(y.symbols().iter().flatten().copied()), report));
    }
    let r = m.div_ceil(d);
    let cap = (d as f64).log2().ceil() as usize;
    let mut padded: Vec<Option<Symbol>> = y.symbols().to_vec();
    padded.resize(r * d, None);
    let mut rng = graphcore::rng::seeded(seed);
    let per_query = model.grover_collect(cap, r);
    let attempt = model.ed_primitive(d * cap) * per_query;
    loop {
        padded.shuffle(&mut rng);
        let overflow = padded.chunks(r).any(|b| b.iter().filter(|s| s.is_some()).count() > cap);
        if overflow {
            report.charge("overflow_retries", attempt);
            continue;
        }
        report.charge("blocked_ed", attempt);
        report.reads += d;
        // the compacted string: block contents first, then distinct ⊥ fillers
        let compact = padded.chunks(r).flat_map(|b| {
            let mut v: Vec<Option<Symbol>> = b.iter().copied().filter(Option::is_some).collect();
            v.resize(cap, None);
            v
        });
        return Ok((has_repeat(compact.flatten()), report));
    }
}

fn bits(y: &HiddenString) -> Result<Vec<Option<bool>>> {
    y.symbols()
        .iter()
        .map(|s| match s {
            None => Ok(None),
            Some(0) => Ok(Some(false)),
            Some(1) => Ok(Some(true)),
            Some(v) => Err(AlgoError::NotBit(*v)),
        })
        .collect()
}

/// Decides `hide_m[f](y)` for symmetric Boolean `f`.
///
/// Phase one collects up to `A` ones (`*` counts as 0); finding only `k < A`
/// outputs `f_k`. Phase two collects up to `n − B` zeros (`*` counts as 1);
/// finding only `k < n − B` outputs `f_{n−k}`. Otherwise the plateau value.
pub fn run_hide_symmetric(p: &SymmetricProfile, y: &HiddenString, model: &CostModel) -> Result<(bool, CostReport)> {
    let n = p.n();
    let found = y.symbols().iter().filter(|s| s.is_some()).count();
    if found != n {
        return Err(TransformError::NonStarCount { expected: n, found }.into());
    }
    let y = bits(y)?;
    let m = y.len();
    let mut report = CostReport::default();
    let ones = y.iter().filter(|&&s| s == Some(true)).count();
    let zeros = n - ones;

    let want = p.a();
    if want > 0 {
        let got = ones.min(want);
        // the search that fails is the (got + 1)-th
        report.charge("collect_ones", model.grover_collect((got + 1).min(want), m));
        report.reads += got;
        if got < want {
            return Ok((p.value(got), report));
        }
    }
    let want = n - p.b();
    if want > 0 {
        let got = zeros.min(want);
        report.charge("collect_zeros", model.grover_collect((got + 1).min(want), m));
        report.reads += got;
        if got < want {
            return Ok((p.value(n - got), report));
        }
    }
    Ok((p.plateau(), report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use transforms::SymmetricBoolean;

    fn hs(v: &[i64]) -> HiddenString {
        HiddenString::from_symbols(v.iter().map(|&s| (s >= 0).then_some(s as u32)).collect())
    }

    #[test]
    fn small_d_collects_directly() {
        let (out, rep) = run_hide_ed(&hs(&[-1, 3, -1, 3]), 2, &CostModel::default(), 0).unwrap();
        assert!(out);
        assert_eq!(rep.phases.len(), 1);
        assert_eq!(rep.phase("collect_all"), CostModel::default().grover_collect(2, 4));
    }

    #[test]
    fn blocked_path() {
        let mut v = vec![-1i64; 64];
        for (i, s) in [(3, 1), (9, 2), (17, 3), (30, 4), (41, 5), (50, 6), (60, 7), (63, 8)] {
            v[i] = s;
        }
        let y = hs(&v);
        let (out, rep) = run_hide_ed(&y, 8, &CostModel::default(), 1).unwrap();
        assert!(!out);
        assert!(rep.phase("blocked_ed") > 0);
        v[63] = 4;
        let (out, _) = run_hide_ed(&hs(&v), 8, &CostModel::default(), 1).unwrap();
        assert!(out);
    }

    #[test]
    fn all_star_and_miscount_rejected() {
        assert_eq!(run_hide_ed(&hs(&[-1, -1]), 0, &CostModel::default(), 0), Err(AlgoError::AllStar));
        assert!(run_hide_ed(&hs(&[1, -1]), 2, &CostModel::default(), 0).is_err());
    }

    #[test]
    fn or_stops_after_first_one() {
        let p = SymmetricProfile::from_base(&SymmetricBoolean::or(3)).unwrap();
        let (out, rep) = run_hide_symmetric(&p, &hs(&[-1, 0, 1, -1, 0]), &CostModel::default()).unwrap();
        assert!(out);
        assert!(rep.phase("collect_ones") > 0);
        let (out, _) = run_hide_symmetric(&p, &hs(&[-1, 0, 0, -1, 0]), &CostModel::default()).unwrap();
        assert!(!out);
    }
}
