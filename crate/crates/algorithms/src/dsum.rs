//! The collect algorithm for `shuffle^k[f]` with per-copy early stopping.

use transforms::ShuffledDirectSumInput;

use crate::{AlgoError, CostModel, CostReport, Result, SymmetricProfile};

/// Collects up to `want` entries per copy among those whose value is `target`.
/// Returns the per-copy counts; a copy reaching `want` stops collecting.
fn collect(x: &ShuffledDirectSumInput, target: u32, want: usize) -> Vec<usize> {
    let mut count = vec![0usize; x.k];
    for &(v, c) in &x.entries {
        if v == target && count[c] < want {
            count[c] += 1;
        }
    }
    count
}

/// Computes `(f(v^(1)), …, f(v^(k)))` for symmetric Boolean `f`.
///
/// Phase I collects ones until a copy has `A` of them ("above lower
/// threshold"); phase II collects zeros until a copy has `n − B` ("below upper
/// threshold"). Copies meeting both thresholds output the plateau value; the
/// rest output `f` at the weight their counts determine.
pub fn run_shuffle_dsum(
    p: &SymmetricProfile,
    x: &ShuffledDirectSumInput,
    model: &CostModel,
) -> Result<(Vec<bool>, CostReport)> {
    let copies = x.split()?;
    let n = p.n();
    if copies[0].len() != n {
        return Err(AlgoError::LengthMismatch { profile: n, input: copies[0].len() });
    }
    if let Some(&(v, _)) = x.entries.iter().find(|(v, _)| *v > 1) {
        return Err(AlgoError::NotBit(v));
    }
    let k = x.k;
    let len = k * n;
    let mut report = CostReport::default();
    let (lo, hi) = (p.a(), n - p.b());

    let ones = collect(x, 1, lo);
    let got1: usize = ones.iter().sum();
    report.charge("phase_one", model.grover_collect((got1 + 1).min(k * lo), len));
    report.reads += got1;
    let zeros = collect(x, 0, hi);
    let got0: usize = zeros.iter().sum();
    report.charge("phase_two", model.grover_collect((got0 + 1).min(k * hi), len));
    report.reads += got0;

    let out = (0..k)
        .map(|c| {
            let above = ones[c] >= lo;
            let below = zeros[c] >= hi;
            match (above, below) {
                (true, true) => p.plateau(),
                (false, _) => p.value(ones[c]),
                (true, false) => p.value(n - zeros[c]),
            }
        })
        .collect();
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use transforms::SymmetricBoolean;

    #[test]
    fn two_copies_of_majority() {
        let p = SymmetricProfile::from_base(&SymmetricBoolean::majority(3)).unwrap();
        let x = ShuffledDirectSumInput { k: 2, entries: vec![(1, 0), (0, 1), (1, 0), (0, 1), (0, 0), (1, 1)] };
        let (out, rep) = run_shuffle_dsum(&p, &x, &CostModel::default()).unwrap();
        assert_eq!(out, vec![true, false]);
        assert_eq!(rep.total, rep.phase("phase_one") + rep.phase("phase_two"));
    }
}
