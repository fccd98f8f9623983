//! `hide_b[f]`: the base input sits at `a` positions of a length-`b` string of `*`.

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::{BaseFunction, Result, Symbol, TransformError};

/// A length-`b` string over `Σ ∪ {*}` with `a` non-`*` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HiddenString {
    symbols: Vec<Option<Symbol>>,
    base_length: usize,
}

impl HiddenString {
    /// Wraps raw symbols, checking that exactly `base_length` are non-`*`.
    pub fn new(symbols: Vec<Option<Symbol>>, base_length: usize) -> Result<Self> {
        let found = symbols.iter().filter(|s| s.is_some()).count();
        if found != base_length {
            return Err(TransformError::NonStarCount { expected: base_length, found });
        }
        Ok(HiddenString { symbols, base_length })
    }

    /// Wraps raw symbols, taking `a` from the data.
    pub fn from_symbols(symbols: Vec<Option<Symbol>>) -> Self {
        let base_length = symbols.iter().filter(|s| s.is_some()).count();
        HiddenString { symbols, base_length }
    }

    pub fn symbols(&self) -> &[Option<Symbol>] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn base_length(&self) -> usize {
        self.base_length
    }

    /// The non-`*` subsequence, in order.
    pub fn subsequence(&self) -> Vec<Symbol> {
        self.symbols.iter().flatten().copied().collect()
    }

    /// Positions holding non-`*` symbols.
    pub fn support(&self) -> Vec<usize> {
        (0..self.symbols.len()).filter(|&i| self.symbols[i].is_some()).collect()
    }
}

/// Where to place the base symbols.
#[derive(Debug, Clone)]
pub enum Placement {
    /// Explicit 0-based positions; sorted before use.
    Positions(Vec<usize>),
    /// A uniformly random size-`a` subset.
    Seed(u64),
}

/// Places `x` in order at the chosen positions of a length-`b` all-`*` string.
pub fn hide_embed(x: &[Symbol], b: usize, placement: Placement) -> Result<HiddenString> {
    let a = x.len();
    if b < a {
        return Err(TransformError::HidingLength { a, b });
    }
    let mut pos = match placement {
        Placement::Positions(p) => p,
        Placement::Seed(seed) => sample(&mut graphcore::rng::seeded(seed), b, a).into_vec(),
    };
    pos.sort_unstable();
    if pos.len() != a || pos.windows(2).any(|w| w[0] == w[1]) || pos.last().is_some_and(|&p| p >= b) {
        return Err(TransformError::BadPositions { a, b });
    }
    let mut symbols = vec![None; b];
    for (&p, &s) in pos.iter().zip(x) {
        symbols[p] = Some(s);
    }
    Ok(HiddenString { symbols, base_length: a })
}

/// Evaluates `hide_b[f](y)`: validates the `*` count, then applies `f` to the subsequence.
pub fn hide_eval<F: BaseFunction + ?Sized>(f: &F, y: &HiddenString) -> Result<bool> {
    let sub = y.subsequence();
    if sub.len() != f.arity() {
        return Err(TransformError::NonStarCount { expected: f.arity(), found: sub.len() });
    }
    f.eval(&sub)
}

/// `pSearch`: the unique non-`*` symbol.
pub fn psearch_eval(y: &[Option<Symbol>]) -> Result<Symbol> {
    let found: Vec<Symbol> = y.iter().flatten().copied().collect();
    match found.as_slice() {
        [s] => Ok(*s),
        _ => Err(TransformError::PSearch(found.len())),
    }
}

/// Whitespace-separated tokens, `*` literal.
pub fn format_hidden(y: &[Option<Symbol>]) -> String {
    y.iter().map(|s| s.map_or_else(|| "*".to_string(), |v| v.to_string())).collect::<Vec<_>>().join(" ")
}

/// Inverse of [`format_hidden`].
pub fn parse_hidden(text: &str) -> Result<Vec<Option<Symbol>>> {
    text.split_whitespace()
        .map(|t| {
            if t == "*" {
                Ok(None)
            } else {
                t.parse().map(Some).map_err(|_| TransformError::Parse(format!("bad token `{t}`")))
            }
        })
        .collect()
}
