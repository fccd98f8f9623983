//! One JSON line per checked quantity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A checked quantity; `pass` iff `slack ≤ tolerance`, where `slack` is
/// oriented so that negative means room to spare.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRecord {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub metric: String,
    pub value: f64,
    pub bound: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub vacuous: bool,
    pub pass: bool,
    /// Exact value as a reduced fraction, where one exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    /// Wall time in milliseconds; only present when timing is requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl ResultRecord {
    fn new(
        suite: &str,
        params: BTreeMap<String, Value>,
        metric: &str,
        value: f64,
        bound: f64,
        slack: f64,
        tol: f64,
    ) -> Self {
        ResultRecord {
            suite: suite.to_string(),
            params,
            metric: metric.to_string(),
            value,
            bound,
            slack,
            tolerance: tol,
            vacuous: false,
            pass: slack <= tol,
            exact: None,
            wall_ms: None,
        }
    }

    /// `value ≤ bound`.
    pub fn at_most(
        suite: &str,
        params: BTreeMap<String, Value>,
        metric: &str,
        value: f64,
        bound: f64,
        tol: f64,
    ) -> Self {
        Self::new(suite, params, metric, value, bound, value - bound, tol)
    }

    /// `value ≥ bound`.
    pub fn at_least(
        suite: &str,
        params: BTreeMap<String, Value>,
        metric: &str,
        value: f64,
        bound: f64,
        tol: f64,
    ) -> Self {
        Self::new(suite, params, metric, value, bound, bound - value, tol)
    }

    /// `lo ≤ value ≤ hi`; `bound` records `hi`.
    pub fn within(suite: &str, params: BTreeMap<String, Value>, metric: &str, value: f64, lo: f64, hi: f64) -> Self {
        Self::new(suite, params, metric, value, hi, (lo - value).max(value - hi), 0.0)
    }

    /// Exact equality of reduced fractions.
    pub fn exact_eq(
        suite: &str,
        params: BTreeMap<String, Value>,
        metric: &str,
        value: (&str, f64),
        expected: (&str, f64),
    ) -> Self {
        let equal = value.0 == expected.0;
        let mut r = Self::new(suite, params, metric, value.1, expected.1, (value.1 - expected.1).abs(), 0.0);
        r.pass = equal;
        if !equal && r.slack == 0.0 {
            r.slack = f64::MIN_POSITIVE;
        }
        r.exact = Some(value.0.to_string());
        r
    }

    pub fn vacuous(mut self, v: bool) -> Self {
        self.vacuous = v;
        self
    }

    pub fn with_exact(mut self, s: String) -> Self {
        self.exact = Some(s);
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}
