//! Per-suite summaries of JSON-lines records.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::{QelabError, Result, ResultRecord};

/// Counts for one suite, active and vacuous records kept apart.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub active: usize,
    pub active_pass: usize,
    pub vacuous: usize,
    pub vacuous_pass: usize,
    /// Largest slack among active records.
    pub worst_slack: Option<f64>,
    pub worst_vacuous_slack: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub suites: Vec<SuiteSummary>,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.active_pass == s.active && s.vacuous_pass == s.vacuous)
    }
}

/// Parses JSON lines, skipping blank lines.
pub fn read_records(text: &str) -> Result<Vec<ResultRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| QelabError::Record { line: i + 1, msg: e.to_string() }))
        .collect()
}

fn worst(cur: Option<f64>, s: f64) -> Option<f64> {
    Some(cur.map_or(s, |c| c.max(s)))
}

pub fn summarize(records: &[ResultRecord]) -> Summary {
    let mut by: BTreeMap<&str, SuiteSummary> = BTreeMap::new();
    for r in records {
        let s = by.entry(&r.suite).or_insert_with(|| SuiteSummary { suite: r.suite.clone(), ..Default::default() });
        if r.vacuous {
            s.vacuous += 1;
            s.vacuous_pass += usize::from(r.pass);
            s.worst_vacuous_slack = worst(s.worst_vacuous_slack, r.slack);
        } else {
            s.active += 1;
            s.active_pass += usize::from(r.pass);
            s.worst_slack = worst(s.worst_slack, r.slack);
        }
    }
    Summary { suites: by.into_values().collect() }
}

fn slack(s: Option<f64>) -> String {
    s.map_or_else(|| "-".to_string(), |v| format!("{v:.3e}"))
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<28} {:>12} {:>12} {:>12} {:>12}", "suite", "active", "vacuous", "worst", "worst-vac")?;
        for s in &self.suites {
            writeln!(
                f,
                "{:<28} {:>12} {:>12} {:>12} {:>12}",
                s.suite,
                format!("{}/{}", s.active_pass, s.active),
                format!("{}/{}", s.vacuous_pass, s.vacuous),
                slack(s.worst_slack),
                slack(s.worst_vacuous_slack)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_input_gives_empty_table() {
        let s = summarize(&read_records("").unwrap());
        assert!(s.suites.is_empty());
        assert!(s.all_pass());
    }

    #[test]
    fn vacuous_records_counted_separately() {
        let p = BTreeMap::new();
        let recs = vec![
            ResultRecord::at_most("a", p.clone(), "x", 0.1, 1.0, 0.0),
            ResultRecord::at_most("a", p.clone(), "x", 0.5, 2.0, 0.0).vacuous(true),
            ResultRecord::at_most("a", p, "x", 3.0, 1.0, 0.0),
        ];
        let s = summarize(&recs);
        assert_eq!((s.suites[0].active, s.suites[0].active_pass, s.suites[0].vacuous), (2, 1, 1));
        assert_eq!(s.suites[0].worst_slack, Some(2.0));
        assert!(!s.all_pass());
    }

    #[test]
    fn malformed_line_is_reported() {
        assert!(matches!(read_records("{}\n"), Err(QelabError::Record { line: 1, .. })));
    }
}
