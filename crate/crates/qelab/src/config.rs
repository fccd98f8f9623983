//! Experiment configuration files.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{QelabError, Result};

/// Half-open seed range written `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SeedRange {
    pub start: u64,
    pub end: u64,
}

impl SeedRange {
    pub fn range(self) -> Range<u64> {
        self.start..self.end
    }

    pub fn len(self) -> usize {
        (self.end - self.start) as usize
    }

    pub fn is_empty(self) -> bool {
        self.start == self.end
    }
}

impl FromStr for SeedRange {
    type Err = QelabError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || QelabError::Config(format!("seed range must be `a..b` with a ≤ b, got `{s}`"));
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let start: u64 = a.trim().parse().map_err(|_| bad())?;
        let end: u64 = b.trim().parse().map_err(|_| bad())?;
        if start > end {
            return Err(bad());
        }
        Ok(SeedRange { start, end })
    }
}

impl TryFrom<String> for SeedRange {
    type Error = QelabError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SeedRange> for String {
    fn from(r: SeedRange) -> String {
        r.to_string()
    }
}

impl fmt::Display for SeedRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Arithmetic used where a suite supports both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Float,
}

/// One suite invocation. Unknown keys are rejected at every level.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub suite: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default)]
    pub seeds: Option<SeedRange>,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub arithmetic: Option<Arithmetic>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QelabError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| QelabError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Merges a JSON object of parameters over the configured ones.
    pub fn merge_params(&mut self, json: &str) -> Result<()> {
        let extra: BTreeMap<String, Value> =
            serde_json::from_str(json).map_err(|e| QelabError::Config(format!("--params: {e}")))?;
        self.params.extend(extra);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_ranges_parse() {
        assert_eq!("3..7".parse::<SeedRange>().unwrap().range(), 3..7);
        assert!("7..3".parse::<SeedRange>().is_err());
        assert!("x".parse::<SeedRange>().is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(ExperimentConfig::from_json(r#"{"suite":"tvd","colour":1}"#).is_err());
        let c = ExperimentConfig::from_json(r#"{"suite":"tvd-exact","params":{"n":12},"seeds":"0..2"}"#).unwrap();
        assert_eq!(c.seeds.unwrap().len(), 2);
    }
}
