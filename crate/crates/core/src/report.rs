//! Serializable result records shared by the verification suites and the
//! command-line tool.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::planar::FamilyTag;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchEntry {
    pub canonical_t: u64,
    pub planar: bool,
    pub family: FamilyTag,
    pub in_theorem_range: bool,
}

impl SearchEntry {
    pub fn is_mismatch(&self) -> bool {
        self.planar && self.family.is_none()
    }
}

/// One exhaustive search over GF(p^r).
///
/// `timestamp` (seconds since the Unix epoch) is the only field that varies
/// between runs; it is `None` unless the caller stamps the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub tool_version: String,
    pub timestamp: Option<u64>,
    pub p: u64,
    pub r: u32,
    pub q: u64,
    pub entries: Vec<SearchEntry>,
    pub mismatches: Vec<SearchEntry>,
}

impl SearchReport {
    /// Sorts the entries and derives the mismatch list from them.
    pub fn new(p: u64, r: u32, q: u64, mut entries: Vec<SearchEntry>) -> Self {
        entries.sort_by_key(|e| e.canonical_t);
        let mismatches = entries.iter().filter(|e| e.is_mismatch()).cloned().collect();
        SearchReport {
            tool_version: TOOL_VERSION.to_string(),
            timestamp: None,
            p,
            r,
            q,
            entries,
            mismatches,
        }
    }

    pub fn planar_exponents(&self) -> Vec<u64> {
        self.entries
            .iter()
            .filter(|e| e.planar)
            .map(|e| e.canonical_t)
            .collect()
    }

    pub fn stamped(mut self, secs: u64) -> Self {
        self.timestamp = Some(secs);
        self
    }
}

pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub params: Params,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Params,
    pub detail: String,
}

/// Pass/fail record for one identity checked over a parameter grid. The
/// first failing point is kept with a description of what differed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub grid: String,
    pub points: Vec<GridPoint>,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn new(identity_name: impl Into<String>, grid: impl Into<String>) -> Self {
        IdentityReport {
            identity_name: identity_name.into(),
            grid: grid.into(),
            points: Vec::new(),
            counterexample: None,
        }
    }

    pub fn record(&mut self, params: &[(&str, i64)], outcome: Result<(), String>) {
        let params: Params = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let pass = outcome.is_ok();
        if let Err(detail) = outcome {
            if self.counterexample.is_none() {
                self.counterexample = Some(Counterexample {
                    params: params.clone(),
                    detail,
                });
            }
        }
        self.points.push(GridPoint { params, pass });
    }

    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| !p.pass).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_keep_first_counterexample() {
        let mut r = IdentityReport::new("demo", "n <= 2");
        r.record(&[("n", 0)], Ok(()));
        r.record(&[("n", 1)], Err("first".into()));
        r.record(&[("n", 2)], Err("second".into()));
        assert!(!r.passed());
        assert_eq!(r.failures(), 2);
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.detail, "first");
        assert_eq!(ce.params["n"], 1);
    }

    #[test]
    fn mismatches_are_derived() {
        let e = |t, planar, family| SearchEntry {
            canonical_t: t,
            planar,
            family,
            in_theorem_range: false,
        };
        let r = SearchReport::new(
            3,
            1,
            3,
            vec![e(2, true, FamilyTag::NONE), e(1, false, FamilyTag::NONE)],
        );
        assert_eq!(r.entries[0].canonical_t, 1);
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.planar_exponents(), vec![2]);
    }
}
