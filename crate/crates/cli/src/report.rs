//! Verification report schema.
//!
//! One report per identity run: exact rational strings for every recorded
//! failure, pass/point counts, and the wall time in milliseconds. The
//! wall time is the only nondeterministic field; [`Report::canonical`]
//! zeroes it so two runs with different parallelism serialize to identical
//! bytes.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Aggregate classification of one identity run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Every evaluated point held.
    Pass,
    /// All failures sit on documented known-gap points.
    KnownGapConfirmed,
    /// At least one failure outside the documented gaps.
    Fail,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Pass => "pass",
            Classification::KnownGapConfirmed => "known-gap-confirmed",
            Classification::Fail => "fail",
        }
    }
}

/// One failing parameter point with both exact sides (or an `undefined:`
/// marker when a side could not be evaluated).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub anchor: String,
    pub status: String,
    pub classification: Classification,
    pub points: u64,
    pub passes: u64,
    pub failures: Vec<Failure>,
    pub ms: u64,
}

impl Report {
    /// Deterministic form: identical content regardless of execution order
    /// or timing (the `ms` field is zeroed).
    pub fn canonical(&self) -> Report {
        Report {
            ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Batch totals for a `verify-all` run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: u64,
    #[serde(rename = "known-gap-confirmed")]
    pub known_gap_confirmed: u64,
    pub fail: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Batch {
    pub reports: Vec<Report>,
    pub totals: Totals,
}

impl Batch {
    pub fn new(reports: Vec<Report>) -> Self {
        let mut totals = Totals::default();
        for r in &reports {
            match r.classification {
                Classification::Pass => totals.pass += 1,
                Classification::KnownGapConfirmed => totals.known_gap_confirmed += 1,
                Classification::Fail => totals.fail += 1,
            }
        }
        Batch { reports, totals }
    }

    pub fn canonical(&self) -> Batch {
        Batch {
            reports: self.reports.iter().map(Report::canonical).collect(),
            totals: self.totals.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("batch serializes")
    }
}
