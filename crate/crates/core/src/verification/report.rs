use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Identity,
    Congruence,
    Equidistribution,
    Relation,
    Property,
}

/// A concrete witness that a statement is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Coefficient index (q-degree) where the statement breaks.
    pub index: usize,
    pub description: String,
    /// Exact values involved, as decimal strings.
    pub values: Vec<String>,
}

/// Machine-readable outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    /// Short label of the statement being checked.
    pub anchor: String,
    pub kind: ReportKind,
    pub status: Status,
    /// Human-readable description of what range or precision was covered.
    pub range: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

pub type IdentityReport = Report;
pub type CongruenceReport = Report;
pub type EquidistributionReport = Report;

impl Report {
    pub(crate) fn new(id: &str, anchor: &str, kind: ReportKind, range: String) -> Self {
        Report {
            id: id.to_string(),
            anchor: anchor.to_string(),
            kind,
            status: Status::Pass,
            range,
            counterexample: None,
            note: None,
            millis: 0,
        }
    }

    pub(crate) fn fail(mut self, counterexample: Counterexample) -> Self {
        self.status = Status::Fail;
        self.counterexample = Some(counterexample);
        self
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(reason.into());
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The same report with timing zeroed, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.millis = 0;
        self
    }
}
