//! Check-entry records shared by the verification suite and the CLI
//! report renderers.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named check with expected/actual values rendered as exact strings.
#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>, actual: impl ToString) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: CheckStatus::Pass,
            expected: None,
            actual: Some(actual.to_string()),
            note: None,
            timing_ms: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: CheckStatus::Fail,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
            timing_ms: None,
        }
    }

    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: CheckStatus::Skipped,
            expected: None,
            actual: None,
            note: Some(note.into()),
            timing_ms: None,
        }
    }

    /// Pass/fail by exact comparison, recording both sides.
    pub fn compare<T: PartialEq + ToString>(
        name: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: if expected == actual {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
            timing_ms: None,
        }
    }

    pub fn boolean(
        name: impl Into<String>,
        ok: bool,
        expected: impl ToString,
        actual: impl ToString,
    ) -> CheckEntry {
        CheckEntry {
            name: name.into(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }

    pub fn is_skipped(&self) -> bool {
        self.status == CheckStatus::Skipped
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckEntry {
        self.note = Some(note.into());
        self
    }
}

/// A list of checks with an overall verdict: pass iff nothing failed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport { checks: Vec::new() }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.checks.push(entry);
    }

    pub fn extend(&mut self, entries: Vec<CheckEntry>) {
        self.checks.extend(entries);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
