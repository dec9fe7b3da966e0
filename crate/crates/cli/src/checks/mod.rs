//! Named identity checks. Each check evaluates one identity over a range of
//! cases and keeps the first few failures.

pub mod appendix;
pub mod bases;
pub mod gz;
pub mod mz;
pub mod relations;

use serde::Serialize;

const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub statement: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, statement: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            statement: statement.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(label());
            }
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Folds the cases of `other` into this check.
    pub fn absorb(&mut self, other: Check) {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {} ({} cases, {} failed)",
            self.status(),
            self.name,
            self.cases,
            self.failed
        )
    }
}
