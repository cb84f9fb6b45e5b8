//! Check reports shared by all verification suites.

use serde::{Deserialize, Serialize};

/// One failing case: where it happened and what the two sides were.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Failure {
    pub indices: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub pass: bool,
    /// Number of individual cases evaluated.
    pub cases: usize,
    /// Failing cases, if any (capped by the producer).
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Self { id: id.into(), pass: true, cases: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, mk_failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.pass = false;
            if self.failures.len() < 16 {
                self.failures.push(mk_failure());
            }
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        if !other.pass {
            self.pass = false;
            for f in other.failures {
                if self.failures.len() < 16 {
                    self.failures.push(f);
                }
            }
        }
    }
}
