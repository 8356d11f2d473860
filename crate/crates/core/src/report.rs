use serde::Serialize;
use serde_json::Value;

/// Outcome of a batch of exact identity checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub ok: bool,
    pub checked: usize,
    pub counterexamples: Vec<Value>,
}

/// Only the first few failures are kept; the count is still exact.
const KEEP: usize = 5;

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { ok: true, checked: 0, counterexamples: Vec::new() }
    }

    /// Records one check; `detail` is only built on failure.
    pub fn check(&mut self, passed: bool, detail: impl FnOnce() -> Value) {
        self.checked += 1;
        if !passed {
            self.ok = false;
            if self.counterexamples.len() < KEEP {
                self.counterexamples.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.ok &= other.ok;
        self.checked += other.checked;
        for c in other.counterexamples {
            if self.counterexamples.len() < KEEP {
                self.counterexamples.push(c);
            }
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}
