//! Structured pass/fail reports produced by every axiom checker.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    /// Basis indices of a failing instance, one per quantified variable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Check {
        Check {
            id: id.into(),
            passed: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Option<Vec<usize>>) -> Check {
        Check {
            id: id.into(),
            passed: false,
            witness,
            detail: None,
        }
    }

    /// Passes iff `counterexample` is `None`.
    pub fn from_search(id: impl Into<String>, counterexample: Option<Vec<usize>>) -> Check {
        match counterexample {
            None => Check::pass(id),
            Some(w) => Check::fail(id, Some(w)),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends another report's checks, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.failures().map(|c| c.id.clone()).collect()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    /// One line per check, e.g. `PASS  2c` or `FAIL  2g  witness [0, 1, 1]`.
    pub fn render(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = format!("{}\n", self.subject);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {status}  {:<width$}", c.id));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness {w:?}"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  {d}"));
            }
            out = out.trim_end().to_string();
            out.push('\n');
        }
        out
    }
}
