//! Pass/fail records for identity checks.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Result;
use crate::exactnum::{MultiSeries, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// A named list of checks. Reports marked `conjecture` are evidence within
/// the computed window, never proofs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub conjecture: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: &str) -> Report {
        Report { title: title.to_string(), conjecture: false, checks: Vec::new() }
    }

    pub fn conjecture_evidence(title: &str) -> Report {
        Report { conjecture: true, ..Report::new(title) }
    }

    pub fn push(&mut self, label: &str, passed: bool, detail: String) {
        self.checks.push(Check { label: label.to_string(), passed, detail });
    }

    /// Records whether `a` and `b` agree up to their common precision, or
    /// up to `window` where given.
    pub fn compare(&mut self, label: &str, a: &MultiSeries, b: &MultiSeries, window: &[(Var, i32)]) -> Result<bool> {
        let d = a.first_diff(b, window)?;
        let (ok, detail) = match d {
            None => (true, String::new()),
            Some((m, x, y)) => (false, alloc::format!("at {}: {} vs {}", a.mono_text(&m), x, y)),
        };
        self.push(label, ok, detail);
        Ok(ok)
    }

    /// Appends the checks of `other`, prefixing their labels.
    pub fn absorb(&mut self, other: Report) {
        self.conjecture |= other.conjecture;
        for c in other.checks {
            self.checks.push(Check { label: alloc::format!("{}: {}", other.title, c.label), ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let kind = if self.conjecture { " (conjecture evidence)" } else { "" };
        writeln!(f, "{}{}: {} ({} checks)", self.title, kind, verdict, self.checks.len())?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  {} {}", mark, c.label)?;
            } else {
                writeln!(f, "  {} {} [{}]", mark, c.label, c.detail)?;
            }
        }
        Ok(())
    }
}
