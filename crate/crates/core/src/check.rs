//! Pass/fail bookkeeping shared by the verification suites.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// One named comparison with its expected and actual values rendered as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Display>(
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Check {
        Check {
            name: name.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn boolean(name: impl Into<String>, pass: bool) -> Check {
        Check {
            name: name.into(),
            pass,
            expected: "true".to_string(),
            actual: pass.to_string(),
        }
    }
}

/// An ordered list of checks from one verification suite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}
