//! Pass/fail reports produced by the verification sweeps.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn record<L: ToString, R: ToString>(&mut self, name: impl Into<String>, pass: bool, lhs: L, rhs: R) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Record an exact-equality check of two renderable values.
    pub fn check_eq<T: PartialEq + ToString>(&mut self, name: impl Into<String>, lhs: T, rhs: T) {
        let pass = lhs == rhs;
        self.record(name, pass, lhs, rhs);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}
