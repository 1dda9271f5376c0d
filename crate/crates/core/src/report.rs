//! Pass/fail reports with witnesses.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub detail: String,
    /// Wall-clock time; kept out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Why a check failed: an optional basis tuple and a message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub witness: Option<Vec<usize>>,
    pub detail: String,
}

impl Failure {
    pub fn at(witness: Vec<usize>, detail: impl Into<String>) -> Failure {
        Failure { witness: Some(witness), detail: detail.into() }
    }

    pub fn msg(detail: impl Into<String>) -> Failure {
        Failure { witness: None, detail: detail.into() }
    }
}

pub type Outcome = Result<String, Failure>;

/// Turns the first witness found by a search into a failure.
pub fn expect_none(found: Option<Vec<usize>>, what: &str) -> Outcome {
    match found {
        None => Ok(String::new()),
        Some(w) => Err(Failure::at(w, format!("{what} violated"))),
    }
}

pub fn expect(ok: bool, what: &str) -> Outcome {
    if ok {
        Ok(String::new())
    } else {
        Err(Failure::msg(format!("{what} violated")))
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    /// Runs and times one check.
    pub fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) -> bool {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        self.record(name, out, elapsed)
    }

    pub fn record(&mut self, name: impl Into<String>, out: Outcome, elapsed: Duration) -> bool {
        let (status, witness, detail) = match out {
            Ok(d) => (Status::Pass, None, d),
            Err(f) => (Status::Fail, f.witness, f.detail),
        };
        self.checks.push(Check { name: name.into(), status, witness, detail, elapsed });
        status == Status::Pass
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skipped,
            witness: None,
            detail: why.into(),
            elapsed: Duration::ZERO,
        });
    }

    /// Appends another report, prefixing its check names.
    pub fn extend(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            c.name = if prefix.is_empty() { c.name } else { format!("{prefix}/{}", c.name) };
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "{tag} {} ({:.1?})", c.name, c.elapsed)?;
            if let Some(w) = &c.witness {
                write!(f, " witness={w:?}")?;
            }
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
