//! Pass/fail bookkeeping for the verification routines.
//!
//! Every checker returns a [`Report`]: one [`Check`] per claim it tested,
//! with an exact counterexample string on failure. Checks never panic on a
//! false identity; they record it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug)]
pub struct Check {
    /// Human-readable statement of what was verified.
    pub claim: String,
    pub status: CheckStatus,
    /// Exact data exhibiting the failure, when there is one.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn pass(&mut self, claim: impl Into<String>) {
        self.checks.push(Check { claim: claim.into(), status: CheckStatus::Pass, counterexample: None });
    }

    pub fn fail(&mut self, claim: impl Into<String>, counterexample: impl Into<String>) {
        self.checks.push(Check {
            claim: claim.into(),
            status: CheckStatus::Fail,
            counterexample: Some(counterexample.into()),
        });
    }

    pub fn check(&mut self, claim: impl Into<String>, ok: bool, counterexample: impl Into<String>) {
        if ok {
            self.pass(claim);
        } else {
            self.fail(claim, counterexample);
        }
    }

    /// Fold another report's checks into this one.
    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// First failure's description, for terse assertions.
    pub fn first_failure(&self) -> Option<String> {
        use alloc::format;
        self.failures().next().map(|c| {
            match &c.counterexample {
                Some(cx) => format!("{}: {}", c.claim, cx),
                None => c.claim.clone(),
            }
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => writeln!(f, "PASS {}", c.claim)?,
                CheckStatus::Fail => {
                    writeln!(f, "FAIL {}", c.claim)?;
                    if let Some(cx) = &c.counterexample {
                        writeln!(f, "     {}", cx)?;
                    }
                }
            }
        }
        Ok(())
    }
}
