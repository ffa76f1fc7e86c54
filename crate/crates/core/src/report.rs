//! Structured verdicts for primality, compositeness and identity checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Prime,
    Composite,
    ConditionHolds,
    ConditionFails,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Prime => "prime",
            Verdict::Composite => "composite",
            Verdict::ConditionHolds => "condition-holds",
            Verdict::ConditionFails => "condition-fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "prime" => Verdict::Prime,
            "composite" => Verdict::Composite,
            "condition-holds" => Verdict::ConditionHolds,
            "condition-fails" => Verdict::ConditionFails,
            "inconclusive" => Verdict::Inconclusive,
            other => return Err(Error::Parse(format!("unknown verdict {other:?}"))),
        })
    }
}

/// One test outcome. Field order is the serialization order; big integers
/// are carried as decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestReport {
    pub method: String,
    pub p: u64,
    pub verdict: Verdict,
    pub residues: Vec<String>,
    pub ratios: Vec<String>,
    pub elapsed_ms: f64,
    pub notes: Vec<String>,
}

impl TestReport {
    pub fn new(method: &str, p: u64, verdict: Verdict) -> Self {
        TestReport {
            method: method.to_string(),
            p,
            verdict,
            residues: Vec::new(),
            ratios: Vec::new(),
            elapsed_ms: 0.0,
            notes: Vec::new(),
        }
    }

    pub fn with_residues<I, T>(mut self, residues: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: ToString,
    {
        self.residues = residues.into_iter().map(|r| r.to_string()).collect();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn timed(mut self, started: std::time::Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        self
    }

    /// What the verdict says about the primality of `2^p − 1`, if anything.
    ///
    /// Condition verdicts translate only where the underlying statement is an
    /// equivalence (`mu`, `sum`); the necessary condition can only refute.
    pub fn primality(&self) -> Option<bool> {
        match (self.verdict, self.method.as_str()) {
            (Verdict::Prime, _) => Some(true),
            (Verdict::Composite, _) => Some(false),
            (Verdict::ConditionHolds, "mu" | "sum") => Some(true),
            (Verdict::ConditionFails, _) => Some(false),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_names_round_trip() {
        for v in [
            Verdict::Prime,
            Verdict::Composite,
            Verdict::ConditionHolds,
            Verdict::ConditionFails,
            Verdict::Inconclusive,
        ] {
            assert_eq!(v.as_str().parse::<Verdict>().unwrap(), v);
        }
    }

    #[test]
    fn json_field_order() {
        let r = TestReport::new("ll", 5, Verdict::Prime).with_residues(["0"]);
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            r#"{"method":"ll","p":5,"verdict":"prime","residues":["0"],"ratios":[],"elapsed_ms":0.0,"notes":[]}"#
        );
    }

    #[test]
    fn primality_mapping() {
        assert_eq!(TestReport::new("necessary", 5, Verdict::ConditionHolds).primality(), None);
        assert_eq!(TestReport::new("mu", 5, Verdict::ConditionHolds).primality(), Some(true));
        assert_eq!(TestReport::new("composite", 5, Verdict::Inconclusive).primality(), None);
    }
}
