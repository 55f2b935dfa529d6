use std::time::Instant;

use serde::Serialize;
use wreath_core::{parse_group_spec_with, Limits, PermGroup, Result};

/// One predicted-versus-observed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub claim: String,
    pub inputs: Vec<String>,
    pub predicted: bool,
    pub observed: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(skip)]
    pub ms: u64,
}

impl VerificationOutcome {
    pub fn new(claim: &str, inputs: &[&str], predicted: bool, observed: bool) -> Self {
        Self {
            claim: claim.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            predicted,
            observed,
            agree: predicted == observed,
            witness: Vec::new(),
            note: String::new(),
            ms: 0,
        }
    }

    /// A computation that could not be carried out counts as a disagreement.
    pub fn failed(claim: &str, inputs: &[&str], error: &wreath_core::Error) -> Self {
        let mut o = Self::new(claim, inputs, true, false);
        o.note = format!("error: {error}");
        o
    }

    pub fn with_witness(mut self, w: impl ToString) -> Self {
        self.witness.push(w.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        if self.note.is_empty() {
            self.note = note;
        } else {
            self.note = format!("{}; {}", self.note, note);
        }
        self
    }

    /// Marks the outcome as disagreeing because a certificate did not check out.
    pub fn reject(mut self, why: &str) -> Self {
        self.agree = false;
        self.with_note(why)
    }
}

/// A group together with the expression it was built from.
#[derive(Clone, Debug)]
pub struct Named {
    pub spec: String,
    pub group: PermGroup,
}

impl Named {
    pub fn parse(spec: &str) -> Result<Self> {
        Self::parse_with(spec, Limits::default())
    }

    pub fn parse_with(spec: &str, limits: Limits) -> Result<Self> {
        Ok(Self {
            spec: spec.to_string(),
            group: parse_group_spec_with(spec, limits)?,
        })
    }
}

/// Runs `f`, converting an error into a failed outcome and recording the time.
pub fn timed(
    claim: &str,
    inputs: &[&str],
    f: impl FnOnce() -> Result<Vec<VerificationOutcome>>,
) -> Vec<VerificationOutcome> {
    let start = Instant::now();
    let mut out = f().unwrap_or_else(|e| vec![VerificationOutcome::failed(claim, inputs, &e)]);
    let ms = start.elapsed().as_millis() as u64;
    for o in &mut out {
        o.ms = ms;
    }
    out
}
