use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};
use sysalg::{TheoremReport, ValidationReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    Pass,
    Fail,
    Indeterminate,
}

impl Mark {
    pub fn from_verdict(v: Verdict) -> Self {
        match v {
            Verdict::True => Mark::Pass,
            Verdict::False => Mark::Fail,
            Verdict::Indeterminate => Mark::Indeterminate,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Mark::Pass => "pass",
            Mark::Fail => "FAIL",
            Mark::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Mark,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Mark, detail: impl Into<String>) -> Self {
        Check { name: name.into(), verdict, detail: detail.into(), witnesses: Vec::new() }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Fingerprint {
    pub path: String,
    pub sha256: String,
}

impl Fingerprint {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        Fingerprint { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

/// Everything a command reports. Only `elapsed_ms` varies between runs with
/// identical inputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Fingerprint>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            error: None,
            exit_code: 0,
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// One check per axiom, prefixed with `prefix`.
    pub fn absorb_validation(&mut self, prefix: &str, r: &ValidationReport) {
        for c in &r.checks {
            let name = if prefix.is_empty() { c.axiom.clone() } else { format!("{prefix}.{}", c.axiom) };
            let mut check = Check::new(name, if c.passed() { Mark::Pass } else { Mark::Fail }, c.description.clone());
            if let Some(w) = &c.witness {
                check.detail = format!("{} ({} violations)", c.description, c.violations);
                check.witnesses.push(w.to_string());
            }
            self.push(check);
        }
    }

    /// The theorem status plus one check per claim. `strict` turns an unmet
    /// hypothesis into a failure.
    pub fn absorb_theorem(&mut self, prefix: &str, t: &TheoremReport, strict: bool) {
        use sysalg::morita::Status;
        let mark = match t.status {
            Status::Pass => Mark::Pass,
            Status::HypothesisUnmet if !strict => Mark::Pass,
            Status::Fail | Status::HypothesisUnmet => Mark::Fail,
            Status::Indeterminate => Mark::Indeterminate,
        };
        self.push(Check::new(prefix.to_string(), mark, t.status.to_string()));
        for c in std::iter::once(&t.hypothesis).chain(&t.claims) {
            let detail = if c.required { c.detail.clone() } else { format!("{} (informational)", c.detail) };
            let mut check = Check::new(format!("{prefix}.{}", c.name), Mark::from_verdict(c.verdict), detail);
            check.witnesses = c.witnesses.clone();
            self.checks.push(check);
        }
    }

    /// Sets the exit code from the checks, unless an error already did.
    pub fn settle(&mut self, counted: impl Fn(&Check) -> bool) {
        if self.error.is_some() {
            return;
        }
        let relevant = self.checks.iter().filter(|c| counted(c));
        self.exit_code = if relevant.clone().all(|c| c.verdict == Mark::Pass) { 0 } else { 1 };
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.join(" "));
        for i in &self.inputs {
            let _ = writeln!(out, "input: {} sha256={}", i.path, i.sha256);
        }
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}: {}", c.verdict.as_str(), c.name, c.detail);
            for w in &c.witnesses {
                let _ = writeln!(out, "    witness {w}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "{n}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let result = match self.exit_code {
            0 => "ok",
            1 => "property failure",
            _ => "input error",
        };
        let _ = writeln!(out, "result: {result} (exit {})", self.exit_code);
        let _ = writeln!(out, "elapsed: {} ms", self.elapsed_ms);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
