use std::fmt;

use serde::{Deserialize, Serialize};

/// The first offending tuple of a violated axiom, by element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub elements: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new<I, S>(elements: I, detail: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Witness {
            elements: elements.into_iter().map(Into::into).collect(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}): {}", self.elements.join(", "), self.detail)
    }
}

/// One axiom evaluated exhaustively: how many tuples violated it and the
/// first one found in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub description: String,
    pub violations: u64,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Records a violation; the witness closure only runs for the first one.
    pub fn fail(&mut self, witness: impl FnOnce() -> Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness());
        }
        self.violations += 1;
    }

    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        if !ok {
            self.fail(witness);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Opens a new axiom entry and returns it for recording.
    pub fn check(&mut self, axiom: impl Into<String>, description: impl Into<String>) -> &mut AxiomCheck {
        self.checks.push(AxiomCheck {
            axiom: axiom.into(),
            description: description.into(),
            violations: 0,
            witness: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.iter().map(|c| c.violations).sum()
    }

    /// Appends the checks of `other`, prefixing their axiom ids.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.axiom = format!("{prefix}.{}", c.axiom);
            }
            self.checks.push(c);
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_valid() { "VALID" } else { "INVALID" };
        writeln!(f, "{}: {verdict}", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "  [{mark}] {} - {}", c.axiom, c.description)?;
            if let Some(w) = &c.witness {
                write!(f, " ({} violations; first {w})", c.violations)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of a bounded decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    /// The search bound ran out before the question was settled.
    Indeterminate,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}
