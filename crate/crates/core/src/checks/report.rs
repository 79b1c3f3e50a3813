use std::fmt;

use serde::{Deserialize, Serialize};

/// At most this many counterexamples are kept per report; `failures` keeps
/// the full count.
pub const MAX_COUNTEREXAMPLES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Element ids involved: `(x, y)` for pairs, `(x, y, z)` for triples.
    pub elements: Vec<u32>,
    pub poly: String,
    pub reason: String,
}

/// Outcome of one check; `pass` holds exactly when no counterexample was recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub group: String,
    pub pass: bool,
    /// Pairs, triples or columns examined, depending on the check.
    pub examined: u64,
    pub max_coeff: i64,
    pub distinct: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Observations that do not affect `pass`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, group: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            group: group.into(),
            pass: true,
            examined: 0,
            max_coeff: 0,
            distinct: 0,
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, elements: Vec<u32>, poly: impl fmt::Display, reason: impl Into<String>) {
        self.failures += 1;
        self.pass = false;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                elements,
                poly: poly.to_string(),
                reason: reason.into(),
            });
        }
    }

    pub fn see_coeff(&mut self, c: i64) {
        self.max_coeff = self.max_coeff.max(c);
    }

    /// Combines reports of the same check over disjoint work.
    pub fn merge(&mut self, other: CheckReport) {
        self.pass &= other.pass;
        self.examined += other.examined;
        self.max_coeff = self.max_coeff.max(other.max_coeff);
        self.distinct = self.distinct.max(other.distinct);
        self.failures += other.failures;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
        self.notes.extend(other.notes);
        if self.failures > 0 {
            self.pass = false;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} (examined {}, max coefficient {}, distinct {}, failures {})",
            self.check,
            self.group,
            if self.pass { "PASS" } else { "FAIL" },
            self.examined,
            self.max_coeff,
            self.distinct,
            self.failures
        )?;
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        for c in &self.counterexamples {
            let ids: Vec<String> = c.elements.iter().map(u32::to_string).collect();
            write!(f, "\n  ({}) {}: {}", ids.join(", "), c.reason, c.poly)?;
        }
        Ok(())
    }
}
