//! Verification reports shared by the solver and the identity suite.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::qseries::{Coefficient, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check refused to run (e.g. a numeric point too close to the real axis).
    Aborted,
}

/// Index range for the binomial-weighted sums `Σ_{i+j=r+s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `i, j ≥ 1`
    Ge1,
    /// `i, j ≥ 2`
    Ge2,
}

impl Convention {
    pub fn lower(self) -> u32 {
        match self {
            Convention::Ge1 => 1,
            Convention::Ge2 => 2,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Ge1 => "ge1",
            Convention::Ge2 => "ge2",
        })
    }
}

/// First coefficient where two exact series disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    /// Which of the checked equalities failed (e.g. `"stuffle"`).
    pub equality: String,
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericWitness {
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub relative_error: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<Convention>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            certified_order: None,
            first_mismatch: None,
            numeric: None,
            convention: None,
            note: None,
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn with_convention(mut self, c: Convention) -> Self {
        self.convention = Some(c);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed_ms = Some(d.as_secs_f64() * 1e3);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Compare two exact series; the first failing equality wins.
    pub fn exact<C: Coefficient>(mut self, equality: &str, lhs: &QSeries<C>, rhs: &QSeries<C>) -> Self {
        let cmp = lhs.compare(rhs);
        self.certified_order = Some(match self.certified_order {
            Some(o) => o.min(cmp.order),
            None => cmp.order,
        });
        if self.status == Status::Pass {
            if let Some(n) = cmp.first_mismatch {
                self.status = Status::Fail;
                self.first_mismatch = Some(Mismatch {
                    equality: equality.to_string(),
                    exponent: n,
                    lhs: lhs.coeff(n).to_string(),
                    rhs: rhs.coeff(n).to_string(),
                });
            }
        }
        self
    }

    /// Record a failing scalar comparison; `index` identifies the sample.
    pub fn mismatch(mut self, equality: &str, index: usize, lhs: impl ToString, rhs: impl ToString) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.first_mismatch = Some(Mismatch {
                equality: equality.to_string(),
                exponent: index,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self
    }

    pub fn numeric(mut self, lhs: [f64; 2], rhs: [f64; 2], tolerance: f64) -> Self {
        let diff = ((lhs[0] - rhs[0]).powi(2) + (lhs[1] - rhs[1]).powi(2)).sqrt();
        let scale = (rhs[0].powi(2) + rhs[1].powi(2)).sqrt();
        let relative_error = if scale > 0.0 { diff / scale } else { diff };
        if !(relative_error <= tolerance) {
            self.status = Status::Fail;
        }
        self.numeric = Some(NumericWitness {
            lhs,
            rhs,
            relative_error,
            tolerance,
        });
        self
    }

    pub fn abort(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Aborted;
        self.note = Some(why.into());
        self
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={}", v.to_string().trim_matches('"')))
            .collect();
        let mut line = format!(
            "{:<7} {} [{}]",
            format!("{:?}", self.status).to_uppercase(),
            self.identity,
            params.join(", ")
        );
        if let Some(m) = &self.first_mismatch {
            line += &format!(" {} fails at q^{}: {} != {}", m.equality, m.exponent, m.lhs, m.rhs);
        }
        if let Some(w) = &self.numeric {
            line += &format!(" rel_err={:.3e} tol={:.1e}", w.relative_error, w.tolerance);
        }
        if let Some(c) = self.convention {
            line += &format!(" convention={c}");
        }
        if let Some(n) = &self.note {
            line += &format!(" ({n})");
        }
        line
    }
}
