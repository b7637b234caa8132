//! Structured check results and the discrepancy ledger.
//!
//! A [`CheckReport`] records one claimed-versus-computed comparison. A
//! [`DiscrepancyEntry`] records a place where a stated closed form and the
//! evaluation of its own printed ingredients disagree; such checks carry the
//! [`Verdict::Ledgered`] verdict and never fail a run.

use serde::{Deserialize, Serialize};

use crate::linalg::Complex;

/// A real or complex number as emitted in reports. Complex values serialize
/// as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Real(f64),
    Complex([f64; 2]),
}

impl Value {
    pub fn as_complex(&self) -> Complex {
        match *self {
            Value::Real(x) => Complex::new(x, 0.0),
            Value::Complex([re, im]) => Complex::new(re, im),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Real(x as f64)
    }
}

impl From<Complex> for Value {
    fn from(z: Complex) -> Self {
        Value::Complex([z.re, z.im])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Ledgered,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Ledgered => "ledgered",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// The relation being checked, written out as a formula.
    pub claim: String,
    pub claimed: Value,
    pub computed: Value,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub verdict: Verdict,
    pub notes: String,
}

/// Relative error with the convention that a zero claimed value falls back to
/// the absolute error.
pub fn relative_error(claimed: Complex, computed: Complex) -> f64 {
    let abs_err = (computed - claimed).norm();
    let scale = claimed.norm();
    if scale == 0.0 {
        abs_err
    } else {
        abs_err / scale
    }
}

impl CheckReport {
    pub fn compare(
        id: impl Into<String>,
        claim: impl Into<String>,
        claimed: impl Into<Value>,
        computed: impl Into<Value>,
        tol_abs: f64,
        tol_rel: f64,
    ) -> Self {
        let claimed = claimed.into();
        let computed = computed.into();
        let (a, b) = (claimed.as_complex(), computed.as_complex());
        let abs_err = (b - a).norm();
        let rel_err = relative_error(a, b);
        Self::with_errors(id, claim, claimed, computed, abs_err, rel_err, tol_abs, tol_rel)
    }

    /// A deviation that should vanish. `scale` normalises the relative error
    /// (pass `1.0` when the deviation is already relative).
    pub fn deviation(
        id: impl Into<String>,
        claim: impl Into<String>,
        deviation: f64,
        scale: f64,
        tol_abs: f64,
        tol_rel: f64,
    ) -> Self {
        let rel = if scale > 0.0 { deviation / scale } else { deviation };
        Self::with_errors(
            id,
            claim,
            Value::Real(0.0),
            Value::Real(deviation),
            deviation,
            rel,
            tol_abs,
            tol_rel,
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_errors(
        id: impl Into<String>,
        claim: impl Into<String>,
        claimed: Value,
        computed: Value,
        abs_err: f64,
        rel_err: f64,
        tol_abs: f64,
        tol_rel: f64,
    ) -> Self {
        let pass = abs_err <= tol_abs || rel_err <= tol_rel;
        Self {
            id: id.into(),
            claim: claim.into(),
            claimed,
            computed,
            abs_err,
            rel_err,
            tol_abs,
            tol_rel,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            notes: String::new(),
        }
    }

    /// Boolean property check: claimed 1, computed 1 or 0.
    pub fn holds(id: impl Into<String>, claim: impl Into<String>, ok: bool) -> Self {
        Self::compare(id, claim, 1.0, if ok { 1.0 } else { 0.0 }, 0.0, 0.0)
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    /// Marks the check as a recorded discrepancy: the comparison result is
    /// kept, the verdict becomes `ledgered`.
    pub fn ledgered(mut self) -> Self {
        self.verdict = Verdict::Ledgered;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Machine-readable record of a stated/computed mismatch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyEntry {
    pub id: String,
    /// The relation as stated, written out as a formula.
    pub equation: String,
    pub stated: Value,
    pub computed: Value,
    /// `stated / computed` when both are real and the denominator is non-zero.
    pub ratio: Option<f64>,
    pub notes: String,
}

impl DiscrepancyEntry {
    pub fn new(
        id: impl Into<String>,
        equation: impl Into<String>,
        stated: impl Into<Value>,
        computed: impl Into<Value>,
        notes: impl Into<String>,
    ) -> Self {
        let stated = stated.into();
        let computed = computed.into();
        let ratio = match (stated, computed) {
            (Value::Real(s), Value::Real(c)) if c != 0.0 => Some(s / c),
            _ => None,
        };
        Self {
            id: id.into(),
            equation: equation.into(),
            stated,
            computed,
            ratio,
            notes: notes.into(),
        }
    }
}

/// Checks plus ledger entries produced by one suite or command.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Findings {
    pub checks: Vec<CheckReport>,
    pub ledger: Vec<DiscrepancyEntry>,
}

impl Findings {
    pub fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    /// Adds a ledger entry unless one with the same id is already present.
    pub fn record(&mut self, entry: DiscrepancyEntry) {
        if !self.ledger.iter().any(|e| e.id == entry.id) {
            self.ledger.push(entry);
        }
    }

    pub fn extend(&mut self, other: Findings) {
        self.checks.extend(other.checks);
        for entry in other.ledger {
            self.record(entry);
        }
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(CheckReport::failed)
    }
}
