use std::fmt;

use serde::{Deserialize, Serialize};

use super::residual::Residual;
use crate::tensor::Tolerance;

/// Order in which operator products act on vectors.
pub const CONVENTION: &str = "rightmost factor applied first";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Self::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.passed() { "pass" } else { "fail" })
    }
}

/// Which residual the verdict compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Raw,
    Normalized,
}

impl Measure {
    pub fn pick(self, r: Residual) -> f64 {
        match self {
            Measure::Raw => r.raw,
            Measure::Normalized => r.normalized,
        }
    }
}

/// `AtMost`: every residual within tolerance. `Exceeds`: every residual
/// strictly above `tolerance.absolute` (negative controls).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    AtMost,
    Exceeds,
}

impl Predicate {
    pub fn holds(self, residual: f64, tol: Tolerance) -> bool {
        match self {
            Predicate::AtMost => tol.accepts(residual, 1.0),
            Predicate::Exceeds => residual > tol.absolute,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub equation: String,
    pub n: Option<usize>,
    pub mode: String,
    pub trials: usize,
    pub seed: u64,
    pub measure: Measure,
    pub predicate: Predicate,
    /// Residuals in the compared measure, one per trial (or per relation).
    pub residuals: Vec<f64>,
    pub raw_residuals: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub max_residual: f64,
    pub tolerance: Tolerance,
    pub verdict: Verdict,
    pub convention: String,
    pub ms: u64,
}

impl VerificationReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_residuals(
        check: &str,
        equation: &str,
        n: Option<usize>,
        mode: String,
        seed: u64,
        measure: Measure,
        predicate: Predicate,
        tolerance: Tolerance,
        results: &[Residual],
        ms: u64,
    ) -> Self {
        let residuals: Vec<f64> = results.iter().map(|r| measure.pick(*r)).collect();
        let raw_residuals = results.iter().map(|r| r.raw).collect();
        let max_residual = residuals.iter().copied().fold(0.0, f64::max);
        let ok = residuals.iter().all(|r| predicate.holds(*r, tolerance));
        Self {
            check: check.to_string(),
            equation: equation.to_string(),
            n,
            mode,
            trials: results.len(),
            seed,
            measure,
            predicate,
            residuals,
            raw_residuals,
            labels: Vec::new(),
            max_residual,
            tolerance,
            verdict: Verdict::from_bool(ok),
            convention: CONVENTION.to_string(),
            ms,
        }
    }
}

/// Outcome of a list of checks sharing seed and trial count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub trials: usize,
    pub verdict: Verdict,
    pub checks: Vec<VerificationReport>,
}
