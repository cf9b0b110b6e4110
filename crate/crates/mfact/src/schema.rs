//! JSON documents read and written by the tool.

use mfact_core::factorization::{VerifyFailure, VerifyMode};
use mfact_core::refined::{SizeReport, ValidationReport};
use mfact_core::{parse_polynomial, MatrixFactorization, PolyMatrix, Polynomial, VerifyReport};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A factorization: `{ f, size, phi, psi }`, every entry in polynomial text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationDoc {
    pub f: String,
    pub size: usize,
    pub phi: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
}

/// A summand-reduced polynomial: `{ terms, products }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrpDoc {
    #[serde(default)]
    pub terms: Vec<String>,
    #[serde(default)]
    pub products: Vec<Vec<String>>,
}

/// One misprinted entry: 0-based position, printed and corrected text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub corrected: String,
}

fn rows_to_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect()
}

impl FactorizationDoc {
    pub fn from_factorization(x: &MatrixFactorization) -> Self {
        FactorizationDoc {
            f: x.f().to_string(),
            size: x.size(),
            phi: rows_to_strings(x.phi()),
            psi: rows_to_strings(x.psi()),
        }
    }

    /// Parses every entry; errors name the offending position.
    pub fn parse(&self) -> Result<(Polynomial, PolyMatrix, PolyMatrix), CliError> {
        let f = parse_polynomial(&self.f).map_err(|e| CliError::Malformed(format!("f: {e}")))?;
        let phi = parse_matrix("phi", &self.phi)?;
        let psi = parse_matrix("psi", &self.psi)?;
        for (name, m) in [("phi", &phi), ("psi", &psi)] {
            if m.rows() != self.size || m.cols() != self.size {
                return Err(CliError::Malformed(format!(
                    "{name} is {}x{} but size is {}",
                    m.rows(),
                    m.cols(),
                    self.size
                )));
            }
        }
        Ok((f, phi, psi))
    }

    pub fn entry_mut(&mut self, matrix: &str, row: usize, col: usize) -> Option<&mut String> {
        let m = match matrix {
            "phi" => &mut self.phi,
            "psi" => &mut self.psi,
            _ => return None,
        };
        m.get_mut(row)?.get_mut(col)
    }
}

fn parse_matrix(name: &str, rows: &[Vec<String>]) -> Result<PolyMatrix, CliError> {
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut parsed = Vec::with_capacity(row.len());
        for (c, s) in row.iter().enumerate() {
            parsed.push(
                parse_polynomial(s)
                    .map_err(|e| CliError::Malformed(format!("{name}[{r}][{c}] {s:?}: {e}")))?,
            );
        }
        out.push(parsed);
    }
    PolyMatrix::from_rows(out).map_err(|e| CliError::Malformed(format!("{name}: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerOfTwo {
    pub exponent: u32,
    /// `2^exponent`, absent when it does not fit in 64 bits.
    pub value: Option<u64>,
}

impl PowerOfTwo {
    pub fn new(exponent: u32) -> Self {
        PowerOfTwo {
            exponent,
            value: 1u64.checked_shl(exponent),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizesDoc {
    pub s: usize,
    pub l: usize,
    pub standard: PowerOfTwo,
    pub improved: PowerOfTwo,
    pub refined: PowerOfTwo,
    pub ratio_refined_vs_standard: PowerOfTwo,
    pub ratio_refined_vs_improved: PowerOfTwo,
}

impl From<&SizeReport> for SizesDoc {
    fn from(r: &SizeReport) -> Self {
        SizesDoc {
            s: r.s,
            l: r.l,
            standard: PowerOfTwo::new(r.standard_exp),
            improved: PowerOfTwo::new(r.improved_exp),
            refined: PowerOfTwo::new(r.refined_exp),
            ratio_refined_vs_standard: PowerOfTwo::new(r.ratio_vs_standard_exp()),
            ratio_refined_vs_improved: PowerOfTwo::new(r.ratio_vs_improved_exp()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionDoc {
    pub condition: u8,
    pub passed: bool,
    pub reason: String,
}

pub fn conditions_doc(v: &ValidationReport) -> Vec<ConditionDoc> {
    v.conditions
        .iter()
        .map(|c| ConditionDoc {
            condition: c.condition,
            passed: c.passed,
            reason: c.reason.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationDoc {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub product: String,
    pub row: usize,
    pub col: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
}

impl From<&VerifyReport> for VerificationDoc {
    fn from(r: &VerifyReport) -> Self {
        let (mode, trials, seed) = match r.mode {
            VerifyMode::Exact => ("exact", None, None),
            VerifyMode::Randomized { trials, seed } => ("randomized", Some(trials), Some(seed)),
        };
        let failure = r.failure.as_ref().map(|f| match f {
            VerifyFailure::Entry {
                product,
                row,
                col,
                found,
                expected,
            } => FailureDoc {
                product: product.to_string(),
                row: *row,
                col: *col,
                found: Some(found.to_string()),
                expected: Some(expected.to_string()),
                trial: None,
            },
            VerifyFailure::Sample {
                product,
                trial,
                row,
                col,
            } => FailureDoc {
                product: product.to_string(),
                row: *row,
                col: *col,
                found: None,
                expected: None,
                trial: Some(*trial),
            },
        });
        VerificationDoc {
            mode: mode.to_string(),
            trials,
            seed,
            passed: r.passed(),
            failure,
        }
    }
}

/// Output of `factorize`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizeOutput {
    pub method: String,
    pub yoshino_variant: String,
    pub standard_variant: String,
    pub predicted: SizesDoc,
    pub verification: VerificationDoc,
    pub factorization: FactorizationDoc,
}

/// Output of `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub f: String,
    pub size: usize,
    pub verification: VerificationDoc,
}

/// Output of `predict`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictOutput {
    pub target: String,
    pub valid: bool,
    pub conditions: Vec<ConditionDoc>,
    pub predicted: SizesDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemoOutput {
    pub passed: bool,
    pub rows: Vec<DemoRow>,
}
