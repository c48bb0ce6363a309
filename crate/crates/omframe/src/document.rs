//! Versioned JSON output document.
//!
//! Coefficients are stored as exact strings (`"3"`, `"-1/2"`), each
//! polynomial as its ascending coefficient list, and the frame as a list of
//! rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::frame::{MovingFrame, VerificationReport};
use crate::poly::Poly;
use crate::polyvec::{PolyMatrix, PolyVec};

pub const SCHEMA_VERSION: u32 = 1;

pub type CoeffList = Vec<String>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema: u32,
    pub command: String,
    pub field: String,
    pub input: Vec<CoeffList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd: Option<CoeffList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<Vec<CoeffList>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bezout: Option<Vec<CoeffList>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_basis: Option<Vec<Vec<CoeffList>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivots: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basic: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient_section: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<CheckRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
}

pub fn poly_to_coeffs<F: Field>(field: &F, p: &Poly<F::Elem>) -> CoeffList {
    p.coeffs().iter().map(|c| field.format(c)).collect()
}

pub fn coeffs_to_poly<F: Field>(field: &F, c: &[String]) -> Result<Poly<F::Elem>> {
    let coeffs = c
        .iter()
        .map(|s| field.parse_scalar(s).map_err(|e| Error::Document(format!("coefficient `{s}`: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

pub fn vector_to_coeffs<F: Field>(field: &F, v: &PolyVec<F::Elem>) -> Vec<CoeffList> {
    v.entries().iter().map(|p| poly_to_coeffs(field, p)).collect()
}

pub fn matrix_to_coeffs<F: Field>(field: &F, m: &PolyMatrix<F::Elem>) -> Vec<Vec<CoeffList>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| poly_to_coeffs(field, &m[(i, j)])).collect())
        .collect()
}

pub fn coeffs_to_matrix<F: Field>(field: &F, rows: &[Vec<CoeffList>]) -> Result<PolyMatrix<F::Elem>> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|c| coeffs_to_poly(field, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(rows).map_err(|e| Error::Document(e.to_string()))
}

pub fn report_records(report: &VerificationReport) -> Vec<CheckRecord> {
    report
        .checks
        .iter()
        .map(|c| CheckRecord {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail.clone(),
        })
        .collect()
}

impl OutputDocument {
    pub fn new<F: Field>(command: &str, field: &F, input: &PolyVec<F::Elem>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            field: field.name(),
            input: vector_to_coeffs(field, input),
            ..Self::default()
        }
    }

    /// Fills the frame-related fields.
    pub fn with_frame<F: Field>(mut self, field: &F, frame: &MovingFrame<F::Elem>) -> Self {
        self.gcd = Some(poly_to_coeffs(field, &frame.gcd));
        self.frame = Some(matrix_to_coeffs(field, &frame.matrix));
        self.beta = Some(frame.beta);
        self.mu = Some(frame.mu.clone());
        self.pivots = Some(frame.profile.pivots().to_vec());
        self.basic = Some(frame.profile.basic_indices());
        self
    }

    pub fn with_report(mut self, report: &VerificationReport) -> Self {
        self.verification = Some(report_records(report));
        self
    }

    pub fn input_vector<F: Field>(&self, field: &F) -> Result<PolyVec<F::Elem>> {
        let entries = self
            .input
            .iter()
            .map(|c| coeffs_to_poly(field, c))
            .collect::<Result<Vec<_>>>()?;
        PolyVec::row(entries).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn frame_matrix<F: Field>(&self, field: &F) -> Result<PolyMatrix<F::Elem>> {
        let rows = self
            .frame
            .as_ref()
            .ok_or_else(|| Error::Document("document has no `frame` field".into()))?;
        coeffs_to_matrix(field, rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Document(format!("unsupported schema version {}", doc.schema)));
        }
        Ok(doc)
    }
}

/// Reads a frame from either a full [`OutputDocument`] or a bare JSON list
/// of rows of coefficient lists.
pub fn read_frame_json<F: Field>(field: &F, text: &str) -> Result<(PolyMatrix<F::Elem>, Option<OutputDocument>)> {
    if let Ok(rows) = serde_json::from_str::<Vec<Vec<CoeffList>>>(text) {
        return Ok((coeffs_to_matrix(field, &rows)?, None));
    }
    let doc = OutputDocument::from_json(text)?;
    Ok((doc.frame_matrix(field)?, Some(doc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::frame::{omf, verify_frame, verify_matrix};

    #[test]
    fn round_trip_verifies_identically() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        let report = verify_frame(&Rationals, &a, &f).unwrap();
        let doc = OutputDocument::new("frame", &Rationals, &a).with_frame(&Rationals, &f).with_report(&report);
        let text = doc.to_json();
        assert!(text.contains("\"schema\": 1"));
        let back = OutputDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        let p = back.frame_matrix(&Rationals).unwrap();
        assert_eq!(p, f.matrix);
        let a2 = back.input_vector(&Rationals).unwrap();
        assert_eq!(verify_matrix(&Rationals, &a2, &p).unwrap(), report);
        assert_eq!(back.frame.as_ref().unwrap()[0][1], vec!["3", "-3", "-1"]);
    }

    #[test]
    fn bare_matrix_and_errors() {
        let (m, doc) = read_frame_json(&Rationals, r#"[[["1"],[]],[[],["1/2"]]]"#).unwrap();
        assert!(doc.is_none());
        assert_eq!(m.det(&Rationals).unwrap(), Poly::constant(num_rational::BigRational::new(1.into(), 2.into())));
        assert!(read_frame_json(&Rationals, r#"[[["x"]]]"#).is_err());
        assert!(OutputDocument::from_json(r#"{"schema": 2, "command": "", "field": "", "input": []}"#).is_err());
    }
}
