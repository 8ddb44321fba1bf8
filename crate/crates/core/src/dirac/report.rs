//! Serialisable report rows for spectrum and limit sweeps. Field order and
//! record ordering are deterministic so identical configurations produce
//! byte-identical output.

use serde::{Deserialize, Serialize};

/// The resolved Hodge data a report was produced under, as exact strings:
/// delta and xi live in the quadratic extension and carry their radicand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolvedParams {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub delta: String,
    #[serde(rename = "A")]
    pub a: String,
    pub xi: String,
}

impl ResolvedParams {
    pub fn from_hodge(h: &crate::hodge::Hodge) -> Self {
        ResolvedParams {
            alpha: h.params.alpha.to_string(),
            beta: h.params.beta.to_string(),
            gamma: h.params.gamma.to_string(),
            delta: h.delta().to_string_with(h.r2()),
            a: h.coefficient_a().to_string(),
            xi: h.xi().to_string_with(h.r2()),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecordRow {
    pub case: String,
    pub family: String,
    pub lambda_closed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_closed_num: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_numeric: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_err: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigvec_ratios: Option<Vec<[f64; 2]>>,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved: Option<ResolvedParams>,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "N")]
    pub n: i64,
    pub case: String,
    pub records: Vec<RecordRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LimitRow {
    pub family: String,
    pub case: String,
    pub lambda_classical: [f64; 2],
    pub q_grid: Vec<f64>,
    pub abs_err: Vec<f64>,
    pub fitted_order: f64,
    pub monotone: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LimitReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved: Option<ResolvedParams>,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "N")]
    pub n: i64,
    pub rows: Vec<LimitRow>,
}
