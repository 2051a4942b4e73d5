//! Machine-readable report files.
//!
//! Reports embed the schema tag, the library version, and the fully
//! resolved run configuration, so a report alone reproduces its run.
//! Serialization is deterministic: struct field order is fixed and every
//! collection is an ordered vector.

use serde::{Deserialize, Serialize};
use svapprox_core::set_functions::PNorm;
use svapprox_core::theorems::{TheoremReport, Verdict};
use svapprox_core::trig_approx::{BestApprox, Certificate};

pub const SCHEMA: &str = "svapprox-report/1";

pub fn library_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Fully resolved configuration of one invocation, echoed into reports.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    pub command: String,
    pub kernel: String,
    pub n: usize,
    pub p: Option<String>,
    pub q: Option<String>,
    pub n_x: usize,
    pub n_xi: usize,
    pub dim: usize,
    pub samples: usize,
    pub sweep: usize,
    pub solver_grid: usize,
    pub solver_tol: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReportFile {
    pub schema: String,
    pub version: String,
    pub config: RunConfig,
    pub reports: Vec<TheoremReportDto>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremReportDto {
    pub theorem: u8,
    pub kernel: String,
    pub n: usize,
    pub p: String,
    pub q: Option<String>,
    pub values: Vec<NamedValue>,
    pub witnesses: Vec<NamedSeries>,
    pub notes: Vec<String>,
    pub tolerance: f64,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedSeries {
    pub name: String,
    pub samples: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ApproxReportFile {
    pub schema: String,
    pub version: String,
    pub config: RunConfig,
    pub norm: String,
    pub error: f64,
    pub certified: bool,
    pub certificate: CertificateDto,
    pub iterations: usize,
    pub a0: f64,
    pub cos_coeffs: Vec<f64>,
    pub sin_coeffs: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateDto {
    Orthogonality { max_residual: f64 },
    Alternation { count: usize, level: f64, deviation: f64 },
    SignAgreement { theta: f64, min_margin: f64, excluded: usize },
}

pub fn pnorm_label(p: PNorm) -> &'static str {
    match p {
        PNorm::One => "1",
        PNorm::Two => "2",
        PNorm::Inf => "inf",
    }
}

pub fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::NotApplicable => "not-applicable",
    }
}

impl From<&TheoremReport> for TheoremReportDto {
    fn from(r: &TheoremReport) -> Self {
        TheoremReportDto {
            theorem: r.theorem,
            kernel: r.kernel.clone(),
            n: r.n,
            p: pnorm_label(r.p).to_string(),
            q: r.q.map(|q| pnorm_label(q).to_string()),
            values: r
                .values
                .iter()
                .map(|(name, value)| NamedValue { name: name.clone(), value: *value })
                .collect(),
            witnesses: r
                .witnesses
                .iter()
                .map(|(name, samples)| NamedSeries { name: name.clone(), samples: samples.clone() })
                .collect(),
            notes: r.notes.clone(),
            tolerance: r.tolerance,
            verdict: verdict_label(r.verdict).to_string(),
        }
    }
}

impl From<&Certificate> for CertificateDto {
    fn from(c: &Certificate) -> Self {
        match *c {
            Certificate::Orthogonality { max_residual } => {
                CertificateDto::Orthogonality { max_residual }
            }
            Certificate::Alternation { count, level, deviation } => {
                CertificateDto::Alternation { count, level, deviation }
            }
            Certificate::SignAgreement { theta, min_margin, excluded } => {
                CertificateDto::SignAgreement { theta, min_margin, excluded }
            }
        }
    }
}

pub fn verify_report(config: RunConfig, reports: &[TheoremReport]) -> VerifyReportFile {
    VerifyReportFile {
        schema: SCHEMA.to_string(),
        version: library_version(),
        config,
        reports: reports.iter().map(TheoremReportDto::from).collect(),
    }
}

pub fn approx_report(config: RunConfig, norm: PNorm, sol: &BestApprox) -> ApproxReportFile {
    ApproxReportFile {
        schema: SCHEMA.to_string(),
        version: library_version(),
        config,
        norm: pnorm_label(norm).to_string(),
        error: sol.error,
        certified: sol.certified,
        certificate: CertificateDto::from(&sol.certificate),
        iterations: sol.iterations,
        a0: sol.poly.a0(),
        cos_coeffs: (1..sol.poly.order_bound()).map(|k| sol.poly.cos_coeff(k)).collect(),
        sin_coeffs: (1..sol.poly.order_bound()).map(|k| sol.poly.sin_coeff(k)).collect(),
    }
}

/// Renders a report to pretty JSON with a trailing newline; the output is a
/// pure function of the report contents.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization");
    s.push('\n');
    s
}
