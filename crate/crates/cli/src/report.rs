//! Machine-readable reports. Keys serialize in declaration order, complex
//! scalars as two-element arrays [re, im], and every residual travels with
//! its tolerance: no bare booleans. Identical seeds and flags reproduce the
//! bytes exactly, except for the timestamp field.

use serde::Serialize;
use std::time::{SystemTime, UNIX_EPOCH};
use wco_core::Complex64;

pub const SCHEMA_VERSION: u32 = 1;

/// Complex scalar rendered as [re, im].
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(transparent)]
pub struct Cx([f64; 2]);

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx([z.re, z.im])
    }
}

pub fn now_unix_s() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Which way a recorded residual must compare against its threshold.
/// Negative controls demand residuals above a floor rather than below a cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

/// Parameter provenance of the worst draw a check saw.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Provenance {
    pub a0: Option<Cx>,
    pub a1: Option<Cx>,
    pub b: Option<Cx>,
    pub lambda: Option<Cx>,
    pub alpha: Option<Cx>,
}

/// One verified property: the claim it instantiates, the worst residual
/// over all trials, and the threshold it must respect.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub claim: String,
    pub trials: usize,
    pub order: usize,
    pub residual: f64,
    pub comparison: Comparison,
    pub threshold: f64,
    pub pass: bool,
    pub note: Option<String>,
    pub worst_params: Provenance,
}

impl CheckRecord {
    pub fn at_most(
        name: &str,
        claim: &str,
        trials: usize,
        order: usize,
        residual: f64,
        threshold: f64,
    ) -> Self {
        CheckRecord {
            name: name.to_string(),
            claim: claim.to_string(),
            trials,
            order,
            residual,
            comparison: Comparison::AtMost,
            threshold,
            pass: residual <= threshold,
            note: None,
            worst_params: Provenance::default(),
        }
    }

    pub fn at_least(
        name: &str,
        claim: &str,
        trials: usize,
        order: usize,
        residual: f64,
        threshold: f64,
    ) -> Self {
        CheckRecord {
            name: name.to_string(),
            claim: claim.to_string(),
            trials,
            order,
            residual,
            comparison: Comparison::AtLeast,
            threshold,
            pass: residual >= threshold,
            note: None,
            worst_params: Provenance::default(),
        }
    }

    pub fn with_params(mut self, params: Provenance) -> Self {
        self.worst_params = params;
        self
    }

    pub fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

pub fn summarize(checks: &[CheckRecord]) -> Summary {
    let total = checks.len();
    let passed = checks.iter().filter(|c| c.pass).count();
    Summary {
        total,
        passed,
        failed: total - passed,
        all_passed: passed == total,
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub run_id: String,
    pub timestamp_unix_s: u64,
    pub command: &'static str,
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub order: usize,
    pub tol_scale: f64,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

#[derive(Debug, Serialize)]
pub struct SelfMapJson {
    pub is_selfmap: bool,
    pub margin: f64,
    pub boundary: bool,
    pub jung_modulus_margin: f64,
    pub jung_inequality_margin: f64,
}

#[derive(Debug, Serialize)]
pub struct FixedPointJson {
    pub value: Cx,
    pub location: &'static str,
    pub derivative: Cx,
    pub double: bool,
}

#[derive(Debug, Serialize)]
pub struct HermitianJson {
    pub passes: bool,
    pub failed_clauses: Vec<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub run_id: String,
    pub timestamp_unix_s: u64,
    pub command: &'static str,
    pub order: usize,
    pub a0: Cx,
    pub a1: Cx,
    pub b: Cx,
    pub selfmap: SelfMapJson,
    pub classification: Option<&'static str>,
    pub fixed_points: Vec<FixedPointJson>,
    pub interior_lambda: Option<Cx>,
    pub hermitian: HermitianJson,
    pub j_symmetry: Option<CheckRecord>,
}

#[derive(Debug, Serialize)]
pub struct ClassificationFlagJson {
    pub status: &'static str,
    pub asserted: bool,
    pub residual: f64,
    pub tolerance: f64,
}

impl From<wco_core::theory::ClassificationFlag> for ClassificationFlagJson {
    fn from(f: wco_core::theory::ClassificationFlag) -> Self {
        ClassificationFlagJson {
            status: f.status().as_str(),
            asserted: f.asserted,
            residual: f.residual,
            tolerance: f.tolerance,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LftJson {
    pub a: Cx,
    pub b: Cx,
    pub c: Cx,
    pub d: Cx,
}

#[derive(Debug, Serialize)]
pub struct MapJson {
    /// Normalised coefficient tuple when the map is linear fractional.
    pub lft: Option<LftJson>,
    /// Value of the degenerate constant map, when it is one.
    pub constant: Option<Cx>,
}

impl From<&wco_core::lft::DiscMap> for MapJson {
    fn from(map: &wco_core::lft::DiscMap) -> Self {
        match map {
            wco_core::lft::DiscMap::Lft(l) => {
                let n = l.normalized();
                MapJson {
                    lft: Some(LftJson {
                        a: n.a.into(),
                        b: n.b.into(),
                        c: n.c.into(),
                        d: n.d.into(),
                    }),
                    constant: None,
                }
            }
            wco_core::lft::DiscMap::Constant(k) => MapJson {
                lft: None,
                constant: Some((*k).into()),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GeometricWeightJson {
    pub scale: Cx,
    pub ratio: Cx,
}

#[derive(Debug, Serialize)]
pub struct ClassificationJson {
    pub normal: ClassificationFlagJson,
    pub self_adjoint: ClassificationFlagJson,
    pub j_symmetric: ClassificationFlagJson,
    pub jsym_literal_condition: bool,
    pub jsym_squared_condition: bool,
    pub jsym_variants_disagree: bool,
}

impl From<wco_core::theory::ClassificationResult> for ClassificationJson {
    fn from(r: wco_core::theory::ClassificationResult) -> Self {
        ClassificationJson {
            normal: r.normal.into(),
            self_adjoint: r.self_adjoint.into(),
            j_symmetric: r.j_symmetric.into(),
            jsym_literal_condition: r.jsym_literal_condition,
            jsym_squared_condition: r.jsym_squared_condition,
            jsym_variants_disagree: r.jsym_variants_disagree,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CommutantReport {
    pub schema_version: u32,
    pub run_id: String,
    pub timestamp_unix_s: u64,
    pub command: &'static str,
    pub order: usize,
    pub a0: Cx,
    pub a1: Cx,
    pub b: Cx,
    pub alpha: Cx,
    pub g_lambda: Cx,
    pub lambda: Cx,
    pub d0: Cx,
    pub d1: Cx,
    pub d2: Cx,
    pub d3: Cx,
    pub psi: MapJson,
    pub g: GeometricWeightJson,
    pub selfmap: SelfMapJson,
    pub classification: Option<ClassificationJson>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

/// Serialize any report to the canonical pretty JSON string.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}
