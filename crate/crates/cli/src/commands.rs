//! Implementations of the classify, commutant, and sweep commands, plus the
//! exit-code mapping shared by the binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 hypothesis violation (elliptic automorphism, identity symbol, missing
//! interior fixed point, non-self-map base), 4 degenerate parameters.

use wco_core::lft::{DiscMap, Location};
use wco_core::operators::{commutator_residual, hermitian_symbol_check, Weight, WcoSymbols};
use wco_core::theory::{
    classify_commutant, commutant_symbols, common_fixed_point_residual, fixed_point_lambda,
    jung_symbols, jsym_symbol_conditions, weight_intertwining, CommutantParams, JSYM_MATRIX_TOL,
};
use wco_core::{Complex64, Error};

use crate::report::{
    now_unix_s, summarize, CheckRecord, ClassifyReport, CommutantReport, FixedPointJson,
    GeometricWeightJson, HermitianJson, MapJson, Provenance, SelfMapJson, SCHEMA_VERSION,
};

pub const EXIT_VERIFICATION_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;
pub const EXIT_DEGENERATE: u8 = 4;

/// Maps a core error to the documented process exit code.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EllipticAutomorphism
        | Error::NoInteriorFixedPoint
        | Error::MultipleInteriorFixedPoints
        | Error::IdentitySymbol
        | Error::IdentityMap
        | Error::NotSelfMap { .. }
        | Error::JungNotSelfMap { .. } => EXIT_HYPOTHESIS,
        _ => EXIT_DEGENERATE,
    }
}

pub struct CommandError {
    pub message: String,
    pub exit: u8,
}

impl From<Error> for CommandError {
    fn from(err: Error) -> Self {
        CommandError {
            message: err.to_string(),
            exit: exit_code_for(&err),
        }
    }
}

fn selfmap_json(a0: Complex64, a1: Complex64) -> SelfMapJson {
    let jung = wco_core::lft::jung_selfmap_check(a0, a1);
    let mv = wco_core::lft::jung_phi(a0, a1).selfmap_check();
    SelfMapJson {
        is_selfmap: mv.is_selfmap,
        margin: mv.margin,
        boundary: mv.boundary,
        jung_modulus_margin: jung.modulus_margin,
        jung_inequality_margin: jung.inequality_margin,
    }
}

fn location_str(loc: Location) -> &'static str {
    match loc {
        Location::Interior => "interior",
        Location::Boundary => "boundary",
        Location::Exterior => "exterior",
    }
}

pub fn run_classify(
    a0: Complex64,
    a1: Complex64,
    b: Complex64,
    order: usize,
    tol_scale: f64,
    run_id: String,
) -> Result<ClassifyReport, CommandError> {
    let map = wco_core::lft::jung_phi(a0, a1);
    let selfmap = selfmap_json(a0, a1);

    let fixed_points = match &map {
        DiscMap::Lft(l) => match l.fixed_points() {
            Ok(report) => report
                .points
                .iter()
                .map(|p| FixedPointJson {
                    value: p.value.into(),
                    location: location_str(p.location),
                    derivative: p.derivative.into(),
                    double: p.double,
                })
                .collect(),
            Err(_) => Vec::new(),
        },
        DiscMap::Constant(k) => vec![FixedPointJson {
            value: (*k).into(),
            location: location_str(if k.norm() < 1.0 {
                Location::Interior
            } else {
                Location::Exterior
            }),
            derivative: Complex64::new(0.0, 0.0).into(),
            double: false,
        }],
    };

    let classification = if selfmap.is_selfmap {
        match &map {
            DiscMap::Lft(l) => l.classify().ok().map(|c| c.as_str()),
            // A constant inside the disc fixes exactly its value.
            DiscMap::Constant(_) => Some(wco_core::lft::MapClass::InteriorFixedPoint.as_str()),
        }
    } else {
        None
    };

    let interior_lambda = fixed_point_lambda(a0, a1).ok().map(Into::into);

    let symbols = WcoSymbols::new_unchecked(Weight::Geometric { scale: b, ratio: a0 }, map);
    let hermitian_check = hermitian_symbol_check(&symbols)?;
    let hermitian = HermitianJson {
        passes: hermitian_check.passes,
        failed_clauses: hermitian_check
            .failures
            .iter()
            .map(|f| f.as_str())
            .collect(),
    };

    let j_symmetry = if selfmap.is_selfmap && b.norm() > 0.0 {
        let matrix = symbols.matrix(order)?;
        Some(
            CheckRecord::at_most(
                "jsym-matrix-symmetry",
                "transpose symmetry of the operator matrix in the monomial basis",
                1,
                order,
                matrix.transpose_symmetry_residual(),
                JSYM_MATRIX_TOL * tol_scale,
            )
            .with_params(Provenance {
                a0: Some(a0.into()),
                a1: Some(a1.into()),
                b: Some(b.into()),
                ..Default::default()
            }),
        )
    } else {
        None
    };

    Ok(ClassifyReport {
        schema_version: SCHEMA_VERSION,
        run_id,
        timestamp_unix_s: now_unix_s(),
        command: "classify",
        order,
        a0: a0.into(),
        a1: a1.into(),
        b: b.into(),
        selfmap,
        classification,
        fixed_points,
        interior_lambda,
        hermitian,
        j_symmetry,
    })
}

pub fn run_commutant(
    a0: Complex64,
    a1: Complex64,
    b: Complex64,
    alpha: Complex64,
    g_lambda: Complex64,
    order: usize,
    tol_scale: f64,
    run_id: String,
) -> Result<CommutantReport, CommandError> {
    let base = jung_symbols(a0, a1, b)?;
    let lambda = fixed_point_lambda(a0, a1)?;
    let params = CommutantParams::new(lambda, alpha, g_lambda)?;
    let member = commutant_symbols(&params);

    let provenance = Provenance {
        a0: Some(a0.into()),
        a1: Some(a1.into()),
        b: Some(b.into()),
        lambda: Some(lambda.into()),
        alpha: Some(alpha.into()),
    };

    let mut checks = Vec::new();
    let fp = common_fixed_point_residual(base.map(), member.symbols.map())?;
    checks.push(
        CheckRecord::at_most(
            "common-fixed-point",
            "the commuting map fixes the interior fixed point of the base map",
            1,
            order,
            fp,
            1e-10 * tol_scale,
        )
        .with_params(provenance),
    );
    let iw = weight_intertwining(&base, &member.symbols, 50, 0.9)?;
    checks.push(
        CheckRecord::at_most(
            "pointwise-identities",
            "g (f∘psi) = f (g∘phi) and phi∘psi = psi∘phi pointwise on the disc",
            1,
            order,
            iw.weight_pointwise.max(iw.composition_pointwise),
            1e-10 * tol_scale,
        )
        .with_params(provenance),
    );
    checks.push(
        CheckRecord::at_most(
            "coefficient-identities",
            "cross-multiplied rational identities vanish coefficientwise",
            1,
            order,
            iw.weight_coefficients.max(iw.composition_coefficients),
            1e-12 * tol_scale,
        )
        .with_params(provenance),
    );
    if member.selfmap.is_selfmap {
        let r = commutator_residual(&base, &member.symbols, (order / 4).min(8), order)?;
        checks.push(
            CheckRecord::at_most(
                "matrix-commutator",
                "matrix commutator of the pair vanishes on low-degree monomials",
                1,
                order,
                r,
                1e-8 * tol_scale,
            )
            .with_params(provenance),
        );
    }

    let classification = if member.selfmap.is_selfmap {
        Some(classify_commutant(&member, order, (order / 4).min(8))?.into())
    } else {
        None
    };

    let g = match member.symbols.weight() {
        Weight::Geometric { scale, ratio } => GeometricWeightJson {
            scale: (*scale).into(),
            ratio: (*ratio).into(),
        },
        Weight::Series(_) => unreachable!("commutant weights are geometric"),
    };
    let summary = summarize(&checks);

    Ok(CommutantReport {
        schema_version: SCHEMA_VERSION,
        run_id,
        timestamp_unix_s: now_unix_s(),
        command: "commutant",
        order,
        a0: a0.into(),
        a1: a1.into(),
        b: b.into(),
        alpha: alpha.into(),
        g_lambda: g_lambda.into(),
        lambda: lambda.into(),
        d0: member.coefficients.d0.into(),
        d1: member.coefficients.d1.into(),
        d2: member.coefficients.d2.into(),
        d3: member.coefficients.d3.into(),
        psi: MapJson::from(member.symbols.map()),
        g,
        selfmap: SelfMapJson {
            is_selfmap: member.selfmap.is_selfmap,
            margin: member.selfmap.margin,
            boundary: member.selfmap.boundary,
            jung_modulus_margin: 1.0 - member.coefficients.d0.norm(),
            jung_inequality_margin: {
                let w = member.coefficients.d2 - member.coefficients.d0 * member.coefficients.d0;
                1.0 - w.norm_sqr()
                    - 2.0 * (member.coefficients.d0 + member.coefficients.d0.conj() * w).norm()
            },
        },
        classification,
        checks,
        summary,
    })
}

/// Parsed "re0:re1:steps,im0:im1:steps" grid specification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re0: f64,
    pub re1: f64,
    pub re_steps: usize,
    pub im0: f64,
    pub im1: f64,
    pub im_steps: usize,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<Self, String> {
        let (re_part, im_part) = s
            .split_once(',')
            .ok_or_else(|| format!("grid '{s}' must have two comma-separated ranges"))?;
        let (re0, re1, re_steps) = parse_range(re_part)?;
        let (im0, im1, im_steps) = parse_range(im_part)?;
        Ok(GridSpec {
            re0,
            re1,
            re_steps,
            im0,
            im1,
            im_steps,
        })
    }

    /// Axis values, inclusive of both ends; a single step pins the start.
    fn axis(v0: f64, v1: f64, steps: usize) -> Vec<f64> {
        if steps == 1 {
            return vec![v0];
        }
        (0..steps)
            .map(|k| v0 + (v1 - v0) * k as f64 / (steps - 1) as f64)
            .collect()
    }

    /// Row-major traversal: the real axis is the outer loop.
    pub fn points(&self) -> Vec<Complex64> {
        let res = Self::axis(self.re0, self.re1, self.re_steps);
        let ims = Self::axis(self.im0, self.im1, self.im_steps);
        let mut out = Vec::with_capacity(res.len() * ims.len());
        for re in &res {
            for im in &ims {
                out.push(Complex64::new(*re, *im));
            }
        }
        out
    }
}

fn parse_range(part: &str) -> Result<(f64, f64, usize), String> {
    let fields: Vec<&str> = part.split(':').collect();
    if fields.len() != 3 {
        return Err(format!("range '{part}' must be start:end:steps"));
    }
    let v0 = fields[0]
        .parse::<f64>()
        .map_err(|_| format!("invalid range start '{}'", fields[0]))?;
    let v1 = fields[1]
        .parse::<f64>()
        .map_err(|_| format!("invalid range end '{}'", fields[1]))?;
    let steps = fields[2]
        .parse::<usize>()
        .map_err(|_| format!("invalid step count '{}'", fields[2]))?;
    if steps == 0 {
        return Err("step count must be at least 1".to_string());
    }
    Ok((v0, v1, steps))
}

pub const SWEEP_HEADER: &str = "alpha_re,alpha_im,selfmap_flag,d0_re,d0_im,normal_resid,\
selfadj_resid,jsym_resid,corollary3_literal,corollary3_squared";

/// Classification residuals over a grid of alpha values, one CSV row per
/// point in row-major order. Residual columns of non-self-map (or
/// degenerate) rows are NaN; the condition columns stay meaningful whenever
/// the coefficients exist.
pub fn run_sweep(
    a0: Complex64,
    a1: Complex64,
    b: Complex64,
    grid: &GridSpec,
    order: usize,
) -> Result<String, CommandError> {
    jung_symbols(a0, a1, b)?;
    let lambda = fixed_point_lambda(a0, a1)?;

    let mut csv = String::with_capacity(64 * grid.re_steps * grid.im_steps);
    csv.push_str(SWEEP_HEADER);
    csv.push('\n');
    let nan = f64::NAN;
    for alpha in grid.points() {
        let row = match CommutantParams::new(lambda, alpha, Complex64::new(1.0, 0.0)) {
            Ok(params) => {
                let member = commutant_symbols(&params);
                let d0 = member.coefficients.d0;
                let (literal, squared) =
                    jsym_symbol_conditions(member.coefficients.d0, member.coefficients.d2);
                if member.selfmap.is_selfmap {
                    let result = classify_commutant(&member, order, (order / 4).min(8))?;
                    format_row(
                        alpha,
                        1,
                        d0,
                        result.normal.residual,
                        result.self_adjoint.residual,
                        result.j_symmetric.residual,
                        literal,
                        squared,
                    )
                } else {
                    format_row(alpha, 0, d0, nan, nan, nan, literal, squared)
                }
            }
            // Degenerate denominator at this grid point only.
            Err(Error::DegenerateDenominator) => format_row(
                alpha,
                0,
                Complex64::new(nan, nan),
                nan,
                nan,
                nan,
                false,
                false,
            ),
            Err(err) => return Err(err.into()),
        };
        csv.push_str(&row);
        csv.push('\n');
    }
    Ok(csv)
}

#[allow(clippy::too_many_arguments)]
fn format_row(
    alpha: Complex64,
    selfmap: u8,
    d0: Complex64,
    normal: f64,
    selfadj: f64,
    jsym: f64,
    literal: bool,
    squared: bool,
) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        alpha.re,
        alpha.im,
        selfmap,
        d0.re,
        d0.im,
        normal,
        selfadj,
        jsym,
        literal as u8,
        squared as u8
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing_and_order() {
        let g = GridSpec::parse("0:1:3,-1:1:2").unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 6);
        // Row-major: re outer, im inner.
        assert_eq!(pts[0], Complex64::new(0.0, -1.0));
        assert_eq!(pts[1], Complex64::new(0.0, 1.0));
        assert_eq!(pts[2], Complex64::new(0.5, -1.0));
        assert!(GridSpec::parse("0:1:3").is_err());
        assert!(GridSpec::parse("0:1:0,0:0:1").is_err());
        assert!(GridSpec::parse("a:1:3,0:0:1").is_err());
    }

    #[test]
    fn exit_codes_match_error_classes() {
        assert_eq!(exit_code_for(&Error::EllipticAutomorphism), 3);
        assert_eq!(exit_code_for(&Error::NoInteriorFixedPoint), 3);
        assert_eq!(exit_code_for(&Error::DegenerateDenominator), 4);
        assert_eq!(exit_code_for(&Error::ZeroWeight), 4);
    }
}
