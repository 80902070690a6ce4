//! Executable form of the operator theory: construction of the transpose-
//! symmetric symbol families and of the maps that commute with them, the
//! fixed-point and coefficient relations they satisfy, eigenvectors, and the
//! classification of commutant members as normal, self-adjoint, or symmetric.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::grid::disc_grid;
use crate::lft::{blaschke_factor, jung_phi, jung_selfmap_check, DiscMap, Lft, SelfMapCheck};
use crate::operators::{normality_residual, Weight, WcoSymbols};
use crate::series::{self, TruncatedSeries};

/// Absolute band for treating an imaginary part as zero.
const REALITY_TOL: f64 = 1e-12;
/// Band for |modulus - 1| when rejecting elliptic rotations.
const UNIT_MODULUS_TOL: f64 = 1e-12;
/// Relative tolerance for the degenerate denominator lambda^2 alpha - 1.
const DENOMINATOR_TOL: f64 = 1e-12;
/// Points closer than this to the fixed point are skipped when the quotient
/// has a removable singularity there.
const SINGULARITY_EXCLUSION: f64 = 1e-3;

/// Matrix tolerance for transpose symmetry at any truncation order.
pub const JSYM_MATRIX_TOL: f64 = 1e-12;
/// Matrix tolerance for Hermitian-ness at any truncation order.
pub const HERMITIAN_MATRIX_TOL: f64 = 1e-12;
/// Tail-limited tolerance for the normality residual at order 128 with
/// degree headroom 8 and symbol bounds <= 0.8.
pub const NORMALITY_TOL: f64 = 1e-6;

/// The derived coefficients d0..d3 shared by both commutant
/// parameterisations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutantCoefficients {
    pub d0: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
}

/// Parameters of the commutant family around a base with interior fixed
/// point lambda: the free scalar alpha and the weight normalisation
/// g(lambda), together with the derived coefficients
/// d0 = d1 = lambda (alpha - 1) / (lambda^2 alpha - 1),
/// d2 = alpha (lambda^2 - 1)^2 / (lambda^2 alpha - 1)^2,
/// d3 = (lambda^2 - 1) / (lambda^2 alpha - 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutantParams {
    pub lambda: Complex64,
    pub alpha: Complex64,
    pub g_at_lambda: Complex64,
    pub coefficients: CommutantCoefficients,
}

impl CommutantParams {
    pub fn new(lambda: Complex64, alpha: Complex64, g_at_lambda: Complex64) -> Result<Self> {
        for z in [lambda, alpha, g_at_lambda] {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteCoefficient);
            }
        }
        if lambda.norm() >= 1.0 {
            return Err(Error::PointOutsideDisc {
                modulus: lambda.norm(),
            });
        }
        if g_at_lambda.norm() == 0.0 {
            return Err(Error::ZeroWeight);
        }
        let one = Complex64::new(1.0, 0.0);
        let den = lambda * lambda * alpha - one;
        if den.norm() <= DENOMINATOR_TOL * (1.0 + (lambda * lambda * alpha).norm()) {
            return Err(Error::DegenerateDenominator);
        }
        let d0 = lambda * (alpha - one) / den;
        let d2 = alpha * (lambda * lambda - one) * (lambda * lambda - one) / (den * den);
        let d3 = (lambda * lambda - one) / den;
        Ok(CommutantParams {
            lambda,
            alpha,
            g_at_lambda,
            coefficients: CommutantCoefficients { d0, d1: d0, d2, d3 },
        })
    }
}

/// A constructed commutant member: its symbols, the derived coefficients,
/// and the self-map verdict for the composition symbol. Symbols are produced
/// for every alpha; operator-level (matrix) use must be gated on `selfmap`.
#[derive(Debug, Clone)]
pub struct CommutantSymbols {
    pub lambda: Complex64,
    pub alpha: Complex64,
    pub coefficients: CommutantCoefficients,
    pub symbols: WcoSymbols,
    pub selfmap: SelfMapCheck,
}

/// Symbols f(z) = b / (1 - a0 z), phi(z) = a0 + a1 z / (1 - a0 z): the
/// family whose operators are transpose symmetric at every truncation.
pub fn jung_symbols(a0: Complex64, a1: Complex64, b: Complex64) -> Result<WcoSymbols> {
    if b.norm() == 0.0 {
        return Err(Error::ZeroWeight);
    }
    if a1 == Complex64::new(1.0, 0.0) {
        return Err(Error::IdentitySymbol);
    }
    let check = jung_selfmap_check(a0, a1);
    if !check.passes {
        return Err(Error::JungNotSelfMap {
            modulus_margin: check.modulus_margin,
            inequality_margin: check.inequality_margin,
        });
    }
    WcoSymbols::new(Weight::Geometric { scale: b, ratio: a0 }, jung_phi(a0, a1))
}

/// Symbols f(z) = c / (1 - ā0 z), phi(z) = a0 + a1 z / (1 - ā0 z) with real
/// c and a1: the family whose operators are Hermitian.
pub fn hermitian_symbols(a0: Complex64, a1: Complex64, c: Complex64) -> Result<WcoSymbols> {
    if c.norm() == 0.0 {
        return Err(Error::ZeroWeight);
    }
    WcoSymbols::new(
        Weight::Geometric {
            scale: c,
            ratio: a0.conj(),
        },
        crate::lft::hermitian_phi(a0, a1),
    )
}

/// The fixed point of the normal-form map inside the disc. Elliptic
/// automorphisms (and the identity) are rejected: the commutant description
/// excludes them by hypothesis.
pub fn fixed_point_lambda(a0: Complex64, a1: Complex64) -> Result<Complex64> {
    if a0.norm() == 0.0 {
        if a1 == Complex64::new(1.0, 0.0) {
            return Err(Error::IdentitySymbol);
        }
        if (a1.norm() - 1.0).abs() <= UNIT_MODULUS_TOL {
            // A rotation fixes the origin but is an elliptic automorphism.
            return Err(Error::EllipticAutomorphism);
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    match jung_phi(a0, a1) {
        DiscMap::Constant(k) => {
            if k.norm() < 1.0 - UNIT_MODULUS_TOL {
                Ok(k)
            } else {
                Err(Error::NoInteriorFixedPoint)
            }
        }
        DiscMap::Lft(l) => {
            if l.is_identity() {
                return Err(Error::IdentitySymbol);
            }
            if l.is_automorphism() {
                let report = l.fixed_points()?;
                return if report.interior().next().is_some() {
                    Err(Error::EllipticAutomorphism)
                } else {
                    Err(Error::NoInteriorFixedPoint)
                };
            }
            l.interior_fixed_point()
        }
    }
}

/// Builds the commuting symbols for the given parameters:
/// psi(z) = ((lambda^2 - alpha) z + lambda (alpha - 1))
///        / (lambda (1 - alpha) z + (lambda^2 alpha - 1))
/// and g(z) = g(lambda) d3 / (1 - d1 z). For lambda = 0 this collapses to
/// psi = alpha z with constant weight, and for alpha = 0 the determinant
/// vanishes and psi is the constant map at lambda.
pub fn commutant_symbols(params: &CommutantParams) -> CommutantSymbols {
    let one = Complex64::new(1.0, 0.0);
    let lambda = params.lambda;
    let alpha = params.alpha;
    let map = match Lft::new(
        lambda * lambda - alpha,
        lambda * (alpha - one),
        lambda * (one - alpha),
        lambda * lambda * alpha - one,
    ) {
        Ok(l) => DiscMap::Lft(l),
        // Determinant alpha (lambda^2 - 1)^2 vanishes only for alpha -> 0,
        // where the map degenerates to the constant lambda.
        Err(_) => DiscMap::Constant(lambda),
    };
    let weight = Weight::Geometric {
        scale: params.g_at_lambda * params.coefficients.d3,
        ratio: params.coefficients.d1,
    };
    let selfmap = map.selfmap_check();
    CommutantSymbols {
        lambda,
        alpha,
        coefficients: params.coefficients,
        symbols: WcoSymbols::new_unchecked(weight, map),
        selfmap,
    }
}

/// The commutant family around a self-adjoint base with fixed point b:
/// d0 = (alpha - 1) b / (|b|^2 alpha - 1), d1 = (alpha - 1) b̄ / (|b|^2 alpha - 1),
/// d2 = alpha (|b|^2 - 1)^2 / (|b|^2 alpha - 1)^2, d3 = (|b|^2 - 1) / (|b|^2 alpha - 1),
/// with psi(z) = d0 + d2 z / (1 - d1 z) and g(z) = g(b) d3 / (1 - d1 z).
/// For real b this coincides with [`commutant_symbols`] at lambda = b.
pub fn ek_commutant_symbols(
    b: Complex64,
    alpha: Complex64,
    g_at_b: Complex64,
) -> Result<CommutantSymbols> {
    if b.norm() >= 1.0 {
        return Err(Error::PointOutsideDisc { modulus: b.norm() });
    }
    if g_at_b.norm() == 0.0 {
        return Err(Error::ZeroWeight);
    }
    let one = Complex64::new(1.0, 0.0);
    let b_sq = Complex64::new(b.norm_sqr(), 0.0);
    let den = b_sq * alpha - one;
    if den.norm() <= DENOMINATOR_TOL * (1.0 + (b_sq * alpha).norm()) {
        return Err(Error::DegenerateDenominator);
    }
    let d0 = (alpha - one) * b / den;
    let d1 = (alpha - one) * b.conj() / den;
    let d2 = alpha * (b_sq - one) * (b_sq - one) / (den * den);
    let d3 = (b_sq - one) / den;
    // psi = d0 + d2 z / (1 - d1 z) = ((d2 - d0 d1) z + d0) / (-d1 z + 1),
    // determinant d2; alpha -> 0 degenerates to the constant map at b.
    let map = match Lft::new(d2 - d0 * d1, d0, -d1, one) {
        Ok(l) => DiscMap::Lft(l),
        Err(_) => DiscMap::Constant(b),
    };
    let weight = Weight::Geometric {
        scale: g_at_b * d3,
        ratio: d1,
    };
    let selfmap = map.selfmap_check();
    Ok(CommutantSymbols {
        lambda: b,
        alpha,
        coefficients: CommutantCoefficients { d0, d1, d2, d3 },
        symbols: WcoSymbols::new_unchecked(weight, map),
        selfmap,
    })
}

/// Residuals of the two coefficient relations tying (a0, a1) to the derived
/// coefficients at the fixed point lambda:
/// (1) d1 + a0 (d2 - d0 d1) = a0 + d1 (a1 - a0^2), and
/// (2) d̄0 (d2 - d0^2 - 1) = -λ̄ (lambda^2 + 1) |1 - alpha|^2 / |lambda^2 alpha - 1|^2.
pub fn coefficient_relations_residuals(
    a0: Complex64,
    a1: Complex64,
    lambda: Complex64,
    alpha: Complex64,
) -> Result<(f64, f64)> {
    let fixed_residual = (jung_phi(a0, a1).apply(lambda)? - lambda).norm();
    if fixed_residual > 1e-8 {
        return Err(Error::InconsistentFixedPoint {
            residual: fixed_residual,
        });
    }
    let p = CommutantParams::new(lambda, alpha, Complex64::new(1.0, 0.0))?;
    let CommutantCoefficients { d0, d1, d2, .. } = p.coefficients;
    let one = Complex64::new(1.0, 0.0);

    let r1 = ((d1 + a0 * (d2 - d0 * d1)) - (a0 + d1 * (a1 - a0 * a0))).norm();

    let den = lambda * lambda * alpha - one;
    let lhs = d0.conj() * (d2 - d0 * d0 - one);
    let rhs = -lambda.conj()
        * (lambda * lambda + one)
        * Complex64::new((one - alpha).norm_sqr() / den.norm_sqr(), 0.0);
    Ok((r1, (lhs - rhs).norm()))
}

/// Result of the reality criterion: the two sides of
/// d̄0 (d2 - d0^2 - 1) = d0 (conj(d2 - d0^2) - 1) agree exactly when lambda
/// is real.
#[derive(Debug, Clone, Copy)]
pub struct RealityCheck {
    pub residual: f64,
    pub lambda_is_real: bool,
}

pub fn lambda_real_equivalence(lambda: Complex64, alpha: Complex64) -> Result<RealityCheck> {
    let p = CommutantParams::new(lambda, alpha, Complex64::new(1.0, 0.0))?;
    let CommutantCoefficients { d0, d2, .. } = p.coefficients;
    let one = Complex64::new(1.0, 0.0);
    let lhs = d0.conj() * (d2 - d0 * d0 - one);
    let rhs = d0 * ((d2 - d0 * d0).conj() - one);
    Ok(RealityCheck {
        residual: (lhs - rhs).norm(),
        lambda_is_real: lambda.im.abs() <= REALITY_TOL,
    })
}

/// The eigenvector g_j(z) = (1 / (1 - lambda z)) ((lambda - z) / (1 - lambda z))^j,
/// truncated at the given order. Its eigenvalue under the base operator is
/// f(lambda) phi'(lambda)^j; see [`eigenvalue_for`].
pub fn eigenfunction(lambda: Complex64, j: usize, order: usize) -> Result<TruncatedSeries> {
    if lambda.norm() >= 1.0 {
        return Err(Error::PointOutsideDisc {
            modulus: lambda.norm(),
        });
    }
    let base = series::geometric_series(Complex64::new(1.0, 0.0), lambda, order)?;
    if j == 0 {
        return Ok(base);
    }
    let factor_map = Lft::new(
        Complex64::new(-1.0, 0.0),
        lambda,
        -lambda,
        Complex64::new(1.0, 0.0),
    )?;
    let factor = series::lft_taylor(&factor_map, order)?;
    let mut out = base;
    for _ in 0..j {
        out = out.mul(&factor)?;
    }
    Ok(out)
}

/// f(lambda) phi'(lambda)^j for the given symbols.
pub fn eigenvalue_for(symbols: &WcoSymbols, lambda: Complex64, j: usize) -> Result<Complex64> {
    let f_lambda = symbols.weight_at(lambda)?;
    let phi_prime = symbols.map().derivative_at(lambda)?;
    Ok(f_lambda * phi_prime.powu(j as u32))
}

/// Three-valued verdict of one classification flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagStatus {
    /// The hypothesis of the classification clause does not hold.
    NotAsserted,
    /// Asserted by the theory and confirmed by the residual.
    Verified,
    /// Asserted by the theory but the residual exceeded its tolerance.
    Failed,
}

impl FlagStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            FlagStatus::NotAsserted => "not-asserted",
            FlagStatus::Verified => "verified",
            FlagStatus::Failed => "failed",
        }
    }
}

/// One classification clause with its numerical confirmation.
#[derive(Debug, Clone, Copy)]
pub struct ClassificationFlag {
    pub asserted: bool,
    pub residual: f64,
    pub tolerance: f64,
}

impl ClassificationFlag {
    pub fn status(&self) -> FlagStatus {
        if !self.asserted {
            FlagStatus::NotAsserted
        } else if self.residual <= self.tolerance {
            FlagStatus::Verified
        } else {
            FlagStatus::Failed
        }
    }
}

/// Classification of a commutant member: normal when lambda is real,
/// self-adjoint when lambda and alpha are both real, and transpose symmetric
/// when the symbol condition on (d0, d2) holds. The last condition exists in
/// two textual variants (plain and squared right side); both are evaluated
/// and a disagreement is reported rather than failed.
#[derive(Debug, Clone, Copy)]
pub struct ClassificationResult {
    pub normal: ClassificationFlag,
    pub self_adjoint: ClassificationFlag,
    pub j_symmetric: ClassificationFlag,
    pub jsym_literal_condition: bool,
    pub jsym_squared_condition: bool,
    pub jsym_variants_disagree: bool,
}

pub fn classify_commutant(
    sym: &CommutantSymbols,
    order: usize,
    degree_bound: usize,
) -> Result<ClassificationResult> {
    if !sym.selfmap.is_selfmap {
        return Err(Error::NotSelfMap {
            margin: sym.selfmap.margin,
        });
    }
    let matrix = sym.symbols.matrix(order)?;
    let lambda_real = sym.lambda.im.abs() <= REALITY_TOL;
    let alpha_real = sym.alpha.im.abs() <= REALITY_TOL;

    let normal = ClassificationFlag {
        asserted: lambda_real,
        residual: normality_residual(&sym.symbols, degree_bound, order)?,
        tolerance: NORMALITY_TOL,
    };
    let self_adjoint = ClassificationFlag {
        asserted: lambda_real && alpha_real,
        residual: matrix.hermitian_residual(),
        tolerance: HERMITIAN_MATRIX_TOL,
    };

    let CommutantCoefficients { d0, d2, .. } = sym.coefficients;
    let w = d2 - d0 * d0;
    let lhs = 2.0 * (d0 + d0.conj() * w).norm();
    let in_disc = d0.norm() < 1.0;
    let literal = in_disc && lhs <= 1.0 - w.norm();
    let squared = in_disc && lhs <= 1.0 - w.norm_sqr();
    let j_symmetric = ClassificationFlag {
        asserted: literal || squared,
        residual: matrix.transpose_symmetry_residual(),
        tolerance: JSYM_MATRIX_TOL,
    };

    // Self-adjoint implies normal: both lambda and alpha real forces
    // lambda real, so the flags can never contradict each other.
    debug_assert!(!self_adjoint.asserted || normal.asserted);

    Ok(ClassificationResult {
        normal,
        self_adjoint,
        j_symmetric,
        jsym_literal_condition: literal,
        jsym_squared_condition: squared,
        jsym_variants_disagree: literal != squared,
    })
}

/// Max over random trials of |(W h)(lambda)| for h = B_lambda * q with a
/// random polynomial q of degree at most 8. Members of the commutant leave
/// the subspace { h : h(lambda) = 0 } invariant, so the value must vanish
/// up to truncation tails.
pub fn invariant_subspace_check<R: Rng + ?Sized>(
    sym: &CommutantSymbols,
    trials: usize,
    order: usize,
    rng: &mut R,
) -> Result<f64> {
    if !sym.selfmap.is_selfmap {
        return Err(Error::NotSelfMap {
            margin: sym.selfmap.margin,
        });
    }
    let blaschke = series::lft_taylor(&blaschke_factor(sym.lambda)?, order)?;
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let coeffs: Vec<Complex64> = (0..9)
            .map(|_| Complex64::new(rng.gen::<f64>() * 2.0 - 1.0, rng.gen::<f64>() * 2.0 - 1.0))
            .collect();
        let q = TruncatedSeries::from_polynomial(&coeffs, order)?;
        let h = blaschke.mul(&q)?;
        let image = sym.symbols.apply(&h)?;
        worst = worst.max(image.eval(sym.lambda).norm());
    }
    Ok(worst)
}

/// Sup over a deterministic grid of |B_lambda(psi(z)) / B_lambda(z)|,
/// skipping a small disc around lambda where the singularity of the quotient
/// is removable. For a self-map psi fixing lambda the quotient lies in the
/// unit ball of H^infinity, so the sup must not exceed 1.
pub fn schur_quotient_sup(
    sym: &CommutantSymbols,
    points: usize,
    max_radius: f64,
) -> Result<f64> {
    if !sym.selfmap.is_selfmap {
        return Err(Error::NotSelfMap {
            margin: sym.selfmap.margin,
        });
    }
    let blaschke = blaschke_factor(sym.lambda)?;
    let mut sup = 0.0f64;
    for z in disc_grid(points, max_radius) {
        if (z - sym.lambda).norm() < SINGULARITY_EXCLUSION {
            continue;
        }
        let denominator = blaschke.apply(z)?;
        let numerator = blaschke.apply(sym.symbols.map().apply(z)?)?;
        sup = sup.max(numerator.norm() / denominator.norm());
    }
    Ok(sup)
}

/// |psi(lambda) - lambda| at the interior fixed point of phi: commuting
/// pairs share the fixed point.
pub fn common_fixed_point_residual(phi: &DiscMap, psi: &DiscMap) -> Result<f64> {
    let lambda = phi.interior_fixed_point()?;
    Ok((psi.apply(lambda)? - lambda).norm())
}

/// Residuals of the two symbol identities characterising membership in the
/// commutant: g (f ∘ psi) = f (g ∘ phi) and phi ∘ psi = psi ∘ phi.
#[derive(Debug, Clone, Copy)]
pub struct IntertwiningResiduals {
    /// max over the grid of |g(z) f(psi(z)) - f(z) g(phi(z))|.
    pub weight_pointwise: f64,
    /// max over the grid of |phi(psi(z)) - psi(phi(z))|.
    pub composition_pointwise: f64,
    /// Normalised coefficient residual of the cross-multiplied weight identity.
    pub weight_coefficients: f64,
    /// Normalised projective residual between the two composite map tuples.
    pub composition_coefficients: f64,
}

/// Pointwise and exact (cross-multiplied, degree <= 3 polynomial) residuals
/// of the intertwining identities. Both weights must be in geometric form.
/// Grid points where an evaluation hits a pole are skipped; the coefficient
/// residuals are pole-free.
pub fn weight_intertwining(
    f_syms: &WcoSymbols,
    g_syms: &WcoSymbols,
    points: usize,
    max_radius: f64,
) -> Result<IntertwiningResiduals> {
    let (f_scale, f_ratio) = match f_syms.weight() {
        Weight::Geometric { scale, ratio } => (*scale, *ratio),
        Weight::Series(_) => return Err(Error::WeightNotGeometric),
    };
    let (g_scale, g_ratio) = match g_syms.weight() {
        Weight::Geometric { scale, ratio } => (*scale, *ratio),
        Weight::Series(_) => return Err(Error::WeightNotGeometric),
    };
    let phi = f_syms.map();
    let psi = g_syms.map();

    let mut weight_pointwise = 0.0f64;
    let mut composition_pointwise = 0.0f64;
    for z in disc_grid(points, max_radius) {
        let psi_z = match psi.apply(z) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let phi_z = match phi.apply(z) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let values = (
            g_syms.weight_at(z),
            f_syms.weight_at(psi_z),
            f_syms.weight_at(z),
            g_syms.weight_at(phi_z),
            phi.apply(psi_z),
            psi.apply(phi_z),
        );
        if let (Ok(gz), Ok(f_psi), Ok(fz), Ok(g_phi), Ok(phi_psi), Ok(psi_phi)) = values {
            weight_pointwise = weight_pointwise.max((gz * f_psi - fz * g_phi).norm());
            composition_pointwise = composition_pointwise.max((phi_psi - psi_phi).norm());
        }
    }

    // Exact mode. Compositions as 2x2 coefficient products; constants embed
    // as degenerate rows, so no branching is needed.
    let (pa, pb, pc, pd) = phi.rational_rows();
    let (qa, qb, qc, qd) = psi.rational_rows();
    let phi_psi = Lft {
        a: pa * qa + pb * qc,
        b: pa * qb + pb * qd,
        c: pc * qa + pd * qc,
        d: pc * qb + pd * qd,
    };
    let psi_phi = Lft {
        a: qa * pa + qb * pc,
        b: qa * pb + qb * pd,
        c: qc * pa + qd * pc,
        d: qc * pb + qd * pd,
    };
    let composition_coefficients = phi_psi.projective_distance(&psi_phi);

    // Weight identity with numerators and denominators cross-multiplied:
    // g (f ∘ psi) = [c_g c_f (qc z + qd)] / [(1 - β_g z) ((qc - β_f qa) z + (qd - β_f qb))]
    // and symmetrically for f (g ∘ phi).
    let one = Complex64::new(1.0, 0.0);
    let n1 = [g_scale * f_scale * qd, g_scale * f_scale * qc];
    let n2 = [f_scale * g_scale * pd, f_scale * g_scale * pc];
    let d1 = mul_linear([one, -g_ratio], [qd - f_ratio * qb, qc - f_ratio * qa]);
    let d2 = mul_linear([one, -f_ratio], [pd - g_ratio * pb, pc - g_ratio * pa]);
    let lhs = mul_linear_quadratic(n1, d2);
    let rhs = mul_linear_quadratic(n2, d1);
    let scale = cubic_norm(&lhs).max(cubic_norm(&rhs)).max(f64::MIN_POSITIVE);
    let mut worst = 0.0f64;
    for k in 0..4 {
        worst = worst.max((lhs[k] - rhs[k]).norm());
    }
    let weight_coefficients = worst / scale;

    Ok(IntertwiningResiduals {
        weight_pointwise,
        composition_pointwise,
        weight_coefficients,
        composition_coefficients,
    })
}

fn mul_linear(p: [Complex64; 2], q: [Complex64; 2]) -> [Complex64; 3] {
    [p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]]
}

fn mul_linear_quadratic(p: [Complex64; 2], q: [Complex64; 3]) -> [Complex64; 4] {
    [
        p[0] * q[0],
        p[0] * q[1] + p[1] * q[0],
        p[0] * q[2] + p[1] * q[1],
        p[1] * q[2],
    ]
}

fn cubic_norm(p: &[Complex64; 4]) -> f64 {
    p.iter().fold(0.0f64, |m, z| m.max(z.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn jung_symbols_validation() {
        assert_eq!(
            jung_symbols(c(0.3, 0.0), c(0.2, 0.0), c(0.0, 0.0)),
            Err(Error::ZeroWeight)
        );
        assert_eq!(
            jung_symbols(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::IdentitySymbol)
        );
        // a1 = a0^2 with |a0| > 1/2 fails the self-map criterion.
        assert!(matches!(
            jung_symbols(c(0.6, 0.0), c(0.36, 0.0), c(1.0, 0.0)),
            Err(Error::JungNotSelfMap { .. })
        ));
        assert!(jung_symbols(c(0.3, 0.0), c(0.2, 0.0), c(1.0, 0.0)).is_ok());
    }

    #[test]
    fn jung_matrix_is_transpose_symmetric() {
        let s = jung_symbols(c(0.3, 0.0), c(0.2, 0.0), c(1.0, 0.0)).unwrap();
        let m = s.matrix(64).unwrap();
        assert!(m.transpose_symmetry_residual() < 1e-12);

        let s = jung_symbols(c(0.2, 0.25), c(-0.1, 0.3), c(0.5, -1.0)).unwrap();
        let m = s.matrix(64).unwrap();
        assert!(m.transpose_symmetry_residual() < 1e-12);
    }

    #[test]
    fn fixed_point_lambda_examples() {
        assert_eq!(
            fixed_point_lambda(c(0.0, 0.0), c(0.5, 0.0)).unwrap(),
            c(0.0, 0.0)
        );
        let l = fixed_point_lambda(c(0.3, 0.0), c(0.2, 0.0)).unwrap();
        assert!((l - c(0.38776143803034679, 0.0)).norm() < 1e-12);
        let l = fixed_point_lambda(c(0.0, 0.3), c(0.2, 0.0)).unwrap();
        assert!((l - c(0.0, 0.36594965494794834)).norm() < 1e-12);
        // Constant maps fix their value.
        let l = fixed_point_lambda(c(0.4, 0.1), c(0.0, 0.0)).unwrap();
        assert_eq!(l, c(0.4, 0.1));
    }

    #[test]
    fn fixed_point_lambda_rejects_rotations_and_elliptic_automorphisms() {
        assert_eq!(
            fixed_point_lambda(c(0.0, 0.0), Complex64::from_polar(1.0, 0.7)),
            Err(Error::EllipticAutomorphism)
        );
        // Elliptic automorphism with real fixed point q: the commutant map
        // at lambda = q with unimodular alpha is exactly that automorphism,
        // in normal form with a0 = d0, a1 = d2.
        let p = CommutantParams::new(c(0.4, 0.0), Complex64::from_polar(1.0, 1.2), c(1.0, 0.0))
            .unwrap();
        assert_eq!(
            fixed_point_lambda(p.coefficients.d0, p.coefficients.d2),
            Err(Error::EllipticAutomorphism)
        );
        // Hyperbolic automorphisms have no interior fixed point.
        // (z + 0.5)/(1 + 0.5 z) is a0 = 0.5, a1 = 1 - 0.25 = 0.75.
        assert_eq!(
            fixed_point_lambda(c(0.5, 0.0), c(0.75, 0.0)),
            Err(Error::NoInteriorFixedPoint)
        );
    }

    #[test]
    fn commutant_params_validation() {
        assert!(matches!(
            CommutantParams::new(c(1.2, 0.0), c(0.5, 0.0), c(1.0, 0.0)),
            Err(Error::PointOutsideDisc { .. })
        ));
        assert_eq!(
            CommutantParams::new(c(0.5, 0.0), c(4.0, 0.0), c(1.0, 0.0)),
            // lambda^2 alpha = 1 exactly.
            Err(Error::DegenerateDenominator)
        );
        assert_eq!(
            CommutantParams::new(c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0)),
            Err(Error::ZeroWeight)
        );
    }

    #[test]
    fn lambda_zero_branch_is_diagonal() {
        let p = CommutantParams::new(c(0.0, 0.0), c(0.7, 0.0), c(2.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        assert!(sym.selfmap.is_selfmap);
        // psi = 0.7 z.
        let psi = sym.symbols.map();
        assert!((psi.apply(c(0.5, 0.0)).unwrap() - c(0.35, 0.0)).norm() < 1e-15);
        // g is the constant 2.
        match sym.symbols.weight() {
            Weight::Geometric { scale, ratio } => {
                assert!((scale - c(2.0, 0.0)).norm() < 1e-15);
                assert_eq!(*ratio, c(0.0, 0.0));
            }
            _ => panic!("expected geometric weight"),
        }
    }

    #[test]
    fn alpha_one_collapses_to_identity_and_constant_weight() {
        let p = CommutantParams::new(c(0.4, 0.2), c(1.0, 0.0), c(3.0, -1.0)).unwrap();
        let sym = commutant_symbols(&p);
        let lft = sym.symbols.map().as_lft().unwrap();
        assert!(lft.projective_distance(&Lft::identity()) < 1e-13);
        match sym.symbols.weight() {
            Weight::Geometric { scale, ratio } => {
                assert!((scale - c(3.0, -1.0)).norm() < 1e-13);
                assert_eq!(*ratio, c(0.0, 0.0));
            }
            _ => panic!("expected geometric weight"),
        }
        // d0 = d1 = 0, d2 = 1, d3 = 1.
        assert!(sym.coefficients.d0.norm() < 1e-15);
        assert!((sym.coefficients.d2 - c(1.0, 0.0)).norm() < 1e-13);
        assert!((sym.coefficients.d3 - c(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn alpha_zero_collapses_to_constant_map() {
        let p = CommutantParams::new(c(0.3, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        assert_eq!(*sym.symbols.map(), DiscMap::Constant(c(0.3, 0.0)));
    }

    #[test]
    fn non_selfmap_alpha_is_flagged_not_erred() {
        // lambda = 0.5, alpha = 2: psi(0) = d0 = -1 leaves the disc.
        let p = CommutantParams::new(c(0.5, 0.0), c(2.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((p.coefficients.d0 - c(-1.0, 0.0)).norm() < 1e-15);
        let sym = commutant_symbols(&p);
        assert!(!sym.selfmap.is_selfmap);
        assert!(classify_commutant(&sym, 32, 4).is_err());
    }

    #[test]
    fn commutant_member_commutes_with_base() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let b = c(1.0, 0.0);
        let base = jung_symbols(a0, a1, b).unwrap();
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let p = CommutantParams::new(lambda, c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        assert!(sym.selfmap.is_selfmap);
        let r = crate::operators::commutator_residual(&base, &sym.symbols, 8, 128).unwrap();
        assert!(r < 1e-8, "commutator residual {r}");
        let cf = common_fixed_point_residual(base.map(), sym.symbols.map()).unwrap();
        assert!(cf < 1e-12, "fixed point residual {cf}");
    }

    #[test]
    fn intertwining_identities_hold_and_break() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let base = jung_symbols(a0, a1, c(1.0, 0.0)).unwrap();
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let p = CommutantParams::new(lambda, c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let r = weight_intertwining(&base, &sym.symbols, 50, 0.9).unwrap();
        assert!(r.weight_pointwise < 1e-12, "weight {}", r.weight_pointwise);
        assert!(
            r.composition_pointwise < 1e-12,
            "composition {}",
            r.composition_pointwise
        );
        assert!(r.weight_coefficients < 1e-12);
        assert!(r.composition_coefficients < 1e-12);

        // Perturbing alpha in psi only keeps the compositions commuting but
        // breaks the weight identity.
        let p2 = CommutantParams::new(lambda, c(0.501, 0.0), c(1.0, 0.0)).unwrap();
        let perturbed = WcoSymbols::new_unchecked(
            sym.symbols.weight().clone(),
            *commutant_symbols(&p2).symbols.map(),
        );
        let r = weight_intertwining(&base, &perturbed, 50, 0.9).unwrap();
        assert!(r.weight_pointwise > 1e-6, "weight {}", r.weight_pointwise);
        assert!(r.composition_pointwise < 1e-12);
    }

    #[test]
    fn ek_agrees_with_main_construction_for_real_fixed_point() {
        let b = c(0.45, 0.0);
        let alpha = c(0.3, 0.4);
        let g = c(1.5, 0.0);
        let via_ek = ek_commutant_symbols(b, alpha, g).unwrap();
        let via_main = commutant_symbols(&CommutantParams::new(b, alpha, g).unwrap());
        let d_ek = via_ek.coefficients;
        let d_main = via_main.coefficients;
        assert!((d_ek.d0 - d_main.d0).norm() < 1e-13);
        assert!((d_ek.d1 - d_main.d1).norm() < 1e-13);
        assert!((d_ek.d2 - d_main.d2).norm() < 1e-13);
        assert!((d_ek.d3 - d_main.d3).norm() < 1e-13);
        let l_ek = via_ek.symbols.map().as_lft().unwrap();
        let l_main = via_main.symbols.map().as_lft().unwrap();
        assert!(l_ek.projective_distance(l_main) < 1e-13);
    }

    #[test]
    fn ek_direct_substitution_value() {
        let sym = ek_commutant_symbols(c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        assert!((sym.coefficients.d0 - c(0.2857142857142857, 0.0)).norm() < 1e-15);
        // b = 0 degenerates to psi = alpha z with constant weight.
        let sym = ek_commutant_symbols(c(0.0, 0.0), c(0.3, 0.2), c(1.0, 0.0)).unwrap();
        let psi = sym.symbols.map();
        assert!((psi.apply(c(1.0, 0.0)).unwrap() - c(0.3, 0.2)).norm() < 1e-15);
    }

    #[test]
    fn relations_collapse_at_alpha_one() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let (r1, r2) =
            coefficient_relations_residuals(a0, a1, lambda, c(1.0, 0.0)).unwrap();
        assert_eq!(r1, 0.0);
        assert_eq!(r2, 0.0);
    }

    #[test]
    fn relations_hold_for_real_and_complex_parameters() {
        let cases = [
            (c(0.3, 0.0), c(0.2, 0.0), c(0.5, 0.0)),
            (c(0.0, 0.3), c(0.2, 0.0), c(0.5, 0.2)),
            (c(0.2, 0.1), c(-0.3, 0.15), c(-0.7, 0.6)),
        ];
        for (a0, a1, alpha) in cases {
            let lambda = fixed_point_lambda(a0, a1).unwrap();
            let (r1, r2) = coefficient_relations_residuals(a0, a1, lambda, alpha).unwrap();
            assert!(r1 < 1e-12, "r1 = {r1}");
            assert!(r2 < 1e-12, "r2 = {r2}");
        }
    }

    #[test]
    fn relations_reject_inconsistent_fixed_point() {
        assert!(matches!(
            coefficient_relations_residuals(c(0.3, 0.0), c(0.2, 0.0), c(0.1, 0.0), c(0.5, 0.0)),
            Err(Error::InconsistentFixedPoint { .. })
        ));
    }

    #[test]
    fn reality_equivalence_both_directions() {
        let check = lambda_real_equivalence(c(0.4, 0.0), c(0.0, 0.3)).unwrap();
        assert!(check.lambda_is_real);
        assert!(check.residual < 1e-13);

        let check =
            lambda_real_equivalence(c(0.0, 0.36594965494794834), c(0.5, 0.0)).unwrap();
        assert!(!check.lambda_is_real);
        assert!(check.residual > 1e-12);

        // alpha = 1 makes both sides vanish regardless of lambda.
        let check = lambda_real_equivalence(c(0.2, 0.3), c(1.0, 0.0)).unwrap();
        assert_eq!(check.residual, 0.0);
    }

    #[test]
    fn eigenfunction_shapes() {
        // lambda = 0: g_j = (-z)^j.
        let g2 = eigenfunction(c(0.0, 0.0), 2, 8).unwrap();
        for k in 0..8 {
            let want = if k == 2 { c(1.0, 0.0) } else { c(0.0, 0.0) };
            assert!((g2.coeff(k) - want).norm() < 1e-15);
        }
        // j = 0 is the geometric kernel-type function.
        let g0 = eigenfunction(c(0.3, 0.0), 0, 6).unwrap();
        let want = series::geometric_series(c(1.0, 0.0), c(0.3, 0.0), 6).unwrap();
        assert_eq!(g0, want);
    }

    #[test]
    fn eigenfunction_residual_for_base_operator() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let b = c(1.0, 0.0);
        let base = jung_symbols(a0, a1, b).unwrap();
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let n = 256;
        for j in 0..=3 {
            let g = eigenfunction(lambda, j, n).unwrap();
            let image = base.apply(&g).unwrap();
            let mu = eigenvalue_for(&base, lambda, j).unwrap();
            let resid = image.sub(&g.scale(mu)).unwrap().l2_norm();
            assert!(resid < 1e-8, "j = {j}: residual {resid}");
        }
    }

    #[test]
    fn diagonal_eigenvalues_at_lambda_zero() {
        // f = b, phi = a1 z: eigenvalue of g_j is b a1^j.
        let base = jung_symbols(c(0.0, 0.0), c(0.4, 0.0), c(2.0, 0.0)).unwrap();
        for j in 0..4 {
            let mu = eigenvalue_for(&base, c(0.0, 0.0), j).unwrap();
            let want = c(2.0 * 0.4f64.powi(j as i32), 0.0);
            assert!((mu - want).norm() < 1e-15);
        }
    }

    #[test]
    fn classification_examples() {
        // lambda real, alpha complex: normal but not self-adjoint.
        let p = CommutantParams::new(c(0.4, 0.0), c(0.3, 0.1), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let result = classify_commutant(&sym, 128, 8).unwrap();
        assert_eq!(result.normal.status(), FlagStatus::Verified);
        assert_eq!(result.self_adjoint.status(), FlagStatus::NotAsserted);
        assert_eq!(result.j_symmetric.status(), FlagStatus::Verified);

        // Both real: self-adjoint as well.
        let p = CommutantParams::new(c(0.4, 0.0), c(0.6, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let result = classify_commutant(&sym, 64, 8).unwrap();
        assert_eq!(result.self_adjoint.status(), FlagStatus::Verified);
        assert_eq!(result.normal.status(), FlagStatus::Verified);

        // lambda = 0 diagonal family: everything at once.
        let p = CommutantParams::new(c(0.0, 0.0), c(0.7, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let result = classify_commutant(&sym, 32, 4).unwrap();
        assert_eq!(result.normal.status(), FlagStatus::Verified);
        assert_eq!(result.self_adjoint.status(), FlagStatus::Verified);
        assert_eq!(result.j_symmetric.status(), FlagStatus::Verified);
    }

    #[test]
    fn invariant_subspace_and_negative_control() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let p = CommutantParams::new(lambda, c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let worst = invariant_subspace_check(&sym, 50, 128, &mut rng).unwrap();
        assert!(worst < 1e-10, "worst residual {worst}");

        // h with h(lambda) = 1 is not in the subspace: |(W h)(lambda)| = |g(lambda)|.
        let h = TruncatedSeries::one(128);
        let image = sym.symbols.apply(&h).unwrap();
        assert!((image.eval(lambda).norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn schur_quotient_stays_bounded() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let lambda = fixed_point_lambda(a0, a1).unwrap();
        let p = CommutantParams::new(lambda, c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let sup = schur_quotient_sup(&sym, 500, 0.99).unwrap();
        assert!(sup <= 1.0 + 1e-9, "sup {sup}");

        // lambda = 0, psi = alpha z: the quotient is the constant alpha.
        let p = CommutantParams::new(c(0.0, 0.0), c(0.6, 0.0), c(1.0, 0.0)).unwrap();
        let sym = commutant_symbols(&p);
        let sup = schur_quotient_sup(&sym, 200, 0.99).unwrap();
        assert!((sup - 0.6).abs() < 1e-12);
    }

    #[test]
    fn common_fixed_point_negative_control() {
        let base = jung_symbols(c(0.3, 0.0), c(0.2, 0.0), c(1.0, 0.0)).unwrap();
        let unrelated = jung_phi(c(0.1, 0.0), c(0.5, 0.0));
        let r = common_fixed_point_residual(base.map(), &unrelated).unwrap();
        assert!(r > 1e-2);
    }
}
