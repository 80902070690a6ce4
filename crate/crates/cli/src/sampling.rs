//! Seeded draws from the admissible parameter regions. Rejection sampling
//! keeps every draw inside the documented bounds: symbol moduli small enough
//! that geometric tails at the default truncation order sit far below the
//! suite tolerances, and fixed points bounded away from zero and from the
//! unit circle so the negative controls keep their sensitivity.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wco_core::lft::jung_selfmap_check;
use wco_core::theory::{commutant_symbols, fixed_point_lambda, CommutantParams, CommutantSymbols};
use wco_core::Complex64;

/// Cap on the sup-norm surrogate of composition symbols, keeping matrix
/// truncation tails near rho^(order - degree) with rho <= 0.8.
const SUP_BOUND: f64 = 0.8;
/// Fixed points stay in this annulus: away from the diagonal collapse at
/// zero and from the boundary.
const LAMBDA_MIN: f64 = 0.05;
const LAMBDA_MAX: f64 = 0.8;
/// The commutant parameter keeps its distance from the trivial member
/// alpha = 1 (needed for the perturbation controls) and from the
/// denominator degeneracy lambda^2 alpha = 1.
const ALPHA_IDENTITY_GAP: f64 = 0.1;
const DENOMINATOR_GAP: f64 = 0.1;

pub fn uniform_disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    Complex64::from_polar(
        radius * rng.gen::<f64>().sqrt(),
        rng.gen::<f64>() * std::f64::consts::TAU,
    )
}

pub fn uniform_annulus(rng: &mut ChaCha8Rng, inner: f64, outer: f64) -> Complex64 {
    loop {
        let z = uniform_disc(rng, outer);
        if z.norm() >= inner {
            return z;
        }
    }
}

fn uniform_real(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

/// Sup-norm surrogate |a0| + |a1| / (1 - |a0|) of the normal-form map.
fn phi_sup_bound(a0: Complex64, a1: Complex64) -> f64 {
    a0.norm() + a1.norm() / (1.0 - a0.norm())
}

/// Sup-norm surrogate of the commutant map from its derived coefficients.
fn psi_sup_bound(sym: &CommutantSymbols) -> f64 {
    let d = &sym.coefficients;
    if d.d1.norm() >= 1.0 {
        return f64::INFINITY;
    }
    d.d0.norm() + d.d2.norm() / (1.0 - d.d1.norm())
}

#[derive(Debug, Clone, Copy)]
pub struct JungDraw {
    pub a0: Complex64,
    pub a1: Complex64,
    pub b: Complex64,
}

/// Base symbols for the matrix-symmetry suite: self-map, bounded sup norm.
pub fn draw_jung(rng: &mut ChaCha8Rng) -> JungDraw {
    loop {
        let a0 = uniform_disc(rng, 0.45);
        let a1 = uniform_disc(rng, 0.9);
        if !jung_selfmap_check(a0, a1).passes {
            continue;
        }
        if phi_sup_bound(a0, a1) > 0.95 {
            continue;
        }
        let b = uniform_annulus(rng, 0.3, 1.0);
        return JungDraw { a0, a1, b };
    }
}

#[derive(Debug, Clone, Copy)]
pub struct HermitianDraw {
    pub a0: Complex64,
    pub a1: Complex64,
    pub c: Complex64,
}

/// Draws with real scale and derivative for the Hermitian family.
pub fn draw_hermitian(rng: &mut ChaCha8Rng) -> HermitianDraw {
    loop {
        let a0 = uniform_disc(rng, 0.45);
        let a1 = Complex64::new(uniform_real(rng, -0.85, 0.85), 0.0);
        // Rotation-conjugate of the normal form: same self-map criterion
        // with |a0| in place of a0.
        if !jung_selfmap_check(Complex64::new(a0.norm(), 0.0), a1).passes {
            continue;
        }
        let magnitude = uniform_real(rng, 0.3, 1.0);
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        return HermitianDraw {
            a0,
            a1,
            c: Complex64::new(sign * magnitude, 0.0),
        };
    }
}

#[derive(Debug, Clone)]
pub struct CommutantDraw {
    pub a0: Complex64,
    pub a1: Complex64,
    pub b: Complex64,
    pub lambda: Complex64,
    pub alpha: Complex64,
    pub params: CommutantParams,
    pub member: CommutantSymbols,
}

/// Full admissible draw for the commuting-pair suites: base with interior
/// fixed point in the annulus, self-map member, bounded sup norms.
/// `real_lambda` restricts the base to real parameters (hence a real fixed
/// point) and `real_alpha` restricts the commutant parameter to the reals.
pub fn draw_commutant(
    rng: &mut ChaCha8Rng,
    real_lambda: bool,
    real_alpha: bool,
) -> CommutantDraw {
    loop {
        let (a0, a1) = if real_lambda {
            (
                Complex64::new(uniform_real(rng, -0.45, 0.45), 0.0),
                Complex64::new(uniform_real(rng, -0.9, 0.9), 0.0),
            )
        } else {
            (uniform_disc(rng, 0.45), uniform_disc(rng, 0.9))
        };
        if !jung_selfmap_check(a0, a1).passes {
            continue;
        }
        if phi_sup_bound(a0, a1) > SUP_BOUND {
            continue;
        }
        let Ok(lambda) = fixed_point_lambda(a0, a1) else {
            continue;
        };
        if lambda.norm() < LAMBDA_MIN || lambda.norm() > LAMBDA_MAX {
            continue;
        }
        let alpha = if real_alpha {
            Complex64::new(uniform_real(rng, -1.5, 1.5), 0.0)
        } else {
            uniform_disc(rng, 1.5)
        };
        if (alpha - Complex64::new(1.0, 0.0)).norm() < ALPHA_IDENTITY_GAP {
            continue;
        }
        if (lambda * lambda * alpha - Complex64::new(1.0, 0.0)).norm() < DENOMINATOR_GAP {
            continue;
        }
        let Ok(params) = CommutantParams::new(lambda, alpha, Complex64::new(1.0, 0.0)) else {
            continue;
        };
        let member = commutant_symbols(&params);
        if !member.selfmap.is_selfmap || psi_sup_bound(&member) > SUP_BOUND {
            continue;
        }
        let b = uniform_annulus(rng, 0.3, 0.8);
        return CommutantDraw {
            a0,
            a1,
            b,
            lambda,
            alpha,
            params,
            member,
        };
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DiagonalDraw {
    pub a1: Complex64,
    pub b: Complex64,
    pub alpha: Complex64,
}

/// The fixed-point-at-zero branch: base a0 = 0, member psi = alpha z.
pub fn draw_diagonal(rng: &mut ChaCha8Rng) -> DiagonalDraw {
    loop {
        let a1 = uniform_disc(rng, 0.9);
        if a1.norm() < 1e-3 {
            continue;
        }
        let alpha = uniform_disc(rng, 0.95);
        let b = uniform_annulus(rng, 0.3, 1.0);
        return DiagonalDraw { a1, b, alpha };
    }
}

/// (lambda, alpha) pairs for the reality-equivalence checks. `real` selects
/// the real-lambda side; the complex side carries the guards
/// |Im lambda| >= 0.05, |lambda| >= 0.05, |1 - alpha| >= 0.1 that keep the
/// inequality direction quantitatively visible.
pub fn draw_reality_pair(rng: &mut ChaCha8Rng, real: bool) -> (Complex64, Complex64) {
    loop {
        let lambda = if real {
            Complex64::new(uniform_real(rng, -0.9, 0.9), 0.0)
        } else {
            let z = uniform_disc(rng, 0.9);
            if z.im.abs() < 0.05 || z.norm() < 0.05 {
                continue;
            }
            z
        };
        let alpha = uniform_disc(rng, 1.5);
        if !real && (alpha - Complex64::new(1.0, 0.0)).norm() < ALPHA_IDENTITY_GAP {
            continue;
        }
        if (lambda * lambda * alpha - Complex64::new(1.0, 0.0)).norm() < DENOMINATOR_GAP {
            continue;
        }
        return (lambda, alpha);
    }
}

/// Real fixed point b and admissible alpha for the self-adjoint-base
/// cross-check.
pub fn draw_real_base_pair(rng: &mut ChaCha8Rng) -> (Complex64, Complex64, Complex64) {
    loop {
        let b = Complex64::new(uniform_real(rng, -0.8, 0.8), 0.0);
        if b.norm() < 0.05 {
            continue;
        }
        let alpha = uniform_disc(rng, 1.5);
        if (b * b * alpha - Complex64::new(1.0, 0.0)).norm() < DENOMINATOR_GAP {
            continue;
        }
        let Ok(params) = CommutantParams::new(b, alpha, Complex64::new(1.0, 0.0)) else {
            continue;
        };
        let member = commutant_symbols(&params);
        if !member.selfmap.is_selfmap {
            continue;
        }
        let g = Complex64::new(uniform_real(rng, 0.5, 2.0), uniform_real(rng, -0.5, 0.5));
        return (b, alpha, g);
    }
}
