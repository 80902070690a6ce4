//! Linear fractional (Möbius) maps of the unit disc: application, composition,
//! fixed points, self-map criteria, and automorphism classification.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative determinant tolerance for accepting a coefficient tuple.
const DET_REL_TOL: f64 = 1e-14;
/// Band around the unit circle inside which a point counts as boundary.
const BOUNDARY_TOL: f64 = 1e-12;
/// Relative tolerance for recognising automorphisms and the identity.
const CLASSIFY_TOL: f64 = 1e-12;
/// Denominators below this magnitude are treated as poles.
const POLE_TOL: f64 = 1e-300;

/// The map z -> (az + b) / (cz + d) with ad - bc != 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lft {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Outcome of the linear-fractional self-map inequality
/// |b d̄ - a c̄| + |ad - bc| <= |d|^2 - |c|^2.
///
/// `margin` is the right side minus the left side on the raw coefficients, so
/// rescaling the tuple rescales the margin by the squared scale.
#[derive(Debug, Clone, Copy)]
pub struct SelfMapCheck {
    pub is_selfmap: bool,
    pub margin: f64,
    pub boundary: bool,
}

/// Self-map test for the normal form a0 + a1 z / (1 - a0 z): requires
/// |a0| < 1 and 2 |a0 + ā0 (a1 - a0^2)| <= 1 - |a1 - a0^2|^2.
#[derive(Debug, Clone, Copy)]
pub struct JungSelfMapCheck {
    pub passes: bool,
    /// 1 - |a0|; must be positive.
    pub modulus_margin: f64,
    /// Right side minus left side of the inequality; must be nonnegative.
    pub inequality_margin: f64,
}

/// Where a fixed point sits relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// One fixed point together with its location tag and the derivative there.
#[derive(Debug, Clone, Copy)]
pub struct FixedPoint {
    pub value: Complex64,
    pub location: Location,
    pub derivative: Complex64,
    /// True when the fixed-point quadratic has a (near-)double root.
    pub double: bool,
}

/// All finite fixed points of a nonidentity map (at most two; an affine map
/// with translation part has none).
#[derive(Debug, Clone)]
pub struct FixedPointReport {
    pub points: Vec<FixedPoint>,
}

impl FixedPointReport {
    pub fn interior(&self) -> impl Iterator<Item = &FixedPoint> {
        self.points
            .iter()
            .filter(|p| p.location == Location::Interior)
    }

    pub fn boundary(&self) -> impl Iterator<Item = &FixedPoint> {
        self.points
            .iter()
            .filter(|p| p.location == Location::Boundary)
    }
}

/// Classification of a disc self-map by its fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    Identity,
    EllipticAutomorphism,
    HyperbolicAutomorphism,
    ParabolicAutomorphism,
    InteriorFixedPoint,
    NoInteriorFixedPoint,
}

impl MapClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            MapClass::Identity => "identity",
            MapClass::EllipticAutomorphism => "elliptic-automorphism",
            MapClass::HyperbolicAutomorphism => "hyperbolic-automorphism",
            MapClass::ParabolicAutomorphism => "parabolic-automorphism",
            MapClass::InteriorFixedPoint => "non-automorphism-with-interior-fp",
            MapClass::NoInteriorFixedPoint => "non-automorphism-without-interior-fp",
        }
    }
}

impl Lft {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let lft = Lft { a, b, c, d };
        for z in [a, b, c, d] {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteCoefficient);
            }
        }
        let m = lft.coefficient_scale();
        if lft.determinant().norm() <= DET_REL_TOL * m * m {
            return Err(Error::DegenerateLft);
        }
        Ok(lft)
    }

    pub fn identity() -> Self {
        Lft {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Largest coefficient magnitude; the reference scale for tolerances.
    pub fn coefficient_scale(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() < POLE_TOL {
            return Err(Error::PoleAt { z });
        }
        Ok((self.a * z + self.b) / den)
    }

    /// Derivative (ad - bc) / (cz + d)^2.
    pub fn derivative_at(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() < POLE_TOL {
            return Err(Error::PoleAt { z });
        }
        Ok(self.determinant() / (den * den))
    }

    /// Coefficient tuple of self ∘ other (2x2 matrix product).
    pub fn compose(&self, other: &Lft) -> Result<Lft> {
        Lft::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
    }

    /// Rescales the tuple; prefers a unit denominator constant term.
    pub fn normalized(&self) -> Lft {
        let m = self.coefficient_scale();
        let pivot = if self.d.norm() > CLASSIFY_TOL * m {
            self.d
        } else {
            Complex64::new(m, 0.0)
        };
        Lft {
            a: self.a / pivot,
            b: self.b / pivot,
            c: self.c / pivot,
            d: self.d / pivot,
        }
    }

    /// Largest 2x2 minor of the stacked coefficient tuples, normalised by the
    /// product of the coefficient scales. Zero exactly when the two tuples
    /// define the same map.
    pub fn projective_distance(&self, other: &Lft) -> f64 {
        let u = [self.a, self.b, self.c, self.d];
        let v = [other.a, other.b, other.c, other.d];
        let scale = self.coefficient_scale() * other.coefficient_scale();
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                worst = worst.max((u[i] * v[j] - u[j] * v[i]).norm());
            }
        }
        worst / scale
    }

    pub fn is_identity(&self) -> bool {
        let m = self.coefficient_scale();
        self.b.norm() <= CLASSIFY_TOL * m
            && self.c.norm() <= CLASSIFY_TOL * m
            && (self.a - self.d).norm() <= CLASSIFY_TOL * m
    }

    /// Martin–Vukotić inequality on the raw coefficients.
    pub fn selfmap_check(&self) -> SelfMapCheck {
        let lhs = (self.b * self.d.conj() - self.a * self.c.conj()).norm()
            + self.determinant().norm();
        let rhs = self.d.norm_sqr() - self.c.norm_sqr();
        let margin = rhs - lhs;
        let m = self.coefficient_scale();
        let band = BOUNDARY_TOL * (1.0f64).max(m * m);
        SelfMapCheck {
            is_selfmap: margin >= -band,
            margin,
            boundary: margin.abs() <= band,
        }
    }

    /// Whether the tuple is proportional to e^{iθ}(z - p)/(1 - p̄ z) with
    /// |p| < 1: equal moduli |a| = |d|, matching mixed minor
    /// b̄ d = ā c, and |b| < |a|.
    pub fn is_automorphism(&self) -> bool {
        let m = self.coefficient_scale();
        (self.a.norm() - self.d.norm()).abs() <= CLASSIFY_TOL * m
            && (self.b.conj() * self.d - self.a.conj() * self.c).norm() <= CLASSIFY_TOL * m * m
            && self.b.norm() < self.a.norm()
    }

    /// All finite solutions of L(z) = z, i.e. c z^2 + (d - a) z - b = 0.
    ///
    /// One quadratic root comes from the sign-matched formula and the other
    /// from the Vieta product, so neither suffers subtractive cancellation.
    pub fn fixed_points(&self) -> Result<FixedPointReport> {
        if self.is_identity() {
            return Err(Error::IdentityMap);
        }
        let m = self.coefficient_scale();
        let qa = self.c;
        let qb = self.d - self.a;
        let qc = -self.b;

        let mut values: Vec<(Complex64, bool)> = Vec::new();
        if qa.norm() <= DET_REL_TOL * m {
            // Affine map: a single finite fixed point unless it is a pure
            // translation, which fixes only infinity.
            if qb.norm() > DET_REL_TOL * m {
                values.push((-qc / qb, false));
            }
        } else {
            let disc = qb * qb - 4.0 * qa * qc;
            let disc_scale = qb.norm_sqr() + 4.0 * (qa * qc).norm();
            if disc.norm() <= DET_REL_TOL * disc_scale {
                values.push((-qb / (2.0 * qa), true));
            } else {
                let mut root = disc.sqrt();
                if (qb.conj() * root).re < 0.0 {
                    root = -root;
                }
                let q = -(qb + root) / 2.0;
                values.push((q / qa, false));
                values.push((qc / q, false));
            }
        }

        let mut points = Vec::with_capacity(values.len());
        for (value, double) in values {
            let r = value.norm();
            let location = if r < 1.0 - BOUNDARY_TOL {
                Location::Interior
            } else if r <= 1.0 + BOUNDARY_TOL {
                Location::Boundary
            } else {
                Location::Exterior
            };
            let derivative = self.derivative_at(value)?;
            debug_assert!(
                (self.apply(value)? - value).norm() <= 1e-10 * (1.0 + value.norm()),
                "fixed point residual out of tolerance"
            );
            points.push(FixedPoint {
                value,
                location,
                derivative,
                double,
            });
        }
        Ok(FixedPointReport { points })
    }

    /// The unique fixed point strictly inside the disc, when there is one.
    pub fn interior_fixed_point(&self) -> Result<Complex64> {
        let report = self.fixed_points()?;
        let interior: Vec<_> = report.interior().collect();
        match interior.len() {
            0 => Err(Error::NoInteriorFixedPoint),
            1 => Ok(interior[0].value),
            _ => Err(Error::MultipleInteriorFixedPoints),
        }
    }

    /// Fixed-point classification of a disc self-map.
    pub fn classify(&self) -> Result<MapClass> {
        let check = self.selfmap_check();
        if !check.is_selfmap {
            return Err(Error::NotSelfMap {
                margin: check.margin,
            });
        }
        if self.is_identity() {
            return Ok(MapClass::Identity);
        }
        let report = self.fixed_points()?;
        let interior = report.interior().count();
        if self.is_automorphism() {
            if interior == 1 {
                return Ok(MapClass::EllipticAutomorphism);
            }
            let boundary: Vec<_> = report.boundary().collect();
            return match boundary.len() {
                1 if boundary[0].double => Ok(MapClass::ParabolicAutomorphism),
                2 => Ok(MapClass::HyperbolicAutomorphism),
                _ => Err(Error::Unclassifiable),
            };
        }
        if interior >= 1 {
            Ok(MapClass::InteriorFixedPoint)
        } else {
            Ok(MapClass::NoInteriorFixedPoint)
        }
    }
}

/// An analytic map of the disc in the shapes this crate needs: a genuine
/// linear fractional map, or the degenerate constant map that the normal
/// form a0 + a1 z / (1 - a0 z) collapses to when a1 = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiscMap {
    Lft(Lft),
    Constant(Complex64),
}

impl DiscMap {
    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        match self {
            DiscMap::Lft(l) => l.apply(z),
            DiscMap::Constant(k) => {
                let _ = z;
                Ok(*k)
            }
        }
    }

    pub fn derivative_at(&self, z: Complex64) -> Result<Complex64> {
        match self {
            DiscMap::Lft(l) => l.derivative_at(z),
            DiscMap::Constant(_) => Ok(Complex64::new(0.0, 0.0)),
        }
    }

    /// Value at the origin (the symbol a0 of the normal form).
    pub fn at_origin(&self) -> Result<Complex64> {
        self.apply(Complex64::new(0.0, 0.0))
    }

    /// Derivative at the origin (the symbol a1 of the normal form).
    pub fn derivative_at_origin(&self) -> Result<Complex64> {
        self.derivative_at(Complex64::new(0.0, 0.0))
    }

    /// For constants this is the inequality on the degenerate tuple
    /// (0, k; 0, 1): margin 1 - |k|.
    pub fn selfmap_check(&self) -> SelfMapCheck {
        match self {
            DiscMap::Lft(l) => l.selfmap_check(),
            DiscMap::Constant(k) => {
                let margin = 1.0 - k.norm();
                SelfMapCheck {
                    is_selfmap: margin >= -BOUNDARY_TOL,
                    margin,
                    boundary: margin.abs() <= BOUNDARY_TOL,
                }
            }
        }
    }

    /// A constant map fixes exactly its value.
    pub fn interior_fixed_point(&self) -> Result<Complex64> {
        match self {
            DiscMap::Lft(l) => l.interior_fixed_point(),
            DiscMap::Constant(k) => {
                if k.norm() < 1.0 - BOUNDARY_TOL {
                    Ok(*k)
                } else {
                    Err(Error::NoInteriorFixedPoint)
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            DiscMap::Lft(l) => l.is_identity(),
            DiscMap::Constant(_) => false,
        }
    }

    pub fn as_lft(&self) -> Option<&Lft> {
        match self {
            DiscMap::Lft(l) => Some(l),
            DiscMap::Constant(_) => None,
        }
    }

    /// Numerator/denominator coefficient rows ((na, nb), (da, db)) of the map
    /// as the rational function (na z + nb) / (da z + db). Constants embed as
    /// (0, k) / (0, 1), which keeps composition and cross-multiplied identity
    /// checks uniform.
    pub fn rational_rows(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        match self {
            DiscMap::Lft(l) => (l.a, l.b, l.c, l.d),
            DiscMap::Constant(k) => (
                Complex64::new(0.0, 0.0),
                *k,
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
            ),
        }
    }
}

/// The normal form a0 + a1 z / (1 - a0 z) as a disc map, written as the
/// coefficient tuple ((a1 - a0^2) z + a0) / (-a0 z + 1). Its determinant is
/// a1, so a1 below the determinant tolerance yields the constant map a0.
pub fn jung_phi(a0: Complex64, a1: Complex64) -> DiscMap {
    let one = Complex64::new(1.0, 0.0);
    let m = (a1 - a0 * a0).norm().max(a0.norm()).max(1.0);
    if a1.norm() <= DET_REL_TOL * m * m {
        return DiscMap::Constant(a0);
    }
    DiscMap::Lft(Lft {
        a: a1 - a0 * a0,
        b: a0,
        c: -a0,
        d: one,
    })
}

/// Conjugate-denominator variant a0 + a1 z / (1 - ā0 z) used by Hermitian
/// symbols; determinant a1 as well.
pub fn hermitian_phi(a0: Complex64, a1: Complex64) -> DiscMap {
    let one = Complex64::new(1.0, 0.0);
    let m = (a1 - a0 * a0.conj()).norm().max(a0.norm()).max(1.0);
    if a1.norm() <= DET_REL_TOL * m * m {
        return DiscMap::Constant(a0);
    }
    DiscMap::Lft(Lft {
        a: a1 - Complex64::new(a0.norm_sqr(), 0.0),
        b: a0,
        c: -a0.conj(),
        d: one,
    })
}

/// Self-map criterion for the normal form, stated on (a0, a1) directly.
pub fn jung_selfmap_check(a0: Complex64, a1: Complex64) -> JungSelfMapCheck {
    let w = a1 - a0 * a0;
    let lhs = 2.0 * (a0 + a0.conj() * w).norm();
    let rhs = 1.0 - w.norm_sqr();
    let modulus_margin = 1.0 - a0.norm();
    let inequality_margin = rhs - lhs;
    JungSelfMapCheck {
        passes: modulus_margin > 0.0 && inequality_margin >= 0.0,
        modulus_margin,
        inequality_margin,
    }
}

/// The disc automorphism (z - lambda) / (1 - λ̄ z): vanishes at lambda and
/// has unimodular boundary values.
pub fn blaschke_factor(lambda: Complex64) -> Result<Lft> {
    if lambda.norm() >= 1.0 {
        return Err(Error::PointOutsideDisc {
            modulus: lambda.norm(),
        });
    }
    Lft::new(
        Complex64::new(1.0, 0.0),
        -lambda,
        -lambda.conj(),
        Complex64::new(1.0, 0.0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_vanishing_determinant() {
        assert_eq!(
            Lft::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)),
            Err(Error::DegenerateLft)
        );
    }

    #[test]
    fn apply_identity_fixes_everything() {
        let id = Lft::identity();
        for z in [c(0.3, -0.4), c(0.0, 0.0), c(-0.9, 0.1)] {
            assert_eq!(id.apply(z).unwrap(), z);
        }
    }

    #[test]
    fn apply_pole_is_an_error() {
        let l = Lft::new(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(-0.5, 0.0)).unwrap();
        assert!(matches!(l.apply(c(0.5, 0.0)), Err(Error::PoleAt { .. })));
    }

    #[test]
    fn jung_phi_value_and_derivative_at_origin() {
        let a0 = c(0.3, 0.0);
        let a1 = c(0.2, 0.0);
        let phi = jung_phi(a0, a1);
        assert!((phi.at_origin().unwrap() - a0).norm() < 1e-15);
        assert!((phi.derivative_at_origin().unwrap() - a1).norm() < 1e-15);
        // Direct evaluation: phi(0.5) = 0.3 + 0.1/0.85.
        let expect = c(0.3 + 0.1 / 0.85, 0.0);
        assert!((phi.apply(c(0.5, 0.0)).unwrap() - expect).norm() < 1e-15);
    }

    #[test]
    fn jung_phi_collapses_to_constant() {
        assert_eq!(jung_phi(c(0.3, 0.1), c(0.0, 0.0)), DiscMap::Constant(c(0.3, 0.1)));
        assert_eq!(jung_phi(c(0.0, 0.0), c(0.0, 0.0)), DiscMap::Constant(c(0.0, 0.0)));
        // a0 = 0 gives the dilation a1 z.
        let phi = jung_phi(c(0.0, 0.0), c(0.4, 0.0));
        assert!((phi.apply(c(0.5, 0.5)).unwrap() - c(0.2, 0.2)).norm() < 1e-15);
    }

    #[test]
    fn selfmap_margins_match_worked_examples() {
        // Identity sits exactly on the boundary of the inequality.
        let check = Lft::identity().selfmap_check();
        assert!(check.is_selfmap && check.boundary);
        assert!(check.margin.abs() < 1e-15);

        // z / (2 - z): 1 + 2 <= 3, boundary case again.
        let l = Lft::new(c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(2.0, 0.0)).unwrap();
        let check = l.selfmap_check();
        assert!(check.is_selfmap && check.boundary);

        // Constant 0.6 has margin 0.4.
        let check = DiscMap::Constant(c(0.6, 0.0)).selfmap_check();
        assert!(check.is_selfmap && !check.boundary);
        assert!((check.margin - 0.4).abs() < 1e-15);
    }

    #[test]
    fn dilation_fixes_origin_only() {
        let l = Lft::new(c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let report = l.fixed_points().unwrap();
        assert_eq!(report.points.len(), 1);
        assert_eq!(report.points[0].value, c(0.0, 0.0));
        assert_eq!(report.points[0].location, Location::Interior);
        assert_eq!(l.interior_fixed_point().unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn translation_has_no_finite_fixed_point() {
        // z + 1 maps the disc onto a disc tangent at 1; only infinity is fixed.
        let l = Lft::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(l.fixed_points().unwrap().points.is_empty());
        assert_eq!(l.interior_fixed_point(), Err(Error::NoInteriorFixedPoint));
    }

    #[test]
    fn identity_fixed_points_error() {
        assert_eq!(Lft::identity().fixed_points().err(), Some(Error::IdentityMap));
    }

    #[test]
    fn interior_root_pairs_with_reciprocal() {
        let phi = jung_phi(c(0.3, 0.0), c(0.2, 0.0));
        let lft = phi.as_lft().unwrap();
        let report = lft.fixed_points().unwrap();
        assert_eq!(report.points.len(), 2);
        let interior = lft.interior_fixed_point().unwrap();
        assert!((interior - c(0.38776143803034679, 0.0)).norm() < 1e-12);
        // The two roots of a0 z^2 - (1 + a0^2 - a1) z + a0 multiply to 1.
        let product = report.points[0].value * report.points[1].value;
        assert!((product - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn hyperbolic_automorphism_fixes_plus_minus_one() {
        let l = Lft::new(c(1.0, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        assert!(l.is_automorphism());
        assert_eq!(l.classify().unwrap(), MapClass::HyperbolicAutomorphism);
        assert_eq!(l.interior_fixed_point(), Err(Error::NoInteriorFixedPoint));
        let report = l.fixed_points().unwrap();
        let mut vals: Vec<f64> = report.points.iter().map(|p| p.value.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn parabolic_automorphism_has_double_boundary_point() {
        // Conjugate of the translation w -> w + i s on the right half-plane:
        // ((2 - i s) z + i s) / (-i s z + (2 + i s)) fixes 1 doubly.
        let s = 0.7;
        let l = Lft::new(c(2.0, -s), c(0.0, s), c(0.0, -s), c(2.0, s)).unwrap();
        assert!(l.is_automorphism());
        assert_eq!(l.classify().unwrap(), MapClass::ParabolicAutomorphism);
        let report = l.fixed_points().unwrap();
        assert_eq!(report.points.len(), 1);
        assert!(report.points[0].double);
        assert_eq!(report.points[0].location, Location::Boundary);
        assert!((report.points[0].value - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rotation_is_elliptic() {
        let theta = core::f64::consts::FRAC_PI_3;
        let l = Lft::new(Complex64::from_polar(1.0, theta), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))
            .unwrap();
        assert_eq!(l.classify().unwrap(), MapClass::EllipticAutomorphism);
    }

    #[test]
    fn jung_map_is_plain_interior_class() {
        let lft = *jung_phi(c(0.3, 0.0), c(0.2, 0.0)).as_lft().unwrap();
        assert!(!lft.is_automorphism());
        assert_eq!(lft.classify().unwrap(), MapClass::InteriorFixedPoint);
    }

    #[test]
    fn boundary_contact_without_interior_point() {
        // (z + 1) / 2 fixes only 1.
        let l = Lft::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)).unwrap();
        assert_eq!(l.classify().unwrap(), MapClass::NoInteriorFixedPoint);
    }

    #[test]
    fn classify_rejects_expanding_maps() {
        let l = Lft::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(matches!(l.classify(), Err(Error::NotSelfMap { .. })));
    }

    #[test]
    fn jung_selfmap_matches_special_case_at_a1_equals_a0_squared() {
        // With a1 = a0^2 the criterion degenerates to |a0| <= 1/2.
        let check = jung_selfmap_check(c(0.5, 0.0), c(0.25, 0.0));
        assert!(check.passes);
        assert!(check.inequality_margin.abs() < 1e-15);
        let check = jung_selfmap_check(c(0.6, 0.0), c(0.36, 0.0));
        assert!(!check.passes);
    }

    #[test]
    fn jung_selfmap_accepts_any_constant_inside_the_disc() {
        // a1 = 0 is the constant map a0, a self-map whenever |a0| < 1.
        assert!(jung_selfmap_check(c(0.5, 0.0), c(0.0, 0.0)).passes);
        assert!(jung_selfmap_check(c(0.6, 0.0), c(0.0, 0.0)).passes);
        assert!(jung_selfmap_check(c(0.0, 0.9), c(0.0, 0.0)).passes);
        assert!(!jung_selfmap_check(c(1.1, 0.0), c(0.0, 0.0)).passes);
    }

    #[test]
    fn jung_selfmap_zero_center_reads_off_a1() {
        assert!(jung_selfmap_check(c(0.0, 0.0), c(0.3, 0.4)).passes);
        assert!(jung_selfmap_check(c(0.0, 0.0), c(1.0, 0.0)).passes);
        assert!(!jung_selfmap_check(c(0.0, 0.0), c(1.2, 0.0)).passes);
    }

    #[test]
    fn blaschke_factor_basics() {
        let lambda = c(0.4, -0.3);
        let b = blaschke_factor(lambda).unwrap();
        assert!(b.apply(lambda).unwrap().norm() < 1e-15);
        assert!(b.is_automorphism());
        assert!(blaschke_factor(c(1.0, 0.0)).is_err());
        // lambda = 0 leaves the identity-like map z.
        let b0 = blaschke_factor(c(0.0, 0.0)).unwrap();
        assert!((b0.apply(c(0.3, 0.2)).unwrap() - c(0.3, 0.2)).norm() < 1e-15);
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let l = Lft::new(c(0.2, 0.1), c(0.3, 0.0), c(-0.1, 0.0), c(1.0, 0.0)).unwrap();
        let m = Lft::new(c(0.7, 0.0), c(0.1, -0.2), c(0.05, 0.0), c(1.0, 0.3)).unwrap();
        let lm = l.compose(&m).unwrap();
        for k in 0..8 {
            let z = Complex64::from_polar(0.1 * k as f64 / 1.1, 1.7 * k as f64);
            let direct = l.apply(m.apply(z).unwrap()).unwrap();
            assert!((lm.apply(z).unwrap() - direct).norm() < 1e-13);
        }
    }

    #[test]
    fn projective_distance_ignores_rescaling() {
        let l = Lft::new(c(0.2, 0.1), c(0.3, 0.0), c(-0.1, 0.0), c(1.0, 0.0)).unwrap();
        let k = c(-3.7, 1.9);
        let scaled = Lft {
            a: l.a * k,
            b: l.b * k,
            c: l.c * k,
            d: l.d * k,
        };
        assert!(l.projective_distance(&scaled) < 1e-15);
        assert!(l.projective_distance(&Lft::identity()) > 1e-2);
    }
}
