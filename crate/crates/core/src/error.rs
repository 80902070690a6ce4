use core::fmt;

use num_complex::Complex64;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Binary series operation on operands of different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// A series must keep at least one coefficient.
    ZeroOrder,
    /// A coefficient was NaN or infinite.
    NonFiniteCoefficient,
    /// Requested truncation order is smaller than the current one.
    CannotShrink { from: usize, to: usize },
    /// A geometric ratio or kernel parameter must lie strictly inside the disc.
    PointOutsideDisc { modulus: f64 },
    /// Taylor expansion of a linear fractional map whose pole lies in the
    /// closed unit disc.
    PoleInsideDisc { pole_modulus: f64 },
    /// Evaluation hit a denominator of negligible magnitude.
    PoleAt { z: Complex64 },
    /// Linear fractional coefficients with vanishing determinant.
    DegenerateLft,
    /// The identity map fixes every point; a fixed-point report is undefined.
    IdentityMap,
    /// The map has no fixed point strictly inside the disc.
    NoInteriorFixedPoint,
    /// More than one fixed point inside the disc (not a self-map).
    MultipleInteriorFixedPoints,
    /// The map fails the linear-fractional self-map inequality.
    NotSelfMap { margin: f64 },
    /// The composition symbol fails the self-map bound in Jung normal form.
    JungNotSelfMap {
        modulus_margin: f64,
        inequality_margin: f64,
    },
    /// Elliptic automorphisms are excluded by the commutant theory.
    EllipticAutomorphism,
    /// A self-map could not be sorted into a classification bucket.
    Unclassifiable,
    /// The commutant denominator lambda^2*alpha - 1 vanishes.
    DegenerateDenominator,
    /// Weight symbols must not vanish identically.
    ZeroWeight,
    /// The composition symbol is the identity (derivative one at the origin),
    /// whose commutant is everything.
    IdentitySymbol,
    /// Truncation-sensitive residuals need degree <= order / 4 of headroom.
    DegreeBoundTooLarge { degree: usize, order: usize },
    /// The supplied fixed point does not satisfy its defining equation.
    InconsistentFixedPoint { residual: f64 },
    /// An operation needed the weight in closed geometric form.
    WeightNotGeometric,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "series orders differ ({left} vs {right}); pad first")
            }
            Error::ZeroOrder => write!(f, "truncation order must be at least 1"),
            Error::NonFiniteCoefficient => write!(f, "coefficient is NaN or infinite"),
            Error::CannotShrink { from, to } => {
                write!(f, "cannot pad order {from} down to {to}")
            }
            Error::PointOutsideDisc { modulus } => {
                write!(f, "parameter modulus {modulus} is not strictly below 1")
            }
            Error::PoleInsideDisc { pole_modulus } => write!(
                f,
                "pole of modulus {pole_modulus} lies in the closed unit disc"
            ),
            Error::PoleAt { z } => write!(f, "denominator vanishes at z = {z}"),
            Error::DegenerateLft => write!(f, "linear fractional determinant vanishes"),
            Error::IdentityMap => write!(f, "every point is fixed by the identity map"),
            Error::NoInteriorFixedPoint => {
                write!(f, "no fixed point strictly inside the unit disc")
            }
            Error::MultipleInteriorFixedPoints => {
                write!(f, "more than one fixed point inside the unit disc")
            }
            Error::NotSelfMap { margin } => {
                write!(f, "not a self-map of the disc (margin {margin})")
            }
            Error::JungNotSelfMap {
                modulus_margin,
                inequality_margin,
            } => write!(
                f,
                "symbol is not a disc self-map: 1-|a0| = {modulus_margin}, \
                 inequality margin = {inequality_margin}"
            ),
            Error::EllipticAutomorphism => {
                write!(f, "elliptic automorphisms are excluded by hypothesis")
            }
            Error::Unclassifiable => write!(f, "self-map does not fit any classification"),
            Error::DegenerateDenominator => {
                write!(f, "lambda^2 * alpha - 1 vanishes; symbols are undefined")
            }
            Error::ZeroWeight => write!(f, "weight symbol is identically zero"),
            Error::IdentitySymbol => {
                write!(f, "composition symbol is the identity map (a1 = 1)")
            }
            Error::DegreeBoundTooLarge { degree, order } => write!(
                f,
                "degree bound {degree} exceeds order/4 = {} headroom",
                order / 4
            ),
            Error::InconsistentFixedPoint { residual } => write!(
                f,
                "supplied fixed point leaves residual {residual} in its defining equation"
            ),
            Error::WeightNotGeometric => {
                write!(f, "operation requires the weight in geometric closed form")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
