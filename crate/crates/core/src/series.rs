//! Truncated Taylor series with complex coefficients: arithmetic, evaluation,
//! the coefficient inner product, and expansions of the closed forms used as
//! weights and kernels.
//!
//! A series of order N keeps the coefficients c0..c_{N-1}. Binary operations
//! insist on equal orders; [`TruncatedSeries::pad_to`] widens explicitly.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::lft::{DiscMap, Lft};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Wraps a coefficient vector; every entry must be finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        if coeffs
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFiniteCoefficient);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zeros(order: usize) -> Self {
        assert!(order >= 1, "order must be at least 1");
        TruncatedSeries {
            coeffs: vec![Complex64::new(0.0, 0.0); order],
        }
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The monomial z^k at the given order; k must fit below the order.
    pub fn monomial(k: usize, order: usize) -> Self {
        assert!(k < order, "monomial degree must stay below the order");
        let mut s = Self::zeros(order);
        s.coeffs[k] = Complex64::new(1.0, 0.0);
        s
    }

    /// Polynomial coefficients laid into a series of the given order; the
    /// polynomial must fit.
    pub fn from_polynomial(poly: &[Complex64], order: usize) -> Result<Self> {
        if poly.len() > order {
            return Err(Error::CannotShrink {
                from: poly.len(),
                to: order,
            });
        }
        let mut s = Self::zeros(order);
        s.coeffs[..poly.len()].copy_from_slice(poly);
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Zero-pads up to `order`; shrinking is refused.
    pub fn pad_to(&self, order: usize) -> Result<Self> {
        if order < self.order() {
            return Err(Error::CannotShrink {
                from: self.order(),
                to: order,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, Complex64::new(0.0, 0.0));
        Ok(TruncatedSeries { coeffs })
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    pub fn scale(&self, k: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * k).collect(),
        }
    }

    /// Truncated Cauchy product: result_k = sum_{i+j=k} s_i t_j for k < N.
    ///
    /// Terms are accumulated in symmetric pairs so the product is exactly
    /// commutative in floating point.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let n = self.order();
        let a = &self.coeffs;
        let b = &other.coeffs;
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut i = 0;
            while i < k - i {
                acc += a[i] * b[k - i] + a[k - i] * b[i];
                i += 1;
            }
            if i == k - i {
                acc += a[i] * b[i];
            }
            coeffs.push(acc);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient inner product sum_n s_n conj(t_n).
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_same_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x * y.conj())
            .sum())
    }

    /// sqrt(sum |c_n|^2), the truncated Hardy norm.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// The conjugation f(z) -> conj(f(conj(z))), which acts coefficientwise;
    /// an involution, and anti-linear.
    pub fn conj(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|z| z.conj()).collect(),
        }
    }
}

/// Expansion of scale / (1 - ratio z): coefficients scale * ratio^n.
/// Requires |ratio| < 1 so the function belongs to the Hardy space.
pub fn geometric_series(scale: Complex64, ratio: Complex64, order: usize) -> Result<TruncatedSeries> {
    if ratio.norm() >= 1.0 {
        return Err(Error::PointOutsideDisc {
            modulus: ratio.norm(),
        });
    }
    let mut coeffs = Vec::with_capacity(order.max(1));
    let mut term = scale;
    for _ in 0..order.max(1) {
        coeffs.push(term);
        term *= ratio;
    }
    TruncatedSeries::new(coeffs)
}

/// The reproducing kernel K_w(z) = 1 / (1 - w̄ z); coefficients conj(w)^n.
pub fn cauchy_kernel(w: Complex64, order: usize) -> Result<TruncatedSeries> {
    if w.norm() >= 1.0 {
        return Err(Error::PointOutsideDisc { modulus: w.norm() });
    }
    geometric_series(Complex64::new(1.0, 0.0), w.conj(), order)
}

/// Taylor coefficients of (az + b) / (cz + d) about the origin. The pole
/// -d/c must lie strictly outside the closed disc, i.e. |d| > |c|.
pub fn lft_taylor(l: &Lft, order: usize) -> Result<TruncatedSeries> {
    let n = order.max(1);
    if l.d.norm() <= l.c.norm() {
        return Err(Error::PoleInsideDisc {
            pole_modulus: if l.c.norm() == 0.0 {
                f64::infinity()
            } else {
                (l.d / l.c).norm()
            },
        });
    }
    // 1/(cz + d) = (1/d) sum r^n z^n with r = -c/d, then multiply by az + b.
    let r = -l.c / l.d;
    let mut recip = Vec::with_capacity(n);
    let mut term = Complex64::new(1.0, 0.0) / l.d;
    for _ in 0..n {
        recip.push(term);
        term *= r;
    }
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(l.b * recip[0]);
    for k in 1..n {
        coeffs.push(l.a * recip[k - 1] + l.b * recip[k]);
    }
    TruncatedSeries::new(coeffs)
}

/// Taylor coefficients of a disc map; constants expand to a constant series.
pub fn map_taylor(map: &DiscMap, order: usize) -> Result<TruncatedSeries> {
    match map {
        DiscMap::Lft(l) => lft_taylor(l, order),
        DiscMap::Constant(k) => Ok(TruncatedSeries::constant(*k, order)),
    }
}
