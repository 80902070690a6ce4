//! Weighted composition operators h -> f * (h ∘ φ) as truncated matrices in
//! the monomial basis, together with the residual machinery (symmetry,
//! Hermitian-ness, commutators, normality) that turns operator identities
//! into numbers.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::lft::DiscMap;
use crate::series::{self, TruncatedSeries};

/// Denominators below this magnitude are treated as poles (matches the
/// linear fractional evaluation guard).
const POLE_TOL: f64 = 1e-300;
/// Relative tolerance for the symbol-shape tests on weights and maps.
const SYMBOL_TOL: f64 = 1e-12;

/// Weight symbol of the operator: the closed geometric form
/// scale / (1 - ratio z) whenever possible, or a general series.
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Geometric { scale: Complex64, ratio: Complex64 },
    Series(TruncatedSeries),
}

impl Weight {
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            Weight::Geometric { scale, ratio } => {
                let den = Complex64::new(1.0, 0.0) - ratio * z;
                if den.norm() < POLE_TOL {
                    return Err(Error::PoleAt { z });
                }
                Ok(scale / den)
            }
            Weight::Series(s) => Ok(s.eval(z)),
        }
    }

    /// Taylor coefficients at the requested order. Geometric weights need
    /// |ratio| < 1; stored series are zero-padded, never truncated.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            Weight::Geometric { scale, ratio } => series::geometric_series(*scale, *ratio, order),
            Weight::Series(s) => s.pad_to(order),
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        match self {
            Weight::Geometric { scale, .. } => scale.re == 0.0 && scale.im == 0.0,
            Weight::Series(s) => s.is_zero(),
        }
    }
}

/// Symbol pair (weight, composition map) of a weighted composition operator.
#[derive(Debug, Clone, PartialEq)]
pub struct WcoSymbols {
    weight: Weight,
    map: DiscMap,
}

impl WcoSymbols {
    /// Validated constructor: the weight must not vanish identically and the
    /// map must send the disc into itself (constants need modulus < 1).
    pub fn new(weight: Weight, map: DiscMap) -> Result<Self> {
        if weight.is_identically_zero() {
            return Err(Error::ZeroWeight);
        }
        match &map {
            DiscMap::Constant(k) => {
                if k.norm() >= 1.0 {
                    return Err(Error::PointOutsideDisc { modulus: k.norm() });
                }
            }
            DiscMap::Lft(_) => {
                let check = map.selfmap_check();
                if !check.is_selfmap {
                    return Err(Error::NotSelfMap {
                        margin: check.margin,
                    });
                }
            }
        }
        Ok(WcoSymbols { weight, map })
    }

    /// Skips the self-map gate. The algebraic symbol identities make sense
    /// for arbitrary maps; operator-level use must be gated by the caller.
    pub fn new_unchecked(weight: Weight, map: DiscMap) -> Self {
        WcoSymbols { weight, map }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn map(&self) -> &DiscMap {
        &self.map
    }

    pub fn weight_at(&self, z: Complex64) -> Result<Complex64> {
        self.weight.eval(z)
    }

    /// f * (h ∘ φ) truncated at the order of `h`, with the composition
    /// accumulated Horner-style over the series of φ.
    pub fn apply(&self, h: &TruncatedSeries) -> Result<TruncatedSeries> {
        let n = h.order();
        let phi = series::map_taylor(&self.map, n)?;
        let mut acc = TruncatedSeries::constant(h.coeff(n - 1), n);
        for k in (0..n - 1).rev() {
            acc = acc.mul(&phi)?;
            acc = acc.add(&TruncatedSeries::constant(h.coeff(k), n))?;
        }
        self.weight.series(n)?.mul(&acc)
    }

    /// Matrix in the monomial basis: column j holds the first N Taylor
    /// coefficients of f * φ^j, built incrementally from φ^{j-1} * φ.
    pub fn matrix(&self, order: usize) -> Result<OperatorMatrix> {
        let phi = series::map_taylor(&self.map, order)?;
        let mut columns = Vec::with_capacity(order);
        let mut col = self.weight.series(order)?;
        columns.push(col.coeffs().to_vec());
        for _ in 1..order {
            col = col.mul(&phi)?;
            columns.push(col.coeffs().to_vec());
        }
        Ok(OperatorMatrix::from_columns(columns))
    }

    /// Adjoint action on a reproducing kernel: K_w is sent to
    /// conj(f(w)) K_{φ(w)}; returns that scale and point.
    pub fn adjoint_on_kernel(&self, w: Complex64) -> Result<KernelAction> {
        if w.norm() >= 1.0 {
            return Err(Error::PointOutsideDisc { modulus: w.norm() });
        }
        let point = self.map.apply(w)?;
        if point.norm() >= 1.0 {
            return Err(Error::PointOutsideDisc {
                modulus: point.norm(),
            });
        }
        Ok(KernelAction {
            scale: self.weight.eval(w)?.conj(),
            point,
        })
    }
}

/// Image data of a kernel under the adjoint: scale * K_point.
#[derive(Debug, Clone, Copy)]
pub struct KernelAction {
    pub scale: Complex64,
    pub point: Complex64,
}

/// Dense N x N complex matrix, stored column-major because it is built and
/// consumed by columns.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    fn from_columns(columns: Vec<Vec<Complex64>>) -> Self {
        let order = columns.len();
        let mut entries = Vec::with_capacity(order * order);
        for col in &columns {
            debug_assert_eq!(col.len(), order);
            entries.extend_from_slice(col);
        }
        OperatorMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[col * self.order + row]
    }

    pub fn column(&self, col: usize) -> &[Complex64] {
        &self.entries[col * self.order..(col + 1) * self.order]
    }

    /// M x for a coefficient vector x.
    pub fn apply_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.order);
        let mut y = vec![Complex64::new(0.0, 0.0); self.order];
        for (j, &xj) in x.iter().enumerate() {
            if xj.re == 0.0 && xj.im == 0.0 {
                continue;
            }
            for (yi, &mij) in y.iter_mut().zip(self.column(j)) {
                *yi += mij * xj;
            }
        }
        y
    }

    /// M* x (conjugate transpose applied to x).
    pub fn apply_adjoint_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.order);
        (0..self.order)
            .map(|j| {
                self.column(j)
                    .iter()
                    .zip(x)
                    .map(|(&mij, &xi)| mij.conj() * xi)
                    .sum()
            })
            .collect()
    }

    /// max |M_ij - M_ji|: zero exactly when the matrix is transpose
    /// symmetric, which in the monomial basis is the matrix form of
    /// symmetry under the coefficientwise conjugation.
    pub fn transpose_symmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                worst = worst.max((self.get(i, j) - self.get(j, i)).norm());
            }
        }
        worst
    }

    /// max |M_ij - conj(M_ji)|.
    pub fn hermitian_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.order {
            for j in i..self.order {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }
}

/// Boolean-with-residual result of a matrix symmetry test.
#[derive(Debug, Clone, Copy)]
pub struct SymmetryCheck {
    pub passes: bool,
    pub max_residual: f64,
    pub tolerance: f64,
}

/// Transpose-symmetry test of the truncated matrix.
pub fn j_symmetry_check(m: &OperatorMatrix, tol: f64) -> SymmetryCheck {
    let max_residual = m.transpose_symmetry_residual();
    SymmetryCheck {
        passes: max_residual <= tol,
        max_residual,
        tolerance: tol,
    }
}

/// Clauses of the Hermitian symbol shape that can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianClause {
    WeightNotGeometric,
    WeightScaleNotReal,
    DerivativeAtOriginNotReal,
    RatioNotConjugateCenter,
    MapNotConjugateNormalForm,
}

impl HermitianClause {
    pub fn as_str(&self) -> &'static str {
        match self {
            HermitianClause::WeightNotGeometric => "weight is not in geometric closed form",
            HermitianClause::WeightScaleNotReal => "weight value at the origin is not real",
            HermitianClause::DerivativeAtOriginNotReal => {
                "composition derivative at the origin is not real"
            }
            HermitianClause::RatioNotConjugateCenter => {
                "weight ratio is not the conjugate of the map value at the origin"
            }
            HermitianClause::MapNotConjugateNormalForm => {
                "composition map is not of the conjugate normal form"
            }
        }
    }
}

/// Diagnostics of [`hermitian_symbol_check`].
#[derive(Debug, Clone)]
pub struct HermitianCheck {
    pub passes: bool,
    pub failures: Vec<HermitianClause>,
}

/// Tests whether the symbols have the shape that makes the operator
/// Hermitian: geometric weight with real scale, ratio conj(φ(0)), real
/// φ'(0), and φ in the conjugate normal form a0 + a1 z / (1 - ā0 z).
pub fn hermitian_symbol_check(symbols: &WcoSymbols) -> Result<HermitianCheck> {
    let mut failures = Vec::new();
    let a0 = symbols.map().at_origin()?;
    let a1 = symbols.map().derivative_at_origin()?;
    if a1.im.abs() > SYMBOL_TOL * (1.0 + a1.norm()) {
        failures.push(HermitianClause::DerivativeAtOriginNotReal);
    }
    match symbols.weight() {
        Weight::Geometric { scale, ratio } => {
            if scale.im.abs() > SYMBOL_TOL * (1.0 + scale.norm()) {
                failures.push(HermitianClause::WeightScaleNotReal);
            }
            if (ratio - a0.conj()).norm() > SYMBOL_TOL * (1.0 + a0.norm()) {
                failures.push(HermitianClause::RatioNotConjugateCenter);
            }
        }
        Weight::Series(_) => failures.push(HermitianClause::WeightNotGeometric),
    }
    let form_ok = match (symbols.map(), crate::lft::hermitian_phi(a0, a1)) {
        (DiscMap::Lft(l), DiscMap::Lft(form)) => l.projective_distance(&form) <= SYMBOL_TOL,
        (DiscMap::Constant(k), DiscMap::Constant(f)) => (k - f).norm() <= SYMBOL_TOL,
        _ => false,
    };
    if !form_ok {
        failures.push(HermitianClause::MapNotConjugateNormalForm);
    }
    Ok(HermitianCheck {
        passes: failures.is_empty(),
        failures,
    })
}

fn check_degree_headroom(degree_bound: usize, order: usize) -> Result<()> {
    if degree_bound > order / 4 {
        return Err(Error::DegreeBoundTooLarge {
            degree: degree_bound,
            order,
        });
    }
    Ok(())
}

fn unit_vector(j: usize, order: usize) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); order];
    e[j] = Complex64::new(1.0, 0.0);
    e
}

fn diff_norm(u: &[Complex64], v: &[Complex64]) -> f64 {
    u.iter()
        .zip(v)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// max_{j <= degree_bound} || (M_S M_T - M_T M_S) e_j ||_2, the commutator
/// residual on low-degree monomials. The degree bound must leave headroom
/// (at most order / 4) so truncation tails stay subdominant.
pub fn commutator_residual(
    s: &WcoSymbols,
    t: &WcoSymbols,
    degree_bound: usize,
    order: usize,
) -> Result<f64> {
    check_degree_headroom(degree_bound, order)?;
    let ms = s.matrix(order)?;
    let mt = t.matrix(order)?;
    let mut worst = 0.0f64;
    for j in 0..=degree_bound {
        let st = ms.apply_vec(mt.column(j));
        let ts = mt.apply_vec(ms.column(j));
        worst = worst.max(diff_norm(&st, &ts));
    }
    Ok(worst)
}

/// max_{j <= degree_bound} || (M* M - M M*) e_j ||_2. Reliable only with the
/// same degree headroom as the commutator residual.
pub fn normality_residual(s: &WcoSymbols, degree_bound: usize, order: usize) -> Result<f64> {
    check_degree_headroom(degree_bound, order)?;
    let m = s.matrix(order)?;
    let mut worst = 0.0f64;
    for j in 0..=degree_bound {
        let e = unit_vector(j, order);
        let mhm = m.apply_adjoint_vec(m.column(j));
        let mmh = m.apply_vec(&m.apply_adjoint_vec(&e));
        worst = worst.max(diff_norm(&mhm, &mmh));
    }
    Ok(worst)
}
