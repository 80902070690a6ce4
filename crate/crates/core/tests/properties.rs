//! Property tests for the series, map, and operator invariants.

use num_complex::Complex64;
use proptest::prelude::*;
use wco_core::lft::{jung_phi, jung_selfmap_check, DiscMap, Lft};
use wco_core::operators::{Weight, WcoSymbols};
use wco_core::series::{cauchy_kernel, TruncatedSeries};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex_in_disc(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..1.0f64, 0.0..core::f64::consts::TAU)
        .prop_map(move |(r, theta)| Complex64::from_polar(radius * r.sqrt(), theta))
}

fn complex_in_square(half_width: f64) -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64)
        .prop_map(move |(re, im)| Complex64::new(half_width * re, half_width * im))
}

fn series_of(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(complex_in_square(2.0), order)
        .prop_map(|coeffs| TruncatedSeries::new(coeffs).unwrap())
}

/// Series with small-integer coefficients: arithmetic on them is exact in
/// doubles, so algebraic identities can be asserted with equality.
fn integer_series_of(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec((-8i32..=8, -8i32..=8), order).prop_map(|pairs| {
        TruncatedSeries::new(
            pairs
                .into_iter()
                .map(|(re, im)| c(re as f64, im as f64))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn add_round_trips_through_sub(s in series_of(24), t in series_of(24)) {
        let back = s.add(&t).unwrap().sub(&t).unwrap();
        for k in 0..24 {
            prop_assert!((back.coeff(k) - s.coeff(k)).norm() <= 1e-15 * (1.0 + s.coeff(k).norm()));
        }
    }

    #[test]
    fn cauchy_product_commutes_exactly(s in series_of(20), t in series_of(20)) {
        prop_assert_eq!(s.mul(&t).unwrap(), t.mul(&s).unwrap());
    }

    #[test]
    fn cauchy_product_associates_on_integer_series(
        s in integer_series_of(12),
        t in integer_series_of(12),
        u in integer_series_of(12),
    ) {
        let left = s.mul(&t).unwrap().mul(&u).unwrap();
        let right = s.mul(&t.mul(&u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kernel_reproduces_polynomials(
        coeffs in proptest::collection::vec(complex_in_square(1.5), 1..12),
        w in complex_in_disc(0.9),
    ) {
        let n = 32;
        let p = TruncatedSeries::from_polynomial(&coeffs, n).unwrap();
        let k = cauchy_kernel(w, n).unwrap();
        let via_inner = p.inner(&k).unwrap();
        let direct = p.eval(w);
        prop_assert!((via_inner - direct).norm() <= 1e-13 * (1.0 + direct.norm()));
    }

    #[test]
    fn conjugation_is_an_isometric_involution(s in series_of(16), t in series_of(16)) {
        prop_assert_eq!(s.conj().conj(), s.clone());
        let lhs = s.conj().inner(&t.conj()).unwrap();
        let rhs = s.inner(&t).unwrap().conj();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_evaluates_pointwise(
        a in complex_in_square(0.6),
        b in complex_in_square(0.6),
        cc in complex_in_square(0.4),
        e in complex_in_square(0.6),
        f in complex_in_square(0.6),
        g in complex_in_square(0.4),
        z in complex_in_disc(0.9),
    ) {
        let one = c(1.0, 0.0);
        let l = Lft::new(a, b, cc, one);
        let m = Lft::new(e, f, g, one);
        prop_assume!(l.is_ok() && m.is_ok());
        let (l, m) = (l.unwrap(), m.unwrap());
        let composed = l.compose(&m);
        prop_assume!(composed.is_ok());
        let inner = m.apply(z);
        prop_assume!(inner.is_ok());
        let direct = l.apply(inner.unwrap()).unwrap();
        prop_assert!((composed.unwrap().apply(z).unwrap() - direct).norm() <= 1e-11);
    }

    #[test]
    fn classification_is_projectively_invariant(
        a0 in complex_in_disc(0.4),
        a1 in complex_in_disc(0.8),
        k in complex_in_square(3.0),
    ) {
        prop_assume!(k.norm() > 0.05);
        prop_assume!(jung_selfmap_check(a0, a1).passes);
        if let DiscMap::Lft(l) = jung_phi(a0, a1) {
            let scaled = Lft { a: l.a * k, b: l.b * k, c: l.c * k, d: l.d * k };
            let before = l.classify();
            let after = scaled.classify();
            prop_assume!(before.is_ok());
            prop_assert_eq!(before.unwrap(), after.unwrap());
        }
    }

    /// The two self-map criteria (the coefficient inequality on the raw
    /// tuple and the normal-form inequality on (a0, a1)) describe the same
    /// region; agreement is asserted away from the decision boundary.
    #[test]
    fn selfmap_criteria_agree(a0 in complex_in_disc(0.9), a1 in complex_in_disc(1.2)) {
        let jung = jung_selfmap_check(a0, a1);
        let map = jung_phi(a0, a1);
        let mv = map.selfmap_check();
        let near_boundary = jung.inequality_margin.abs() < 1e-9
            || jung.modulus_margin.abs() < 1e-9
            || mv.margin.abs() < 1e-9;
        prop_assume!(!near_boundary);
        prop_assert_eq!(jung.passes, mv.is_selfmap,
            "jung margins ({}, {}), coefficient margin {}",
            jung.modulus_margin, jung.inequality_margin, mv.margin);
    }

    #[test]
    fn fixed_points_satisfy_their_equation(
        a in complex_in_square(1.0),
        b in complex_in_square(1.0),
        cc in complex_in_square(1.0),
        d in complex_in_square(1.0),
    ) {
        let l = Lft::new(a, b, cc, d);
        prop_assume!(l.is_ok());
        let l = l.unwrap();
        prop_assume!(!l.is_identity());
        if let Ok(report) = l.fixed_points() {
            for p in &report.points {
                let resid = (l.apply(p.value).unwrap() - p.value).norm();
                prop_assert!(resid <= 1e-10 * (1.0 + p.value.norm()),
                    "residual {} at {}", resid, p.value);
            }
        }
    }

    #[test]
    fn matrix_and_apply_agree_on_polynomials(
        a0 in complex_in_disc(0.35),
        a1 in complex_in_disc(0.7),
        b in complex_in_square(1.0),
        coeffs in proptest::collection::vec(complex_in_square(1.0), 1..10),
    ) {
        prop_assume!(b.norm() > 1e-3);
        prop_assume!(jung_selfmap_check(a0, a1).passes);
        let sym = WcoSymbols::new(
            Weight::Geometric { scale: b, ratio: a0 },
            jung_phi(a0, a1),
        ).unwrap();
        let n = 40;
        let h = TruncatedSeries::from_polynomial(&coeffs, n).unwrap();
        let via_apply = sym.apply(&h).unwrap();
        let via_matrix = sym.matrix(n).unwrap().apply_vec(h.coeffs());
        for k in 0..n {
            prop_assert!((via_matrix[k] - via_apply.coeff(k)).norm() <= 1e-12);
        }
    }

    #[test]
    fn jung_matrices_are_transpose_symmetric(
        a0 in complex_in_disc(0.45),
        a1 in complex_in_disc(0.9),
        b in complex_in_square(1.0),
    ) {
        prop_assume!(b.norm() > 1e-3);
        prop_assume!(jung_selfmap_check(a0, a1).passes);
        let sym = wco_core::theory::jung_symbols(a0, a1, b);
        prop_assume!(sym.is_ok());
        let resid = sym.unwrap().matrix(32).unwrap().transpose_symmetry_residual();
        prop_assert!(resid <= 1e-12, "residual {}", resid);
    }
}
