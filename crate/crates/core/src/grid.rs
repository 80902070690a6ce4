//! Deterministic sample points in the disc for pointwise identity checks.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

/// Golden-angle spiral covering the disc of the given radius roughly
/// uniformly by area. Deterministic in `points`, so residual sweeps are
/// reproducible without a seed.
pub fn disc_grid(points: usize, max_radius: f64) -> Vec<Complex64> {
    let golden_angle = core::f64::consts::PI * (3.0 - (5.0f64).sqrt());
    (0..points)
        .map(|k| {
            let r = max_radius * (((k as f64) + 0.5) / points as f64).sqrt();
            Complex64::from_polar(r, golden_angle * k as f64)
        })
        .collect()
}
