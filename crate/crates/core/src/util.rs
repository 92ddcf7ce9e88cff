//! Small numeric helpers shared across modules.

use num_complex::Complex64;

/// Pairwise (cascade) summation. Used for every reduction whose result must
/// be bit-stable across worker counts: the tree shape depends only on the
/// slice length, never on the schedule.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

pub fn pairwise_sum_complex(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum_complex(&xs[..mid]) + pairwise_sum_complex(&xs[mid..])
        }
    }
}

/// Normalizes an angle to `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut t = theta % two_pi;
    if t < 0.0 {
        t += two_pi;
    }
    // `%` can return exactly two_pi - eps rounding back up; keep the range.
    if t >= two_pi {
        t -= two_pi;
    }
    t
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
