//! Box measure, the Ψ correspondence and Ford-circle apexes.

use crate::{Error, Result};
use num_complex::Complex64;

/// Haar measure of the standard box C(x; a, b, c) in SL(2, ℝ):
/// 2ac·sinh(b/2). Independent of the center by bi-invariance.
pub fn box_haar_measure(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain(format!(
            "box parameters must be positive, got ({a}, {b}, {c})"
        )));
    }
    Ok(2.0 * a * c * (b / 2.0).sinh())
}

/// Ψ(u, v) = u/v + v^{−2}·i, the orientation-reversing diffeomorphism from
/// the Euclidean upper half-plane onto ℍ carrying coprime lattice points to
/// Ford tangency data.
pub fn psi_map(u: f64, v: f64) -> Result<Complex64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("psi needs v > 0, got {v}")));
    }
    Ok(Complex64::new(u / v, (v * v).recip()))
}

/// Finite-difference check of the metric Jacobian of Ψ (Euclidean source,
/// hyperbolic target): |det DΨ| / Im(Ψ)², expected to equal 2.
pub fn psi_jacobian_check(u: f64, v: f64, h: f64) -> Result<f64> {
    if !(v > h && h > 0.0) {
        return Err(Error::Domain(format!("need v > h > 0, got v={v}, h={h}")));
    }
    let pp = psi_map(u + h, v)?;
    let pm = psi_map(u - h, v)?;
    let qp = psi_map(u, v + h)?;
    let qm = psi_map(u, v - h)?;
    let du = (pp - pm) / (2.0 * h);
    let dv = (qp - qm) / (2.0 * h);
    let det = du.re * dv.im - du.im * dv.re;
    let y = psi_map(u, v)?.im;
    Ok(det.abs() / (y * y))
}

/// Apex of the image of the horocycle y = e^{−t}·…, i.e. of g·Λ_t, for an
/// integer unimodular matrix with c ≠ 0: z = a/c + e^t·c^{−2}·i.
pub fn ford_apex(a: i64, b: i64, c: i64, d: i64, t: f64) -> Result<Complex64> {
    if a * d - b * c != 1 {
        return Err(Error::Domain(format!(
            "[[{a},{b}],[{c},{d}]] is not in SL(2, Z)"
        )));
    }
    if c == 0 {
        return Err(Error::ParallelHorocycle);
    }
    let cf = c as f64;
    Ok(Complex64::new(a as f64 / cf, t.exp() / (cf * cf)))
}

/// Hyperbolic area of the rectangle [α₁, α₂] × [β₁, β₂] ⊂ ℍ:
/// (α₂−α₁)(β₁^{−1} − β₂^{−1}). β₂ may be infinite.
pub fn rect_hyperbolic_area(alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> Result<f64> {
    if !(alpha1 < alpha2) || !(beta1 > 0.0) || !(beta1 < beta2) {
        return Err(Error::DegenerateRegion(format!(
            "rectangle ({alpha1},{alpha2})x({beta1},{beta2})"
        )));
    }
    let inv_b2 = if beta2.is_infinite() { 0.0 } else { beta2.recip() };
    Ok((alpha2 - alpha1) * (beta1.recip() - inv_b2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::gcd_u64;
    use rand::{Rng, SeedableRng};

    #[test]
    fn box_measure_values() {
        assert!((box_haar_measure(1.0, 2.0, 1.0).unwrap() - 2.0 * 1f64.sinh()).abs() < 1e-15);
        assert!(box_haar_measure(1.0, 1e-12, 1.0).unwrap() < 1e-11);
        assert!(box_haar_measure(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn box_measure_invariant_under_geodesic_flow() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let a = rng.gen_range(0.1..3.0);
            let b = rng.gen_range(0.1..3.0);
            let c = rng.gen_range(0.1..3.0);
            let t: f64 = rng.gen_range(-2.0..2.0);
            let before = box_haar_measure(a, b, c).unwrap();
            let after = box_haar_measure((-t).exp() * a, b, t.exp() * c).unwrap();
            assert!((before - after).abs() <= 1e-12 * before.max(1.0));
        }
    }

    #[test]
    fn box_measure_matches_slice_integral() {
        // One half of the SL value must equal the angular slice integral
        // (1/2)∫ A_h(slice(θ)) dθ with A_h(slice) = c·2sinh(b/2)·sec²θ and
        // v = −tan θ running over [−a/2, a/2].
        let (a, b, c) = (0.8, 1.3, 0.6);
        let theta_hi = (a / 2.0_f64).atan();
        let n = 20_000;
        let mut acc = 0.0;
        let w = 2.0 * theta_hi / n as f64;
        for i in 0..n {
            let theta = -theta_hi + (i as f64 + 0.5) * w;
            let sec = theta.cos().recip();
            acc += c * 2.0 * (b / 2.0_f64).sinh() * sec * sec * w;
        }
        let slice_integral = 0.5 * acc;
        let lemma = box_haar_measure(a, b, c).unwrap();
        assert!(
            (2.0 * slice_integral - lemma).abs() < 1e-6,
            "slice {slice_integral}, lemma {lemma}"
        );
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_map(1.0, 1.0).unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(psi_map(1.0, 2.0).unwrap(), Complex64::new(0.5, 0.25));
        assert!(psi_map(1.0, 0.0).is_err());
        assert!(psi_map(1.0, -2.0).is_err());
    }

    #[test]
    fn psi_intertwines_scaling_and_vertical_compression() {
        // Ψ∘μ_t = T_t∘Ψ with μ_t(u,v) = (e^{t/2}u, e^{t/2}v) and
        // T_t(x,y) = (x, e^{−t}y).
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let u = rng.gen_range(-4.0..4.0);
            let v = rng.gen_range(0.1..4.0);
            let t: f64 = rng.gen_range(-2.0..2.0);
            let s = (t / 2.0).exp();
            let lhs = psi_map(s * u, s * v).unwrap();
            let base = psi_map(u, v).unwrap();
            let rhs = Complex64::new(base.re, (-t).exp() * base.im);
            assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn jacobian_is_two() {
        let j = psi_jacobian_check(1.0, 1.0, 1e-5).unwrap();
        assert!((j - 2.0).abs() < 1e-4, "j = {j}");
        let j = psi_jacobian_check(0.3, 2.0, 1e-5).unwrap();
        assert!((j - 2.0).abs() < 1e-4, "j = {j}");
        assert!(psi_jacobian_check(0.3, 1e-6, 1e-5).is_err());
    }

    #[test]
    fn apex_examples() {
        let z = ford_apex(0, -1, 1, 0, 0.0).unwrap();
        assert_eq!(z, Complex64::new(0.0, 1.0));
        let z = ford_apex(1, 0, 2, 1, 0.0).unwrap();
        assert_eq!(z, Complex64::new(0.5, 0.25));
        assert!(matches!(
            ford_apex(1, 5, 0, 1, 0.0),
            Err(Error::ParallelHorocycle)
        ));
        assert!(ford_apex(1, 1, 1, 1, 0.0).is_err());
    }

    #[test]
    fn apex_tangencies_are_farey_fractions() {
        // Over all coprime 0 <= a <= c <= 5 the tangency abscissas a/c are
        // exactly the Farey fractions of order 5 in [0, 1].
        let mut tangencies: Vec<(i64, i64)> = Vec::new();
        for c in 1..=5i64 {
            for a in 0..=c {
                if gcd_u64(a as u64, c as u64) == 1 {
                    // Complete (a, c) to a determinant-one integer matrix.
                    let (mut b, mut d) = (0i64, 0i64);
                    'search: for dd in -5..=5i64 {
                        for bb in -5..=5i64 {
                            if a * dd - bb * c == 1 {
                                b = bb;
                                d = dd;
                                break 'search;
                            }
                        }
                    }
                    let z = ford_apex(a, b, c, d, 0.0).unwrap();
                    assert!((z.re - a as f64 / c as f64).abs() < 1e-15);
                    tangencies.push((a, c));
                }
            }
        }
        tangencies.sort_by(|&(a, b), &(c, d)| (a * d).cmp(&(c * b)));
        tangencies.dedup();
        let expected = vec![
            (0, 1),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (1, 2),
            (3, 5),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 1),
        ];
        assert_eq!(tangencies, expected);
    }

    #[test]
    fn rectangle_area() {
        // A Ford disc over a unit strip has hyperbolic area one.
        assert!((rect_hyperbolic_area(0.0, 1.0, 1.0, f64::INFINITY).unwrap() - 1.0).abs() < 1e-15);
        assert!(rect_hyperbolic_area(0.0, 1.0, 1.0, 1.0).is_err());

        // 2-D Simpson quadrature oracle on random rectangles.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..10 {
            let a1 = rng.gen_range(-1.0..0.5);
            let a2 = a1 + rng.gen_range(0.1..1.5);
            let b1 = rng.gen_range(0.3..1.0);
            let b2 = b1 + rng.gen_range(0.1..2.0);
            let exact = rect_hyperbolic_area(a1, a2, b1, b2).unwrap();
            let (nx, ny) = (8usize, 20_000usize);
            let hx = (a2 - a1) / nx as f64;
            let hy = (b2 - b1) / ny as f64;
            let simpson_w = |i: usize, n: usize| -> f64 {
                if i == 0 || i == n {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                }
            };
            let mut acc = 0.0;
            for j in 0..=ny {
                let y = b1 + j as f64 * hy;
                let wy = simpson_w(j, ny);
                for i in 0..=nx {
                    acc += simpson_w(i, nx) * wy / (y * y);
                }
            }
            acc *= hx * hy / 9.0;
            assert!((acc - exact).abs() < 1e-8, "quadrature {acc} vs {exact}");
        }
    }

    #[test]
    fn psi_is_injective_on_grids() {
        let mut images = Vec::new();
        for iu in -10..=10 {
            for iv in 1..=10 {
                let z = psi_map(iu as f64 / 3.0, iv as f64 / 3.0).unwrap();
                images.push(z);
            }
        }
        for (i, a) in images.iter().enumerate() {
            for b in images.iter().skip(i + 1) {
                assert!((a - b).norm() > 1e-12);
            }
        }
    }
}
