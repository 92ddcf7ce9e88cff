//! Truncated Eisenstein series E(z, s) = ½ Σ_{gcd(c,d)=1} y^s / |cz+d|^{2s}.

use crate::util::{gcd_u64, pairwise_sum_complex};
use crate::{Error, Result};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct EisensteinSample {
    pub value: Complex64,
    /// Crude bound for the dropped tail, O(radius^{2−2Re s}).
    pub tail_bound: f64,
    pub radius: f64,
    pub terms: u64,
}

/// Sums the coprime pairs with c² + d² ≤ radius², in lexicographic (c, d)
/// order, reduced by pairwise summation: the result is bit-stable for a
/// given radius.
pub fn eisenstein_e(z: Complex64, s: Complex64, radius: f64) -> Result<EisensteinSample> {
    if !(z.im > 0.0) {
        return Err(Error::Domain(format!("z must lie in the upper half-plane, got {z}")));
    }
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!(
            "series diverges for Re(s) <= 1, got Re(s) = {}",
            s.re
        )));
    }
    if !(radius >= 1.0) {
        return Err(Error::Parameter(format!("radius must be >= 1, got {radius}")));
    }

    let r = radius.floor() as i64;
    let r2 = (radius * radius).floor() as i64;
    let (x, y) = (z.re, z.im);
    let log_y = y.ln();

    let mut terms: Vec<Complex64> = Vec::new();
    for c in -r..=r {
        for d in -r..=r {
            if c * c + d * d > r2 || (c == 0 && d == 0) {
                continue;
            }
            if gcd_u64(c.unsigned_abs(), d.unsigned_abs()) != 1 {
                continue;
            }
            let re = c as f64 * x + d as f64;
            let im = c as f64 * y;
            let norm_sq = re * re + im * im;
            // y^s / |cz+d|^{2s} = exp(s·(log y − log|cz+d|²)).
            terms.push((s * (log_y - norm_sq.ln())).exp());
        }
    }
    let value = 0.5 * pairwise_sum_complex(&terms);

    // |cz+d|² ≥ λ_min(z)·(c²+d²) with λ_min the smallest eigenvalue of
    // [[x²+y², x], [x, 1]]; the annulus beyond R then contributes at most
    // (3/π)·y^σ·λ_min^{−σ}·R^{2−2σ}/(2σ−2).
    let sigma = s.re;
    let tr = x * x + y * y + 1.0;
    let lambda_min = (tr - (tr * tr - 4.0 * y * y).sqrt()) / 2.0;
    let tail_bound =
        (3.0 / std::f64::consts::PI) * y.powf(sigma) * lambda_min.powf(-sigma) * radius
            .powf(2.0 - 2.0 * sigma)
            / (2.0 * sigma - 2.0);

    Ok(EisensteinSample {
        value,
        tail_bound,
        radius,
        terms: terms.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn domain_checks() {
        assert!(eisenstein_e(c64(0.0, -1.0), c64(2.0, 0.0), 10.0).is_err());
        assert!(eisenstein_e(c64(0.0, 1.0), c64(0.9, 0.0), 10.0).is_err());
        assert!(eisenstein_e(c64(0.0, 1.0), c64(2.0, 0.0), 0.5).is_err());
    }

    #[test]
    fn periodicity_with_matched_truncation() {
        // Term-by-term: the (c, d) term at z+1 is the (c, c+d) term at z.
        // At dyadic x both sides evaluate identically in floating point, so
        // the matched sums agree exactly.
        let z = c64(0.5, 1.25);
        let s = c64(2.5, 0.0);
        let r = 20i64;
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for c in -r..=r {
            for d in -r..=r {
                if (c == 0 && d == 0) || gcd_u64(c.unsigned_abs(), d.unsigned_abs()) != 1 {
                    continue;
                }
                if c * c + d * d > r * r {
                    continue;
                }
                let term_at = |zz: Complex64, cc: i64, dd: i64| {
                    let re = cc as f64 * zz.re + dd as f64;
                    let im = cc as f64 * zz.im;
                    (s * (zz.im.ln() - (re * re + im * im).ln())).exp()
                };
                lhs.push(term_at(z + 1.0, c, d));
                rhs.push(term_at(z, c, c + d));
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn modular_invariance_in_the_radius_limit() {
        // |E(-1/z, s) − E(z, s)| → 0 as the truncation radius grows.
        let z = c64(0.5, 2.0);
        let s = c64(3.0, 0.0);
        let w = -1.0 / z;
        let d200 = (eisenstein_e(w, s, 200.0).unwrap().value
            - eisenstein_e(z, s, 200.0).unwrap().value)
            .norm();
        let d50 = (eisenstein_e(w, s, 50.0).unwrap().value
            - eisenstein_e(z, s, 50.0).unwrap().value)
            .norm();
        assert!(d200 < 1e-4, "difference at radius 200: {d200}");
        assert!(d200 < d50, "should improve with radius: {d50} -> {d200}");
    }

    #[test]
    fn truncation_converges_monotonically_for_real_s() {
        let z = c64(0.3, 1.1);
        let s = c64(2.0, 0.0);
        let values: Vec<f64> = [20.0, 40.0, 80.0, 160.0]
            .iter()
            .map(|&r| eisenstein_e(z, s, r).unwrap().value.re)
            .collect();
        // Positive terms only: partial sums increase.
        assert!(values.windows(2).all(|w| w[1] >= w[0]));
        // Cauchy differences shrink.
        let d1 = values[1] - values[0];
        let d2 = values[2] - values[1];
        let d3 = values[3] - values[2];
        assert!(d2 < d1 && d3 < d2);
    }

    #[test]
    fn tail_bound_dominates_observed_remainder() {
        let z = c64(0.3, 1.1);
        let s = c64(2.5, 0.0);
        let coarse = eisenstein_e(z, s, 40.0).unwrap();
        let fine = eisenstein_e(z, s, 400.0).unwrap();
        let observed = (fine.value - coarse.value).norm();
        assert!(
            observed <= coarse.tail_bound,
            "observed remainder {observed} vs bound {}",
            coarse.tail_bound
        );
    }
}
