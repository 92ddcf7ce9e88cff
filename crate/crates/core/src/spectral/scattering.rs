//! The scattering function φ(s) = π^{1/2}·Γ(s−1/2)·ζ(2s−1) / (Γ(s)·ζ(2s)).

use super::special::{gamma, zeta};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Domain on which the internal Γ and ζ carry their stated 1e-10 accuracy;
/// outside it callers should flag results as low-confidence.
pub fn in_reference_domain(s: Complex64) -> bool {
    (1.1..=10.0).contains(&s.re) && s.im.abs() <= 50.0
}

pub fn phi_scattering(s: Complex64) -> Result<Complex64> {
    if (s - Complex64::new(0.5, 0.0)).norm() < 1e-8 {
        return Err(Error::Pole(format!("{s} (Gamma(s-1/2) pole)")));
    }
    if (s - Complex64::new(1.0, 0.0)).norm() < 1e-8 {
        return Err(Error::Pole(format!("{s} (zeta(2s-1) pole)")));
    }
    let denom_zeta = zeta(2.0 * s);
    if denom_zeta.norm() < 1e-12 {
        return Err(Error::Pole(format!("{s} (zero of zeta(2s))")));
    }
    let denom_gamma = gamma(s);
    if !denom_gamma.is_finite() || denom_gamma.norm() < 1e-300 {
        return Err(Error::Pole(format!("{s} (Gamma(s) not invertible)")));
    }
    Ok(PI.sqrt() * gamma(s - 0.5) * zeta(2.0 * s - 1.0) / (denom_gamma * denom_zeta))
}
