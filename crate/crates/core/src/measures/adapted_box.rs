//! Adapted boxes: flow boxes whose base is a rectangle in the basic stable
//! leaf.

use crate::hyp::rect_hyperbolic_area;
use crate::{Error, Result};

/// 3/π², the normalization turning Haar measure into a probability measure.
pub const HAAR_NORMALIZATION: f64 = 3.0 / (std::f64::consts::PI * std::f64::consts::PI);

/// A box over the base rectangle Q(α₁, α₂; β₁, β₂) ⊂ ℍ with unstable
/// height ℓ.
///
/// The base must sit in the half-open strip 0 < x ≤ 1 so the box embeds in
/// the quotient; β₂ = ∞ describes a box over a full horoball (α₁ = 0 then
/// means the slope bound is vacuous for lattice points, which all have
/// u ≥ 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptedBox {
    alpha1: f64,
    alpha2: f64,
    beta1: f64,
    beta2: f64,
    ell: f64,
}

impl AdaptedBox {
    pub fn new(alpha1: f64, alpha2: f64, beta1: f64, beta2: f64, ell: f64) -> Result<Self> {
        if !(0.0 <= alpha1 && alpha1 < alpha2 && alpha2 <= 1.0) {
            return Err(Error::DegenerateRegion(format!(
                "base x-range must satisfy 0 <= alpha1 < alpha2 <= 1, got ({alpha1}, {alpha2})"
            )));
        }
        if !(0.0 < beta1 && beta1 < beta2) {
            return Err(Error::DegenerateRegion(format!(
                "base y-range must satisfy 0 < beta1 < beta2, got ({beta1}, {beta2})"
            )));
        }
        if !(ell > 0.0 && ell.is_finite()) {
            return Err(Error::DegenerateRegion(format!(
                "height must be positive, got {ell}"
            )));
        }
        Ok(AdaptedBox {
            alpha1,
            alpha2,
            beta1,
            beta2,
            ell,
        })
    }

    /// The reference box used throughout tests and CLI defaults.
    pub fn reference() -> Self {
        AdaptedBox::new(0.5, 1.0, 0.25, 1.0, 0.1).expect("reference box is valid")
    }

    /// Box over the full strip 0 < x ≤ 1 above the basic horocycle; its base
    /// hyperbolic area is one.
    pub fn full_strip(ell: f64) -> Result<Self> {
        AdaptedBox::new(0.0, 1.0, 1.0, f64::INFINITY, ell)
    }

    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    pub fn beta1(&self) -> f64 {
        self.beta1
    }

    pub fn beta2(&self) -> f64 {
        self.beta2
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Hyperbolic area of the base rectangle.
    pub fn base_hyperbolic_area(&self) -> f64 {
        rect_hyperbolic_area(self.alpha1, self.alpha2, self.beta1, self.beta2)
            .expect("constructor validated the rectangle")
    }

    /// Normalized Haar measure m̄(C) = (3/π²)·A_h(Q)·ℓ.
    pub fn haar(&self) -> f64 {
        HAAR_NORMALIZATION * self.base_hyperbolic_area() * self.ell
    }
}

pub fn haar_measure(b: &AdaptedBox) -> f64 {
    b.haar()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::box_haar_measure;
    use rand::{Rng, SeedableRng};

    #[test]
    fn haar_limits() {
        let tiny = AdaptedBox::new(0.5, 1.0, 0.25, 1.0, 1e-12).unwrap();
        assert!(tiny.haar() < 1e-11);
        let strip = AdaptedBox::full_strip(1.0).unwrap();
        assert!((strip.haar() - HAAR_NORMALIZATION).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_bases() {
        assert!(AdaptedBox::new(0.5, 0.5, 0.25, 1.0, 0.1).is_err());
        assert!(AdaptedBox::new(0.0, 1.5, 0.25, 1.0, 0.1).is_err());
        assert!(AdaptedBox::new(0.0, 1.0, 0.0, 1.0, 0.1).is_err());
        assert!(AdaptedBox::new(0.0, 1.0, 1.0, 0.5, 0.1).is_err());
        assert!(AdaptedBox::new(0.0, 1.0, 0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn haar_agrees_with_box_measure_reparametrization() {
        // A box with base Q and height ℓ is C(x; a, b, c) with
        // a = (α₂−α₁)/√(β₁β₂), b = log(β₂/β₁), c = ℓ; its base area is then
        // 2a·sinh(b/2) = A_h(Q), so (3/π²)·box measure = m̄.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);
        for _ in 0..20 {
            let a1 = rng.gen_range(0.0..0.5);
            let a2 = a1 + rng.gen_range(0.05..(1.0 - a1));
            let b1 = rng.gen_range(0.1..1.0);
            let b2 = b1 + rng.gen_range(0.1..2.0);
            let ell = rng.gen_range(0.01..0.5);
            let bx = AdaptedBox::new(a1, a2, b1, b2, ell).unwrap();
            let a = (a2 - a1) / (b1 * b2).sqrt();
            let b = (b2 / b1).ln();
            let reparam = HAAR_NORMALIZATION * box_haar_measure(a, b, ell).unwrap();
            assert!(
                (bx.haar() - reparam).abs() < 1e-12 * bx.haar().max(1.0),
                "haar {} vs reparametrized {}",
                bx.haar(),
                reparam
            );
        }
    }
}
