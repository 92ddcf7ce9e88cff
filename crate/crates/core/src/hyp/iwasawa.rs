//! The two Iwasawa decompositions of SL(2, ℝ).
//!
//! With n(x) = [[1, x], [0, 1]], a(y) = [[y, 0], [0, 1/y]] and
//! r(θ) = [[cos θ, sin θ], [−sin θ, cos θ]], every unimodular matrix factors
//! uniquely as n(x)·a(y)·r(θ) and as a(y)·n(u)·r(θ), y > 0; the nilpotent
//! parameters are related by u = x/y², the commutation rule of the affine
//! group.

use super::matrix::GroupElement;
use crate::util::normalize_angle;

/// NAK factorization parameters: g = n(x)·a(y)·r(θ).
#[derive(Debug, Clone, Copy)]
pub struct IwasawaNak {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

/// ANK factorization parameters: g = a(y)·n(x)·r(θ).
#[derive(Debug, Clone, Copy)]
pub struct IwasawaAnk {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

/// Bottom row [c, d] determines a(y) and r(θ): y = (c²+d²)^{-1/2},
/// cos θ = d·y, sin θ = −c·y; the top row then gives x = (ac+bd)·y².
/// d = 0 needs no special branch: atan2 covers the quarter-turn case.
pub fn iwasawa_nak(g: &GroupElement) -> IwasawaNak {
    let norm_sq = g.c * g.c + g.d * g.d;
    let y = norm_sq.sqrt().recip();
    let x = (g.a * g.c + g.b * g.d) / norm_sq;
    let theta = normalize_angle(f64::atan2(-g.c * y, g.d * y));
    IwasawaNak { x, y, theta }
}

pub fn iwasawa_ank(g: &GroupElement) -> IwasawaAnk {
    let norm_sq = g.c * g.c + g.d * g.d;
    let y = norm_sq.sqrt().recip();
    let x = g.a * g.c + g.b * g.d;
    let theta = normalize_angle(f64::atan2(-g.c * y, g.d * y));
    IwasawaAnk { x, y, theta }
}

fn n(x: f64) -> GroupElement {
    GroupElement {
        a: 1.0,
        b: x,
        c: 0.0,
        d: 1.0,
    }
}

fn a(y: f64) -> GroupElement {
    GroupElement {
        a: y,
        b: 0.0,
        c: 0.0,
        d: 1.0 / y,
    }
}

fn r(theta: f64) -> GroupElement {
    let (s, c) = theta.sin_cos();
    GroupElement {
        a: c,
        b: s,
        c: -s,
        d: c,
    }
}

impl IwasawaNak {
    pub fn recompose(&self) -> GroupElement {
        n(self.x).compose(&a(self.y)).compose(&r(self.theta))
    }
}

impl IwasawaAnk {
    pub fn recompose(&self) -> GroupElement {
        a(self.y).compose(&n(self.x)).compose(&r(self.theta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_element(rng: &mut impl Rng) -> GroupElement {
        let mut g = GroupElement::IDENTITY;
        for _ in 0..2 {
            g = g.flow_hplus(rng.gen_range(-1.0..1.0));
            g = g.flow_geodesic(rng.gen_range(-0.75..0.75));
            g = g.flow_hminus(rng.gen_range(-1.0..1.0));
        }
        g
    }

    #[test]
    fn identity_parts() {
        let nak = iwasawa_nak(&GroupElement::IDENTITY);
        assert_eq!(nak.x, 0.0);
        assert_eq!(nak.y, 1.0);
        assert_eq!(nak.theta, 0.0);
    }

    #[test]
    fn quarter_turn_at_d_zero() {
        // [[0, -1], [1, 0]]: x = 0, y = 1, rotation by a quarter turn.
        let g = GroupElement::new(0.0, -1.0, 1.0, 0.0).unwrap();
        let nak = iwasawa_nak(&g);
        assert!(nak.x.abs() < 1e-15);
        assert!((nak.y - 1.0).abs() < 1e-15);
        assert!((nak.theta - 3.0 * std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(nak.recompose().max_entry_distance(&g) < 1e-15);
    }

    #[test]
    fn recomposition_on_random_elements() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        for _ in 0..1000 {
            let g = random_element(&mut rng);
            let nak = iwasawa_nak(&g);
            let ank = iwasawa_ank(&g);
            assert!(nak.y > 0.0 && ank.y > 0.0);
            assert!(nak.recompose().max_entry_distance(&g) < 1e-12, "NAK {g:?}");
            assert!(ank.recompose().max_entry_distance(&g) < 1e-12, "ANK {g:?}");
        }
    }

    #[test]
    fn parts_related_by_commutation() {
        // n(x)a(y) = a(y)n(x/y²) forces x_nak = x_ank · y².
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g = random_element(&mut rng);
            let nak = iwasawa_nak(&g);
            let ank = iwasawa_ank(&g);
            assert!((nak.y - ank.y).abs() < 1e-14);
            assert!((nak.theta - ank.theta).abs() < 1e-14);
            assert!(
                (nak.x - ank.x * nak.y * nak.y).abs() < 1e-10 * (1.0 + ank.x.abs()),
                "x_nak={}, x_ank={}, y={}",
                nak.x,
                ank.x,
                nak.y
            );
        }
    }
}
