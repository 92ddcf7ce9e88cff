//! The action on the unit tangent bundle of the upper half-plane.

use super::matrix::GroupElement;
use crate::util::normalize_angle;
use crate::{Error, Result};
use num_complex::Complex64;

/// A unit tangent vector (z, θ) with z = x + iy, y > 0, and θ the angle from
/// the vertical, counter-clockwise, normalized to [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPoint {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl TangentPoint {
    pub fn new(x: f64, y: f64, theta: f64) -> Result<Self> {
        if !(y > 0.0) {
            return Err(Error::Domain(format!("tangent point needs y > 0, got {y}")));
        }
        Ok(TangentPoint {
            x,
            y,
            theta: normalize_angle(theta),
        })
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }
}

/// g·(z, θ) = ((az+b)/(cz+d), θ − 2·arg(cz + d)).
pub fn act_tangent(g: &GroupElement, p: &TangentPoint) -> TangentPoint {
    let z = p.z();
    let denom = Complex64::new(g.c, 0.0) * z + g.d;
    let w = (Complex64::new(g.a, 0.0) * z + g.b) / denom;
    TangentPoint {
        x: w.re,
        y: w.im,
        theta: normalize_angle(p.theta - 2.0 * denom.arg()),
    }
}
