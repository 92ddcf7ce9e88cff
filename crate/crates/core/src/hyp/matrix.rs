//! Real 2×2 matrices of determinant one and the three flows.

use crate::{Error, Result};

/// Tolerance beyond which an operation result is rescaled by det^{-1/2}.
pub const DET_DRIFT_TOL: f64 = 1e-12;

/// An element of SL(2, ℝ).
///
/// Every operation that builds a new element rescales the entries by
/// det^{-1/2} whenever |det − 1| exceeds [`DET_DRIFT_TOL`]; the policy is
/// part of the type's contract, so chains of ~10³ operations stay within
/// tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Validates that the entries form a (numerically) unimodular matrix.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !det.is_finite() || det <= 0.0 || (det - 1.0).abs() > 1e-6 {
            return Err(Error::Domain(format!(
                "matrix [[{a},{b}],[{c},{d}]] has determinant {det}, not 1"
            )));
        }
        Ok(GroupElement { a, b, c, d }.renormalized())
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    fn renormalized(self) -> Self {
        let det = self.det();
        if (det - 1.0).abs() <= DET_DRIFT_TOL {
            return self;
        }
        let s = det.sqrt().recip();
        GroupElement {
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
            d: self.d * s,
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
        .renormalized()
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
        .renormalized()
    }

    /// Geodesic flow: right multiplication by diag(e^{t/2}, e^{−t/2}).
    pub fn flow_geodesic(&self, t: f64) -> GroupElement {
        let e = (t / 2.0).exp();
        GroupElement {
            a: self.a * e,
            b: self.b / e,
            c: self.c * e,
            d: self.d / e,
        }
        .renormalized()
    }

    /// Unstable horocycle flow: right multiplication by [[1, u], [0, 1]].
    pub fn flow_hplus(&self, u: f64) -> GroupElement {
        GroupElement {
            a: self.a,
            b: self.a * u + self.b,
            c: self.c,
            d: self.c * u + self.d,
        }
        .renormalized()
    }

    /// Stable horocycle flow: right multiplication by [[1, 0], [v, 1]].
    pub fn flow_hminus(&self, v: f64) -> GroupElement {
        GroupElement {
            a: self.a + self.b * v,
            b: self.b,
            c: self.c + self.d * v,
            d: self.d,
        }
        .renormalized()
    }

    pub fn max_entry_distance(&self, other: &GroupElement) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }
}
