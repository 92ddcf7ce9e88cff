//! Exact rationals for region bounds.
//!
//! Counting code never touches floating point: membership tests are
//! cross-multiplied integer comparisons on `Rat` values. Floats entering
//! from the CLI or from box parameters are snapped to a rational with
//! denominator at most [`SNAP_MAX_DEN`], and the snap is reported to the
//! caller so it can be echoed in output metadata.

use crate::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

pub type Rat = Ratio<i64>;

/// Largest denominator used when snapping a float to a rational.
pub const SNAP_MAX_DEN: i64 = 1_000_000;

/// Best rational approximation with denominator `<= max_den`, by walking the
/// continued-fraction convergents. Returns the rational and whether the snap
/// was lossy (`true` iff the rational does not round-trip to `x`).
pub fn snap_f64(x: f64, max_den: i64) -> Result<(Rat, bool)> {
    if !x.is_finite() {
        return Err(Error::Parameter(format!("cannot snap {x} to a rational")));
    }
    let negative = x < 0.0;
    let ax = x.abs();
    if ax > i64::MAX as f64 / 2.0 {
        return Err(Error::Parameter(format!("{x} too large to snap")));
    }

    // Continued-fraction convergents p/q of |x|.
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, ax.trunc() as i64, 1i64);
    let mut frac = ax.fract();
    while frac > 0.0 {
        let inv = 1.0 / frac;
        let a = inv.trunc();
        if a >= i64::MAX as f64 {
            break;
        }
        let a = a as i64;
        let (np, nq) = match (p1.checked_mul(a), q1.checked_mul(a)) {
            (Some(pa), Some(qa)) => match (pa.checked_add(p0), qa.checked_add(q0)) {
                (Some(np), Some(nq)) => (np, nq),
                _ => break,
            },
            _ => break,
        };
        if nq > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, np, nq);
        frac = inv.fract();
    }
    let mut r = Rat::new(p1, q1);
    if negative {
        r = -r;
    }
    let lossy = r.to_f64().map(|v| v != x).unwrap_or(true);
    Ok((r, lossy))
}

/// Parses `p/q`, an integer, or a decimal float (snapped, lossily if needed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad numerator in {s:?}")))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad denominator in {s:?}")))?;
        if q == 0 {
            return Err(Error::Parameter(format!("zero denominator in {s:?}")));
        }
        return Ok(Rat::new(p, q));
    }
    if let Ok(n) = s.parse::<i64>() {
        return Ok(Rat::from_integer(n));
    }
    let x: f64 = s
        .parse()
        .map_err(|_| Error::Parameter(format!("cannot parse {s:?} as a rational or float")))?;
    Ok(snap_f64(x, SNAP_MAX_DEN)?.0)
}

pub fn rat_to_f64(r: Rat) -> f64 {
    r.to_f64().expect("i64 ratio always converts")
}

pub fn format_rat(r: Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `floor(r * v)` computed exactly in integers.
pub fn floor_mul(r: Rat, v: i64) -> i64 {
    let num = i128::from(*r.numer()) * i128::from(v);
    let den = i128::from(*r.denom());
    num.div_euclid(den) as i64
}

/// `ceil(r * v)` computed exactly in integers.
pub fn ceil_mul(r: Rat, v: i64) -> i64 {
    let num = i128::from(*r.numer()) * i128::from(v);
    let den = i128::from(*r.denom());
    (-((-num).div_euclid(den))) as i64
}

/// Exact floor of a nonnegative rational.
pub fn floor_rat(r: Rat) -> i64 {
    floor_mul(r, 1)
}

/// Exact ceiling of a nonnegative rational.
pub fn ceil_rat(r: Rat) -> i64 {
    ceil_mul(r, 1)
}

pub fn is_negative(r: Rat) -> bool {
    r.is_negative()
}
