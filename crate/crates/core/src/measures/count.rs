//! The intersection count n(t) of the closed horocycle g_t(γ₀) with the
//! base of an adapted box.
//!
//! n(t) = #{(a, c) coprime positive : α₁ ≤ a/c ≤ α₂,
//!          e^{t/2}β₂^{−1/2} ≤ c ≤ e^{t/2}β₁^{−1/2}},
//! which equals the coprime lattice count of the trapezium bounded by the
//! same slopes and rows. Both paths share the same integer row interval and
//! the same snapped rational slopes, so they must agree exactly pair by
//! pair; tests and the `selftest` command demand exact equality.

use super::adapted_box::AdaptedBox;
use crate::arith::{coprime_count_up_to, RowTable, SieveTables};
use crate::rational::{ceil_mul, floor_mul, snap_f64, Rat, SNAP_MAX_DEN};
use crate::util::gcd_u64;
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CountPath {
    /// Row-by-row enumeration of coprime pairs (the oracle path).
    Arithmetic,
    /// Möbius-inverted trapezium count (the fast path).
    Trapezium,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountReport {
    pub t: f64,
    pub n: u64,
    pub via: CountPath,
}

impl CountReport {
    pub fn y(&self) -> f64 {
        (-self.t).exp()
    }
}

/// Integer interval [c_lo, c_hi] of rows meeting the closed c-range; empty
/// when c_lo > c_hi. `scale` is e^{t/2}.
fn row_interval(bx: &AdaptedBox, scale: f64) -> (i64, i64) {
    let hi = (scale / bx.beta1().sqrt()).floor() as i64;
    let lo = if bx.beta2().is_infinite() {
        1
    } else {
        ((scale / bx.beta2().sqrt()).ceil() as i64).max(1)
    };
    (lo, hi)
}

fn snapped_alphas(bx: &AdaptedBox) -> Result<(Rat, Rat)> {
    let (a1, _) = snap_f64(bx.alpha1(), SNAP_MAX_DEN)?;
    let (a2, _) = snap_f64(bx.alpha2(), SNAP_MAX_DEN)?;
    Ok((a1, a2))
}

fn check_bound(c_hi: i64, tables: &SieveTables) -> Result<()> {
    if c_hi > 0 && c_hi as u64 > tables.bound() {
        return Err(Error::TableTooSmall {
            needed: c_hi as u64,
            bound: tables.bound(),
        });
    }
    Ok(())
}

pub(crate) fn count_at_scale(bx: &AdaptedBox, scale: f64, tables: &SieveTables) -> Result<u64> {
    let (lo, hi) = row_interval(bx, scale);
    check_bound(hi, tables)?;
    if hi < lo {
        return Ok(0);
    }
    let (a1, a2) = snapped_alphas(bx)?;
    let rows = RowTable::build(a1, a2, hi);
    let outer = coprime_count_up_to(&rows, hi, tables)?;
    let inner = coprime_count_up_to(&rows, lo - 1, tables)?;
    Ok(outer - inner)
}

pub(crate) fn count_at_scale_direct(
    bx: &AdaptedBox,
    scale: f64,
    tables: &SieveTables,
) -> Result<u64> {
    let (lo, hi) = row_interval(bx, scale);
    check_bound(hi, tables)?;
    if hi < lo {
        return Ok(0);
    }
    let (a1, a2) = snapped_alphas(bx)?;
    let mut n = 0u64;
    for c in lo..=hi {
        let u_lo = ceil_mul(a1, c).max(1);
        let u_hi = floor_mul(a2, c);
        for a in u_lo..=u_hi {
            if gcd_u64(a as u64, c as u64) == 1 {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Fast intersection count at time t (trapezium path).
pub fn intersection_count(bx: &AdaptedBox, t: f64, tables: &SieveTables) -> Result<CountReport> {
    let n = count_at_scale(bx, (t / 2.0).exp(), tables)?;
    Ok(CountReport {
        t,
        n,
        via: CountPath::Trapezium,
    })
}

/// Oracle intersection count at time t (direct row enumeration).
pub fn intersection_count_direct(
    bx: &AdaptedBox,
    t: f64,
    tables: &SieveTables,
) -> Result<CountReport> {
    let n = count_at_scale_direct(bx, (t / 2.0).exp(), tables)?;
    Ok(CountReport {
        t,
        n,
        via: CountPath::Arithmetic,
    })
}
