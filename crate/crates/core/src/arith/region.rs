//! Lattice-point counting in triangles τ(ℓ) and trapezia Δ(ℓ).
//!
//! τ(ℓ) is the closed region {(u,v) : 0 < v ≤ ℓ, α₁ ≤ u/v ≤ α₂}; removing
//! its base means dropping the single lattice row v = ℓ (a no-op unless ℓ is
//! an integer). A trapezium is the difference of a closed triangle and a
//! base-stripped one, so every trapezium count reduces to two triangle
//! counts with integer row limits.
//!
//! Membership is decided by cross-multiplied integer comparisons on exact
//! rationals; no floating point enters any count.

use super::sieve::SieveTables;
use crate::rational::{ceil_mul, ceil_rat, floor_mul, floor_rat, rat_to_f64, Rat};
use crate::{Error, Result};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRule {
    Inclusive,
    Exclusive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegionKind {
    Triangle,
    Trapezium { beta1: Rat, beta2: Rat },
}

/// A triangle or trapezium with rational slopes α₁ ≤ u/v ≤ α₂ and rational
/// scale ℓ. `base_edge` governs the row v = ℓ for triangles and the row
/// v = β₁ℓ for trapezia; the remaining edges are always closed.
#[derive(Debug, Clone, Copy)]
pub struct LatticeRegion {
    alpha1: Rat,
    alpha2: Rat,
    scale: Rat,
    kind: RegionKind,
    base_edge: EdgeRule,
}

impl LatticeRegion {
    pub fn triangle(alpha1: Rat, alpha2: Rat, scale: Rat, base_edge: EdgeRule) -> Result<Self> {
        check_alphas(alpha1, alpha2)?;
        if scale <= Rat::zero() {
            return Err(Error::DegenerateRegion(format!(
                "scale must be positive, got {scale}"
            )));
        }
        Ok(LatticeRegion {
            alpha1,
            alpha2,
            scale,
            kind: RegionKind::Triangle,
            base_edge,
        })
    }

    pub fn trapezium(
        alpha1: Rat,
        alpha2: Rat,
        beta1: Rat,
        beta2: Rat,
        scale: Rat,
        base_edge: EdgeRule,
    ) -> Result<Self> {
        check_alphas(alpha1, alpha2)?;
        if beta1 <= Rat::zero() || beta1 >= beta2 {
            return Err(Error::DegenerateRegion(format!(
                "need 0 < beta1 < beta2, got {beta1}, {beta2}"
            )));
        }
        if scale <= Rat::zero() {
            return Err(Error::DegenerateRegion(format!(
                "scale must be positive, got {scale}"
            )));
        }
        Ok(LatticeRegion {
            alpha1,
            alpha2,
            scale,
            kind: RegionKind::Trapezium { beta1, beta2 },
            base_edge,
        })
    }

    pub fn alpha1(&self) -> Rat {
        self.alpha1
    }

    pub fn alpha2(&self) -> Rat {
        self.alpha2
    }

    pub fn scale(&self) -> Rat {
        self.scale
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn base_edge(&self) -> EdgeRule {
        self.base_edge
    }

    /// Inclusive lattice-row interval [lo, hi] covered by the region
    /// (empty when lo > hi).
    pub fn row_range(&self) -> (i64, i64) {
        match self.kind {
            RegionKind::Triangle => {
                let hi = match self.base_edge {
                    EdgeRule::Inclusive => floor_rat(self.scale),
                    EdgeRule::Exclusive => ceil_rat(self.scale) - 1,
                };
                (1, hi)
            }
            RegionKind::Trapezium { beta1, beta2 } => {
                let hi = floor_rat(beta2 * self.scale);
                let lo_edge = beta1 * self.scale;
                let lo = match self.base_edge {
                    EdgeRule::Inclusive => ceil_rat(lo_edge),
                    EdgeRule::Exclusive => floor_rat(lo_edge) + 1,
                };
                (lo.max(1), hi)
            }
        }
    }

    /// Euclidean area of the region (real-valued).
    pub fn euclidean_area(&self) -> f64 {
        let width = rat_to_f64(self.alpha2 - self.alpha1);
        let ell = rat_to_f64(self.scale);
        match self.kind {
            RegionKind::Triangle => width * ell * ell / 2.0,
            RegionKind::Trapezium { beta1, beta2 } => {
                let b1 = rat_to_f64(beta1);
                let b2 = rat_to_f64(beta2);
                width * (b2 * b2 - b1 * b1) * ell * ell / 2.0
            }
        }
    }

    /// Perimeter of τ(ℓ) (triangles only): p(1)·ℓ with
    /// p(1) = √(1+α₁²) + √(1+α₂²) + (α₂−α₁).
    pub fn triangle_perimeter(&self) -> Option<f64> {
        match self.kind {
            RegionKind::Triangle => {
                let a1 = rat_to_f64(self.alpha1);
                let a2 = rat_to_f64(self.alpha2);
                let p1 = (1.0 + a1 * a1).sqrt() + (1.0 + a2 * a2).sqrt() + (a2 - a1);
                Some(p1 * rat_to_f64(self.scale))
            }
            RegionKind::Trapezium { .. } => None,
        }
    }
}

fn check_alphas(alpha1: Rat, alpha2: Rat) -> Result<()> {
    if alpha1 < Rat::zero() || alpha1 >= alpha2 || alpha2 > Rat::from_integer(1) {
        return Err(Error::DegenerateRegion(format!(
            "need 0 <= alpha1 < alpha2 <= 1, got {alpha1}, {alpha2}"
        )));
    }
    Ok(())
}

/// Cumulative widths of the lattice rows of the cone α₁ ≤ u/v ≤ α₂, u ≥ 1.
///
/// `cumulative(v)` is the number of (not necessarily coprime) lattice points
/// with row index at most v; building it once lets a scan answer every
/// triangle count with an O(1) lookup inside the Möbius sum.
#[derive(Debug, Clone)]
pub struct RowTable {
    cum: Vec<u64>,
}

impl RowTable {
    pub fn build(alpha1: Rat, alpha2: Rat, v_max: i64) -> RowTable {
        let n = v_max.max(0) as usize;
        let mut cum = Vec::with_capacity(n + 1);
        cum.push(0u64);
        let mut acc = 0u64;
        for v in 1..=n as i64 {
            acc += row_width(alpha1, alpha2, v);
            cum.push(acc);
        }
        RowTable { cum }
    }

    pub fn v_max(&self) -> i64 {
        (self.cum.len() - 1) as i64
    }

    pub fn cumulative(&self, v: i64) -> u64 {
        if v <= 0 {
            0
        } else {
            self.cum[v as usize]
        }
    }
}

/// Number of integers u ≥ 1 with α₁·v ≤ u ≤ α₂·v.
fn row_width(alpha1: Rat, alpha2: Rat, v: i64) -> u64 {
    let lo = ceil_mul(alpha1, v).max(1);
    let hi = floor_mul(alpha2, v);
    if hi >= lo {
        (hi - lo + 1) as u64
    } else {
        0
    }
}

/// All lattice points with rows 1..=v_hi, via the row table.
pub fn lattice_count_up_to(rows: &RowTable, v_hi: i64) -> u64 {
    rows.cumulative(v_hi.min(rows.v_max()))
}

/// Coprime lattice points with rows 1..=v_hi, by Möbius inversion over the
/// all-points counts of the scaled-down triangles:
/// N = Σ_{1≤d≤v_hi} μ(d)·N̄(⌊v_hi/d⌋).
pub fn coprime_count_up_to(rows: &RowTable, v_hi: i64, tables: &SieveTables) -> Result<u64> {
    if v_hi <= 0 {
        return Ok(0);
    }
    if (tables.bound() as i64) < v_hi || rows.v_max() < v_hi {
        return Err(Error::TableTooSmall {
            needed: v_hi as u64,
            bound: tables.bound().min(rows.v_max() as u64),
        });
    }
    let mut total: i128 = 0;
    for d in 1..=v_hi {
        let mu = tables.mobius(d as u64);
        if mu == 0 {
            continue;
        }
        let part = rows.cumulative(v_hi / d) as i128;
        if mu > 0 {
            total += part;
        } else {
            total -= part;
        }
    }
    debug_assert!(total >= 0);
    Ok(total as u64)
}

/// Count of all positive lattice points in the region, respecting edges.
pub fn count_lattice_all(region: &LatticeRegion) -> u64 {
    let (lo, hi) = region.row_range();
    if hi < lo {
        return 0;
    }
    let rows = RowTable::build(region.alpha1, region.alpha2, hi);
    lattice_count_up_to(&rows, hi) - lattice_count_up_to(&rows, lo - 1)
}

/// Count of coprime lattice points in the region, respecting edges.
///
/// Trapezium counts split as N̂(ℓ) = N(β₂ℓ) − N̆(β₁ℓ): the subtracted term
/// is the coprime count of the base-stripped inner triangle, i.e. of rows
/// 1..=lo−1.
pub fn count_lattice_coprime(region: &LatticeRegion, tables: &SieveTables) -> Result<u64> {
    let (lo, hi) = region.row_range();
    if hi < lo {
        return Ok(0);
    }
    let rows = RowTable::build(region.alpha1, region.alpha2, hi);
    let outer = coprime_count_up_to(&rows, hi, tables)?;
    let inner = coprime_count_up_to(&rows, lo - 1, tables)?;
    Ok(outer - inner)
}
