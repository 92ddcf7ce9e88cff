//! Farey sequences of reduced fractions in (0, 1] and their discrepancy
//! statistics.

use super::sieve::SieveTables;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// The Farey sequence F_N: reduced fractions a/b in (0, 1], increasing.
#[derive(Debug, Clone)]
pub struct FareySequence {
    order: u64,
    fractions: Vec<(u64, u64)>,
}

impl FareySequence {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn fractions(&self) -> &[(u64, u64)] {
        &self.fractions
    }

    pub fn len(&self) -> usize {
        self.fractions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fractions.is_empty()
    }
}

/// Generates F_N by the mediant next-term recurrence, seeded at 0/1 < 1/N.
/// The walk is deterministic and O(Φ(N)).
pub fn farey(tables: &SieveTables, n: u64) -> Result<FareySequence> {
    if n == 0 {
        return Err(Error::Parameter("Farey order must be >= 1".into()));
    }
    if n > tables.bound() {
        return Err(Error::TableTooSmall {
            needed: n,
            bound: tables.bound(),
        });
    }
    let expected = tables.summatory_at(n);
    let mut fractions =
        Vec::with_capacity(usize::try_from(expected).map_err(|_| {
            Error::Capacity(format!("Farey sequence of order {n} does not fit memory"))
        })?);

    // Consecutive pair (a/b, c/d); next term is the mediant step
    // k = (n + b) / d, (c', d') = (k c - a, k d - b).
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
    fractions.push((c, d));
    while c != d {
        let k = (n + b) / d;
        let (nc, nd) = (k * c - a, k * d - b);
        (a, b, c, d) = (c, d, nc, nd);
        fractions.push((c, d));
    }

    debug_assert_eq!(fractions.len() as u64, expected);
    Ok(FareySequence {
        order: n,
        fractions,
    })
}

/// Discrepancies δ_n = f_n − n/Φ(N) of a Farey sequence against the
/// equi-division of (0, 1], with exact rational sums Σδ² and Σ|δ|.
#[derive(Debug, Clone)]
pub struct DiscrepancyStats {
    pub order: u64,
    pub deltas: Vec<BigRational>,
    pub sum_sq: BigRational,
    pub sum_abs: BigRational,
}

impl DiscrepancyStats {
    pub fn sum_sq_f64(&self) -> f64 {
        self.sum_sq.to_f64().unwrap_or(f64::NAN)
    }

    pub fn sum_abs_f64(&self) -> f64 {
        self.sum_abs.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn franel_stats(seq: &FareySequence) -> DiscrepancyStats {
    let total = BigInt::from(seq.len());
    let mut deltas = Vec::with_capacity(seq.len());
    let mut sum_sq = BigRational::zero();
    let mut sum_abs = BigRational::zero();
    for (i, &(a, b)) in seq.fractions().iter().enumerate() {
        let f = BigRational::new(BigInt::from(a), BigInt::from(b));
        let target = BigRational::new(BigInt::from(i as u64 + 1), total.clone());
        let delta = f - target;
        sum_sq += &delta * &delta;
        sum_abs += delta.abs();
        deltas.push(delta);
    }
    DiscrepancyStats {
        order: seq.order(),
        deltas,
        sum_sq,
        sum_abs,
    }
}
