//! Finite linear combinations of box indicators.

use super::adapted_box::AdaptedBox;
use super::scan::{horocycle_measure, required_sieve_bound};
use crate::arith::SieveTables;
use crate::util::pairwise_sum;
use crate::Result;

/// f = Σ coeffᵢ·χ_{Cᵢ}; m_y and m̄ extend linearly.
#[derive(Debug, Clone, Default)]
pub struct BoxFunction {
    terms: Vec<(f64, AdaptedBox)>,
}

impl BoxFunction {
    pub fn new(terms: Vec<(f64, AdaptedBox)>) -> Self {
        BoxFunction { terms }
    }

    pub fn empty() -> Self {
        BoxFunction::default()
    }

    pub fn single(bx: AdaptedBox) -> Self {
        BoxFunction::new(vec![(1.0, bx)])
    }

    pub fn terms(&self) -> &[(f64, AdaptedBox)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// m_y(f) = Σ coeff·m_y(C).
    pub fn measure_at(&self, y: f64, tables: &SieveTables) -> Result<f64> {
        let mut parts = Vec::with_capacity(self.terms.len());
        for (coeff, bx) in &self.terms {
            parts.push(coeff * horocycle_measure(bx, y, tables)?);
        }
        Ok(pairwise_sum(&parts))
    }

    /// m̄(f) = Σ coeff·m̄(C).
    pub fn haar(&self) -> f64 {
        let parts: Vec<f64> = self.terms.iter().map(|(c, b)| c * b.haar()).collect();
        pairwise_sum(&parts)
    }

    /// Upper bound for ‖f‖_∞ (equality when the boxes are disjoint).
    pub fn sup_norm_bound(&self) -> f64 {
        self.terms.iter().map(|(c, _)| c.abs()).sum()
    }

    /// Height above which m_y(f) vanishes: max over boxes of 1/β₁
    /// (no integer row fits the c-interval once y exceeds it).
    pub fn support_height(&self) -> f64 {
        self.terms
            .iter()
            .map(|(_, b)| b.beta1().recip())
            .fold(0.0f64, f64::max)
    }

    pub fn required_sieve_bound(&self, y_min: f64) -> u64 {
        self.terms
            .iter()
            .map(|(_, b)| required_sieve_bound(b, y_min))
            .max()
            .unwrap_or(1)
    }
}
