//! Horocycle measures m_y(C) and the error-term scan against m̄(C).

use super::adapted_box::AdaptedBox;
use super::count::count_at_scale;
use crate::arith::SieveTables;
use crate::output::TableRow;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// m_y(C) = n(y, C)·y·ℓ with y = e^{−t}.
///
/// Defined for every finite y > 0; above the box's support height the count
/// (and so the measure) is zero.
pub fn horocycle_measure(bx: &AdaptedBox, y: f64, tables: &SieveTables) -> Result<f64> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::OutOfRange(format!("y must be positive, got {y}")));
    }
    let n = count_at_scale(bx, y.powf(-0.5), tables)?;
    Ok(n as f64 * y * bx.ell())
}

/// The default geometric grid y = 2^{−k}, k = 1..=count.
pub fn geometric_grid(count: u32) -> Vec<f64> {
    (1..=count).map(|k| 2f64.powi(-(k as i32))).collect()
}

/// Sieve bound needed to scan the box down to y_min: ⌈β₁^{−1/2}·y_min^{−1/2}⌉.
pub fn required_sieve_bound(bx: &AdaptedBox, y_min: f64) -> u64 {
    (bx.beta1() * y_min).sqrt().recip().ceil() as u64
}

#[derive(Debug, Clone, Serialize)]
pub struct MeasureRow {
    pub y: f64,
    pub t: f64,
    pub n: u64,
    pub m_y: f64,
    pub m_bar: f64,
    pub error: f64,
    /// error / (y^{1/2}·|log y|); the envelope ratio whose sup is reported.
    pub k_of_y: f64,
    /// |error|·y^{−α}, the divergence diagnostic for a configured α > 1/2.
    pub diag_alpha: f64,
}

impl TableRow for MeasureRow {
    fn headers() -> &'static [&'static str] {
        &["y", "t", "n", "m_y", "m_bar", "error", "K_of_y", "diag_alpha"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.y.to_string(),
            self.t.to_string(),
            self.n.to_string(),
            self.m_y.to_string(),
            self.m_bar.to_string(),
            self.error.to_string(),
            self.k_of_y.to_string(),
            self.diag_alpha.to_string(),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct MeasureScan {
    pub bx: AdaptedBox,
    pub alpha: f64,
    pub rows: Vec<MeasureRow>,
    /// sup over the grid of |K_C(y)|.
    pub sup_k: f64,
    /// Running maximum of the divergence diagnostic, with the y attaining it.
    pub max_diag: f64,
    pub max_diag_y: f64,
}

/// Scans m_y(C) over a strictly decreasing grid in (0, 1/2].
pub fn error_scan(
    bx: &AdaptedBox,
    y_grid: &[f64],
    alpha: f64,
    tables: &SieveTables,
) -> Result<MeasureScan> {
    if y_grid.is_empty() {
        return Err(Error::Parameter("empty y grid".into()));
    }
    if y_grid.iter().any(|&y| !(y > 0.0 && y <= 0.5)) {
        return Err(Error::Parameter("y grid must lie in (0, 1/2]".into()));
    }
    if y_grid.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Parameter("y grid must be strictly decreasing".into()));
    }
    if !(alpha > 0.5) {
        return Err(Error::Parameter(format!(
            "divergence exponent must exceed 1/2, got {alpha}"
        )));
    }

    let m_bar = bx.haar();
    let rows: Vec<MeasureRow> = y_grid
        .par_iter()
        .map(|&y| {
            let n = count_at_scale(bx, y.powf(-0.5), tables)?;
            let m_y = n as f64 * y * bx.ell();
            let error = m_y - m_bar;
            let k_of_y = error / (y.sqrt() * y.ln().abs());
            let diag_alpha = error.abs() * y.powf(-alpha);
            Ok(MeasureRow {
                y,
                t: -y.ln(),
                n,
                m_y,
                m_bar,
                error,
                k_of_y,
                diag_alpha,
            })
        })
        .collect::<Result<_>>()?;

    let sup_k = rows.iter().map(|r| r.k_of_y.abs()).fold(0.0f64, f64::max);
    let (max_diag, max_diag_y) = rows
        .iter()
        .map(|r| (r.diag_alpha, r.y))
        .fold((0.0f64, 0.0f64), |acc, x| if x.0 > acc.0 { x } else { acc });

    Ok(MeasureScan {
        bx: *bx,
        alpha,
        rows,
        sup_k,
        max_diag,
        max_diag_y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::build_sieves;

    #[test]
    fn measure_from_oracle_count() {
        // n = 2 at y = 1 for the reference box, so m_1 = 2·1·0.1.
        let tables = build_sieves(8).unwrap();
        let bx = AdaptedBox::reference();
        let m = horocycle_measure(&bx, 1.0, &tables).unwrap();
        assert!((m - 0.2).abs() < 1e-15);
        // y = 0.9: c-interval [1.054.., 2.108..] keeps only (1, 2).
        assert!((horocycle_measure(&bx, 0.9, &tables).unwrap() - 0.09).abs() < 1e-15);
        assert!(horocycle_measure(&bx, 0.0, &tables).is_err());
        // Above the support height the measure vanishes.
        assert_eq!(horocycle_measure(&bx, 4.5, &tables).unwrap(), 0.0);
        // (1, 4] keeps the single c = 1 intersection: m_y = y * ell.
        assert!((horocycle_measure(&bx, 1.5, &tables).unwrap() - 0.15).abs() < 1e-15);
    }

    #[test]
    fn single_point_grid_is_consistent() {
        let tables = build_sieves(16).unwrap();
        let bx = AdaptedBox::reference();
        let scan = error_scan(&bx, &[0.25], 0.75, &tables).unwrap();
        assert_eq!(scan.rows.len(), 1);
        let row = &scan.rows[0];
        assert_eq!(row.m_y, horocycle_measure(&bx, 0.25, &tables).unwrap());
        assert_eq!(row.m_bar, bx.haar());
    }

    #[test]
    fn grid_validation() {
        let tables = build_sieves(16).unwrap();
        let bx = AdaptedBox::reference();
        assert!(error_scan(&bx, &[], 0.75, &tables).is_err());
        assert!(error_scan(&bx, &[0.6], 0.75, &tables).is_err());
        assert!(error_scan(&bx, &[0.125, 0.25], 0.75, &tables).is_err());
        assert!(error_scan(&bx, &[0.25, 0.125], 0.4, &tables).is_err());
    }

    #[test]
    fn convergence_to_haar() {
        // m_y → m̄ over the geometric grid.
        let bx = AdaptedBox::reference();
        let grid = geometric_grid(16);
        let bound = required_sieve_bound(&bx, grid[grid.len() - 1]);
        let tables = build_sieves(bound).unwrap();
        let scan = error_scan(&bx, &grid, 0.75, &tables).unwrap();
        let early = scan.rows[2].error.abs();
        let late = scan.rows[15].error.abs();
        assert!(late < early, "error not shrinking: {early} -> {late}");
        assert!(late / bx.haar() < 0.05, "relative error {}", late / bx.haar());
        assert!(scan.sup_k.is_finite());
        for r in &scan.rows {
            assert!(r.m_y >= 0.0);
        }
    }
}
