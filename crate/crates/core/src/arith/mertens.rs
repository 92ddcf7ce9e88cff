//! Scans of the coprime triangle count N(ℓ) against its main term
//! (6/π²)·A_e(τ(ℓ)), with the normalized residual η(ℓ) and the divergence
//! diagnostic θ(ℓ) = (N(ℓ)/A(ℓ) − 6/π²)·ℓ^{3/2−ε}.

use super::region::{coprime_count_up_to, RowTable};
use super::sieve::{is_prime, SieveTables};
use crate::output::TableRow;
use crate::rational::{rat_to_f64, Rat};
use crate::report::{RunMeta, ScanReport};
use crate::{Error, Result};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub const COPRIME_DENSITY: f64 = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);

#[derive(Debug, Clone, Serialize)]
pub struct MertensRow {
    pub ell: f64,
    pub count: u64,
    pub main_term: f64,
    pub residual: f64,
    /// residual / (ℓ log ℓ); bounded by 24 in absolute value for ℓ ≥ 2.
    pub eta: f64,
    /// (N/A − 6/π²)·ℓ^{3/2−ε}.
    pub theta: f64,
    /// Whether ⌊ℓ+1⌋ is prime: the rows that witness the divergence of θ.
    pub prime_witness: bool,
}

impl TableRow for MertensRow {
    fn headers() -> &'static [&'static str] {
        &[
            "ell",
            "count",
            "main_term",
            "residual",
            "eta",
            "theta",
            "prime_witness",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.ell.to_string(),
            self.count.to_string(),
            self.main_term.to_string(),
            self.residual.to_string(),
            self.eta.to_string(),
            self.theta.to_string(),
            self.prime_witness.to_string(),
        ]
    }
}

/// Runs the scan over a strictly increasing grid of ℓ ≥ 2.
///
/// The row table is built once for the whole grid; each row is then a pure
/// Möbius sum, so rows may be computed in parallel and merged in grid order.
pub fn mertens_scan(
    alpha1: Rat,
    alpha2: Rat,
    grid: &[f64],
    eps: f64,
    tables: &SieveTables,
) -> Result<ScanReport<MertensRow>> {
    if alpha1 <= Rat::zero() || alpha1 >= alpha2 || alpha2 > Rat::from_integer(1) {
        return Err(Error::DegenerateRegion(format!(
            "need 0 < alpha1 < alpha2 <= 1, got {alpha1}, {alpha2}"
        )));
    }
    if !(eps < 0.5) {
        return Err(Error::Parameter(format!("eps must be < 1/2, got {eps}")));
    }
    if grid.is_empty() {
        return Err(Error::Parameter("empty ell grid".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parameter("ell grid must be strictly increasing".into()));
    }
    if grid[0] < 2.0 {
        return Err(Error::Parameter(format!(
            "ell grid must start at >= 2, got {}",
            grid[0]
        )));
    }
    let v_max = grid[grid.len() - 1].floor() as i64;
    if v_max as u64 > tables.bound() {
        return Err(Error::TableTooSmall {
            needed: v_max as u64,
            bound: tables.bound(),
        });
    }

    let rows_table = RowTable::build(alpha1, alpha2, v_max);
    let width = rat_to_f64(alpha2 - alpha1);

    let rows: Vec<MertensRow> = grid
        .par_iter()
        .map(|&ell| {
            let v = ell.floor() as i64;
            let count = coprime_count_up_to(&rows_table, v, tables)?;
            let area = width * ell * ell / 2.0;
            let main_term = COPRIME_DENSITY * area;
            let residual = count as f64 - main_term;
            let eta = residual / (ell * ell.ln());
            let theta = (count as f64 / area - COPRIME_DENSITY) * ell.powf(1.5 - eps);
            let prime_witness = is_prime((ell + 1.0).floor() as u64);
            Ok(MertensRow {
                ell,
                count,
                main_term,
                residual,
                eta,
                theta,
                prime_witness,
            })
        })
        .collect::<Result<_>>()?;

    let mut meta = RunMeta::new("mertens");
    meta.set("alpha1", crate::rational::format_rat(alpha1));
    meta.set("alpha2", crate::rational::format_rat(alpha2));
    meta.set("eps", eps);
    meta.set("grid_len", grid.len());
    meta.sieve_bound = tables.bound();

    let mut report = ScanReport::new(meta, rows);

    let sup_eta = report
        .rows
        .iter()
        .map(|r| r.eta.abs())
        .fold(0.0f64, f64::max);
    report.push_summary("sup_abs_eta", sup_eta);

    // Where |theta| last set a running maximum, and whether that row is a
    // prime witness.
    let mut running = f64::NEG_INFINITY;
    let mut last_max: Option<(f64, bool)> = None;
    for row in &report.rows {
        if row.theta.abs() > running {
            running = row.theta.abs();
            last_max = Some((row.ell, row.prime_witness));
        }
    }
    if let Some((ell, witness)) = last_max {
        report.push_summary("theta_running_max", running);
        report.push_summary("theta_running_max_ell", ell);
        report.push_summary("theta_running_max_prime_witness", witness);
    }

    Ok(report)
}
