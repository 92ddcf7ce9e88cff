//! Discrete measures ν_{y,φ}(g) = Σ φ(n)·g(ny) and their y² scaling limit
//! (6/π²)·∫ u·g(u) du.

use crate::arith::SieveTables;
use crate::measures::HAAR_NORMALIZATION;
use crate::output::TableRow;
use crate::report::{RunMeta, ScanReport};
use crate::util::pairwise_sum;
use crate::{Error, Result};
use serde::Serialize;

/// A compactly supported polynomial bump on [u₀, u₁]:
/// g(u) = [(u−u₀)(u₁−u)]^k, normalized to peak value one. Smoothness class
/// C^{k−1} at the support endpoints.
#[derive(Debug, Clone, Copy)]
pub struct TestFunction1D {
    u0: f64,
    u1: f64,
    order: u32,
}

impl TestFunction1D {
    pub fn bump(u0: f64, u1: f64, order: u32) -> Result<Self> {
        if !(0.0 < u0 && u0 < u1 && u1.is_finite()) {
            return Err(Error::Parameter(format!(
                "support must satisfy 0 < u0 < u1 < inf, got [{u0}, {u1}]"
            )));
        }
        if order == 0 {
            return Err(Error::Parameter("bump order must be >= 1".into()));
        }
        Ok(TestFunction1D { u0, u1, order })
    }

    pub fn support(&self) -> (f64, f64) {
        (self.u0, self.u1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn eval(&self, u: f64) -> f64 {
        if u <= self.u0 || u >= self.u1 {
            return 0.0;
        }
        let half = (self.u1 - self.u0) / 2.0;
        (((u - self.u0) * (self.u1 - u)) / (half * half)).powi(self.order as i32)
    }

    /// ∫ u·g(u) du by Gauss–Legendre quadrature (exact for the polynomial
    /// bump once the rule order is high enough).
    pub fn weighted_moment(&self) -> f64 {
        self.quadrature_moment(64)
    }

    pub fn quadrature_moment(&self, nodes: usize) -> f64 {
        let rule = gauss_legendre(nodes);
        let mid = (self.u0 + self.u1) / 2.0;
        let half = (self.u1 - self.u0) / 2.0;
        let parts: Vec<f64> = rule
            .iter()
            .map(|&(x, w)| {
                let u = mid + half * x;
                w * half * u * self.eval(u)
            })
            .collect();
        pairwise_sum(&parts)
    }
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1], by
/// Newton iteration on the Legendre recurrence.
pub(crate) fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                (p0, p1) = (p1, ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf);
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    rule
}

/// ν_{y,φ}(g) = Σ_{n : ny ∈ supp g} φ(n)·g(ny), exact totients against a
/// floating evaluation of g, reduced pairwise.
pub fn nu_phi(g: &TestFunction1D, y: f64, tables: &SieveTables) -> Result<f64> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::Parameter(format!("y must be positive, got {y}")));
    }
    let (u0, u1) = g.support();
    let n_hi = (u1 / y).floor() as u64;
    if n_hi > tables.bound() {
        return Err(Error::TableTooSmall {
            needed: n_hi,
            bound: tables.bound(),
        });
    }
    let n_lo = ((u0 / y).ceil() as u64).max(1);
    let parts: Vec<f64> = (n_lo..=n_hi)
        .map(|n| tables.totient(n) as f64 * g.eval(n as f64 * y))
        .collect();
    Ok(pairwise_sum(&parts))
}

#[derive(Debug, Clone, Serialize)]
pub struct NuRow {
    pub y: f64,
    pub nu: f64,
    pub y2nu: f64,
    /// (6/π²)·∫ u·g(u) du.
    pub limit: f64,
    pub residual: f64,
    pub residual_over_y: f64,
    /// residual·y^{−3/2+ε}; reported, never asserted.
    #[serde(skip)]
    pub diag: f64,
}

impl TableRow for NuRow {
    fn headers() -> &'static [&'static str] {
        &["y", "nu", "y2nu", "limit", "residual", "residual_over_y"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.y.to_string(),
            self.nu.to_string(),
            self.y2nu.to_string(),
            self.limit.to_string(),
            self.residual.to_string(),
            self.residual_over_y.to_string(),
        ]
    }
}

/// Scans y²·ν_{y,φ}(g) against its limit over a decreasing y grid. `eps`
/// configures the report-only diagnostic residual·y^{−3/2+ε}.
pub fn nu_phi_scan(
    g: &TestFunction1D,
    y_grid: &[f64],
    eps: f64,
    tables: &SieveTables,
) -> Result<ScanReport<NuRow>> {
    if y_grid.is_empty() {
        return Err(Error::Parameter("empty y grid".into()));
    }
    if y_grid.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Parameter("y grid must be strictly decreasing".into()));
    }
    let limit = 2.0 * HAAR_NORMALIZATION * g.weighted_moment();
    let rows: Vec<NuRow> = y_grid
        .iter()
        .map(|&y| {
            let nu = nu_phi(g, y, tables)?;
            let y2nu = y * y * nu;
            let residual = y2nu - limit;
            Ok(NuRow {
                y,
                nu,
                y2nu,
                limit,
                residual,
                residual_over_y: residual / y,
                diag: residual * y.powf(-1.5 + eps),
            })
        })
        .collect::<Result<_>>()?;

    let mut meta = RunMeta::new("nu");
    let (u0, u1) = g.support();
    meta.set("support", format!("{u0},{u1}"));
    meta.set("order", g.order());
    meta.set("eps", eps);
    meta.sieve_bound = tables.bound();

    let mut report = ScanReport::new(meta, rows);
    let sup_ratio = report
        .rows
        .iter()
        .map(|r| r.residual_over_y.abs())
        .fold(0.0f64, f64::max);
    let max_diag = report
        .rows
        .iter()
        .map(|r| r.diag.abs())
        .fold(0.0f64, f64::max);
    report.push_summary("sup_abs_residual_over_y", sup_ratio);
    report.push_summary("max_abs_diag", max_diag);
    Ok(report)
}
