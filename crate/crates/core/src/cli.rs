//! The `horocycle` command line: every scan and computation with
//! reproducible, machine-readable output.
//!
//! Exit codes: 0 success, 2 usage/parameter errors, 3 capacity errors,
//! 4 numeric-domain errors.

use crate::arith::{
    build_sieves, count_lattice_coprime, farey, franel_stats, mertens_scan, EdgeRule,
    LatticeRegion,
};
use crate::error::Error;
use crate::hyp::iwasawa_nak;
use crate::measures::{
    error_scan, geometric_grid, intersection_count, intersection_count_direct,
    required_sieve_bound, AdaptedBox, BoxFunction, MeasureRow,
};
use crate::output::{write_csv, write_json, TableRow};
use crate::rational::{format_rat, parse_rat, snap_f64, Rat, SNAP_MAX_DEN};
use crate::report::{RunMeta, ScanReport};
use crate::spectral::{mellin_g, nu_phi_scan, TestFunction1D};
use crate::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "HOROCYCLE_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "horocycle",
    version,
    about = "Closed-horocycle equidistribution on the modular surface: exact counts, scans and transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan coprime triangle counts N(l) against the (6/pi^2)-area main term
    Mertens(MertensArgs),
    /// Emit the Farey sequence of a given order
    Farey(OrderArgs),
    /// Emit Farey discrepancy statistics (exact rationals)
    Franel(OrderArgs),
    /// Scan horocycle measures of an adapted box against Haar measure
    Box(BoxScanArgs),
    /// Evaluate the Mellin transform of a box function
    Mellin(MellinArgs),
    /// Scan the totient-weighted discrete measures nu_{y,phi}
    Nu(NuArgs),
    /// Run the brute-force oracle suites
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    fmt: Format,
    /// Output path (default: stdout, or $HOROCYCLE_OUT_DIR/<command>.<fmt>)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for grid scans; results are independent of the count
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct MertensArgs {
    /// Slope range as two rationals, e.g. 1/2,1
    #[arg(long, default_value = "1/2,1")]
    alpha: String,
    /// Grid of l values: "lo..hi" (integers) or a comma list
    #[arg(long, default_value = "2..64")]
    ell: String,
    /// Exponent offset in the theta diagnostic (must be < 1/2)
    #[arg(long, default_value_t = 0.4)]
    eps: f64,
    /// Sieve bound (default: auto-sized to the grid)
    #[arg(long)]
    sieve_bound: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OrderArgs {
    /// Farey order N
    #[arg(long)]
    order: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BoxParams {
    /// Base x-range as two rationals or floats, e.g. 1/2,1
    #[arg(long, default_value = "1/2,1")]
    alpha: String,
    /// Base y-range, e.g. 1/4,1 ("inf" allowed for the upper end)
    #[arg(long, default_value = "1/4,1")]
    beta: String,
    /// Box height
    #[arg(long, default_value_t = 0.1)]
    ell: f64,
}

#[derive(Args)]
struct BoxScanArgs {
    #[command(flatten)]
    box_params: BoxParams,
    /// Number of grid points y = 2^{-1}..2^{-count}
    #[arg(long, default_value_t = 20)]
    grid_count: u32,
    /// Divergence diagnostic exponent (> 1/2)
    #[arg(long, default_value_t = 0.75)]
    exponent: f64,
    /// Sieve bound (default: auto-sized to the grid)
    #[arg(long)]
    sieve_bound: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MellinArgs {
    #[command(flatten)]
    box_params: BoxParams,
    /// Evaluation points, each "re" or "re,im" with re > 1 (repeatable)
    #[arg(long = "s", required = true)]
    s_values: Vec<String>,
    /// Split point between exact integration and the pole approximation
    #[arg(long, default_value_t = 1e-4)]
    ymin: f64,
    /// Sieve bound (default: auto-sized to ymin)
    #[arg(long)]
    sieve_bound: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct NuArgs {
    /// Support of the bump, e.g. 1,2
    #[arg(long, default_value = "1,2")]
    support: String,
    /// Bump order k (smoothness C^{k-1})
    #[arg(long, default_value_t = 3)]
    order: u32,
    /// Number of grid points y = 2^{-1}..2^{-count}
    #[arg(long, default_value_t = 14)]
    grid_count: u32,
    /// Exponent offset in the report-only diagnostic residual*y^{-3/2+eps}
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// Sieve bound (default: auto-sized to the grid)
    #[arg(long)]
    sieve_bound: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SelftestArgs {
    /// Seed for the random corpora
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cases per suite
    #[arg(long, default_value_t = 60)]
    cases: usize,
}

/// Parses the whole command line and runs it; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Mertens(args) => cmd_mertens(args),
        Command::Farey(args) => cmd_farey(args),
        Command::Franel(args) => cmd_franel(args),
        Command::Box(args) => cmd_box(args),
        Command::Mellin(args) => cmd_mellin(args),
        Command::Nu(args) => cmd_nu(args),
        Command::Selftest(args) => cmd_selftest(args),
    }
}

fn parse_rat_pair(s: &str) -> Result<(Rat, Rat)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parameter(format!("expected two comma-separated values in {s:?}")))?;
    Ok((parse_rat(a)?, parse_rat(b)?))
}

fn parse_f64_pair(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parameter(format!("expected two comma-separated values in {s:?}")))?;
    let parse = |t: &str| -> Result<f64> {
        let t = t.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(f64::INFINITY);
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: f64 = p.trim().parse().map_err(|_| bad_float(t))?;
            let q: f64 = q.trim().parse().map_err(|_| bad_float(t))?;
            return Ok(p / q);
        }
        t.parse().map_err(|_| bad_float(t))
    };
    Ok((parse(a)?, parse(b)?))
}

fn bad_float(t: &str) -> Error {
    Error::Parameter(format!("cannot parse {t:?} as a number"))
}

fn parse_ell_grid(s: &str) -> Result<Vec<f64>> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad grid start in {s:?}")))?;
        let hi: i64 = hi
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad grid end in {s:?}")))?;
        if hi < lo {
            return Err(Error::Parameter(format!("empty grid {s:?}")));
        }
        return Ok((lo..=hi).map(|v| v as f64).collect());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parameter(format!("bad grid value {t:?}")))
        })
        .collect()
}

fn parse_complex(s: &str) -> Result<Complex64> {
    if let Some((re, im)) = s.split_once(',') {
        let re: f64 = re.trim().parse().map_err(|_| bad_float(s))?;
        let im: f64 = im.trim().parse().map_err(|_| bad_float(s))?;
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = s.trim().parse().map_err(|_| bad_float(s))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn install_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Parameter(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(job))
}

fn write_report<R: TableRow>(
    output: &OutputArgs,
    report: &ScanReport<R>,
    default_name: &str,
) -> Result<()> {
    let ext = match output.fmt {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let dest: Option<PathBuf> = match &output.out {
        Some(path) => Some(path.clone()),
        None => std::env::var_os(OUT_DIR_ENV)
            .map(|dir| PathBuf::from(dir).join(format!("{default_name}.{ext}"))),
    };
    let mut sink: Box<dyn Write> = match &dest {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    };
    match output.fmt {
        Format::Csv => write_csv(&mut sink, report)?,
        Format::Json => write_json(&mut sink, report)?,
    }
    Ok(())
}

fn echo_snap(meta: &mut RunMeta, name: &str, value: f64) -> Result<()> {
    if value.is_infinite() {
        return Ok(());
    }
    let (r, lossy) = snap_f64(value, SNAP_MAX_DEN)?;
    meta.set(format!("{name}_exact"), format_rat(r));
    if lossy {
        meta.set(format!("{name}_snapped"), "true");
    }
    Ok(())
}

fn cmd_mertens(args: MertensArgs) -> Result<()> {
    let (a1, a2) = parse_rat_pair(&args.alpha)?;
    let grid = parse_ell_grid(&args.ell)?;
    let auto_bound = grid.last().copied().unwrap_or(2.0).floor() as u64;
    let bound = args.sieve_bound.unwrap_or(auto_bound.max(1));
    let tables = build_sieves(bound)?;
    let mut report = install_pool(args.output.workers, || {
        mertens_scan(a1, a2, &grid, args.eps, &tables)
    })??;
    report.meta.set("alpha", &args.alpha);
    report.meta.set("ell", &args.ell);
    report.meta.set("workers", args.output.workers);
    write_report(&args.output, &report, "mertens")
}

#[derive(Serialize)]
struct FareyRow {
    n: u64,
    fraction: String,
}

impl TableRow for FareyRow {
    fn headers() -> &'static [&'static str] {
        &["n", "fraction"]
    }
    fn cells(&self) -> Vec<String> {
        vec![self.n.to_string(), self.fraction.clone()]
    }
}

fn cmd_farey(args: OrderArgs) -> Result<()> {
    let tables = build_sieves(args.order.max(1))?;
    let seq = farey(&tables, args.order)?;
    let rows: Vec<FareyRow> = seq
        .fractions()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| FareyRow {
            n: i as u64 + 1,
            fraction: format!("{a}/{b}"),
        })
        .collect();
    let mut meta = RunMeta::new("farey");
    meta.set("order", args.order);
    meta.sieve_bound = tables.bound();
    let mut report = ScanReport::new(meta, rows);
    report.push_summary("length", seq.len());
    write_report(&args.output, &report, "farey")
}

#[derive(Serialize)]
struct FranelRow {
    n: u64,
    fraction: String,
    delta: String,
    delta_float: f64,
}

impl TableRow for FranelRow {
    fn headers() -> &'static [&'static str] {
        &["n", "fraction", "delta", "delta_float"]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.fraction.clone(),
            self.delta.clone(),
            self.delta_float.to_string(),
        ]
    }
}

fn cmd_franel(args: OrderArgs) -> Result<()> {
    let tables = build_sieves(args.order.max(1))?;
    let seq = farey(&tables, args.order)?;
    let stats = franel_stats(&seq);
    let rows: Vec<FranelRow> = seq
        .fractions()
        .iter()
        .zip(stats.deltas.iter())
        .enumerate()
        .map(|(i, (&(a, b), delta))| FranelRow {
            n: i as u64 + 1,
            fraction: format!("{a}/{b}"),
            delta: delta.to_string(),
            delta_float: num_traits::ToPrimitive::to_f64(delta).unwrap_or(f64::NAN),
        })
        .collect();
    let mut meta = RunMeta::new("franel");
    meta.set("order", args.order);
    meta.sieve_bound = tables.bound();
    let mut report = ScanReport::new(meta, rows);
    report.push_summary("sum_sq", &stats.sum_sq);
    report.push_summary("sum_sq_float", stats.sum_sq_f64());
    report.push_summary("sum_abs", &stats.sum_abs);
    report.push_summary("sum_abs_float", stats.sum_abs_f64());
    write_report(&args.output, &report, "franel")
}

fn build_box(params: &BoxParams) -> Result<AdaptedBox> {
    let (a1, a2) = parse_f64_pair(&params.alpha)?;
    let (b1, b2) = parse_f64_pair(&params.beta)?;
    AdaptedBox::new(a1, a2, b1, b2, params.ell)
}

fn echo_box(meta: &mut RunMeta, params: &BoxParams, bx: &AdaptedBox) -> Result<()> {
    meta.set("alpha", &params.alpha);
    meta.set("beta", &params.beta);
    meta.set("ell", params.ell);
    echo_snap(meta, "alpha1", bx.alpha1())?;
    echo_snap(meta, "alpha2", bx.alpha2())?;
    Ok(())
}

fn cmd_box(args: BoxScanArgs) -> Result<()> {
    if args.grid_count == 0 {
        return Err(Error::Parameter("grid count must be >= 1".into()));
    }
    let bx = build_box(&args.box_params)?;
    let grid = geometric_grid(args.grid_count);
    let auto = required_sieve_bound(&bx, grid[grid.len() - 1]);
    let bound = args.sieve_bound.unwrap_or(auto);
    let tables = build_sieves(bound)?;
    let scan = install_pool(args.output.workers, || {
        error_scan(&bx, &grid, args.exponent, &tables)
    })??;

    let mut meta = RunMeta::new("box");
    echo_box(&mut meta, &args.box_params, &bx)?;
    meta.set("grid_count", args.grid_count);
    meta.set("exponent", args.exponent);
    meta.set("workers", args.output.workers);
    meta.sieve_bound = tables.bound();
    let mut report: ScanReport<MeasureRow> = ScanReport::new(meta, scan.rows.clone());
    report.push_summary("sup_abs_k", scan.sup_k);
    report.push_summary("max_diag", scan.max_diag);
    report.push_summary("max_diag_y", scan.max_diag_y);
    write_report(&args.output, &report, "box")
}

#[derive(Serialize)]
struct MellinRow {
    s_re: f64,
    s_im: f64,
    #[serde(rename = "G_re")]
    g_re: f64,
    #[serde(rename = "G_im")]
    g_im: f64,
    remainder_bound: f64,
}

impl TableRow for MellinRow {
    fn headers() -> &'static [&'static str] {
        &["s_re", "s_im", "G_re", "G_im", "remainder_bound"]
    }
    fn cells(&self) -> Vec<String> {
        vec![
            self.s_re.to_string(),
            self.s_im.to_string(),
            self.g_re.to_string(),
            self.g_im.to_string(),
            self.remainder_bound.to_string(),
        ]
    }
}

fn cmd_mellin(args: MellinArgs) -> Result<()> {
    let bx = build_box(&args.box_params)?;
    let f = BoxFunction::single(bx);
    let auto = f.required_sieve_bound(args.ymin);
    let bound = args.sieve_bound.unwrap_or(auto);
    let tables = build_sieves(bound)?;

    let mut rows = Vec::with_capacity(args.s_values.len());
    for sv in &args.s_values {
        let s = parse_complex(sv)?;
        let sample = mellin_g(&f, s, args.ymin, &tables)?;
        rows.push(MellinRow {
            s_re: s.re,
            s_im: s.im,
            g_re: sample.value.re,
            g_im: sample.value.im,
            remainder_bound: sample.remainder_bound,
        });
    }

    let mut meta = RunMeta::new("mellin");
    echo_box(&mut meta, &args.box_params, &bx)?;
    meta.set("s", args.s_values.join(";"));
    meta.set("ymin", args.ymin);
    meta.sieve_bound = tables.bound();
    let mut report = ScanReport::new(meta, rows);
    report.push_summary("haar", f.haar());
    report.push_summary("support_bound", f.support_height());
    write_report(&args.output, &report, "mellin")
}

fn cmd_nu(args: NuArgs) -> Result<()> {
    if args.grid_count == 0 {
        return Err(Error::Parameter("grid count must be >= 1".into()));
    }
    let (u0, u1) = parse_f64_pair(&args.support)?;
    let g = TestFunction1D::bump(u0, u1, args.order)?;
    let y_min = 2f64.powi(-(args.grid_count as i32));
    let auto = (u1 / y_min).floor() as u64;
    let bound = args.sieve_bound.unwrap_or(auto);
    let tables = build_sieves(bound)?;
    let grid = geometric_grid(args.grid_count);
    let mut report = nu_phi_scan(&g, &grid, args.eps, &tables)?;
    report.meta.set("grid_count", args.grid_count);
    report.meta.set("workers", args.output.workers);
    write_report(&args.output, &report, "nu")
}

fn cmd_selftest(args: SelftestArgs) -> Result<()> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    let mut failures = 0usize;

    // Coprime counts: Möbius inversion vs gcd-filtered brute force.
    {
        let tables = build_sieves(800)?;
        let mut ok = true;
        for _ in 0..args.cases {
            let q = rng.gen_range(2i64..=16);
            let p1 = rng.gen_range(0i64..q - 1).max(0);
            let p2 = rng.gen_range(p1 + 1..=q);
            let ell = Rat::new(rng.gen_range(4i64..=600), rng.gen_range(1i64..=4));
            let region = LatticeRegion::triangle(
                Rat::new(p1, q),
                Rat::new(p2, q),
                ell,
                EdgeRule::Inclusive,
            )?;
            let fast = count_lattice_coprime(&region, &tables)?;
            let mut slow = 0u64;
            let (lo, hi) = region.row_range();
            for v in lo..=hi {
                for u in 1..=v {
                    if region.alpha1() * Rat::from_integer(v) <= Rat::from_integer(u)
                        && Rat::from_integer(u) <= region.alpha2() * Rat::from_integer(v)
                        && crate::util::gcd_u64(u as u64, v as u64) == 1
                    {
                        slow += 1;
                    }
                }
            }
            if fast != slow {
                ok = false;
                println!(
                    "selftest coprime-count: MISMATCH alpha=({p1}/{q},{p2}/{q}) ell={ell}: {fast} vs {slow}"
                );
            }
        }
        println!(
            "selftest coprime-count ({} cases): {}",
            args.cases,
            if ok { "ok" } else { "FAILED" }
        );
        failures += usize::from(!ok);
    }

    // Path identity: arithmetic enumeration vs trapezium count.
    {
        let tables = build_sieves(2048)?;
        let mut ok = true;
        for _ in 0..args.cases {
            let a1 = rng.gen_range(0.0..0.6);
            let a2 = a1 + rng.gen_range(0.05..(1.0 - a1));
            let b1 = rng.gen_range(0.05..1.0);
            let b2 = b1 + rng.gen_range(0.05..2.0);
            let bx = AdaptedBox::new(a1, a2, b1, b2, 0.1)?;
            let t = rng.gen_range(-2.0..10.0);
            let fast = intersection_count(&bx, t, &tables)?.n;
            let slow = intersection_count_direct(&bx, t, &tables)?.n;
            if fast != slow {
                ok = false;
                println!("selftest path-identity: MISMATCH box=({a1},{a2},{b1},{b2}) t={t}");
            }
        }
        println!(
            "selftest path-identity ({} cases): {}",
            args.cases,
            if ok { "ok" } else { "FAILED" }
        );
        failures += usize::from(!ok);
    }

    // Iwasawa recomposition.
    {
        let mut worst = 0.0f64;
        for _ in 0..args.cases.max(1000) {
            let mut g = crate::hyp::GroupElement::IDENTITY;
            for _ in 0..2 {
                g = g.flow_hplus(rng.gen_range(-1.0..1.0));
                g = g.flow_geodesic(rng.gen_range(-0.75..0.75));
                g = g.flow_hminus(rng.gen_range(-1.0..1.0));
            }
            worst = worst.max(iwasawa_nak(&g).recompose().max_entry_distance(&g));
        }
        let ok = worst <= 1e-12;
        println!(
            "selftest iwasawa-recomposition (max error {worst:.3e}): {}",
            if ok { "ok" } else { "FAILED" }
        );
        failures += usize::from(!ok);
    }

    // Farey neighbors.
    {
        let tables = build_sieves(200)?;
        let mut ok = true;
        for n in [30u64, 120, 200] {
            let seq = farey(&tables, n)?;
            if seq.len() as u64 != tables.summatory_at(n) {
                ok = false;
            }
            for w in seq.fractions().windows(2) {
                if w[0].1 * w[1].0 - w[0].0 * w[1].1 != 1 {
                    ok = false;
                }
            }
        }
        println!("selftest farey-neighbors: {}", if ok { "ok" } else { "FAILED" });
        failures += usize::from(!ok);
    }

    if failures > 0 {
        Err(Error::Domain(format!("{failures} selftest suite(s) failed")))
    } else {
        Ok(())
    }
}
