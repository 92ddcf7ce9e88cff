//! CSV and JSON serialization of scan reports.
//!
//! CSV output is RFC-4180-style with a `#`-prefixed metadata block before
//! the header row; JSON mirrors the same fields.

use crate::report::ScanReport;
use serde::Serialize;
use std::io::{self, Write};

/// A row that can render itself as CSV cells. The cells must line up with
/// `headers()`.
pub trait TableRow: Serialize {
    fn headers() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

pub fn write_csv<W: Write, R: TableRow>(w: &mut W, report: &ScanReport<R>) -> io::Result<()> {
    writeln!(w, "# tool={}", report.meta.tool)?;
    writeln!(w, "# version={}", report.meta.version)?;
    writeln!(w, "# command={}", report.meta.command)?;
    for (k, v) in &report.meta.config {
        writeln!(w, "# {k}={v}")?;
    }
    writeln!(w, "# sieve_bound={}", report.meta.sieve_bound)?;
    for (k, v) in &report.summary {
        writeln!(w, "# summary.{k}={v}")?;
    }
    writeln!(w, "{}", R::headers().join(","))?;
    for row in &report.rows {
        writeln!(w, "{}", row.cells().join(","))?;
    }
    Ok(())
}

pub fn write_json<W: Write, R: TableRow>(w: &mut W, report: &ScanReport<R>) -> io::Result<()> {
    let mut config = serde_json::Map::new();
    for (k, v) in &report.meta.config {
        config.insert(k.clone(), serde_json::Value::String(v.clone()));
    }
    let mut summary = serde_json::Map::new();
    for (k, v) in &report.summary {
        summary.insert(k.clone(), serde_json::Value::String(v.clone()));
    }
    let value = serde_json::json!({
        "meta": {
            "tool": report.meta.tool,
            "version": report.meta.version,
            "command": report.meta.command,
            "config": config,
            "sieve_bound": report.meta.sieve_bound,
        },
        "summary": summary,
        "rows": report.rows,
    });
    serde_json::to_writer_pretty(&mut *w, &value)?;
    writeln!(w)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::RunMeta;

    #[derive(Serialize)]
    struct Row {
        n: u64,
        x: f64,
    }

    impl TableRow for Row {
        fn headers() -> &'static [&'static str] {
            &["n", "x"]
        }
        fn cells(&self) -> Vec<String> {
            vec![self.n.to_string(), self.x.to_string()]
        }
    }

    #[test]
    fn csv_shape() {
        let mut meta = RunMeta::new("demo");
        meta.set("k", "v");
        let mut report = ScanReport::new(meta, vec![Row { n: 1, x: 0.5 }]);
        report.push_summary("sup", 2.0);
        let mut buf = Vec::new();
        write_csv(&mut buf, &report).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("# command=demo"));
        assert!(text.contains("# k=v"));
        assert!(text.contains("# summary.sup=2"));
        assert!(text.contains("n,x\n1,0.5\n"));
    }
}
