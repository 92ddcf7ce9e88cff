//! Run metadata and scan containers.
//!
//! Every command echoes its parameters verbatim into the output; a scan is
//! always (metadata, rows, summary), so CSV and JSON writers can mirror the
//! same fields.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Parameter echo, in insertion order.
    pub config: Vec<(String, String)>,
    /// Sieve bound actually used (0 when the command needs no sieve).
    pub sieve_bound: u64,
}

impl RunMeta {
    pub fn new(command: impl Into<String>) -> Self {
        RunMeta {
            tool: "horocycle",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            config: Vec::new(),
            sieve_bound: 0,
        }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.config.push((key.into(), value.to_string()));
        self
    }
}

/// A table of rows plus the metadata that produced it and any post-hoc
/// summary statistics (empirical suprema, fitted constants, ...).
#[derive(Debug, Clone)]
pub struct ScanReport<R> {
    pub meta: RunMeta,
    pub rows: Vec<R>,
    pub summary: Vec<(String, String)>,
}

impl<R> ScanReport<R> {
    pub fn new(meta: RunMeta, rows: Vec<R>) -> Self {
        ScanReport {
            meta,
            rows,
            summary: Vec::new(),
        }
    }

    pub fn push_summary(&mut self, key: impl Into<String>, value: impl ToString) {
        self.summary.push((key.into(), value.to_string()));
    }
}
