//! Machine output: JSON or CSV tables with fixed 10-significant-digit
//! rounding so identical runs produce byte-identical files.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Round to 10 significant digits; both output formats then agree exactly.
pub fn sig10(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        v
    } else {
        format!("{v:.9e}").parse().unwrap()
    }
}

pub trait Tabular: Serialize {
    fn header() -> &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

pub fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_table<R: Tabular, W: Write>(rows: &[R], format: Format, out: &mut W) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "{}", R::header().join(","))?;
            for row in rows {
                writeln!(out, "{}", row.fields().join(","))?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
pub struct ZetaOut {
    pub p: f64,
    pub s: f64,
    pub zeta: Option<f64>,
    pub delta: Option<f64>,
    pub nodes: usize,
    pub cutoff: i64,
    pub efficiency: f64,
}

impl Tabular for ZetaOut {
    fn header() -> &'static [&'static str] {
        &["p", "s", "zeta", "delta", "nodes", "cutoff", "efficiency"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.s.to_string(),
            opt(self.zeta),
            opt(self.delta),
            self.nodes.to_string(),
            self.cutoff.to_string(),
            self.efficiency.to_string(),
        ]
    }
}

#[derive(Serialize)]
pub struct CurveOut {
    pub x: f64,
    pub approx: f64,
    pub exact: f64,
    pub error: f64,
}

impl Tabular for CurveOut {
    fn header() -> &'static [&'static str] {
        &["x", "approx", "exact", "error"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.x.to_string(),
            self.approx.to_string(),
            self.exact.to_string(),
            self.error.to_string(),
        ]
    }
}

#[derive(Serialize)]
pub struct TransformOut {
    pub k: f64,
    pub re: f64,
    pub im: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub efficiency: Option<f64>,
}

impl Tabular for TransformOut {
    fn header() -> &'static [&'static str] {
        &["k", "re", "im", "nodes", "cutoff", "efficiency"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.re.to_string(),
            self.im.to_string(),
            self.nodes.map(|v| v.to_string()).unwrap_or_default(),
            self.cutoff.map(|v| v.to_string()).unwrap_or_default(),
            opt(self.efficiency),
        ]
    }
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub property: &'static str,
    pub passed: bool,
    pub max_error: f64,
    pub tolerance: f64,
    pub trials: usize,
}

impl Tabular for VerifyOut {
    fn header() -> &'static [&'static str] {
        &["property", "passed", "max_error", "tolerance", "trials"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.property.to_string(),
            self.passed.to_string(),
            self.max_error.to_string(),
            self.tolerance.to_string(),
            self.trials.to_string(),
        ]
    }
}
