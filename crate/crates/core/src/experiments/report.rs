use std::path::Path;

use serde::Serialize;

use super::{HistogramReport, SweepReport};
use crate::error::{Error, Result};
use crate::format::{g17, to_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::domain(
                "format",
                format!("expected csv or json, got {other:?}"),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Sweep(SweepReport),
    Histogram(HistogramReport),
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Sweep CSV: `lambda,algorithm,mean_cost,stderr,trials,seed`.
/// Histogram CSV: `bin_lo,bin_hi,count`.
pub fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = to_json(report);
            s.push('\n');
            s
        }
        ReportFormat::Csv => match report {
            Report::Sweep(sweep) => {
                let rows = sweep
                    .points
                    .iter()
                    .flat_map(|p| {
                        p.curves.iter().map(move |c| {
                            vec![
                                g17(p.lambda),
                                c.algorithm.clone(),
                                g17(c.mean_cost),
                                g17(c.stderr),
                                c.trials.to_string(),
                                sweep.seed.to_string(),
                            ]
                        })
                    })
                    .collect();
                csv_string(
                    &[
                        "lambda",
                        "algorithm",
                        "mean_cost",
                        "stderr",
                        "trials",
                        "seed",
                    ],
                    rows,
                )
            }
            Report::Histogram(h) => {
                let rows = h
                    .histogram
                    .bins()
                    .map(|(lo, hi, c)| vec![g17(lo), g17(hi), c.to_string()])
                    .collect();
                csv_string(&["bin_lo", "bin_hi", "count"], rows)
            }
        },
    }
}

pub fn emit_report(report: &Report, format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(report, format)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
