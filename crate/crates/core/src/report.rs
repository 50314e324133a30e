//! Text, JSON and CSV renderings of enumerations and pipeline reports.
//!
//! All renderings are deterministic: identical inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::filters::{DimensionReport, FilterId, PipelineReport, TypeReport};
use crate::ranktype::RankType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One CSV/JSON row per rank type.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub fd: u32,
    pub rank_type: String,
    pub p: usize,
    pub threshold: usize,
    pub best_bound: Option<u32>,
    pub verdict: &'static str,
    pub verifying_filter: Option<FilterId>,
}

impl Row {
    fn new(fd: u32, t: &TypeReport) -> Self {
        Row {
            fd,
            rank_type: t.rank_type.to_string(),
            p: t.p,
            threshold: t.threshold,
            best_bound: t.best_bound,
            verdict: if t.verified { "verified" } else { "residual" },
            verifying_filter: t.verifying_filter,
        }
    }
}

#[derive(Serialize)]
struct JsonDimension {
    fd: u32,
    total: usize,
    verified: usize,
    residual: Vec<String>,
    rows: Vec<Row>,
}

#[derive(Serialize)]
struct JsonReport {
    max_fd: u32,
    dimensions: Vec<JsonDimension>,
}

fn paren(t: &RankType) -> String {
    format!("({t})")
}

fn render_dimension_text(out: &mut String, dim: &DimensionReport) {
    writeln!(out, "fd={}  total={}", dim.fd, dim.total).unwrap();
    let grouped = dim.residuals_by_p();
    if grouped.is_empty() {
        out.push_str("  all ruled out\n");
        return;
    }
    for (p, types) in grouped {
        let listed: Vec<String> = types.iter().map(|t| paren(&t.rank_type)).collect();
        writeln!(out, "  p={p}: {}", listed.join(", ")).unwrap();
    }
}

pub fn render_pipeline(report: &PipelineReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for dim in &report.dimensions {
                render_dimension_text(&mut out, dim);
            }
            let total: usize = report.dimensions.iter().map(|d| d.total).sum();
            let verified: usize = report
                .dimensions
                .iter()
                .map(DimensionReport::verified_count)
                .sum();
            writeln!(
                out,
                "summary: fd<={}  total={}  verified={}  residual={}",
                report.max_fd,
                total,
                verified,
                total - verified
            )
            .unwrap();
            out
        }
        Format::Json => {
            let json = JsonReport {
                max_fd: report.max_fd,
                dimensions: report
                    .dimensions
                    .iter()
                    .map(|d| JsonDimension {
                        fd: d.fd,
                        total: d.total,
                        verified: d.verified_count(),
                        residual: d
                            .residuals()
                            .iter()
                            .map(|t| t.rank_type.to_string())
                            .collect(),
                        rows: d.types.iter().map(|t| Row::new(d.fd, t)).collect(),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for d in &report.dimensions {
                for t in &d.types {
                    writer.serialize(Row::new(d.fd, t)).expect("csv row");
                }
            }
            // Header is emitted with the first row; an empty report still needs one.
            if report.dimensions.iter().all(|d| d.types.is_empty()) {
                writer
                    .write_record([
                        "fd",
                        "rank_type",
                        "p",
                        "threshold",
                        "best_bound",
                        "verdict",
                        "verifying_filter",
                    ])
                    .expect("csv header");
            }
            String::from_utf8(writer.into_inner().expect("csv flush")).expect("utf-8")
        }
    }
}

#[derive(Serialize)]
struct JsonEnumeration {
    max_fd: u32,
    counts: BTreeMap<u32, usize>,
    types: BTreeMap<u32, Vec<String>>,
}

pub fn render_enumeration(enumeration: &BTreeMap<u32, Vec<RankType>>, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (fd, types) in enumeration {
                for t in types {
                    writeln!(out, "{fd}  {}", paren(t)).unwrap();
                }
            }
            out
        }
        Format::Json => {
            let json = JsonEnumeration {
                max_fd: enumeration.keys().copied().max().unwrap_or(0),
                counts: enumeration.iter().map(|(&fd, v)| (fd, v.len())).collect(),
                types: enumeration
                    .iter()
                    .map(|(&fd, v)| (fd, v.iter().map(ToString::to_string).collect()))
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&json).expect("enumeration serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["fd", "count", "rank_types"])
                .expect("csv header");
            for (fd, types) in enumeration {
                let listed: Vec<String> = types.iter().map(ToString::to_string).collect();
                writer
                    .write_record([fd.to_string(), types.len().to_string(), listed.join(" ")])
                    .expect("csv row");
            }
            String::from_utf8(writer.into_inner().expect("csv flush")).expect("utf-8")
        }
    }
}

/// Per-fd counts, one line each, for diagnostics.
pub fn render_counts(enumeration: &BTreeMap<u32, Vec<RankType>>) -> String {
    let mut out = String::new();
    for (fd, types) in enumeration {
        writeln!(out, "fd={fd}  count={}", types.len()).unwrap();
    }
    out
}
