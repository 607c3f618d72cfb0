use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::runner::{BenchmarkReport, BlockReport, RowOutcome};
use crate::solvers::Algorithm;

pub const CSV_HEADER: &str =
    "dataset,n,orientation,algorithm,nb_iter,speedup_iter,solve_time_s,speedup_time,init_time_s,converged";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(format!("unknown report format {other:?} (expected csv or markdown)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    #[serde(rename = "true")]
    Converged,
    #[serde(rename = "false")]
    NotConverged,
    #[serde(rename = "error")]
    Error,
}

/// One line of the CSV report.
///
/// Iteration counts and their speed-ups are written at full precision so
/// the non-timing columns read back exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub dataset: String,
    pub n: usize,
    pub orientation: String,
    pub algorithm: String,
    pub nb_iter: Option<f64>,
    pub speedup_iter: Option<f64>,
    pub solve_time_s: Option<String>,
    pub speedup_time: Option<String>,
    pub init_time_s: String,
    pub converged: RowStatus,
}

pub fn emit_report(report: &BenchmarkReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Markdown => emit_markdown(report),
    }
}

fn csv_rows(report: &BenchmarkReport) -> impl Iterator<Item = CsvRow> + '_ {
    report.blocks.iter().flat_map(|block| {
        block.rows.iter().map(move |row| {
            let base = CsvRow {
                dataset: block.dataset.clone(),
                n: block.n,
                orientation: block.orientation.label().to_string(),
                algorithm: row.algorithm.label().to_string(),
                nb_iter: None,
                speedup_iter: None,
                solve_time_s: None,
                speedup_time: None,
                init_time_s: format!("{:.3}", block.init_time.as_secs_f64()),
                converged: RowStatus::Error,
            };
            match &row.outcome {
                RowOutcome::Failed(_) => base,
                RowOutcome::Solved(m) => CsvRow {
                    nb_iter: Some(m.nb_iter),
                    speedup_iter: m.speedup_iter,
                    solve_time_s: Some(format!("{:.3}", m.solve_time.as_secs_f64())),
                    speedup_time: m.speedup_time.map(|s| format!("{s:.1}")),
                    converged: if m.converged {
                        RowStatus::Converged
                    } else {
                        RowStatus::NotConverged
                    },
                    ..base
                },
            }
        })
    })
}

fn emit_csv(report: &BenchmarkReport) -> String {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in csv_rows(report) {
        writer.serialize(row).expect("in-memory csv write");
    }
    let body = String::from_utf8(writer.into_inner().expect("in-memory csv flush")).expect("utf-8 csv");
    format!("{CSV_HEADER}\n{body}")
}

/// Parses a CSV report produced by [`emit_report`].
pub fn read_csv_report(text: &str) -> Result<Vec<CsvRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

fn cell<T>(value: Option<T>, fmt: impl Fn(T) -> String) -> String {
    value.map(fmt).unwrap_or_else(|| "-".to_string())
}

fn emit_block(out: &mut String, block: &BlockReport) {
    let s = &block.stats;
    let _ = writeln!(
        out,
        "### {}: N={} ({}). Init: {:.3}s\n",
        block.dataset,
        block.n,
        block.orientation,
        block.init_time.as_secs_f64()
    );
    let _ = writeln!(
        out,
        "L/N {:.2}, D/N {:.3}, E/N {:.3}, O/N {:.3}, max_in {}, max_out {}\n",
        s.l_per_n(),
        s.d_per_n(),
        s.e_per_n(),
        s.o_per_n(),
        s.max_in,
        s.max_out
    );
    let header: Vec<&str> = block.rows.iter().map(|r| r.algorithm.label()).collect();
    let _ = writeln!(out, "| | {} |", header.join(" | "));
    let _ = writeln!(out, "|---|{}", "---:|".repeat(header.len()));

    let mut any_unconverged = false;
    let mut line = |label: &str, f: &dyn Fn(&RowOutcome) -> String| {
        let cells: Vec<String> = block.rows.iter().map(|r| f(&r.outcome)).collect();
        let _ = writeln!(out, "| {label} | {} |", cells.join(" | "));
    };
    line("nb iter", &|o| match o {
        RowOutcome::Solved(m) if m.converged => format!("{:.1}", m.nb_iter),
        RowOutcome::Solved(m) => format!("{:.1}*", m.nb_iter),
        RowOutcome::Failed(_) => "error".to_string(),
    });
    line("speed-up", &|o| match o {
        RowOutcome::Solved(m) => cell(m.speedup_iter, |v| format!("{v:.1}")),
        RowOutcome::Failed(_) => "-".to_string(),
    });
    line("time (s)", &|o| match o {
        RowOutcome::Solved(m) => format!("{:.3}", m.solve_time.as_secs_f64()),
        RowOutcome::Failed(_) => "-".to_string(),
    });
    line("speed-up", &|o| match o {
        RowOutcome::Solved(m) => cell(m.speedup_time, |v| format!("{v:.1}")),
        RowOutcome::Failed(_) => "-".to_string(),
    });
    for row in &block.rows {
        match &row.outcome {
            RowOutcome::Solved(m) if !m.converged => any_unconverged = true,
            RowOutcome::Failed(msg) => {
                let _ = writeln!(out, "\n{}: {msg}", row.algorithm.label());
            }
            _ => {}
        }
    }
    if any_unconverged {
        let _ = writeln!(out, "\n\\* stopped at the cycle limit before reaching the target error");
    }
}

fn emit_markdown(report: &BenchmarkReport) -> String {
    let mut out = String::new();
    for (i, block) in report.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        emit_block(&mut out, block);
    }
    out
}

impl CsvRow {
    pub fn algorithm(&self) -> Option<Algorithm> {
        self.algorithm.parse().ok()
    }
}
