//! Benchmark harness: solve every algorithm on every dataset prefix and
//! orientation, timing graph construction and solving separately.

mod plan;
mod report;
mod runner;

pub use plan::{BenchmarkPlan, DatasetSource, DatasetSpec, Orientation};
pub use report::{emit_report, read_csv_report, CsvRow, ReportFormat, RowStatus, CSV_HEADER};
pub use runner::{run_plan, BenchmarkReport, BlockReport, RowMetrics, RowOutcome, RowReport};
