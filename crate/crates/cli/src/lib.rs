//! `diter` command-line driver.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 solver
//! non-convergence or degenerate normalization.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use diter_core::bench::{
    emit_report, run_plan, BenchmarkPlan, DatasetSource, DatasetSpec, Orientation, ReportFormat, RowOutcome,
};
use diter_core::graph::{load_edge_list, write_text, InputFormat};
use diter_core::{build_graph, compute_stats, transpose, write_binary, Algorithm, Error, Graph, GraphStats, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "diter", version, about = "PageRank by power iteration, Gauss-Seidel and D-iteration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert an edge list between the text and binary formats.
    Convert(ConvertArgs),
    /// Print graph statistics (N, L/N, D/N, E/N, O/N, max_in, max_out).
    Stats(StatsArgs),
    /// Run one solver and print its iteration count and top scores.
    Solve(SolveArgs),
    /// Run a benchmark plan and write a comparison report.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Binary,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => InputFormat::Text,
            FormatArg::Binary => InputFormat::Binary,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgArg {
    Pi,
    PiCol,
    Gs,
    DiCyc,
    DiSop,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Pi => Algorithm::PowerRow,
            AlgArg::PiCol => Algorithm::PowerColumn,
            AlgArg::Gs => Algorithm::GaussSeidel,
            AlgArg::DiCyc => Algorithm::DiCyclic,
            AlgArg::DiSop => Algorithm::DiSop,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportArg {
    Csv,
    Markdown,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Force the input encoding instead of sniffing the magic bytes.
    #[arg(long, value_enum)]
    input_format: Option<FormatArg>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Keep only the first N nodes (edges with both endpoints below N).
    #[arg(long)]
    n_limit: Option<usize>,
    /// Reverse every edge before working on the graph.
    #[arg(long)]
    transpose: bool,
}

#[derive(Args, Debug)]
struct SolverArgs {
    /// Damping factor.
    #[arg(long = "d", default_value_t = 0.85)]
    damping: f64,
    /// Target error (default 1/N).
    #[arg(long)]
    target: Option<f64>,
    #[arg(long, default_value_t = diter_core::solvers::DEFAULT_MAX_CYCLES)]
    max_cycles: usize,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            damping: self.damping,
            target_error: self.target,
            max_cycles: self.max_cycles,
        }
    }
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    to: FormatArg,
    #[command(flatten)]
    input: InputArgs,
    input_path: PathBuf,
    output_path: PathBuf,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    graph: GraphArgs,
    input_path: PathBuf,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum)]
    alg: AlgArg,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    graph: GraphArgs,
    /// How many top-ranked nodes to print.
    #[arg(long, default_value_t = 10)]
    top: usize,
    input_path: PathBuf,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// TOML plan file; flags given alongside override its settings.
    #[arg(long)]
    plan: Option<PathBuf>,
    /// Algorithms to compare (repeatable; default all five).
    #[arg(long, value_enum)]
    alg: Vec<AlgArg>,
    /// Damping factor.
    #[arg(long = "d")]
    damping: Option<f64>,
    #[arg(long)]
    target: Option<f64>,
    #[arg(long)]
    max_cycles: Option<usize>,
    /// Comma-separated increasing node limits, e.g. 1000,10000.
    #[arg(long, value_delimiter = ',')]
    n_limit: Vec<usize>,
    /// Solve the transposed graph instead of the graph as read.
    #[arg(long, conflicts_with = "both_orientations")]
    transpose: bool,
    /// Solve both the graph and its transpose.
    #[arg(long)]
    both_orientations: bool,
    #[arg(long, value_enum, default_value = "markdown")]
    format: ReportArg,
    #[arg(long)]
    reps: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    input: InputArgs,
    /// Edge-list files to add as datasets.
    inputs: Vec<PathBuf>,
}

/// Outcome of a subcommand: the exit code plus an optional diagnostic.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io { .. } | Error::Format { .. } => EXIT_IO,
            Error::Solver(_) => EXIT_SOLVER,
            Error::Plan(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn stdout_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("writing output: {e}"),
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run_cli<S: AsRef<str>>(args: &[S], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Convert(a) => convert(&a),
        Command::Stats(a) => stats(&a, stdout),
        Command::Solve(a) => solve(&a, stdout),
        Command::Bench(a) => bench(&a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "diter: {}", f.message);
            f.code
        }
    }
}

fn load_graph(path: &Path, input: &InputArgs, graph: &GraphArgs) -> Result<Graph, Failure> {
    let edges = load_edge_list(path, input.input_format.map(Into::into))?;
    let g = build_graph(&edges, graph.n_limit);
    Ok(if graph.transpose { transpose(&g) } else { g })
}

fn convert(a: &ConvertArgs) -> Result<i32, Failure> {
    let edges = load_edge_list(&a.input_path, a.input.input_format.map(Into::into))?;
    let bytes = match a.to {
        FormatArg::Binary => write_binary(&edges),
        FormatArg::Text => {
            let mut buf = Vec::new();
            write_text(&edges, &mut buf).expect("in-memory write");
            buf
        }
    };
    std::fs::write(&a.output_path, bytes).map_err(|e| io_failure(&a.output_path, e))?;
    Ok(EXIT_OK)
}

fn print_stats(out: &mut dyn Write, s: &GraphStats) -> std::io::Result<()> {
    writeln!(out, "{s}")?;
    writeln!(out, "{}", GraphStats::table_header())?;
    writeln!(out, "{}", s.table_row())
}

fn stats(a: &StatsArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&a.input_path, &a.input, &a.graph)?;
    print_stats(stdout, &compute_stats(&g)).map_err(stdout_failure)?;
    Ok(EXIT_OK)
}

fn solve(a: &SolveArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&a.input_path, &a.input, &a.graph)?;
    let algorithm = Algorithm::from(a.alg);
    let config = a.solver.config();
    if let Err(e) = config.validate() {
        return Err(Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        });
    }
    let r = algorithm.solve(&g, &config).map_err(|e| Failure::from(Error::from(e)))?;
    let write = |out: &mut dyn Write| -> std::io::Result<()> {
        writeln!(out, "algorithm\t{}", algorithm.label())?;
        writeln!(out, "nb_iter\t{:.1}", r.equivalent_iterations())?;
        writeln!(out, "cycles\t{}", r.cycles)?;
        writeln!(out, "final_error\t{:e}", r.final_error())?;
        writeln!(out, "target_error\t{:e}", r.target_error)?;
        writeln!(out, "converged\t{}", r.converged)?;
        writeln!(out, "solve_time_s\t{:.3}", r.solve_time.as_secs_f64())?;
        writeln!(out, "rank\tnode\tscore")?;
        for (rank, (node, score)) in r.top(a.top).into_iter().enumerate() {
            writeln!(out, "{}\t{node}\t{score:.6e}", rank + 1)?;
        }
        Ok(())
    };
    write(stdout).map_err(stdout_failure)?;
    Ok(if r.converged { EXIT_OK } else { EXIT_SOLVER })
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn build_plan(a: &BenchArgs) -> Result<BenchmarkPlan, Failure> {
    let mut plan = match &a.plan {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            let mut plan: BenchmarkPlan = toml::from_str(&text).map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("{}: {e}", path.display()),
            })?;
            // Dataset paths are relative to the plan file.
            let base = path.parent().unwrap_or(Path::new("."));
            for d in &mut plan.datasets {
                if let DatasetSource::File { path: p, .. } = &mut d.source {
                    if p.is_relative() {
                        *p = base.join(&*p);
                    }
                }
            }
            plan
        }
        None => BenchmarkPlan::new(Vec::new()),
    };
    for path in &a.inputs {
        plan.datasets.push(DatasetSpec {
            name: dataset_name(path),
            source: DatasetSource::File {
                path: path.clone(),
                format: a.input.input_format.map(Into::into),
            },
        });
    }
    if !a.alg.is_empty() {
        plan.algorithms = a.alg.iter().map(|&x| x.into()).collect();
    }
    if !a.n_limit.is_empty() {
        plan.n_prefixes = Some(a.n_limit.clone());
    }
    if a.transpose {
        plan.orientations = vec![Orientation::Transposed];
    } else if a.both_orientations {
        plan.orientations = vec![Orientation::Forward, Orientation::Transposed];
    }
    if let Some(d) = a.damping {
        plan.config.damping = d;
    }
    if a.target.is_some() {
        plan.config.target_error = a.target;
    }
    if let Some(m) = a.max_cycles {
        plan.config.max_cycles = m;
    }
    if let Some(r) = a.reps {
        plan.repetitions = r;
    }
    if plan.datasets.is_empty() {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "bench needs at least one input file or a --plan".into(),
        });
    }
    Ok(plan)
}

fn bench(a: &BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let plan = build_plan(a)?;
    plan.validate()?;
    let report = run_plan(&plan)?;
    let format = match a.format {
        ReportArg::Csv => ReportFormat::Csv,
        ReportArg::Markdown => ReportFormat::Markdown,
    };
    let text = emit_report(&report, format);
    match &a.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| io_failure(path, e))?,
        None => stdout.write_all(text.as_bytes()).map_err(stdout_failure)?,
    }
    let mut code = EXIT_OK;
    for block in &report.blocks {
        for row in &block.rows {
            let problem = match &row.outcome {
                RowOutcome::Failed(msg) => Some(msg.clone()),
                RowOutcome::Solved(m) if !m.converged => Some("did not converge".to_string()),
                RowOutcome::Solved(_) => None,
            };
            if let Some(msg) = problem {
                let _ = writeln!(
                    stderr,
                    "diter: {} N={} {} {}: {msg}",
                    block.dataset,
                    block.n,
                    block.orientation,
                    row.algorithm.label()
                );
                code = EXIT_SOLVER;
            }
        }
    }
    Ok(code)
}
