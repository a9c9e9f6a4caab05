//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input (flags, files, constraints),
//! 2 I/O failure.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::assign::{
    distributed_assign, identical_range, identical_range_cost, optimal_assign, suboptimal_assign,
};
use crate::error::{Error, Result};
use crate::experiments::{
    run_density_sweep, run_trials, Algorithm, ExperimentConfig, HistogramReport, Pair, Report,
    ReportFormat,
};
use crate::format::to_json;
use crate::io::{read_network, read_to_string, AssignmentFile, NetworkFile, TraceFile};
use crate::network::{assignment_cost, PathLoss};
use crate::oracle::{brute_force_optimal, OracleConfig};
use crate::protocol::run_protocol;
use crate::topogen::{generate, GenMode, GenSpec, SourcePolicy};

#[derive(Debug, Parser)]
#[command(
    name = "linebcast",
    version,
    about = "Minimum-energy broadcast range assignment on a line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a network (or a batch, one JSON object per line).
    Gen(GenArgs),
    /// Compute a range assignment for a network file.
    Assign(AssignArgs),
    /// Exhaustive minimum-energy search for small networks.
    Oracle(OracleArgs),
    /// Simulate the local relay protocol.
    Protocol(ProtocolArgs),
    /// Mean energy per algorithm over a density grid.
    Sweep(SweepArgs),
    /// Histogram of normalized differences or long-relay distances.
    Hist(HistArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value = "uniform")]
    mode: GenMode,
    #[arg(long, default_value_t = 150)]
    n: usize,
    #[arg(long, default_value_t = 5000.0)]
    length: f64,
    #[arg(long, default_value_t = 0.03)]
    lambda: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// random, center or a node index.
    #[arg(long, default_value = "random")]
    source: SourcePolicy,
    #[arg(long, default_value_t = 102.0)]
    r1: f64,
    #[arg(long, default_value_t = 100.0)]
    r2: f64,
    #[arg(long, default_value_t = 1.0)]
    eps1: f64,
    /// Defaults to eps1.
    #[arg(long)]
    eps2: Option<f64>,
    /// Networks to emit; trial t uses RNG stream t.
    #[arg(long, default_value_t = 1)]
    count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum AlgoArg {
    Optimal,
    Suboptimal,
    Distributed,
    Identical,
}

#[derive(Debug, Args)]
struct AssignArgs {
    #[arg(long, value_enum)]
    algo: AlgoArg,
    #[arg(long)]
    net: PathBuf,
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Connectivity probability (identical only).
    #[arg(long, default_value_t = 0.99)]
    pc: f64,
    /// Density; defaults to N / length (identical only).
    #[arg(long)]
    lambda: Option<f64>,
    /// Line length; defaults to the network span (identical only).
    #[arg(long)]
    length: Option<f64>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    net: PathBuf,
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct ProtocolArgs {
    #[arg(long)]
    net: PathBuf,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// JSON experiment config; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    length: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    lambdas: Option<Vec<f64>>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pcs: Option<Vec<f64>>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    algos: Option<Vec<Algorithm>>,
    #[arg(long)]
    generator: Option<GenMode>,
    #[arg(long)]
    bins: Option<usize>,
    /// Revalidate every trial (default: every hundredth).
    #[arg(long)]
    audit: bool,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    exp: ExperimentArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum HistKind {
    Diff,
    Bm,
}

#[derive(Debug, Args)]
struct HistArgs {
    #[command(flatten)]
    exp: ExperimentArgs,
    #[arg(long, value_enum, default_value = "diff")]
    kind: HistKind,
    #[arg(long, default_value = "distributed-optimal")]
    pair: Pair,
    /// Single density for the histogram (overrides --lambdas).
    #[arg(long)]
    lambda: Option<f64>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run the subcommand.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("{}\n", text.lines().next().unwrap_or("invalid arguments")),
                },
            };
        }
    };
    match run(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_io() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {}\n", e.to_string().replace('\n', " ")),
        },
    }
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Gen(a) => gen(a),
        Command::Assign(a) => assign(a),
        Command::Oracle(a) => oracle(a),
        Command::Protocol(a) => {
            let net = read_network(&a.net)?;
            Ok(line(&TraceFile::from(&run_protocol(&net))))
        }
        Command::Sweep(a) => sweep(a),
        Command::Hist(a) => hist(a),
    }
}

fn line<T: serde::Serialize>(v: &T) -> String {
    let mut s = to_json(v);
    s.push('\n');
    s
}

fn gen(a: GenArgs) -> Result<String> {
    let spec = GenSpec {
        mode: a.mode,
        n: a.n,
        length: a.length,
        lambda: a.lambda,
        seed: a.seed,
        source_policy: a.source,
        r1: a.r1,
        r2: a.r2,
        eps1: a.eps1,
        eps2: a.eps2,
    };
    let mut out = String::new();
    for trial in 0..a.count {
        let net = generate(&spec, trial)?;
        let batch = (a.count > 1).then_some(trial);
        out.push_str(&line(&NetworkFile::from_network(&net, Some(a.seed), batch)));
    }
    Ok(out)
}

fn assign(a: AssignArgs) -> Result<String> {
    let net = read_network(&a.net)?;
    let alpha = PathLoss::new(a.alpha)?;
    let file = match a.algo {
        AlgoArg::Optimal => {
            let r = optimal_assign(&net, alpha)?;
            AssignmentFile::new(&r.assignment, r.cost, "optimal", r.bm)
        }
        AlgoArg::Suboptimal => {
            let r = suboptimal_assign(&net, alpha)?;
            AssignmentFile::new(&r.assignment, r.cost, "suboptimal", None)
        }
        AlgoArg::Distributed => {
            let r = distributed_assign(&net);
            AssignmentFile::new(&r, assignment_cost(&r, alpha), "distributed", None)
        }
        AlgoArg::Identical => {
            let length = a.length.unwrap_or_else(|| net.span());
            let lambda = a.lambda.unwrap_or(net.len() as f64 / length);
            let radius = identical_range(a.pc, lambda, length)?.exact;
            let ranges = crate::network::RangeAssignment::new(vec![radius; net.len()])?;
            let cost = identical_range_cost(net.len(), radius, alpha);
            AssignmentFile::new(&ranges, cost, "identical", None)
        }
    };
    Ok(line(&file))
}

fn oracle(a: OracleArgs) -> Result<String> {
    let net = read_network(&a.net)?;
    let cfg = OracleConfig::new(a.max_n, PathLoss::new(a.alpha)?)?;
    let (ranges, cost) = brute_force_optimal(&net, &cfg)?;
    Ok(line(&AssignmentFile::new(&ranges, cost, "oracle", None)))
}

impl ExperimentArgs {
    fn config(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = read_to_string(path)?;
                serde_json::from_str(&text).map_err(|e| Error::Parse {
                    context: path.display().to_string(),
                    message: e.to_string(),
                })?
            }
            None => ExperimentConfig::default(),
        };
        if let Some(v) = self.length {
            cfg.length = v;
        }
        if let Some(v) = &self.lambdas {
            cfg.lambdas = v.clone();
        }
        if let Some(v) = self.trials {
            cfg.trials = v;
        }
        if let Some(v) = self.alpha {
            cfg.alpha = PathLoss::new(v)?;
        }
        if let Some(v) = &self.pcs {
            cfg.pcs = v.clone();
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = &self.algos {
            cfg.algorithms = v.clone();
        }
        if let Some(v) = self.generator {
            cfg.generator = v;
        }
        if let Some(v) = self.bins {
            cfg.bins = v;
        }
        cfg.audit |= self.audit;
        cfg.validate()?;
        Ok(cfg)
    }

    fn in_pool<T: Send>(&self, job: impl FnOnce() -> Result<T> + Send) -> Result<T> {
        match self.workers {
            None => job(),
            Some(0) => Err(Error::domain("workers", "must be at least 1")),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::domain("workers", e.to_string()))?
                .install(job),
        }
    }

    fn emit(&self, report: &Report) -> Result<String> {
        match &self.out {
            Some(path) => {
                crate::experiments::emit_report(report, self.format, path)?;
                Ok(String::new())
            }
            None => Ok(crate::experiments::render_report(report, self.format)),
        }
    }
}

fn sweep(a: SweepArgs) -> Result<String> {
    let cfg = a.exp.config()?;
    let report = a.exp.in_pool(|| run_density_sweep(&cfg))?;
    a.exp.emit(&Report::Sweep(report))
}

fn hist(a: HistArgs) -> Result<String> {
    let mut cfg = a.exp.config()?;
    if let Some(l) = a.lambda {
        cfg.lambdas = vec![l];
        cfg.validate()?;
    }
    let records = a.exp.in_pool(|| run_trials(&cfg, 0))?;
    let report = match a.kind {
        HistKind::Diff => HistogramReport::diff_from_records(&cfg, a.pair, &records),
        HistKind::Bm => HistogramReport::bm_from_records(&cfg, &records),
    };
    a.exp.emit(&Report::Histogram(report))
}
