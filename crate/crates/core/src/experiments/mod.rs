//! Monte Carlo harness: density sweeps, normalized-difference histograms
//! and relay-distance histograms over seeded random networks.
//!
//! Trial `t` at grid point `p` draws its network from ChaCha stream
//! `(p << 32) | t` of the configured seed. Trials run in parallel but are
//! collected and reduced in trial order, so reports do not depend on the
//! worker count.

mod histogram;
mod report;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use histogram::{bm_histogram, diff_histogram, Histogram, HistogramReport};
pub use report::{emit_report, render_report, Report, ReportFormat};

use crate::assign::{
    distributed_assign, expected_distributed_cost, identical_range, identical_range_cost,
    optimal_assign,
};
use crate::error::{Error, Result};
use crate::network::{assignment_cost, validate_broadcast, LinearNetwork, PathLoss};
use crate::topogen::{random_network, trial_rng, GenMode, GenSpec, SourcePolicy};

/// Curves a sweep can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Optimal,
    Suboptimal,
    Distributed,
    /// One curve per configured connectivity probability.
    Identical,
    /// Closed-form expected cost of the local rule.
    Analytic,
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimal" => Ok(Algorithm::Optimal),
            "suboptimal" => Ok(Algorithm::Suboptimal),
            "distributed" => Ok(Algorithm::Distributed),
            "identical" => Ok(Algorithm::Identical),
            "analytic" => Ok(Algorithm::Analytic),
            other => Err(Error::domain(
                "algos",
                format!("unknown algorithm {other:?}"),
            )),
        }
    }
}

/// Pair of algorithms compared by a normalized-difference histogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pair {
    DistributedOptimal,
    SuboptimalOptimal,
    DistributedSuboptimal,
}

impl Pair {
    pub fn of(self, r: &TrialRecord) -> f64 {
        match self {
            Pair::DistributedOptimal => r.diff_distributed_optimal,
            Pair::SuboptimalOptimal => r.diff_suboptimal_optimal,
            Pair::DistributedSuboptimal => r.diff_distributed_suboptimal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pair::DistributedOptimal => "distributed-optimal",
            Pair::SuboptimalOptimal => "suboptimal-optimal",
            Pair::DistributedSuboptimal => "distributed-suboptimal",
        }
    }
}

impl std::str::FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distributed-optimal" => Ok(Pair::DistributedOptimal),
            "suboptimal-optimal" => Ok(Pair::SuboptimalOptimal),
            "distributed-suboptimal" => Ok(Pair::DistributedSuboptimal),
            other => Err(Error::domain("pair", format!("unknown pair {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    /// Line length in meters.
    pub length: f64,
    /// Node densities (nodes per meter); each point uses `round(lambda * length)` nodes.
    pub lambdas: Vec<f64>,
    pub trials: usize,
    pub alpha: PathLoss,
    /// Connectivity probabilities for the identical-range curves.
    pub pcs: Vec<f64>,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// `uniform` reproduces the density sweep; `expgap` is the model under
    /// which the closed-form expected cost holds.
    pub generator: GenMode,
    /// Revalidate every trial instead of every hundredth.
    pub audit: bool,
    pub bins: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            length: 5000.0,
            lambdas: vec![0.01, 0.02, 0.03, 0.04, 0.05],
            trials: 10_000,
            alpha: PathLoss::default(),
            pcs: vec![0.85, 0.9, 0.99],
            seed: 0,
            algorithms: vec![
                Algorithm::Optimal,
                Algorithm::Suboptimal,
                Algorithm::Distributed,
                Algorithm::Identical,
                Algorithm::Analytic,
            ],
            generator: GenMode::Uniform,
            audit: false,
            bins: 50,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::domain("trials", "must be at least 1"));
        }
        if !(self.length > 0.0 && self.length.is_finite()) {
            return Err(Error::domain("length", "must be positive"));
        }
        if self.lambdas.is_empty() {
            return Err(Error::domain("lambdas", "need at least one density"));
        }
        for &l in &self.lambdas {
            if !(l > 0.0 && l.is_finite()) {
                return Err(Error::domain("lambdas", format!("{l} must be positive")));
            }
            if self.nodes_for(l) < 3 {
                return Err(Error::domain(
                    "lambdas",
                    format!("{l} gives fewer than 3 nodes on {} m", self.length),
                ));
            }
        }
        for &pc in &self.pcs {
            if !(pc > 0.0 && pc < 1.0) {
                return Err(Error::domain("pcs", format!("{pc} must lie in (0, 1)")));
            }
        }
        if !matches!(self.generator, GenMode::Uniform | GenMode::Expgap) {
            return Err(Error::domain("generator", "must be uniform or expgap"));
        }
        if self.bins < 1 {
            return Err(Error::domain("bins", "must be at least 1"));
        }
        Ok(())
    }

    pub fn nodes_for(&self, lambda: f64) -> usize {
        (lambda * self.length).round() as usize
    }

    fn gen_spec(&self, lambda: f64) -> GenSpec {
        GenSpec {
            mode: self.generator,
            n: self.nodes_for(lambda),
            length: self.length,
            lambda,
            seed: self.seed,
            source_policy: SourcePolicy::Random,
            ..GenSpec::default()
        }
    }
}

/// Per-network outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    /// ChaCha stream the network was drawn from.
    pub stream: u64,
    pub n: usize,
    pub source: usize,
    pub optimal: f64,
    pub suboptimal: f64,
    pub distributed: f64,
    pub bm: Option<usize>,
    /// `d(bm, source)` in meters.
    pub bm_distance: Option<f64>,
    pub diff_distributed_optimal: f64,
    pub diff_suboptimal_optimal: f64,
    pub diff_distributed_suboptimal: f64,
}

/// `(max - min) / min` of two energies.
pub fn normalized_difference(c1: f64, c2: f64) -> Result<f64> {
    let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
    if lo.is_nan() || lo <= 0.0 {
        return Err(Error::domain(
            "cost",
            "normalized difference needs a positive minimum cost",
        ));
    }
    Ok((hi - lo) / lo)
}

pub fn stream_id(point: usize, trial: u64) -> u64 {
    ((point as u64) << 32) | trial
}

/// Run and score one network through all three assignment algorithms.
pub fn evaluate(net: &LinearNetwork, alpha: PathLoss, validate: bool) -> Result<TrialRecord> {
    let opt = optimal_assign(net, alpha)?;
    let sub = opt.suboptimal.as_ref().ok_or(Error::EdgeSource {
        source_index: net.source(),
    })?;
    let dist = distributed_assign(net);
    let dist_cost = assignment_cost(&dist, alpha);
    if validate {
        let checks = [
            ("optimal", &opt.assignment),
            ("suboptimal", &sub.assignment),
            ("distributed", &dist),
        ];
        for (algorithm, ranges) in checks {
            if !validate_broadcast(net, ranges).all_informed() {
                return Err(Error::Infeasible { algorithm });
            }
        }
    }
    Ok(TrialRecord {
        trial: 0,
        stream: 0,
        n: net.len(),
        source: net.source(),
        optimal: opt.cost,
        suboptimal: sub.cost,
        distributed: dist_cost,
        bm: opt.bm,
        bm_distance: opt.bm.map(|b| net.d(b, net.source())),
        diff_distributed_optimal: normalized_difference(dist_cost, opt.cost)?,
        diff_suboptimal_optimal: normalized_difference(sub.cost, opt.cost)?,
        diff_distributed_suboptimal: normalized_difference(dist_cost, sub.cost)?,
    })
}

/// All trials at grid point `point` (an index into `cfg.lambdas`), in trial
/// order.
pub fn run_trials(cfg: &ExperimentConfig, point: usize) -> Result<Vec<TrialRecord>> {
    cfg.validate()?;
    let lambda = *cfg
        .lambdas
        .get(point)
        .ok_or_else(|| Error::domain("lambdas", format!("no grid point {point}")))?;
    let spec = cfg.gen_spec(lambda);
    (0..cfg.trials as u64)
        .into_par_iter()
        .map(|trial| {
            let stream = stream_id(point, trial);
            let mut rng = trial_rng(cfg.seed, stream);
            let net = random_network(&spec, &mut rng)?;
            let validate = cfg.audit || trial % 100 == 0;
            let mut rec = evaluate(&net, cfg.alpha, validate)?;
            rec.trial = trial;
            rec.stream = stream;
            Ok(rec)
        })
        .collect()
}

/// Mean and standard error of one curve at one density.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub algorithm: String,
    pub mean_cost: f64,
    pub stderr: f64,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint {
    pub lambda: f64,
    pub n: usize,
    pub curves: Vec<CurvePoint>,
    /// Closed-form expected cost of the local rule, when alpha is integral.
    pub analytic_distributed: Option<f64>,
    /// Fraction of trials where the optimal assignment uses a long relay.
    pub bm_fraction: f64,
}

impl SweepPoint {
    pub fn curve(&self, algorithm: &str) -> Option<&CurvePoint> {
        self.curves.iter().find(|c| c.algorithm == algorithm)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub length: f64,
    pub alpha: f64,
    pub generator: GenMode,
    pub source_policy: &'static str,
    pub points: Vec<SweepPoint>,
}

fn mean_stderr(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let n = values.clone().count();
    let mean = values.clone().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
    (mean, (var / n as f64).sqrt())
}

pub fn identical_curve_name(pc: f64) -> String {
    format!("identical_pc{pc}")
}

pub fn sweep_point(
    cfg: &ExperimentConfig,
    point: usize,
    records: &[TrialRecord],
) -> Result<SweepPoint> {
    let lambda = cfg.lambdas[point];
    let n = cfg.nodes_for(lambda);
    let mut curves = Vec::new();
    let analytic = expected_distributed_cost(n, lambda, cfg.alpha).ok();
    for algo in &cfg.algorithms {
        let measured = |f: fn(&TrialRecord) -> f64| {
            let (mean_cost, stderr) = mean_stderr(records.iter().map(f));
            (mean_cost, stderr)
        };
        match algo {
            Algorithm::Optimal | Algorithm::Suboptimal | Algorithm::Distributed => {
                let (name, f): (&str, fn(&TrialRecord) -> f64) = match algo {
                    Algorithm::Optimal => ("optimal", |r| r.optimal),
                    Algorithm::Suboptimal => ("suboptimal", |r| r.suboptimal),
                    _ => ("distributed", |r| r.distributed),
                };
                let (mean_cost, stderr) = measured(f);
                curves.push(CurvePoint {
                    algorithm: name.into(),
                    mean_cost,
                    stderr,
                    trials: records.len(),
                });
            }
            Algorithm::Identical => {
                for &pc in &cfg.pcs {
                    let radius = identical_range(pc, lambda, cfg.length)?.exact;
                    curves.push(CurvePoint {
                        algorithm: identical_curve_name(pc),
                        mean_cost: identical_range_cost(n, radius, cfg.alpha),
                        stderr: 0.0,
                        trials: records.len(),
                    });
                }
            }
            Algorithm::Analytic => {
                if let Some(v) = analytic {
                    curves.push(CurvePoint {
                        algorithm: "analytic".into(),
                        mean_cost: v,
                        stderr: 0.0,
                        trials: records.len(),
                    });
                }
            }
        }
    }
    let with_bm = records.iter().filter(|r| r.bm.is_some()).count();
    Ok(SweepPoint {
        lambda,
        n,
        curves,
        analytic_distributed: analytic,
        bm_fraction: with_bm as f64 / records.len() as f64,
    })
}

/// Mean energy of every selected curve at every density.
pub fn run_density_sweep(cfg: &ExperimentConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let points = (0..cfg.lambdas.len())
        .map(|p| {
            let records = run_trials(cfg, p)?;
            sweep_point(cfg, p, &records)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        seed: cfg.seed,
        length: cfg.length,
        alpha: cfg.alpha.alpha(),
        generator: cfg.generator,
        source_policy: "uniform over interior nodes",
        points,
    })
}
