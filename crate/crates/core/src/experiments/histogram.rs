use serde::Serialize;

use super::{run_trials, ExperimentConfig, Pair, TrialRecord};
use crate::error::Result;

/// Fixed-width bins over `[0, max]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

impl Histogram {
    /// Bins `values` (all `>= 0`) into `bins` equal-width bins spanning
    /// `[0, max]`, or `[0, 1]` when every value is zero. No values, no bins.
    pub fn from_values(values: &[f64], bins: usize) -> Histogram {
        if values.is_empty() || bins == 0 {
            return Histogram {
                edges: Vec::new(),
                counts: Vec::new(),
            };
        }
        let max = values.iter().copied().fold(0.0, f64::max);
        let hi = if max > 0.0 { max } else { 1.0 };
        let mut edges: Vec<f64> = (0..bins).map(|i| hi * i as f64 / bins as f64).collect();
        edges.push(hi);
        let mut counts = vec![0; bins];
        for &v in values {
            let k = ((v / hi) * bins as f64).floor() as usize;
            counts[k.min(bins - 1)] += 1;
        }
        Histogram { edges, counts }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `(lo, hi, count)` per bin.
    pub fn bins(&self) -> impl Iterator<Item = (f64, f64, usize)> + '_ {
        self.edges
            .windows(2)
            .zip(&self.counts)
            .map(|(w, &c)| (w[0], w[1], c))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramReport {
    /// `diff:<pair>` or `bm_distance`.
    pub quantity: String,
    pub lambda: f64,
    pub n: usize,
    pub length: f64,
    pub trials: usize,
    pub seed: u64,
    /// Number of binned values (trials with a long relay, for `bm_distance`).
    pub samples: usize,
    pub histogram: Histogram,
    pub max: Option<f64>,
    /// `(q, value)` at q = 0.5, 0.9, 0.95, 0.99 (nearest rank).
    pub quantiles: Vec<(f64, f64)>,
    /// Fraction of trials without a long relay (`bm_distance` only).
    pub no_bm_fraction: Option<f64>,
}

fn quantiles(values: &[f64]) -> Vec<(f64, f64)> {
    if values.is_empty() {
        return Vec::new();
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    [0.5, 0.9, 0.95, 0.99]
        .into_iter()
        .map(|q| {
            let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
            (q, sorted[rank - 1])
        })
        .collect()
}

fn report(
    cfg: &ExperimentConfig,
    quantity: String,
    values: Vec<f64>,
    trials: usize,
    no_bm_fraction: Option<f64>,
) -> HistogramReport {
    let lambda = cfg.lambdas[0];
    HistogramReport {
        quantity,
        lambda,
        n: cfg.nodes_for(lambda),
        length: cfg.length,
        trials,
        seed: cfg.seed,
        samples: values.len(),
        histogram: Histogram::from_values(&values, cfg.bins),
        max: values.iter().copied().reduce(f64::max),
        quantiles: quantiles(&values),
        no_bm_fraction,
    }
}

impl HistogramReport {
    pub fn diff_from_records(
        cfg: &ExperimentConfig,
        pair: Pair,
        records: &[TrialRecord],
    ) -> HistogramReport {
        let values = records.iter().map(|r| pair.of(r)).collect();
        report(
            cfg,
            format!("diff:{}", pair.name()),
            values,
            records.len(),
            None,
        )
    }

    pub fn bm_from_records(cfg: &ExperimentConfig, records: &[TrialRecord]) -> HistogramReport {
        let values: Vec<f64> = records.iter().filter_map(|r| r.bm_distance).collect();
        let no_bm = 1.0 - values.len() as f64 / records.len() as f64;
        report(
            cfg,
            "bm_distance".into(),
            values,
            records.len(),
            Some(no_bm),
        )
    }
}

/// Normalized energy differences of `pair` over the first density of
/// `cfg`.
pub fn diff_histogram(cfg: &ExperimentConfig, pair: Pair) -> Result<HistogramReport> {
    let records = run_trials(cfg, 0)?;
    Ok(HistogramReport::diff_from_records(cfg, pair, &records))
}

/// Distance from the source to the long relay of the optimal assignment,
/// over the first density of `cfg`.
pub fn bm_histogram(cfg: &ExperimentConfig) -> Result<HistogramReport> {
    let records = run_trials(cfg, 0)?;
    Ok(HistogramReport::bm_from_records(cfg, &records))
}
