//! Seeded network generators.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`; trial
//! `t` of a batch reads ChaCha stream `t` of that seed, so trials are
//! independent and reproducible on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::LinearNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenMode {
    /// `n` i.i.d. uniform points on `[0, length]`.
    Uniform,
    /// First node at 0, then `n - 1` i.i.d. `exp(lambda)` gaps.
    Expgap,
    /// Four nodes where the sub-optimal rule beats the local rule by ~100%.
    AdvA,
    /// Five nodes where the optimal rule beats the sub-optimal one by ~100%.
    AdvB,
}

impl std::str::FromStr for GenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GenMode::Uniform),
            "expgap" => Ok(GenMode::Expgap),
            "adv_a" | "adv-a" => Ok(GenMode::AdvA),
            "adv_b" | "adv-b" => Ok(GenMode::AdvB),
            other => Err(Error::InvalidSpec(format!("mode: unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourcePolicy {
    /// Uniform over the interior indices `1..=n-2`.
    Random,
    /// Index `(n - 1) / 2`.
    Center,
    Fixed(usize),
}

impl std::str::FromStr for SourcePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(SourcePolicy::Random),
            "center" => Ok(SourcePolicy::Center),
            other => other
                .parse::<usize>()
                .map(SourcePolicy::Fixed)
                .map_err(|_| {
                    Error::InvalidSpec(format!(
                        "source: expected random, center or an index, got {other:?}"
                    ))
                }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub mode: GenMode,
    pub n: usize,
    pub length: f64,
    pub lambda: f64,
    pub seed: u64,
    pub source_policy: SourcePolicy,
    pub r1: f64,
    pub r2: f64,
    pub eps1: f64,
    /// Defaults to `eps1` when absent.
    pub eps2: Option<f64>,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            mode: GenMode::Uniform,
            n: 150,
            length: 5000.0,
            lambda: 0.03,
            seed: 0,
            source_policy: SourcePolicy::Random,
            r1: 102.0,
            r2: 100.0,
            eps1: 1.0,
            eps2: None,
        }
    }
}

impl GenSpec {
    pub fn uniform(n: usize, length: f64, seed: u64) -> Self {
        GenSpec {
            mode: GenMode::Uniform,
            n,
            length,
            seed,
            ..GenSpec::default()
        }
    }

    pub fn expgap(n: usize, lambda: f64, seed: u64) -> Self {
        GenSpec {
            mode: GenMode::Expgap,
            n,
            lambda,
            seed,
            ..GenSpec::default()
        }
    }

    pub fn adv_a(r1: f64, r2: f64, eps1: f64) -> Self {
        GenSpec {
            mode: GenMode::AdvA,
            r1,
            r2,
            eps1,
            ..GenSpec::default()
        }
    }

    pub fn adv_b(r1: f64, r2: f64, eps1: f64, eps2: f64) -> Self {
        GenSpec {
            mode: GenMode::AdvB,
            r1,
            r2,
            eps1,
            eps2: Some(eps2),
            ..GenSpec::default()
        }
    }

    pub fn with_source(mut self, policy: SourcePolicy) -> Self {
        self.source_policy = policy;
        self
    }

    fn eps2(&self) -> f64 {
        self.eps2.unwrap_or(self.eps1)
    }
}

/// The RNG for trial `trial` of a batch seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Generate trial `trial` of `spec`. Trial 0 is what the single-network
/// generators return.
pub fn generate(spec: &GenSpec, trial: u64) -> Result<LinearNetwork> {
    match spec.mode {
        GenMode::Uniform | GenMode::Expgap => {
            let mut rng = trial_rng(spec.seed, trial);
            random_network(spec, &mut rng)
        }
        GenMode::AdvA | GenMode::AdvB => adversarial_network(spec),
    }
}

pub fn uniform_network(spec: &GenSpec) -> Result<LinearNetwork> {
    if spec.mode != GenMode::Uniform {
        return Err(Error::InvalidSpec("mode: expected uniform".into()));
    }
    generate(spec, 0)
}

pub fn exponential_gap_network(spec: &GenSpec) -> Result<LinearNetwork> {
    if spec.mode != GenMode::Expgap {
        return Err(Error::InvalidSpec("mode: expected expgap".into()));
    }
    generate(spec, 0)
}

/// Random uniform or exponential-gap network drawn from `rng`.
pub fn random_network<R: Rng>(spec: &GenSpec, rng: &mut R) -> Result<LinearNetwork> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::InvalidSpec(format!(
            "n: need at least 2 nodes, got {n}"
        )));
    }
    let positions = match spec.mode {
        GenMode::Uniform => uniform_positions(n, spec.length, rng)?,
        GenMode::Expgap => expgap_positions(n, spec.lambda, rng)?,
        _ => return Err(Error::InvalidSpec("mode: not a random family".into())),
    };
    let source = pick_source(spec.source_policy, n, rng)?;
    LinearNetwork::new(positions, source)
}

fn uniform_positions<R: Rng>(n: usize, length: f64, rng: &mut R) -> Result<Vec<f64>> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidSpec(format!(
            "length: must be positive, got {length}"
        )));
    }
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=length)).collect();
    loop {
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        if xs.len() == n {
            return Ok(xs);
        }
        // Coincident draws are replaced by fresh ones.
        while xs.len() < n {
            xs.push(rng.random_range(0.0..=length));
        }
    }
}

fn expgap_positions<R: Rng>(n: usize, lambda: f64, rng: &mut R) -> Result<Vec<f64>> {
    let exp = Exp::new(lambda)
        .ok()
        .filter(|_| lambda > 0.0 && lambda.is_finite())
        .ok_or_else(|| Error::InvalidSpec(format!("lambda: must be positive, got {lambda}")))?;
    let mut xs = Vec::with_capacity(n);
    xs.push(0.0);
    while xs.len() < n {
        let gap: f64 = exp.sample(rng);
        let next = xs[xs.len() - 1] + gap;
        if next > xs[xs.len() - 1] {
            xs.push(next);
        }
    }
    Ok(xs)
}

fn pick_source<R: Rng>(policy: SourcePolicy, n: usize, rng: &mut R) -> Result<usize> {
    match policy {
        SourcePolicy::Random if n < 3 => Err(Error::InvalidSpec(format!(
            "source: random interior source needs n >= 3, got {n}"
        ))),
        SourcePolicy::Random => Ok(rng.random_range(1..n - 1)),
        SourcePolicy::Center => Ok((n - 1) / 2),
        SourcePolicy::Fixed(s) if s < n => Ok(s),
        SourcePolicy::Fixed(s) => Err(Error::InvalidSpec(format!(
            "source: index {s} out of range for {n} nodes"
        ))),
    }
}

/// The two hand-built worst cases.
///
/// `adv_a`: `[0, r2, r2+eps1, r2+eps1+r1]`, source 1, requires
/// `r1 >= r2 + eps1 + eps2`.
///
/// `adv_b`: `[0, r2, r2+eps1, r2+eps1+eps2, r2+eps1+eps2+r1]`, source 2,
/// requires `r1 <= r2 + eps1 + eps2` and `r1 + eps1 >= r2 + eps2`.
pub fn adversarial_network(spec: &GenSpec) -> Result<LinearNetwork> {
    let (r1, r2, e1, e2) = (spec.r1, spec.r2, spec.eps1, spec.eps2());
    for (name, v) in [("r1", r1), ("r2", r2), ("eps1", e1), ("eps2", e2)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "{name}: must be positive, got {v}"
            )));
        }
    }
    match spec.mode {
        GenMode::AdvA => {
            if r1 < r2 + e1 + e2 {
                return Err(Error::InvalidSpec(format!(
                    "adv_a requires r1 >= r2 + eps1 + eps2 ({r1} < {})",
                    r2 + e1 + e2
                )));
            }
            LinearNetwork::new(vec![0.0, r2, r2 + e1, r2 + e1 + r1], 1)
        }
        GenMode::AdvB => {
            if r1 > r2 + e1 + e2 {
                return Err(Error::InvalidSpec(format!(
                    "adv_b requires r1 <= r2 + eps1 + eps2 ({r1} > {})",
                    r2 + e1 + e2
                )));
            }
            if r1 + e1 < r2 + e2 {
                return Err(Error::InvalidSpec(format!(
                    "adv_b requires r1 + eps1 >= r2 + eps2 ({} < {})",
                    r1 + e1,
                    r2 + e2
                )));
            }
            LinearNetwork::new(vec![0.0, r2, r2 + e1, r2 + e1 + e2, r2 + e1 + e2 + r1], 2)
        }
        _ => Err(Error::InvalidSpec("mode: expected adv_a or adv_b".into())),
    }
}
