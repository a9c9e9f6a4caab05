use linebcast_core::topogen::{
    adversarial_network, generate, trial_rng, GenMode, GenSpec, SourcePolicy,
};
use linebcast_core::{expected_distributed_cost, PathLoss};
use rand::Rng;

fn gaps(xs: &[f64]) -> Vec<f64> {
    xs.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Two-sided Kolmogorov–Smirnov statistic against `exp(rate)`.
fn ks_exponential(mut sample: Vec<f64>, rate: f64) -> f64 {
    sample.sort_by(f64::total_cmp);
    let m = sample.len() as f64;
    sample
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let f = -(-rate * x).exp_m1();
            let lo = f - k as f64 / m;
            let hi = (k + 1) as f64 / m - f;
            lo.max(hi)
        })
        .fold(0.0, f64::max)
}

#[test]
fn uniform_gaps_look_exponential() {
    let n = 100_001;
    let length = 1e5;
    let net = generate(&GenSpec::uniform(n, length, 11), 0).unwrap();
    let g = gaps(net.positions());
    assert_eq!(g.len(), 100_000);
    let d = ks_exponential(g, n as f64 / length);
    // 1% critical value for large samples.
    let crit = 1.628 / (100_000f64).sqrt();
    assert!(d < crit, "KS statistic {d} >= {crit}");
}

#[test]
fn expgap_moments() {
    let lambda = 0.1;
    let net = generate(&GenSpec::expgap(100_001, lambda, 5), 0).unwrap();
    let g = gaps(net.positions());
    let m = g.len() as f64;
    let mean = g.iter().sum::<f64>() / m;
    let second = g.iter().map(|x| x * x).sum::<f64>() / m;
    // Mean sd is (1/lambda)/sqrt(m); allow about 5 of them.
    assert!((mean - 10.0).abs() < 0.16, "mean {mean}");
    assert!(
        (second - 200.0).abs() / 200.0 < 0.03,
        "second moment {second}"
    );
    assert_eq!(net.positions()[0], 0.0);
}

#[test]
fn max_of_two_gaps_second_moment() {
    // max(D1, D2) = A + B with A ~ exp(2 lambda), B ~ exp(lambda), so
    // E[max^2] = 1/(2 lambda^2) + 1/lambda^2 + 2/lambda^2 = 3.5 / lambda^2.
    let lambda = 0.1;
    let spec = GenSpec::expgap(3, lambda, 9).with_source(SourcePolicy::Fixed(1));
    let trials = 200_000u64;
    let sum: f64 = (0..trials)
        .map(|t| {
            let net = generate(&spec, t).unwrap();
            let g = gaps(net.positions());
            g[0].max(g[1]).powi(2)
        })
        .sum();
    let mc = sum / trials as f64;
    assert!((mc - 350.0).abs() / 350.0 < 0.02, "{mc}");
}

#[test]
fn expected_cost_decomposes() {
    // Interior source pays E[max^2]; each of the n - 3 other relays pays E[D^2].
    for (n, lambda) in [(3usize, 0.1), (10, 0.1), (150, 0.03), (40, 2.0)] {
        let by_parts = 3.5 / (lambda * lambda) + (n - 3) as f64 * 2.0 / (lambda * lambda);
        let closed = expected_distributed_cost(n, lambda, PathLoss::default()).unwrap();
        assert!(
            (closed - by_parts).abs() <= 1e-9 * by_parts,
            "{n}: {closed} vs {by_parts}"
        );
    }
    let c3 = expected_distributed_cost(10, 0.5, PathLoss::new(3.0).unwrap()).unwrap();
    // alpha = 3: E[D^3] = 6 / lambda^3; E[max^3] = 6/lambda^3 * (2 - 2^-3).
    let by_parts = 6.0 / 0.125 * (7.0 + 2.0 - 0.125);
    assert!((c3 - by_parts).abs() < 1e-9 * by_parts);
}

#[test]
fn same_seed_same_network() {
    for spec in [GenSpec::uniform(50, 1000.0, 3), GenSpec::expgap(50, 0.2, 3)] {
        for t in [0, 1, 77] {
            assert_eq!(generate(&spec, t).unwrap(), generate(&spec, t).unwrap());
        }
        assert_ne!(generate(&spec, 0).unwrap(), generate(&spec, 1).unwrap());
    }
}

#[test]
fn stream_layout_is_stable() {
    // Pins the generator: ChaCha8, seed_from_u64, stream = trial.
    let mut a = trial_rng(42, 7);
    let mut b = trial_rng(42, 7);
    let x: u64 = a.random();
    assert_eq!(x, b.random::<u64>());
    let net = generate(&GenSpec::uniform(4, 10.0, 42), 7).unwrap();
    let again = generate(&GenSpec::uniform(4, 10.0, 42), 7).unwrap();
    assert_eq!(net.positions(), again.positions());
}

#[test]
fn random_sources_are_interior_and_spread() {
    let spec = GenSpec::uniform(6, 100.0, 1);
    let mut seen = [0usize; 6];
    for t in 0..2000 {
        let net = generate(&spec, t).unwrap();
        assert!(net.positions().windows(2).all(|w| w[0] < w[1]));
        assert!(net.positions().iter().all(|&x| (0.0..=100.0).contains(&x)));
        seen[net.source()] += 1;
    }
    assert_eq!(seen[0], 0);
    assert_eq!(seen[5], 0);
    for &c in &seen[1..5] {
        assert!((400..=600).contains(&c), "{seen:?}");
    }
}

#[test]
fn source_policies() {
    let center = generate(
        &GenSpec::uniform(7, 10.0, 0).with_source(SourcePolicy::Center),
        0,
    )
    .unwrap();
    assert_eq!(center.source(), 3);
    let fixed = generate(
        &GenSpec::uniform(7, 10.0, 0).with_source(SourcePolicy::Fixed(0)),
        0,
    )
    .unwrap();
    assert_eq!(fixed.source(), 0);
    assert!(generate(
        &GenSpec::uniform(7, 10.0, 0).with_source(SourcePolicy::Fixed(7)),
        0
    )
    .is_err());
    assert!(generate(&GenSpec::uniform(2, 10.0, 0), 0).is_err());
}

#[test]
fn adversarial_layouts() {
    let a = adversarial_network(&GenSpec::adv_a(102.0, 100.0, 1.0)).unwrap();
    assert_eq!(a.positions(), &[0.0, 100.0, 101.0, 203.0]);
    assert_eq!(a.source(), 1);
    let b = adversarial_network(&GenSpec::adv_b(101.0, 100.0, 1.0, 1.0)).unwrap();
    assert_eq!(b.positions(), &[0.0, 100.0, 101.0, 102.0, 203.0]);
    assert_eq!(b.source(), 2);

    let e = adversarial_network(&GenSpec::adv_a(101.0, 100.0, 1.0)).unwrap_err();
    assert!(e.to_string().contains("r1 >= r2 + eps1 + eps2"), "{e}");
    let e = adversarial_network(&GenSpec::adv_b(103.0, 100.0, 1.0, 1.0)).unwrap_err();
    assert!(e.to_string().contains("r1 <= r2 + eps1 + eps2"), "{e}");
    let e = adversarial_network(&GenSpec::adv_b(100.0, 100.0, 1.0, 2.0)).unwrap_err();
    assert!(e.to_string().contains("r1 + eps1 >= r2 + eps2"), "{e}");
    assert!(adversarial_network(&GenSpec::uniform(5, 1.0, 0)).is_err());
    assert_eq!("adv-b".parse::<GenMode>().unwrap(), GenMode::AdvB);
}
