#![allow(dead_code)]

use linebcast_core::{
    assignment_cost, validate_broadcast, LinearNetwork, PathLoss, RangeAssignment,
};
use proptest::prelude::*;

/// Networks with `n` in `n_range`, positive gaps and an interior source.
pub fn interior_net(
    n_range: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = LinearNetwork> {
    n_range
        .prop_flat_map(|n| {
            (
                prop::collection::vec(0.05f64..20.0, n - 1),
                1..n - 1,
                -50.0f64..50.0,
            )
        })
        .prop_map(|(gaps, s, start)| net_from_gaps(start, &gaps, s))
}

/// Integer coordinates, so every distance and every mirrored distance is
/// exact.
pub fn integer_net(
    n_range: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = LinearNetwork> {
    n_range
        .prop_flat_map(|n| (prop::collection::vec(1u32..40, n - 1), 1..n - 1))
        .prop_map(|(gaps, s)| {
            let gaps: Vec<f64> = gaps.into_iter().map(f64::from).collect();
            net_from_gaps(0.0, &gaps, s)
        })
}

pub fn net_from_gaps(start: f64, gaps: &[f64], source: usize) -> LinearNetwork {
    let mut xs = vec![start];
    for g in gaps {
        let next = xs[xs.len() - 1] + g;
        xs.push(next);
    }
    LinearNetwork::new(xs, source).unwrap()
}

pub fn alpha_strategy() -> impl Strategy<Value = PathLoss> {
    prop_oneof![Just(2.0), Just(3.0), Just(4.0), 2.0f64..6.0]
        .prop_map(|a| PathLoss::new(a).unwrap())
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Every optimal assignment over the candidate radii `{0} ∪ {d(i, j)}`,
/// found by plain enumeration through the public validator. Returns the
/// minimum cost and every range vector attaining it (relative 1e-12).
pub fn all_optima(net: &LinearNetwork, alpha: PathLoss) -> (f64, Vec<Vec<f64>>) {
    let n = net.len();
    let cands: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut c: Vec<f64> = std::iter::once(0.0)
                .chain(
                    (0..n)
                        .filter(|&j| j != i)
                        .map(|j| net.distance(i, j).unwrap()),
                )
                .collect();
            c.sort_by(f64::total_cmp);
            c.dedup();
            c
        })
        .collect();
    enumerate(net, alpha, &cands)
}

/// Minimum feasible cost over the product of `cands`, with all attaining
/// vectors.
pub fn enumerate(net: &LinearNetwork, alpha: PathLoss, cands: &[Vec<f64>]) -> (f64, Vec<Vec<f64>>) {
    let n = net.len();
    let mut idx = vec![0usize; n];
    let mut best = f64::INFINITY;
    let mut winners: Vec<Vec<f64>> = Vec::new();
    loop {
        let r: Vec<f64> = idx.iter().zip(cands).map(|(&k, c)| c[k]).collect();
        let ra = RangeAssignment::new(r.clone()).unwrap();
        let cost = assignment_cost(&ra, alpha);
        if cost <= best * (1.0 + 1e-12) && validate_broadcast(net, &ra).all_informed() {
            if cost < best * (1.0 - 1e-12) {
                winners.clear();
            }
            best = best.min(cost);
            winners.push(r);
        }
        let mut k = 0;
        loop {
            if k == n {
                return (best, winners);
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Mirror of a range vector (node `i` becomes node `n - 1 - i`).
pub fn mirrored(r: &[f64]) -> Vec<f64> {
    r.iter().rev().copied().collect()
}

/// True when all pairwise distances are distinct.
pub fn distinct_distances(net: &LinearNetwork) -> bool {
    let n = net.len();
    let mut d: Vec<f64> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| net.distance(i, j).unwrap())
        .collect();
    d.sort_by(f64::total_cmp);
    d.windows(2).all(|w| w[0] != w[1])
}
