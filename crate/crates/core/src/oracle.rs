//! Exhaustive minimum-energy search for small networks.
//!
//! Every node's radius is drawn from `{0} ∪ {d(i, j) : j != i}`: an optimal
//! radius can always be shrunk to the distance of the furthest node it must
//! reach. The full `N`-fold product of those sets is enumerated and
//! filtered by broadcast feasibility.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{assignment_cost, LinearNetwork, PathLoss, RangeAssignment};

/// Hard ceiling on `max_n`; the search space grows as `N^N`.
pub const ORACLE_HARD_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub max_n: usize,
    pub alpha: PathLoss,
}

impl OracleConfig {
    pub fn new(max_n: usize, alpha: PathLoss) -> Result<Self> {
        if max_n > ORACLE_HARD_CAP {
            return Err(Error::domain(
                "max_n",
                format!("{max_n} exceeds the enumeration cap of {ORACLE_HARD_CAP}"),
            ));
        }
        Ok(OracleConfig { max_n, alpha })
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: 8,
            alpha: PathLoss::default(),
        }
    }
}

struct Candidates {
    radius: Vec<f64>,
    energy: Vec<f64>,
    /// Bitmask of nodes within `radius` of the owning node.
    cover: Vec<u32>,
}

fn candidates(net: &LinearNetwork, i: usize, alpha: PathLoss) -> Candidates {
    let n = net.len();
    let mut radius: Vec<f64> = std::iter::once(0.0)
        .chain((0..n).filter(|&j| j != i).map(|j| net.d(i, j)))
        .collect();
    radius.sort_by(f64::total_cmp);
    radius.dedup();
    let energy = radius.iter().map(|&r| alpha.energy(r)).collect();
    let cover = radius
        .iter()
        .map(|&r| {
            (0..n)
                .filter(|&j| r > 0.0 && net.d(i, j) <= r)
                .fold(1u32 << i, |m, j| m | (1 << j))
        })
        .collect();
    Candidates {
        radius,
        energy,
        cover,
    }
}

fn feasible(choice: &[usize], cands: &[Candidates], source: usize, full: u32) -> bool {
    let mut informed = 1u32 << source;
    loop {
        let mut next = informed;
        let mut bits = informed;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= cands[i].cover[choice[i]];
        }
        if next == full {
            return true;
        }
        if next == informed {
            return false;
        }
        informed = next;
    }
}

fn lexicographic(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Minimum-cost feasible assignment. Cost ties (relative 1e-12) resolve to
/// the lexicographically smallest range vector.
pub fn brute_force_optimal(
    net: &LinearNetwork,
    cfg: &OracleConfig,
) -> Result<(RangeAssignment, f64)> {
    let n = net.len();
    if n > cfg.max_n || n > ORACLE_HARD_CAP {
        return Err(Error::OracleCap {
            n,
            cap: cfg.max_n.min(ORACLE_HARD_CAP),
        });
    }
    let cands: Vec<Candidates> = (0..n).map(|i| candidates(net, i, cfg.alpha)).collect();
    let full = (1u32 << n) - 1;
    let tie = |c: f64| 1e-12 * c.abs();

    let mut choice = vec![0usize; n];
    let mut best: Option<(f64, Vec<f64>)> = None;
    'odometer: loop {
        let cost: f64 = choice.iter().zip(&cands).map(|(&k, c)| c.energy[k]).sum();
        let worth = match &best {
            None => true,
            Some((b, _)) => cost <= *b + tie(*b),
        };
        if worth && feasible(&choice, &cands, net.source(), full) {
            let ranges: Vec<f64> = choice
                .iter()
                .zip(&cands)
                .map(|(&k, c)| c.radius[k])
                .collect();
            let better = match &best {
                None => true,
                Some((b, r)) => {
                    cost < *b - tie(*b)
                        || (cost <= *b + tie(*b) && lexicographic(&ranges, r).is_lt())
                }
            };
            if better {
                best = Some((cost, ranges));
            }
        }

        for i in 0..n {
            choice[i] += 1;
            if choice[i] < cands[i].radius.len() {
                continue 'odometer;
            }
            choice[i] = 0;
        }
        break;
    }

    let (_, ranges) = best.expect("the all-relay assignment is always feasible");
    let ranges = RangeAssignment::new(ranges)?;
    let cost = assignment_cost(&ranges, cfg.alpha);
    Ok((ranges, cost))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::validate_broadcast;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn five_node() {
        let net = LinearNetwork::new(vec![0.0, 1.0, 3.0, 4.0, 7.0], 2).unwrap();
        let (r, c) = brute_force_optimal(&net, &cfg()).unwrap();
        assert_eq!(c, 11.0);
        assert!(validate_broadcast(&net, &r).all_informed());
    }

    #[test]
    fn two_node() {
        let net = LinearNetwork::new(vec![0.0, 5.0], 0).unwrap();
        let (r, c) = brute_force_optimal(&net, &cfg()).unwrap();
        assert_eq!(r.ranges(), &[5.0, 0.0]);
        assert_eq!(c, 25.0);
    }

    #[test]
    fn adversarial_b() {
        let net = LinearNetwork::new(vec![0.0, 100.0, 101.0, 102.0, 203.0], 2).unwrap();
        let (r, c) = brute_force_optimal(&net, &cfg()).unwrap();
        assert_eq!(c, 10404.0);
        assert_eq!(r.ranges(), &[0.0, 0.0, 102.0, 0.0, 0.0]);
    }

    #[test]
    fn unit_chain() {
        let net = LinearNetwork::new(vec![0.0, 1.0, 2.0, 3.0, 4.0], 2).unwrap();
        let (r, c) = brute_force_optimal(&net, &cfg()).unwrap();
        assert_eq!(c, 3.0);
        assert_eq!(r.ranges(), &[0.0, 1.0, 1.0, 1.0, 0.0]);
    }

    #[test]
    fn ties_pick_lexicographic_minimum() {
        // (0,0,3,0,0) and (0,1,2,2,0) both cost 9.
        let net = LinearNetwork::new(vec![0.0, 1.0, 3.0, 4.0, 6.0], 2).unwrap();
        let (r, c) = brute_force_optimal(&net, &cfg()).unwrap();
        assert_eq!(c, 9.0);
        assert_eq!(r.ranges(), &[0.0, 0.0, 3.0, 0.0, 0.0]);
    }

    #[test]
    fn cap_enforced() {
        let net = LinearNetwork::new((0..9).map(f64::from).collect(), 4).unwrap();
        assert!(matches!(
            brute_force_optimal(&net, &cfg()),
            Err(Error::OracleCap { n: 9, cap: 8 })
        ));
        assert!(OracleConfig::new(11, PathLoss::default()).is_err());
    }
}
