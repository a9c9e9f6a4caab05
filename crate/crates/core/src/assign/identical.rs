use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::PathLoss;

/// Common radius that keeps exponential-gap networks connected with a
/// target probability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdenticalRange {
    /// `-ln(1 - pc^(1 / (lambda L - 1))) / lambda`
    pub exact: f64,
    /// `ln(-lambda L / ln pc) / lambda`
    pub approx: f64,
}

pub fn identical_range(pc: f64, lambda: f64, length: f64) -> Result<IdenticalRange> {
    if !(pc > 0.0 && pc < 1.0) {
        return Err(Error::domain("pc", format!("{pc} must lie in (0, 1)")));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain(
            "lambda",
            format!("{lambda} must be positive"),
        ));
    }
    let nodes = lambda * length;
    if !(nodes > 1.0 && nodes.is_finite()) {
        return Err(Error::domain(
            "length",
            format!("lambda * length = {nodes} must exceed 1"),
        ));
    }
    // 1 - pc^(1/k) computed as -expm1(ln(pc)/k) to keep precision near pc -> 1.
    let gap_ok = -(pc.ln() / (nodes - 1.0)).exp_m1();
    let exact = -gap_ok.ln() / lambda;
    let approx = (-nodes / pc.ln()).ln() / lambda;
    Ok(IdenticalRange { exact, approx })
}

/// Energy when all `n` nodes transmit at `radius`.
pub fn identical_range_cost(n: usize, radius: f64, alpha: PathLoss) -> f64 {
    n as f64 * alpha.energy(radius)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_point() {
        let r = identical_range(0.99, 0.03, 5000.0).unwrap();
        assert!((r.exact - 320.14).abs() < 0.01, "{}", r.exact);
        assert!((r.approx - 320.36).abs() < 0.01, "{}", r.approx);
    }

    #[test]
    fn increasing_in_pc() {
        let mut last = 0.0;
        for pc in [0.5, 0.85, 0.9, 0.99, 0.999, 0.999_999] {
            let r = identical_range(pc, 0.03, 5000.0).unwrap().exact;
            assert!(r > last);
            last = r;
        }
        assert!(last > 600.0);
    }

    #[test]
    fn domain_errors() {
        assert!(identical_range(1.0, 0.03, 5000.0).is_err());
        assert!(identical_range(0.0, 0.03, 5000.0).is_err());
        assert!(identical_range(0.9, 0.03, 20.0).is_err());
        assert!(identical_range(0.9, -1.0, 5000.0).is_err());
    }

    #[test]
    fn cost_counts_every_node() {
        assert_eq!(identical_range_cost(4, 3.0, PathLoss::default()), 36.0);
    }
}
