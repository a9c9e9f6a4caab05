use crate::error::{Error, Result};
use crate::network::{min_positive_ranges, LinearNetwork, PathLoss, RangeAssignment};

/// Local rule: each node relays to its next adjacent neighbor; the source
/// covers both of its neighbors with one transmission.
pub fn distributed_assign(net: &LinearNetwork) -> RangeAssignment {
    let minima = min_positive_ranges(net);
    let mut ranges = RangeAssignment::new(minima.m).expect("gaps are non-negative");
    ranges.set(net.source(), minima.source_left.max(minima.source_right));
    ranges
}

/// Expected energy of the local rule when the `n - 1` gaps are i.i.d.
/// `exp(lambda)` and the source is interior:
/// `alpha! / lambda^alpha * (n - 1 - 2^-alpha)`.
pub fn expected_distributed_cost(n: usize, lambda: f64, alpha: PathLoss) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(
            "n",
            "needs at least 3 nodes (interior source)",
        ));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain("lambda", "density must be positive"));
    }
    let k = alpha
        .integer()
        .ok_or_else(|| Error::domain("alpha", format!("{} is not an integer", alpha.alpha())))?;
    let factorial: f64 = (1..=k).map(f64::from).product();
    Ok(factorial / lambda.powi(k as i32) * (n as f64 - 1.0 - 0.5f64.powi(k as i32)))
}
