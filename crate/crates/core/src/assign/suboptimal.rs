use serde::Serialize;

use super::coverage::{opposite_coverage, CoverageAnalysis};
use crate::error::Result;
use crate::network::{
    assignment_cost, min_positive_ranges, LinearNetwork, PathLoss, RangeAssignment, Side,
    SideMinima,
};

/// Which opposite-side coverer the sub-optimal assignment relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `m_left` covers right-side nodes up to `l_right`.
    Right,
    /// `m_right` covers left-side nodes down to `l_left`.
    Left,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuboptimalResult {
    pub assignment: RangeAssignment,
    /// Energy of `assignment`, summed in node order.
    pub cost: f64,
    pub cost_right: f64,
    pub cost_left: f64,
    /// Cost of the plain local rule, where nobody is silenced.
    pub cost_star: f64,
    pub branch: Branch,
    /// Nodes that would relay under the local rule but stay silent here.
    pub silenced: Vec<usize>,
    pub coverage: CoverageAnalysis,
}

/// Linear-time assignment: every node transmits to its next adjacent
/// neighbor except the nodes already covered by the best opposite-side
/// coverer on one side of the source.
pub fn suboptimal_assign(net: &LinearNetwork, alpha: PathLoss) -> Result<SuboptimalResult> {
    let minima = min_positive_ranges(net);
    let coverage = opposite_coverage(net, &minima)?;
    Ok(suboptimal_from(net, &minima, coverage, alpha))
}

pub(crate) fn suboptimal_from(
    net: &LinearNetwork,
    minima: &SideMinima,
    coverage: CoverageAnalysis,
    alpha: PathLoss,
) -> SuboptimalResult {
    let n = net.len();
    let s = net.source();
    let e = |i: usize| alpha.energy(minima.m[i]);
    let e_left = alpha.energy(minima.source_left);
    let e_right = alpha.energy(minima.source_right);

    let left_all: f64 = (0..s).map(e).sum();
    let right_all: f64 = (s + 1..n).map(e).sum();
    let cost_star =
        alpha.energy(minima.source_left.max(minima.source_right)) + left_all + right_all;

    let (l_left, l_right) = (coverage.l_left, coverage.l_right);
    let cost_right = if l_right == s {
        cost_star
    } else {
        left_all + e_left + (l_right..n).map(e).sum::<f64>()
    };
    let cost_left = if l_left == s {
        cost_star
    } else {
        (0..=l_left).map(e).sum::<f64>() + e_right + right_all
    };

    let branch = if cost_right <= cost_left {
        Branch::Right
    } else {
        Branch::Left
    };

    let mut ranges = RangeAssignment::zeros(n);
    let mut silenced = Vec::new();
    for i in 0..s {
        ranges.set(i, minima.m[i]);
    }
    for i in s + 1..n {
        ranges.set(i, minima.m[i]);
    }
    match branch {
        Branch::Right => {
            ranges.raise(s, minima.duty(s, s, Side::Left));
            if l_right == s {
                ranges.raise(s, minima.source_right);
            }
            for i in s + 1..l_right {
                ranges.set(i, 0.0);
                silenced.push(i);
            }
        }
        Branch::Left => {
            ranges.raise(s, minima.duty(s, s, Side::Right));
            if l_left == s {
                ranges.raise(s, minima.source_left);
            }
            for i in l_left + 1..s {
                ranges.set(i, 0.0);
                silenced.push(i);
            }
        }
    }

    SuboptimalResult {
        cost: assignment_cost(&ranges, alpha),
        assignment: ranges,
        cost_right,
        cost_left,
        cost_star,
        branch,
        silenced,
        coverage,
    }
}
