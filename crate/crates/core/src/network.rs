//! Problem instance, geometry and the shared broadcast validator.
//!
//! Indices are 0-based throughout. A node's *next adjacent neighbor* is its
//! immediate neighbor on the side away from the source.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Side of the source a node sits on, or the direction a message came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Nodes on a line with strictly increasing coordinates (meters) and one
/// broadcasting source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawNetwork")]
pub struct LinearNetwork {
    positions: Vec<f64>,
    source: usize,
}

#[derive(Deserialize)]
struct RawNetwork {
    positions: Vec<f64>,
    source: usize,
}

impl TryFrom<RawNetwork> for LinearNetwork {
    type Error = Error;

    fn try_from(raw: RawNetwork) -> Result<Self> {
        LinearNetwork::new(raw.positions, raw.source)
    }
}

impl LinearNetwork {
    pub fn new(positions: Vec<f64>, source: usize) -> Result<Self> {
        if positions.len() < 2 {
            return Err(Error::InvalidNetwork(format!(
                "positions: need at least 2 nodes, got {}",
                positions.len()
            )));
        }
        if let Some(i) = positions.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidNetwork(format!(
                "positions[{i}] is not a finite number"
            )));
        }
        if let Some(i) = positions.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InvalidNetwork(format!(
                "positions must be strictly increasing (positions[{}] = {} >= positions[{}] = {})",
                i,
                positions[i],
                i + 1,
                positions[i + 1]
            )));
        }
        if source >= positions.len() {
            return Err(Error::InvalidNetwork(format!(
                "source {} out of range for {} nodes",
                source,
                positions.len()
            )));
        }
        Ok(LinearNetwork { positions, source })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    /// Always false; a network holds at least two nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn last(&self) -> usize {
        self.positions.len() - 1
    }

    pub fn is_interior_source(&self) -> bool {
        self.source > 0 && self.source < self.last()
    }

    /// Distance between nodes `i` and `j`, checked.
    pub fn distance(&self, i: usize, j: usize) -> Result<f64> {
        let len = self.len();
        for index in [i, j] {
            if index >= len {
                return Err(Error::IndexOutOfBounds { index, len });
            }
        }
        Ok(self.d(i, j))
    }

    /// Distance between nodes `i` and `j`. Always computed as the larger
    /// coordinate minus the smaller so every caller sees identical bits.
    #[inline]
    pub(crate) fn d(&self, i: usize, j: usize) -> f64 {
        if i <= j {
            self.positions[j] - self.positions[i]
        } else {
            self.positions[i] - self.positions[j]
        }
    }

    /// Span of the node coordinates.
    pub fn span(&self) -> f64 {
        self.positions[self.last()] - self.positions[0]
    }

    /// Smallest and largest node index within `radius` of node `i`.
    pub(crate) fn reach(&self, i: usize, radius: f64) -> (usize, usize) {
        let x = self.positions[i];
        let lo = self.positions[..i].partition_point(|&xj| x - xj > radius);
        let hi = i + self.positions[i + 1..].partition_point(|&xj| xj - x <= radius);
        (lo, hi)
    }

    /// Mirror image: coordinates `x -> x_last - x`, indices reversed.
    pub fn reflected(&self) -> LinearNetwork {
        let far = self.positions[self.last()];
        let positions = self.positions.iter().rev().map(|x| far - x).collect();
        LinearNetwork {
            positions,
            source: self.last() - self.source,
        }
    }

    /// All coordinates multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<LinearNetwork> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::domain("factor", "scale factor must be positive"));
        }
        LinearNetwork::new(
            self.positions.iter().map(|x| x * factor).collect(),
            self.source,
        )
    }
}

/// Path-loss exponent alpha; energy of a radius `r` is `r^alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct PathLoss(f64);

impl PathLoss {
    pub const MIN: f64 = 2.0;
    pub const MAX: f64 = 6.0;

    pub fn new(alpha: f64) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&alpha) {
            Ok(PathLoss(alpha))
        } else {
            Err(Error::PathLoss(alpha))
        }
    }

    pub fn alpha(self) -> f64 {
        self.0
    }

    /// Integer exponent, when alpha is a whole number.
    pub fn integer(self) -> Option<u32> {
        (self.0.fract() == 0.0).then_some(self.0 as u32)
    }

    /// `r^alpha`, monotone in `r`.
    #[inline]
    pub fn energy(self, r: f64) -> f64 {
        match self.integer() {
            Some(k) => r.powi(k as i32),
            None => r.powf(self.0),
        }
    }
}

impl TryFrom<f64> for PathLoss {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        PathLoss::new(alpha)
    }
}

impl From<PathLoss> for f64 {
    fn from(p: PathLoss) -> f64 {
        p.0
    }
}

impl Default for PathLoss {
    fn default() -> Self {
        PathLoss(2.0)
    }
}

/// One non-negative transmission radius per node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct RangeAssignment(Vec<f64>);

impl RangeAssignment {
    pub fn new(ranges: Vec<f64>) -> Result<Self> {
        if let Some(i) = ranges.iter().position(|r| !(r.is_finite() && *r >= 0.0)) {
            return Err(Error::InvalidAssignment(format!(
                "ranges[{i}] = {} must be finite and non-negative",
                ranges[i]
            )));
        }
        Ok(RangeAssignment(ranges))
    }

    pub fn zeros(n: usize) -> Self {
        RangeAssignment(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ranges(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Raise node `i`'s radius to at least `r`. A node holding several
    /// duties transmits once, at the largest of them.
    pub(crate) fn raise(&mut self, i: usize, r: f64) {
        if r > self.0[i] {
            self.0[i] = r;
        }
    }

    pub(crate) fn set(&mut self, i: usize, r: f64) {
        self.0[i] = r;
    }
}

impl std::ops::Index<usize> for RangeAssignment {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for RangeAssignment {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        RangeAssignment::new(v)
    }
}

impl From<RangeAssignment> for Vec<f64> {
    fn from(r: RangeAssignment) -> Vec<f64> {
        r.0
    }
}

/// Minimum positive range of every node: the gap to its next adjacent
/// neighbor. The source keeps one value per side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideMinima {
    /// Per-node minimum; the entry at the source index is unused (0).
    pub m: Vec<f64>,
    pub source_left: f64,
    pub source_right: f64,
}

impl SideMinima {
    /// Minimum range of a node acting on `side`; only the source has two.
    pub fn duty(&self, node: usize, source: usize, side: Side) -> f64 {
        if node == source {
            match side {
                Side::Left => self.source_left,
                Side::Right => self.source_right,
            }
        } else {
            self.m[node]
        }
    }

    /// The largest single-radius floor of `node`.
    pub fn floor(&self, node: usize, source: usize) -> f64 {
        if node == source {
            self.source_left.max(self.source_right)
        } else {
            self.m[node]
        }
    }
}

pub fn min_positive_ranges(net: &LinearNetwork) -> SideMinima {
    let n = net.len();
    let s = net.source;
    let mut m = vec![0.0; n];
    for (i, slot) in m.iter_mut().enumerate().take(n - 1).skip(1) {
        if i < s {
            *slot = net.d(i, i - 1);
        } else if i > s {
            *slot = net.d(i, i + 1);
        }
    }
    SideMinima {
        m,
        source_left: if s > 0 { net.d(s, s - 1) } else { 0.0 },
        source_right: if s < n - 1 { net.d(s, s + 1) } else { 0.0 },
    }
}

/// Total energy `sum_k R(k)^alpha`, summed in index order.
pub fn assignment_cost(ranges: &RangeAssignment, alpha: PathLoss) -> f64 {
    ranges.0.iter().map(|&r| alpha.energy(r)).sum()
}

/// Outcome of propagating a broadcast through a range assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageResult {
    pub informed: Vec<bool>,
    /// Synchronous propagation sweeps that informed at least one new node.
    pub rounds: usize,
}

impl CoverageResult {
    pub fn all_informed(&self) -> bool {
        self.informed.iter().all(|&b| b)
    }

    pub fn informed_count(&self) -> usize {
        self.informed.iter().filter(|&&b| b).count()
    }
}

/// Fixed-point broadcast propagation. Node `j` hears node `i` when
/// `d(i, j) <= R(i)`; comparisons are exact.
pub fn validate_broadcast(net: &LinearNetwork, ranges: &RangeAssignment) -> CoverageResult {
    let n = net.len();
    assert_eq!(ranges.len(), n, "assignment length must match network size");
    let mut informed = vec![false; n];
    informed[net.source] = true;
    let mut rounds = 0;
    loop {
        let mut next = informed.clone();
        for i in (0..n).filter(|&i| informed[i] && ranges[i] > 0.0) {
            let (lo, hi) = net.reach(i, ranges[i]);
            next[lo..=hi].iter_mut().for_each(|b| *b = true);
        }
        if next == informed {
            break;
        }
        informed = next;
        rounds += 1;
    }
    CoverageResult { informed, rounds }
}

/// Optimal assignment when the source is an end node: every node relays to
/// its next adjacent neighbor, the far end stays silent.
pub fn edge_source_assignment(net: &LinearNetwork) -> Result<RangeAssignment> {
    let n = net.len();
    let s = net.source;
    let mut ranges = vec![0.0; n];
    if s == 0 {
        for (i, r) in ranges.iter_mut().enumerate().take(n - 1) {
            *r = net.d(i, i + 1);
        }
    } else if s == n - 1 {
        for (i, r) in ranges.iter_mut().enumerate().skip(1) {
            *r = net.d(i, i - 1);
        }
    } else {
        return Err(Error::InteriorSource { source_index: s });
    }
    Ok(RangeAssignment(ranges))
}
