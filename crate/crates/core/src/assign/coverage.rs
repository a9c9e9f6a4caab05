use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{LinearNetwork, SideMinima};

/// How far each node's mandatory transmission reaches past the source, and
/// the best such coverer on each side.
///
/// A left-side coverer index equal to the source means the source acting in
/// its left role (and vice versa on the right).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageAnalysis {
    /// `M(i) - d(s, i)` for nodes strictly between an end and the source;
    /// `None` at both ends and at the source itself.
    pub cov: Vec<Option<f64>>,
    pub cov_source_left: f64,
    pub cov_source_right: f64,
    pub m_left: usize,
    pub m_right: usize,
    /// Furthest node at or right of the source reached by `m_left`.
    pub l_right: usize,
    /// Furthest node at or left of the source reached by `m_right`.
    pub l_left: usize,
}

impl CoverageAnalysis {
    pub fn cov_of_left(&self, i: usize, source: usize) -> f64 {
        if i == source {
            self.cov_source_left
        } else {
            self.cov[i].expect("left coverer must be a left-side node")
        }
    }

    pub fn cov_of_right(&self, i: usize, source: usize) -> f64 {
        if i == source {
            self.cov_source_right
        } else {
            self.cov[i].expect("right coverer must be a right-side node")
        }
    }
}

pub fn opposite_coverage(net: &LinearNetwork, minima: &SideMinima) -> Result<CoverageAnalysis> {
    let n = net.len();
    let s = net.source();
    if !net.is_interior_source() {
        return Err(Error::EdgeSource { source_index: s });
    }

    let mut cov = vec![None; n];
    for (i, c) in cov.iter_mut().enumerate().take(n - 1).skip(1) {
        if i != s {
            *c = Some(minima.m[i] - net.d(s, i));
        }
    }
    let cov_source_left = minima.source_left;
    let cov_source_right = minima.source_right;

    // Scan outward from the source; strict improvement keeps ties nearest it.
    let mut m_left = s;
    let mut best = cov_source_left;
    for i in (1..s).rev() {
        let c = cov[i].unwrap();
        if c > best {
            best = c;
            m_left = i;
        }
    }
    let mut m_right = s;
    let mut best = cov_source_right;
    for (i, c) in cov.iter().enumerate().take(n - 1).skip(s + 1) {
        let c = c.unwrap();
        if c > best {
            best = c;
            m_right = i;
        }
    }

    // Reach is tested as d(coverer, j) <= M(coverer), the same comparison
    // the broadcast validator makes.
    let reach_left = minima.duty(m_left, s, crate::network::Side::Left);
    let l_right = (s..n)
        .take_while(|&j| net.d(m_left, j) <= reach_left)
        .last()
        .unwrap_or(s);
    let reach_right = minima.duty(m_right, s, crate::network::Side::Right);
    let l_left = (0..=s)
        .rev()
        .take_while(|&j| net.d(m_right, j) <= reach_right)
        .last()
        .unwrap_or(s);

    Ok(CoverageAnalysis {
        cov,
        cov_source_left,
        cov_source_right,
        m_left,
        m_right,
        l_right,
        l_left,
    })
}
