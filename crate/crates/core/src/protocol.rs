//! Round-based simulation of the local relay rule.
//!
//! A node knows only the gaps to its two adjacent neighbors. It waits until
//! it hears an adjacent neighbor, then transmits once, far enough to reach
//! the neighbor on the other side. The source transmits first, far enough
//! to reach both neighbors. Transmissions in round `k` see only the state
//! left by round `k - 1`.

use serde::Serialize;

use crate::network::{LinearNetwork, RangeAssignment, Side};

/// Everything a node knows and decides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeState {
    pub informed: bool,
    pub transmitted: bool,
    /// Gap to the left neighbor; `None` at the left end.
    pub known_left_gap: Option<f64>,
    /// Gap to the right neighbor; `None` at the right end.
    pub known_right_gap: Option<f64>,
    pub chosen_range: f64,
}

impl NodeState {
    fn new(known_left_gap: Option<f64>, known_right_gap: Option<f64>) -> Self {
        NodeState {
            informed: false,
            transmitted: false,
            known_left_gap,
            known_right_gap,
            chosen_range: 0.0,
        }
    }

    fn gap(&self, side: Side) -> Option<f64> {
        match side {
            Side::Left => self.known_left_gap,
            Side::Right => self.known_right_gap,
        }
    }

    /// Range the node transmits at when triggered by its adjacent neighbor
    /// on `heard_from`, or by being the source (`None`). Returns `None` when
    /// it stays silent.
    pub fn decide(&self, heard_from: Option<Side>) -> Option<f64> {
        if self.transmitted {
            return None;
        }
        match heard_from {
            None => {
                let r = self
                    .known_left_gap
                    .unwrap_or(0.0)
                    .max(self.known_right_gap.unwrap_or(0.0));
                Some(r)
            }
            Some(side) => self.gap(side.opposite()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Transmission {
    pub node: usize,
    pub range: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProtocolTrace {
    /// Transmissions of each round, in node order.
    pub rounds: Vec<Vec<Transmission>>,
    pub assignment: RangeAssignment,
    pub informed: Vec<bool>,
}

impl ProtocolTrace {
    pub fn total_rounds(&self) -> usize {
        self.rounds.len()
    }
}

/// Run the local relay rule to completion.
///
/// # Panics
///
/// If some node is never informed, which the rule rules out on any valid
/// network.
pub fn run_protocol(net: &LinearNetwork) -> ProtocolTrace {
    let n = net.len();
    let last = n - 1;
    let mut nodes: Vec<NodeState> = (0..n)
        .map(|i| {
            NodeState::new(
                (i > 0).then(|| net.d(i, i - 1)),
                (i < last).then(|| net.d(i, i + 1)),
            )
        })
        .collect();
    nodes[net.source()].informed = true;

    let mut triggers: Vec<(usize, Option<Side>)> = vec![(net.source(), None)];
    let mut rounds = Vec::new();
    while !triggers.is_empty() {
        let mut sent = Vec::new();
        for &(i, from) in &triggers {
            if let Some(range) = nodes[i].decide(from) {
                nodes[i].transmitted = true;
                nodes[i].chosen_range = range;
                sent.push(Transmission { node: i, range });
            }
        }
        if sent.is_empty() {
            break;
        }

        let mut next = Vec::new();
        for t in &sent {
            let (lo, hi) = net.reach(t.node, t.range);
            for node in &mut nodes[lo..=hi] {
                node.informed = true;
            }
            if t.node > 0 && lo < t.node && !nodes[t.node - 1].transmitted {
                next.push((t.node - 1, Some(Side::Right)));
            }
            if t.node < last && hi > t.node && !nodes[t.node + 1].transmitted {
                next.push((t.node + 1, Some(Side::Left)));
            }
        }
        next.sort_by_key(|&(i, _)| i);
        next.dedup_by_key(|&mut (i, _)| i);
        rounds.push(sent);
        triggers = next;
    }

    let informed: Vec<bool> = nodes.iter().map(|s| s.informed).collect();
    assert!(
        informed.iter().all(|&b| b),
        "local relay rule left nodes uninformed"
    );
    let assignment = RangeAssignment::new(nodes.iter().map(|s| s.chosen_range).collect())
        .expect("gaps are non-negative");
    ProtocolTrace {
        rounds,
        assignment,
        informed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assign::distributed_assign;

    fn tx(node: usize, range: f64) -> Transmission {
        Transmission { node, range }
    }

    #[test]
    fn five_node_trace() {
        let net = LinearNetwork::new(vec![0.0, 1.0, 3.0, 4.0, 7.0], 2).unwrap();
        let t = run_protocol(&net);
        assert_eq!(
            t.rounds,
            vec![vec![tx(2, 2.0)], vec![tx(1, 1.0), tx(3, 3.0)]]
        );
        assert_eq!(t.assignment.ranges(), &[0.0, 1.0, 2.0, 3.0, 0.0]);
    }

    #[test]
    fn two_node() {
        let net = LinearNetwork::new(vec![0.0, 5.0], 0).unwrap();
        let t = run_protocol(&net);
        assert_eq!(t.total_rounds(), 1);
        assert_eq!(t.assignment.ranges(), &[5.0, 0.0]);
    }

    #[test]
    fn unit_chain_from_edge() {
        let net = LinearNetwork::new((0..10).map(f64::from).collect(), 0).unwrap();
        let t = run_protocol(&net);
        assert_eq!(t.total_rounds(), 9);
        assert_eq!(&t.assignment.ranges()[..9], &[1.0; 9]);
        assert_eq!(t.assignment[9], 0.0);
    }

    #[test]
    fn long_source_reach_still_relays_hop_by_hop() {
        // The source's 7 m transmission reaches nodes 0..=2 at once, but
        // node 1 and node 2 only relay after hearing an adjacent neighbor.
        let net = LinearNetwork::new(vec![0.0, 1.0, 2.0, 3.0, 10.0, 11.0], 3).unwrap();
        let t = run_protocol(&net);
        assert_eq!(t.total_rounds(), 3);
        assert_eq!(t.assignment, distributed_assign(&net));
    }

    #[test]
    fn decisions_use_only_local_gaps() {
        let state = NodeState::new(Some(2.0), Some(5.0));
        assert_eq!(state.decide(Some(Side::Left)), Some(5.0));
        assert_eq!(state.decide(Some(Side::Right)), Some(2.0));
        assert_eq!(state.decide(None), Some(5.0));
        let end = NodeState::new(Some(2.0), None);
        assert_eq!(end.decide(Some(Side::Left)), None);
    }
}
