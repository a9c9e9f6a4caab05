mod common;

use common::*;
use linebcast_core::protocol::NodeState;
use linebcast_core::topogen::{generate, GenSpec, SourcePolicy};
use linebcast_core::{distributed_assign, run_protocol, validate_broadcast, Side};
use proptest::prelude::*;

fn expected_rounds(n: usize, s: usize) -> usize {
    s.max(n - 1 - s)
}

proptest! {
    #[test]
    fn emergent_assignment_is_the_local_rule(net in interior_net(3..=60)) {
        let t = run_protocol(&net);
        prop_assert_eq!(&t.assignment, &distributed_assign(&net));
        prop_assert_eq!(t.total_rounds(), expected_rounds(net.len(), net.source()));
        prop_assert!(t.informed.iter().all(|&b| b));
        prop_assert!(validate_broadcast(&net, &t.assignment).all_informed());
        let mut sent: Vec<usize> = t.rounds.iter().flatten().map(|x| x.node).collect();
        let total = sent.len();
        sent.sort();
        sent.dedup();
        prop_assert_eq!(sent.len(), total, "a node transmitted twice");
    }

    #[test]
    fn edge_sources_finish_too(gaps in prop::collection::vec(0.1f64..10.0, 1..30), right in any::<bool>()) {
        let s = if right { gaps.len() } else { 0 };
        let net = net_from_gaps(0.0, &gaps, s);
        let t = run_protocol(&net);
        prop_assert_eq!(&t.assignment, &distributed_assign(&net));
        prop_assert_eq!(t.total_rounds(), gaps.len());
    }

    #[test]
    fn decisions_ignore_non_adjacent_geometry(
        gaps in prop::collection::vec(1u32..400, 4..20),
        stretch in prop::collection::vec(1u32..400, 20),
        pick in any::<prop::sample::Index>(),
        src in any::<prop::sample::Index>(),
    ) {
        // Eighths keep every coordinate sum exact.
        let gaps: Vec<f64> = gaps.into_iter().map(|g| f64::from(g) / 8.0).collect();
        let n = gaps.len() + 1;
        let s = 1 + src.index(n - 2);
        let i = pick.index(n);
        // Replace every gap except the two touching node `i`.
        let warped: Vec<f64> = gaps
            .iter()
            .enumerate()
            .map(|(k, &g)| if k + 1 == i || k == i { g } else { f64::from(stretch[k]) / 8.0 })
            .collect();
        let a = run_protocol(&net_from_gaps(0.0, &gaps, s));
        let b = run_protocol(&net_from_gaps(0.0, &warped, s));
        prop_assert_eq!(a.assignment[i], b.assignment[i]);
        let round_of = |t: &linebcast_core::ProtocolTrace| {
            t.rounds.iter().position(|r| r.iter().any(|x| x.node == i))
        };
        prop_assert_eq!(round_of(&a), round_of(&b));
    }
}

#[test]
fn decide_uses_only_local_gaps() {
    let node = NodeState {
        informed: true,
        transmitted: false,
        known_left_gap: Some(2.0),
        known_right_gap: Some(5.0),
        chosen_range: 0.0,
    };
    assert_eq!(node.decide(None), Some(5.0));
    assert_eq!(node.decide(Some(Side::Left)), Some(5.0));
    assert_eq!(node.decide(Some(Side::Right)), Some(2.0));
    let end = NodeState {
        known_right_gap: None,
        ..node.clone()
    };
    assert_eq!(end.decide(Some(Side::Left)), None);
    let done = NodeState {
        transmitted: true,
        ..node
    };
    assert_eq!(done.decide(Some(Side::Left)), None);
}

#[test]
fn thousand_generated_networks() {
    for (k, spec) in [
        GenSpec::uniform(150, 5000.0, 2024),
        GenSpec::expgap(40, 0.1, 2024),
        GenSpec::uniform(12, 100.0, 7).with_source(SourcePolicy::Center),
    ]
    .iter()
    .enumerate()
    {
        for t in 0..400 {
            let net = generate(spec, t).unwrap();
            let tr = run_protocol(&net);
            assert_eq!(
                tr.assignment,
                distributed_assign(&net),
                "family {k} trial {t}"
            );
            assert_eq!(tr.total_rounds(), expected_rounds(net.len(), net.source()));
        }
    }
}
