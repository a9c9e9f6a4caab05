//! Minimum-energy broadcast range assignment for wireless nodes on a line.
//!
//! A source must reach every node; a node transmitting at radius `r` reaches
//! every node within `r` and spends `r^alpha`. The crate provides
//!
//! * the problem model and a broadcast validator ([`network`]),
//! * the optimal `O(N^2)` search, a linear-time approximation, the local
//!   neighbor-gap rule and the identical-range baseline ([`assign`]),
//! * an exhaustive oracle for small networks ([`oracle`]),
//! * seeded network generators ([`topogen`]),
//! * a round-based simulation of the local rule ([`protocol`]),
//! * the Monte Carlo harness ([`experiments`]) and the CLI ([`cli`]).
//!
//! Node indices are 0-based everywhere.

pub mod assign;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod format;
pub mod io;
pub mod network;
pub mod oracle;
pub mod protocol;
pub mod topogen;

pub use assign::{
    distributed_assign, expected_distributed_cost, identical_range, optimal_assign,
    suboptimal_assign, OptimalResult, SuboptimalResult,
};
pub use error::{Error, Result};
pub use experiments::normalized_difference;
pub use network::{
    assignment_cost, edge_source_assignment, min_positive_ranges, validate_broadcast,
    CoverageResult, LinearNetwork, PathLoss, RangeAssignment, Side, SideMinima,
};
pub use oracle::{brute_force_optimal, OracleConfig};
pub use protocol::{run_protocol, ProtocolTrace};
