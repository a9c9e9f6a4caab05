//! Range-assignment algorithms: the linear-time sub-optimal search, the
//! quadratic optimal search, the local (distributed) rule, and the
//! identical-range baseline.

mod coverage;
mod distributed;
mod identical;
mod optimal;
mod suboptimal;

pub use coverage::{opposite_coverage, CoverageAnalysis};
pub use distributed::{distributed_assign, expected_distributed_cost};
pub use identical::{identical_range, identical_range_cost, IdenticalRange};
pub use optimal::{
    build_cost_arrays, init_receiver_matrix, optimal_assign, CostArrays, OptimalResult,
    ReceiverMatrix, ReceiverPair,
};
pub use suboptimal::{suboptimal_assign, Branch, SuboptimalResult};
