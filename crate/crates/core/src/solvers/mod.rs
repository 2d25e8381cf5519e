//! Exact solvers: fixed-order backtracking, two-page 2-SAT, order enumeration and monotone covers.

mod exact;
mod fixed_order;
mod permutation;
mod two_sat;

use std::time::Duration;

use serde::Serialize;

use crate::layout::MixedLayout;

pub use exact::{mixed_page_number_exact, ExactSearch, DEFAULT_GUARD};
pub use fixed_order::{fixed_order_min_pages, FixedOrderSearch};
pub use permutation::{permutation_min_monotone_cover, permutation_to_matching, MonotoneRun, Permutation};
pub use two_sat::{fixed_order_two_pages_2sat, two_pages_with_kinds, TwoPageSolution, TwoSat};

/// Which page kinds a search may open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindPolicy {
    #[default]
    Mixed,
    StacksOnly,
    QueuesOnly,
}

/// Search limits; running out yields [`SolveStatus::Inconclusive`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    /// `pages` is optimal and `witness` realizes it.
    Solved,
    /// No layout with at most `limit` pages exists.
    ExceedsLimit,
    /// The budget ran out first.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub orders_tried: u64,
}

#[derive(Debug, Clone)]
pub struct SolverResult {
    pub status: SolveStatus,
    pub pages: Option<usize>,
    pub witness: Option<MixedLayout>,
    pub stats: SearchStats,
}
