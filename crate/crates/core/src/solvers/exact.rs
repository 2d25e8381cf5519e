use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::fixed_order::{decide, Conflicts, Decision, Meter};
use super::{Budget, KindPolicy, SearchStats, SolveStatus, SolverResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder};
use crate::layout::MixedLayout;

/// Largest vertex count searched exactly unless the caller raises it.
pub const DEFAULT_GUARD: usize = 10;

/// Minimum page count over all vertex orders.
///
/// Orders are enumerated lexicographically, keeping one of each reversed pair
/// (vertex `0` before vertex `n-1`); complete graphs use the identity order only.
#[derive(Debug, Clone)]
pub struct ExactSearch<'a> {
    graph: &'a Graph,
    limit: usize,
    guard: usize,
    policy: KindPolicy,
    budget: Budget,
}

impl<'a> ExactSearch<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        ExactSearch {
            graph,
            limit: graph.m().max(1),
            guard: DEFAULT_GUARD,
            policy: KindPolicy::Mixed,
            budget: Budget::default(),
        }
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub fn guard(mut self, guard: usize) -> Self {
        self.guard = guard;
        self
    }

    pub fn policy(mut self, policy: KindPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    fn orders(&self) -> Vec<LinearOrder> {
        let n = self.graph.n();
        if n < 2 || self.graph.m() == n * (n - 1) / 2 {
            return vec![LinearOrder::identity(n)];
        }
        (0..n)
            .permutations(n)
            .filter(|p| p.iter().position(|&v| v == 0) < p.iter().position(|&v| v == n - 1))
            .map(|p| LinearOrder::new(p).expect("permutation"))
            .collect()
    }

    pub fn run(&self) -> Result<SolverResult> {
        let n = self.graph.n();
        if n > self.guard {
            return Err(Error::GuardExceeded { n, guard: self.guard });
        }
        let meter = Meter::new(self.budget);
        let tried = AtomicU64::new(0);
        let stats = |meter: &Meter| SearchStats { nodes: meter.nodes(), orders_tried: tried.load(Ordering::Relaxed) };
        if self.graph.m() == 0 {
            let witness = MixedLayout::new(LinearOrder::identity(n), Vec::new());
            return Ok(SolverResult { status: SolveStatus::Solved, pages: Some(0), witness: Some(witness), stats: stats(&meter) });
        }
        let orders = self.orders();
        for k in 1..=self.limit {
            let found = orders.par_iter().find_map_first(|order| {
                tried.fetch_add(1, Ordering::Relaxed);
                match decide(&Conflicts::new(order, self.graph.edges()), k, self.policy, &meter) {
                    Decision::Found(pages) => Some(MixedLayout::new(order.clone(), pages)),
                    _ => None,
                }
            });
            if let Some(witness) = found {
                return Ok(SolverResult {
                    status: SolveStatus::Solved,
                    pages: Some(k),
                    witness: Some(witness),
                    stats: stats(&meter),
                });
            }
            if meter.is_exhausted() {
                return Ok(SolverResult { status: SolveStatus::Inconclusive, pages: None, witness: None, stats: stats(&meter) });
            }
        }
        Ok(SolverResult { status: SolveStatus::ExceedsLimit, pages: None, witness: None, stats: stats(&meter) })
    }
}

pub fn mixed_page_number_exact(g: &Graph, limit: usize) -> Result<SolverResult> {
    ExactSearch::new(g).limit(limit).run()
}
