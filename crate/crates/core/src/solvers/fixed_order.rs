use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use super::{Budget, KindPolicy, SearchStats, SolveStatus, SolverResult};
use crate::graph::{Edge, Graph, LinearOrder};
use crate::layout::{span_relation, EdgeRelation, MixedLayout, Page, PageKind};

type Bits = Vec<u64>;

fn bit(bits: &mut Bits, i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn meets(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Pairwise crossing and nesting tables for one order.
pub(crate) struct Conflicts {
    edges: Vec<Edge>,
    crossing: Vec<Bits>,
    nesting: Vec<Bits>,
    /// Edge indices, most conflicts first.
    visit: Vec<usize>,
}

impl Conflicts {
    pub(crate) fn new(order: &LinearOrder, edges: &[Edge]) -> Self {
        let m = edges.len();
        let words = m.div_ceil(64).max(1);
        let mut crossing = vec![vec![0; words]; m];
        let mut nesting = vec![vec![0; words]; m];
        let spans: Vec<_> = edges.iter().map(|&e| order.span(e)).collect();
        let mut degree = vec![0usize; m];
        for i in 0..m {
            for j in i + 1..m {
                let table = match span_relation(spans[i], spans[j]) {
                    EdgeRelation::Crossing => &mut crossing,
                    EdgeRelation::Nested => &mut nesting,
                    _ => continue,
                };
                bit(&mut table[i], j);
                bit(&mut table[j], i);
                degree[i] += 1;
                degree[j] += 1;
            }
        }
        let mut visit: Vec<usize> = (0..m).collect();
        visit.sort_by_key(|&i| std::cmp::Reverse(degree[i]));
        Conflicts { edges: edges.to_vec(), crossing, nesting, visit }
    }

    fn blocked(&self, e: usize, kind: PageKind) -> &Bits {
        match kind {
            PageKind::Stack => &self.crossing[e],
            PageKind::Queue => &self.nesting[e],
        }
    }
}

/// Shared node counter and deadline; safe to use from several threads.
pub(crate) struct Meter {
    nodes: AtomicU64,
    exhausted: AtomicBool,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            node_limit: budget.node_limit,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    /// Counts one node; false once the budget is gone.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let over = self.node_limit.is_some_and(|l| n > l)
            || (n.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !over
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

pub(crate) enum Decision {
    Found(Vec<Page>),
    Impossible,
    OutOfBudget,
}

struct Dfs<'a> {
    conf: &'a Conflicts,
    k: usize,
    kinds: &'a [PageKind],
    meter: &'a Meter,
    pages: Vec<(PageKind, Bits, Vec<usize>)>,
    aborted: bool,
}

impl Dfs<'_> {
    fn go(&mut self, depth: usize) -> bool {
        if depth == self.conf.visit.len() {
            return true;
        }
        if !self.meter.tick() {
            self.aborted = true;
            return false;
        }
        let e = self.conf.visit[depth];
        for p in 0..self.pages.len() {
            let (kind, members, _) = &self.pages[p];
            if meets(members, self.conf.blocked(e, *kind)) {
                continue;
            }
            bit(&mut self.pages[p].1, e);
            self.pages[p].2.push(e);
            if self.go(depth + 1) {
                return true;
            }
            self.pages[p].2.pop();
            self.pages[p].1[e / 64] &= !(1 << (e % 64));
            if self.aborted {
                return false;
            }
        }
        if self.pages.len() < self.k {
            for &kind in self.kinds {
                let mut members = vec![0; self.conf.crossing.first().map_or(1, Vec::len)];
                bit(&mut members, e);
                self.pages.push((kind, members, vec![e]));
                if self.go(depth + 1) {
                    return true;
                }
                self.pages.pop();
                if self.aborted {
                    return false;
                }
            }
        }
        false
    }
}

pub(crate) fn policy_kinds(policy: KindPolicy) -> &'static [PageKind] {
    match policy {
        KindPolicy::Mixed => &[PageKind::Stack, PageKind::Queue],
        KindPolicy::StacksOnly => &[PageKind::Stack],
        KindPolicy::QueuesOnly => &[PageKind::Queue],
    }
}

/// Is there a layout with at most `k` pages under the conflict tables?
pub(crate) fn decide(conf: &Conflicts, k: usize, policy: KindPolicy, meter: &Meter) -> Decision {
    let mut dfs = Dfs { conf, k, kinds: policy_kinds(policy), meter, pages: Vec::new(), aborted: false };
    if dfs.go(0) {
        let pages = dfs
            .pages
            .into_iter()
            .map(|(kind, _, members)| Page::new(kind, members.into_iter().map(|i| conf.edges[i]).collect()))
            .collect();
        Decision::Found(pages)
    } else if dfs.aborted {
        Decision::OutOfBudget
    } else {
        Decision::Impossible
    }
}

/// Minimum page count under a fixed vertex order, by backtracking with page-symmetry breaking.
#[derive(Debug, Clone)]
pub struct FixedOrderSearch<'a> {
    graph: &'a Graph,
    order: &'a LinearOrder,
    limit: usize,
    policy: KindPolicy,
    budget: Budget,
}

impl<'a> FixedOrderSearch<'a> {
    pub fn new(graph: &'a Graph, order: &'a LinearOrder) -> Self {
        FixedOrderSearch { graph, order, limit: graph.m().max(1), policy: KindPolicy::Mixed, budget: Budget::default() }
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
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

    pub fn run(&self) -> SolverResult {
        let meter = Meter::new(self.budget);
        let conf = Conflicts::new(self.order, self.graph.edges());
        let done = |status, pages: Option<Vec<Page>>| SolverResult {
            status,
            pages: pages.as_ref().map(Vec::len),
            witness: pages.map(|p| MixedLayout::new(self.order.clone(), p)),
            stats: SearchStats { nodes: meter.nodes(), orders_tried: 1 },
        };
        if self.graph.m() == 0 {
            return done(SolveStatus::Solved, Some(Vec::new()));
        }
        for k in 1..=self.limit {
            match decide(&conf, k, self.policy, &meter) {
                Decision::Found(pages) => return done(SolveStatus::Solved, Some(pages)),
                Decision::Impossible => {}
                Decision::OutOfBudget => return done(SolveStatus::Inconclusive, None),
            }
        }
        done(SolveStatus::ExceedsLimit, None)
    }
}

pub fn fixed_order_min_pages(g: &Graph, order: &LinearOrder, limit: usize) -> SolverResult {
    FixedOrderSearch::new(g, order).limit(limit).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::validate_layout;

    #[test]
    fn rainbow_fits_one_stack() {
        let g = Graph::new(6, [(0, 5), (1, 4), (2, 3)]).unwrap();
        let r = fixed_order_min_pages(&g, &LinearOrder::identity(6), 3);
        assert_eq!((r.status, r.pages), (SolveStatus::Solved, Some(1)));
        assert_eq!(r.witness.as_ref().unwrap().pages[0].kind, PageKind::Stack);
        let q = FixedOrderSearch::new(&g, &LinearOrder::identity(6)).policy(KindPolicy::QueuesOnly).run();
        assert_eq!(q.pages, Some(3));
    }

    #[test]
    fn star_needs_one_page() {
        let g = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(fixed_order_min_pages(&g, &LinearOrder::new(vec![3, 0, 4, 1, 2]).unwrap(), 2).pages, Some(1));
    }

    #[test]
    fn k6_natural_order_needs_two() {
        let g = Graph::complete(6);
        let o = LinearOrder::identity(6);
        let r = fixed_order_min_pages(&g, &o, 4);
        assert_eq!(r.pages, Some(2));
        assert!(validate_layout(&g, r.witness.as_ref().unwrap()).is_ok());
        assert_eq!(fixed_order_min_pages(&g, &o, 1).status, SolveStatus::ExceedsLimit);
    }

    #[test]
    fn budget_gives_inconclusive() {
        let g = Graph::complete(8);
        let budget = Budget { node_limit: Some(10), time_limit: None };
        let r = FixedOrderSearch::new(&g, &LinearOrder::identity(8)).budget(budget).run();
        assert_eq!(r.status, SolveStatus::Inconclusive);
        assert!(r.pages.is_none() && r.witness.is_none());
    }
}
