//! Rainbows, twists, nesting-depth queues and edge midpoints under a fixed order.

use std::fmt;

use crate::graph::{Edge, Graph, LinearOrder};
use crate::layout::Page;

/// Edges paired with their rank spans, sorted by left rank ascending then right rank descending.
fn sorted_spans(order: &LinearOrder, edges: &[Edge]) -> Vec<(Edge, (usize, usize))> {
    let mut spans: Vec<_> = edges.iter().map(|&e| (e, order.span(e))).collect();
    spans.sort_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.1 .1.cmp(&a.1 .1)));
    spans
}

fn strictly_inside(inner: (usize, usize), outer: (usize, usize)) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

/// `depth[j]`: longest nesting chain whose outermost edge is `spans[j]`.
fn nesting_depths(spans: &[(Edge, (usize, usize))]) -> Vec<usize> {
    let mut depth = vec![1; spans.len()];
    for j in (0..spans.len()).rev() {
        for k in j + 1..spans.len() {
            if strictly_inside(spans[k].1, spans[j].1) {
                depth[j] = depth[j].max(depth[k] + 1);
            }
        }
    }
    depth
}

/// Maximum rainbow among `edges`, outermost edge first.
///
/// Among maximum rainbows the witness is lexicographically smallest by (left rank, right rank).
pub fn max_rainbow_of(order: &LinearOrder, edges: &[Edge]) -> (usize, Vec<Edge>) {
    let spans = sorted_spans(order, edges);
    let depth = nesting_depths(&spans);
    let k = depth.iter().copied().max().unwrap_or(0);
    let mut witness = Vec::with_capacity(k);
    let mut outer: Option<(usize, usize)> = None;
    for need in (1..=k).rev() {
        let pick = (0..spans.len())
            .filter(|&j| depth[j] == need && outer.is_none_or(|o| strictly_inside(spans[j].1, o)))
            .min_by_key(|&j| spans[j].1)
            .expect("a chain of the recorded depth exists");
        witness.push(spans[pick].0);
        outer = Some(spans[pick].1);
    }
    (k, witness)
}

pub fn max_rainbow(g: &Graph, order: &LinearOrder) -> (usize, Vec<Edge>) {
    max_rainbow_of(order, g.edges())
}

/// Maximum set of pairwise crossing edges, leftmost edge first.
pub fn max_twist_of(order: &LinearOrder, edges: &[Edge]) -> (usize, Vec<Edge>) {
    let spans = sorted_spans(order, edges);
    let mut best: Vec<Edge> = Vec::new();
    for cut in 0..order.len().saturating_sub(1) {
        let live: Vec<_> = spans.iter().filter(|s| s.1 .0 <= cut && cut < s.1 .1).collect();
        let mut len = vec![1usize; live.len()];
        let mut prev = vec![usize::MAX; live.len()];
        for j in 0..live.len() {
            for i in 0..j {
                let (a, b) = (live[i].1, live[j].1);
                if a.0 < b.0 && a.1 < b.1 && len[i] + 1 > len[j] {
                    len[j] = len[i] + 1;
                    prev[j] = i;
                }
            }
        }
        if let Some((end, &l)) = len.iter().enumerate().max_by_key(|&(j, &l)| (l, std::cmp::Reverse(j))) {
            if l > best.len() {
                let mut chain = Vec::with_capacity(l);
                let mut at = end;
                while at != usize::MAX {
                    chain.push(live[at].0);
                    at = prev[at];
                }
                chain.reverse();
                best = chain;
            }
        }
    }
    (best.len(), best)
}

pub fn max_twist(g: &Graph, order: &LinearOrder) -> (usize, Vec<Edge>) {
    max_twist_of(order, g.edges())
}

/// Splits `edges` into queues by nesting depth; level `i` holds edges with `i` nested levels inside.
pub fn min_queues_of(order: &LinearOrder, edges: &[Edge]) -> Vec<Page> {
    let spans = sorted_spans(order, edges);
    let depth = nesting_depths(&spans);
    let k = depth.iter().copied().max().unwrap_or(0);
    let mut levels = vec![Vec::new(); k];
    for (s, d) in spans.iter().zip(&depth) {
        levels[d - 1].push(s.0);
    }
    levels.into_iter().map(Page::queue).collect()
}

pub fn min_queues_fixed_order(g: &Graph, order: &LinearOrder) -> Vec<Page> {
    min_queues_of(order, g.edges())
}

/// An exact half-integer, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Midpoint {
    pub twice: usize,
}

impl Midpoint {
    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for Midpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

pub fn edge_midpoint(order: &LinearOrder, e: Edge) -> Midpoint {
    Midpoint { twice: order.rank(e.lo()) + order.rank(e.hi()) }
}
