//! Explicit layouts: the greedy fixed-order layout, the density-extremal graphs,
//! complete graphs and (via [`crate::gridpaths`]) separated complete bipartite graphs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder};
use crate::layout::{validate_layout, MixedLayout, Page};
use crate::patterns::{max_rainbow_of, min_queues_of};

pub use crate::gridpaths::build_separated_knn;

/// Edges `(l, l+2..=r)` and `(l+1..r-1, r)` over ranks of the identity order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleStar {
    pub left: usize,
    pub right: usize,
}

pub fn expand_double_star(d: DoubleStar) -> Result<Vec<Edge>> {
    let DoubleStar { left, right } = d;
    if left + 2 > right {
        return Err(Error::DegenerateStar { left, right });
    }
    let mut edges: Vec<Edge> = (left + 2..=right).map(|j| Edge::new(left, j)).collect();
    edges.extend((left + 1..right - 1).map(|j| Edge::new(j, right)));
    Ok(edges)
}

/// Peels maximum rainbows into stacks while they are longer than `sqrt(2m')`,
/// then splits what is left into nesting-depth queues.
pub fn build_greedy_mixed(g: &Graph, order: &LinearOrder) -> Result<MixedLayout> {
    if order.len() != g.n() {
        return Err(Error::InvalidInput(format!("order has {} vertices, graph has {}", order.len(), g.n())));
    }
    let mut remaining = g.edges().to_vec();
    let mut pages = Vec::new();
    while !remaining.is_empty() {
        let (k, witness) = max_rainbow_of(order, &remaining);
        if k * k <= 2 * remaining.len() {
            pages.extend(min_queues_of(order, &remaining));
            break;
        }
        let peeled: BTreeSet<Edge> = witness.iter().copied().collect();
        remaining.retain(|e| !peeled.contains(e));
        pages.push(Page::stack(witness));
    }
    Ok(MixedLayout::new(order.clone(), pages))
}

/// Inclusive signed range, empty when `a > b`.
fn span(a: i64, b: i64) -> impl Iterator<Item = i64> {
    a..=b
}

fn edges_of(pairs: impl IntoIterator<Item = (i64, i64)>) -> Vec<Edge> {
    pairs.into_iter().map(|(a, b)| Edge::new(a as usize, b as usize)).collect()
}

fn certify(family: &str, n: usize, pages: Vec<Page>, expected_edges: usize) -> Result<(Graph, MixedLayout)> {
    let fail = |detail: String| Error::InvalidConstruction { family: family.to_string(), detail };
    let layout = MixedLayout::new(LinearOrder::identity(n), pages);
    let g = layout.graph().map_err(|e| fail(e.to_string()))?;
    if g.m() != expected_edges {
        return Err(fail(format!("{} edges, expected {expected_edges}", g.m())));
    }
    let report = validate_layout(&g, &layout);
    if !report.is_ok() {
        return Err(fail(report.summary()));
    }
    Ok((g, layout))
}

const BASE_9_2_STACK: [(usize, usize); 15] = [
    (0, 1), (0, 6), (0, 7), (0, 8), (1, 2), (1, 3), (1, 6), (2, 3),
    (3, 4), (3, 6), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8),
];
const BASE_9_2_QUEUE: [(usize, usize); 13] = [
    (0, 2), (0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 6),
    (2, 7), (3, 7), (3, 8), (4, 8), (5, 8), (6, 8),
];

/// An `n`-vertex graph with `density_max_edges(n, k)` edges and its 1-stack `(k-1)`-queue layout.
///
/// Pages are the stack first, then the queues. Needs `k >= 2`, odd `n >= 4k + 1`.
pub fn build_density_extremal(n: usize, k: usize) -> Result<(Graph, MixedLayout)> {
    if k < 2 {
        return Err(Error::Unsupported(format!("k must be at least 2, got {k}")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!("n must be odd, got {n}")));
    }
    if n < 4 * k + 1 {
        return Err(Error::Unsupported(format!("n must be at least 4k+1 = {}, got {n}", 4 * k + 1)));
    }
    let expected = crate::bounds::density_max_edges(n, k) as usize;
    if (n, k) == (9, 2) {
        let stack = Page::stack(BASE_9_2_STACK.iter().map(|&(a, b)| Edge::new(a, b)).collect());
        let queue = Page::queue(BASE_9_2_QUEUE.iter().map(|&(a, b)| Edge::new(a, b)).collect());
        return certify("density-extremal", n, vec![stack, queue], expected);
    }
    let (ni, ki) = (n as i64, k as i64);
    let c = (ni - 1) / 2;
    let mut pages = Vec::with_capacity(k);
    let mut stack = Vec::new();
    stack.extend(span(0, ki - 2).map(|j| (j, ni - 1)));
    stack.extend(span(ni - ki + 1, ni - 2).map(|j| (ki - 2, j)));
    stack.extend(span(ki - 2, c - 4).map(|j| (c, j)));
    stack.extend(span(c + 4, ni - ki + 1).map(|j| (c, j)));
    stack.extend(span(0, ni - 2).map(|j| (j, j + 1)));
    stack.extend([-4, -2, 0, 2].map(|d| (c + d, c + d + 2)));
    pages.push(Page::stack(edges_of(stack)));
    for i in 0..ki - 2 {
        let mut q = Vec::new();
        q.extend(span(i + 2, ni - ki - i).map(|j| (i, j)));
        q.extend(span(ni - ki - i, ni - i - 2).map(|j| (ki + i - 1, j)));
        q.extend(span(i + 1, ki + i - 2).map(|j| (j, ni - ki - i)));
        q.extend(span(ki + i - 1, ni - i - 3).map(|j| (j, ni - i - 1)));
        pages.push(Page::queue(edges_of(q)));
    }
    let mut stars = BTreeSet::new();
    for (left, right) in [(k - 2, c as usize - 1), (c as usize - 3, c as usize + 3), (c as usize + 1, n - k + 1)] {
        stars.extend(expand_double_star(DoubleStar { left, right })?);
    }
    pages.push(Page::queue(stars.into_iter().collect()));
    certify("density-extremal", n, pages, expected)
}

/// The `t`-stack `t`-queue layout of `K_{5t}` on the identity order; stacks first.
fn kn_tables(t: usize) -> Vec<Page> {
    let (t, n) = (t as i64, 5 * t as i64);
    let mut queues: Vec<Vec<(i64, i64)>> = Vec::new();
    for i in 0..t {
        let mut q = Vec::new();
        q.extend(span(i + 2, 4 * t - i - 2).map(|j| (i, j)));
        q.extend(span(t + 2 * i, n - i - 3).map(|j| (j, n - 1 - i)));
        q.extend(span(4 * t - i - 1, n - i - 2).map(|j| (t + 2 * i, j)));
        q.extend(span(i + 1, t + 2 * i).map(|j| (j, 4 * t - i - 2)));
        queues.push(q);
    }
    let mut stacks: Vec<Vec<(i64, i64)>> = vec![Vec::new(); t as usize];
    for c in 0..t {
        let s = &mut stacks[c as usize];
        s.extend(span(4 * t - 1 + c, n - 1).map(|y| (c, y)));
        s.extend(span(c + 1, t - 1).map(|x| (x, 4 * t - 1 + c)));
        if c == 0 {
            s.extend(span(t + 2, 3 * t - 2).map(|y| (t, y)));
            continue;
        }
        let p = 3 * t - 2 * c - 1;
        s.extend(span(3 * t + c - 1, 4 * t + c - 1).map(|y| (p, y)));
        for sum in [p + t, p + t + 1] {
            s.extend(span(t + 1, p).filter(|&a| sum - a <= p && sum - 2 * a >= 2).map(|a| (a, sum - a)));
        }
        for sum in [p + 3 * t - 2, p + 3 * t - 1] {
            s.extend(span(p, 3 * t - 2).filter(|&a| sum - a <= 3 * t - 2 && sum - 2 * a >= 2).map(|a| (a, sum - a)));
        }
    }
    let upper = 3 * t - 1;
    for a in 0..=t {
        for b in a + 2..=t {
            let home = if b < t { b } else { 0 };
            stacks[home as usize].push((upper + a, upper + b));
        }
    }
    let in_queue: BTreeSet<(i64, i64)> = queues.iter().flatten().copied().collect();
    stacks[0].extend((0..n - 1).map(|j| (j, j + 1)).filter(|e| !in_queue.contains(e)));
    if !stacks[0].contains(&(0, n - 1)) {
        stacks[0].push((0, n - 1));
    }
    let mut pages: Vec<Page> = stacks.into_iter().map(|s| Page::stack(edges_of(s))).collect();
    pages.extend(queues.into_iter().map(|q| Page::queue(edges_of(q))));
    pages
}

/// A layout of `K_n` with at most `2 ceil(n/5)` pages (exactly that many when `5 | n`).
///
/// Other `n` restrict the layout of `K_{5 ceil(n/5)}` to its first `n` vertices; pages left empty are dropped.
pub fn build_kn_mixed(n: usize) -> Result<MixedLayout> {
    let t = n.div_ceil(5);
    let pages: Vec<Page> = kn_tables(t)
        .into_iter()
        .map(|p| Page::new(p.kind, p.edges.into_iter().filter(|e| e.hi() < n).collect()))
        .filter(|p| !p.edges.is_empty())
        .collect();
    let (_, layout) = certify("complete-graph", n, pages, n * n.saturating_sub(1) / 2)?;
    Ok(layout)
}
