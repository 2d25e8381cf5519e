//! Pages, mixed layouts, pairwise edge relations and the layout validator.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PageKind {
    Stack,
    Queue,
}

impl PageKind {
    pub fn other(self) -> Self {
        match self {
            PageKind::Stack => PageKind::Queue,
            PageKind::Queue => PageKind::Stack,
        }
    }

    /// Whether two edges in this relation may share a page of this kind.
    pub fn admits(self, rel: EdgeRelation) -> bool {
        !matches!(
            (self, rel),
            (PageKind::Stack, EdgeRelation::Crossing) | (PageKind::Queue, EdgeRelation::Nested)
        )
    }
}

impl fmt::Display for PageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PageKind::Stack => "stack",
            PageKind::Queue => "queue",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRelation {
    SharesEndpoint,
    Crossing,
    Nested,
    Disjoint,
}

/// Relation of two independent spans `a < b` and `c < d`.
pub(crate) fn span_relation((a, b): (usize, usize), (c, d): (usize, usize)) -> EdgeRelation {
    if a == c || a == d || b == c || b == d {
        EdgeRelation::SharesEndpoint
    } else if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
        EdgeRelation::Crossing
    } else if (a < c && d < b) || (c < a && b < d) {
        EdgeRelation::Nested
    } else {
        EdgeRelation::Disjoint
    }
}

impl LinearOrder {
    /// Unchecked form of [`edge_relation`]; panics on out-of-range vertices.
    pub fn relation(&self, e: Edge, f: Edge) -> EdgeRelation {
        span_relation(self.span(e), self.span(f))
    }
}

pub fn edge_relation(order: &LinearOrder, e: Edge, f: Edge) -> Result<EdgeRelation> {
    for v in [e.lo(), e.hi(), f.lo(), f.hi()] {
        if v >= order.len() {
            return Err(Error::InvalidVertex { vertex: v, n: order.len() });
        }
    }
    Ok(order.relation(e, f))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Page {
    pub kind: PageKind,
    pub edges: Vec<Edge>,
}

impl Page {
    pub fn new(kind: PageKind, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Page { kind, edges }
    }

    pub fn stack(edges: Vec<Edge>) -> Self {
        Page::new(PageKind::Stack, edges)
    }

    pub fn queue(edges: Vec<Edge>) -> Self {
        Page::new(PageKind::Queue, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedLayout {
    pub order: LinearOrder,
    pub pages: Vec<Page>,
}

impl MixedLayout {
    pub fn new(order: LinearOrder, pages: Vec<Page>) -> Self {
        MixedLayout { order, pages }
    }

    pub fn page_count(&self) -> usize {
        self.pages.len()
    }

    pub fn stacks(&self) -> usize {
        self.pages.iter().filter(|p| p.kind == PageKind::Stack).count()
    }

    pub fn queues(&self) -> usize {
        self.pages.iter().filter(|p| p.kind == PageKind::Queue).count()
    }

    pub fn edge_count(&self) -> usize {
        self.pages.iter().map(|p| p.edges.len()).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pages.iter().flat_map(|p| p.edges.iter().copied())
    }

    /// Same pages over the reversed order.
    pub fn reversed(&self) -> Self {
        MixedLayout { order: self.order.reversed(), pages: self.pages.clone() }
    }

    /// The graph formed by all page edges.
    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.order.len(), self.edges().map(|e| (e.lo(), e.hi())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    CrossingInStack { page: usize, e: (usize, usize), f: (usize, usize) },
    NestingInQueue { page: usize, e: (usize, usize), f: (usize, usize) },
    DuplicatedEdge { edge: (usize, usize), first_page: usize, second_page: usize },
    MissingEdge { edge: (usize, usize) },
    ForeignEdge { edge: (usize, usize), page: usize },
    OrderSize { order: usize, graph: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CrossingInStack { page, e, f: g } => write!(f, "stack page {page}: {e:?} crosses {g:?}"),
            Violation::NestingInQueue { page, e, f: g } => write!(f, "queue page {page}: {e:?} nests with {g:?}"),
            Violation::DuplicatedEdge { edge, first_page, second_page } => {
                write!(f, "edge {edge:?} on pages {first_page} and {second_page}")
            }
            Violation::MissingEdge { edge } => write!(f, "edge {edge:?} on no page"),
            Violation::ForeignEdge { edge, page } => write!(f, "page {page} holds non-edge {edge:?}"),
            Violation::OrderSize { order, graph } => write!(f, "order has {order} vertices, graph has {graph}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.ok
    }

    pub fn summary(&self) -> String {
        let shown: Vec<String> = self.violations.iter().take(5).map(Violation::to_string).collect();
        let more = self.violations.len().saturating_sub(5);
        if more > 0 {
            format!("{} (+{more} more)", shown.join("; "))
        } else {
            shown.join("; ")
        }
    }
}

fn pair(e: Edge) -> (usize, usize) {
    (e.lo(), e.hi())
}

/// Checks page rules and that the pages partition `g`'s edges. Collects every violation.
pub fn validate_layout(g: &Graph, layout: &MixedLayout) -> ValidationReport {
    let mut violations = Vec::new();
    if layout.order.len() != g.n() {
        violations.push(Violation::OrderSize { order: layout.order.len(), graph: g.n() });
    }
    let mut home: HashMap<Edge, usize> = HashMap::new();
    for (p, page) in layout.pages.iter().enumerate() {
        for &e in &page.edges {
            if !g.has_edge(e) || !layout.order.contains_edge(e) {
                violations.push(Violation::ForeignEdge { edge: pair(e), page: p });
            }
            if let Some(&first) = home.get(&e) {
                violations.push(Violation::DuplicatedEdge { edge: pair(e), first_page: first, second_page: p });
            } else {
                home.insert(e, p);
            }
        }
    }
    for &e in g.edges() {
        if !home.contains_key(&e) {
            violations.push(Violation::MissingEdge { edge: pair(e) });
        }
    }
    for (p, page) in layout.pages.iter().enumerate() {
        let spans: Vec<(Edge, (usize, usize))> = page
            .edges
            .iter()
            .filter(|e| layout.order.contains_edge(**e))
            .map(|&e| (e, layout.order.span(e)))
            .collect();
        for (i, &(e, se)) in spans.iter().enumerate() {
            for &(f, sf) in &spans[i + 1..] {
                let rel = span_relation(se, sf);
                if page.kind.admits(rel) {
                    continue;
                }
                violations.push(match page.kind {
                    PageKind::Stack => Violation::CrossingInStack { page: p, e: pair(e), f: pair(f) },
                    PageKind::Queue => Violation::NestingInQueue { page: p, e: pair(e), f: pair(f) },
                });
            }
        }
    }
    ValidationReport { ok: violations.is_empty(), violations }
}
