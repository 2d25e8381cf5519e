//! Simple undirected graphs, vertex orders and their text formats.

use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `lo() < hi()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge { lo: a.min(b), hi: a.max(b) }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// A simple graph on vertices `0..n` with a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Rejects self-loops, duplicates and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].lo, w[0].hi));
        }
        Ok(Graph { n, edges: list })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b))).collect();
        Graph { n, edges }
    }

    /// K_{n,n} with parts `u_i = i` and `v_j = n + j`.
    pub fn complete_bipartite(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (0..n).map(move |j| Edge::new(i, n + j))).collect();
        Graph { n: 2 * n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.lo == v || e.hi == v).count()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_bijection(perm, self.n)?;
        Graph::new(self.n, self.edges.iter().map(|e| (perm[e.lo], perm[e.hi])))
    }

    /// Parses `n m` followed by `m` lines of `u v`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty graph file".into() })?;
        let head = parse_numbers(header, line)?;
        if head.len() != 2 {
            return Err(Error::Parse { line, msg: "header must be `n m`".into() });
        }
        let (n, m) = (head[0], head[1]);
        let mut pairs = Vec::with_capacity(m);
        for (line, body) in lines.by_ref().take(m) {
            let uv = parse_numbers(body, line)?;
            if uv.len() != 2 {
                return Err(Error::Parse { line, msg: "edge line must be `u v`".into() });
            }
            pairs.push((uv[0], uv[1]));
        }
        if pairs.len() != m {
            return Err(Error::Parse { line: 0, msg: format!("expected {m} edges, found {}", pairs.len()) });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, msg: "trailing content after edge list".into() });
        }
        Graph::new(n, pairs)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.lo, e.hi));
        }
        out
    }
}

/// A bijection between vertices and ranks `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    vertices: Vec<usize>,
    ranks: Vec<usize>,
}

impl LinearOrder {
    /// `vertices[r]` is the vertex at rank `r`.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        check_bijection(&vertices, vertices.len())?;
        let mut ranks = vec![0; vertices.len()];
        for (r, &v) in vertices.iter().enumerate() {
            ranks[v] = r;
        }
        Ok(LinearOrder { vertices, ranks })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder { vertices: (0..n).collect(), ranks: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.ranks[v]
    }

    pub fn vertex_at(&self, rank: usize) -> usize {
        self.vertices[rank]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Ranks of the endpoints, smaller first.
    pub fn span(&self, e: Edge) -> (usize, usize) {
        let (a, b) = (self.ranks[e.lo], self.ranks[e.hi]);
        (a.min(b), a.max(b))
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        LinearOrder::new(vertices).expect("reversal keeps bijectivity")
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        e.hi < self.len()
    }

    /// One line of space-separated vertex ids.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line, body) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty order file".into() })?;
        let vertices = parse_numbers(body, line)?;
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, msg: "order must be a single line".into() });
        }
        LinearOrder::new(vertices)
    }

    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        format!("{}\n", ids.join(" "))
    }
}

fn check_bijection(values: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in values {
        if v >= n {
            return Err(Error::NotBijective(format!("value {v} out of range 0..{n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotBijective(format!("value {v} repeated")));
        }
    }
    if values.len() != n {
        return Err(Error::NotBijective(format!("expected {n} values, found {}", values.len())));
    }
    Ok(())
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_numbers(body: &str, line: usize) -> Result<Vec<usize>> {
    body.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| Error::Parse { line, msg: format!("not a vertex id: {tok:?}") }))
        .collect()
}
