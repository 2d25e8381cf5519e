//! Separated layouts of `K_{n,n}` as monotone lattice paths on the `n x n` grid.
//!
//! Vertex `u_i` is `i` and `v_j` is `n + j`; edge `(u_i, v_j)` is the grid point `(i, j)`.
//! Queue pages become weakly increasing paths, stack pages paths that go right and down.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LinearOrder};
use crate::layout::{validate_layout, MixedLayout, Page, PageKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

impl GridPoint {
    pub fn new(x: usize, y: usize) -> Self {
        GridPoint { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPath {
    pub kind: PageKind,
    pub points: Vec<GridPoint>,
}

impl GridPath {
    /// Unit-step path visiting `corners` in turn along axis-parallel segments.
    pub fn through(kind: PageKind, corners: &[(usize, usize)]) -> Self {
        let mut points = Vec::new();
        let push = |p: GridPoint, points: &mut Vec<GridPoint>| {
            if points.last() != Some(&p) {
                points.push(p);
            }
        };
        for w in corners.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            assert!(x0 == x1 || y0 == y1, "segment ({x0},{y0})-({x1},{y1}) is not axis-parallel");
            if x0 == x1 {
                let ys: Vec<usize> = if y0 <= y1 { (y0..=y1).collect() } else { (y1..=y0).rev().collect() };
                ys.into_iter().for_each(|y| push(GridPoint::new(x0, y), &mut points));
            } else {
                (x0.min(x1)..=x0.max(x1)).for_each(|x| push(GridPoint::new(x, y0), &mut points));
            }
        }
        if corners.len() == 1 {
            points.push(GridPoint::new(corners[0].0, corners[0].1));
        }
        GridPath { kind, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Reflects `y -> n-1-y`, turning a queue path into a stack path and back.
    pub fn mirror(&self, n: usize) -> Self {
        GridPath {
            kind: self.kind.other(),
            points: self.points.iter().map(|p| GridPoint::new(p.x, n - 1 - p.y)).collect(),
        }
    }
}

fn advances(kind: PageKind, a: GridPoint, b: GridPoint) -> bool {
    let y_ok = match kind {
        PageKind::Queue => b.y >= a.y,
        PageKind::Stack => b.y <= a.y,
    };
    a != b && b.x >= a.x && y_ok
}

pub fn is_valid_path(p: &GridPath, n: usize) -> bool {
    p.points.iter().all(|q| q.x < n && q.y < n) && p.points.windows(2).all(|w| advances(p.kind, w[0], w[1]))
}

/// Most points a path of `kind` from `start` to `end` can visit.
pub fn path_point_bound(start: GridPoint, end: GridPoint, kind: PageKind) -> Result<usize> {
    if start != end && !advances(kind, start, end) {
        return Err(Error::InvalidInput(format!(
            "({}, {}) is not reachable from ({}, {}) by a {kind} path",
            end.x, end.y, start.x, start.y
        )));
    }
    Ok(end.x - start.x + start.y.abs_diff(end.y) + 1)
}

/// Path `i` runs along row `i` to `(n-1-i, i)`, then up to `(n-1-i, n-1)`.
pub fn canonical_queue_family(n: usize, q: usize) -> Result<Vec<GridPath>> {
    if q > n {
        return Err(Error::InvalidInput(format!("at most {n} canonical paths, asked for {q}")));
    }
    Ok((0..q).map(|i| GridPath::through(PageKind::Queue, &[(0, i), (n - 1 - i, i), (n - 1 - i, n - 1)])).collect())
}

/// Mirror image of [`canonical_queue_family`]: path `i` starts at `(0, n-1-i)` and ends at `(n-1-i, 0)`.
pub fn canonical_stack_family(n: usize, s: usize) -> Result<Vec<GridPath>> {
    Ok(canonical_queue_family(n, s)?.iter().map(|p| p.mirror(n)).collect())
}

/// Grid points coverable by `s` stack paths and `q` queue paths.
pub fn max_coverage(n: usize, s: usize, q: usize) -> usize {
    let (s, q) = (s.min(n), q.min(n));
    let v = crate::bounds::sep_max_edges(n, s, q).max(0) as usize;
    v.min(n * n)
}

/// `n/3` stack paths and `n/3` queue paths; each stack path meets each queue path exactly once.
pub fn build_windmill(n: usize) -> Result<(Vec<GridPath>, Vec<GridPath>)> {
    if !n.is_multiple_of(3) {
        return Err(Error::Unsupported(format!("windmill needs n divisible by 3, got {n}")));
    }
    let t = n / 3;
    let stacks = (0..t)
        .map(|i| {
            let (x, hi, lo) = (2 * t - 1 - i, n - 1 - i, t - 1 - i);
            GridPath::through(PageKind::Stack, &[(0, hi), (x, hi), (x, lo), (n - 1, lo)])
        })
        .collect();
    let queues = (0..t)
        .map(|i| {
            let (y, x) = (2 * t - 1 - i, 2 * t + i);
            GridPath::through(PageKind::Queue, &[(i, 0), (i, y), (x, y), (x, n - 1)])
        })
        .collect();
    Ok((stacks, queues))
}

fn point_edge(n: usize, p: GridPoint) -> Edge {
    Edge::new(p.x, n + p.y)
}

/// Turns covering paths into a separated layout of `K_{n,n}`, one page per path.
///
/// A point on several paths goes to the first queue path through it, else the first stack path.
pub fn paths_to_layout(n: usize, paths: &[GridPath]) -> Result<MixedLayout> {
    if let Some(bad) = paths.iter().position(|p| !is_valid_path(p, n)) {
        return Err(Error::InvalidInput(format!("path {bad} is not a monotone {} path", paths[bad].kind)));
    }
    let mut owner: Vec<Option<usize>> = vec![None; n * n];
    for kind in [PageKind::Queue, PageKind::Stack] {
        for (i, p) in paths.iter().enumerate().filter(|(_, p)| p.kind == kind) {
            for pt in &p.points {
                owner[pt.y * n + pt.x].get_or_insert(i);
            }
        }
    }
    let uncovered: Vec<(usize, usize)> =
        (0..n * n).filter(|&c| owner[c].is_none()).map(|c| (c % n, c / n)).collect();
    if !uncovered.is_empty() {
        return Err(Error::Uncovered(uncovered));
    }
    let pages = paths
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let edges = p.points.iter().filter(|pt| owner[pt.y * n + pt.x] == Some(i)).map(|&pt| point_edge(n, pt));
            Page::new(p.kind, edges.collect())
        })
        .collect();
    let layout = MixedLayout::new(LinearOrder::identity(2 * n), pages);
    let report = validate_layout(&Graph::complete_bipartite(n), &layout);
    if !report.is_ok() {
        return Err(Error::InvalidLayout(report.summary()));
    }
    Ok(layout)
}

/// Separated layout of `K_{n,n}` with `ceil(2n/3)` pages.
///
/// A windmill covers the first `3 floor(n/3)` rows and columns; each remaining line `r`
/// gets one stack path `(0, r) -> (r, r) -> (r, 0)`.
pub fn build_separated_knn(n: usize) -> Result<MixedLayout> {
    let base = n - n % 3;
    let (mut paths, queues) = build_windmill(base)?;
    paths.extend((base..n).map(|r| GridPath::through(PageKind::Stack, &[(0, r), (r, r), (r, 0)])));
    paths.extend(queues);
    paths_to_layout(n, &paths)
}

fn separated_point(layout: &MixedLayout, n: usize, e: Edge) -> Result<GridPoint> {
    let (a, b) = layout.order.span(e);
    if a >= n || b < n {
        return Err(Error::InvalidLayout(format!("edge {e} does not join the two parts")));
    }
    Ok(GridPoint::new(a, b - n))
}

/// One grid path per page of a valid separated layout of `K_{n,n}`.
///
/// Points are indexed by rank, so any order placing all `u_i` before all `v_j` works.
pub fn layout_to_paths(layout: &MixedLayout, n: usize) -> Result<Vec<GridPath>> {
    let report = validate_layout(&Graph::complete_bipartite(n), layout);
    if !report.is_ok() {
        return Err(Error::InvalidLayout(report.summary()));
    }
    if (0..n).any(|u| layout.order.rank(u) >= n) {
        return Err(Error::InvalidLayout("order does not separate the two parts".into()));
    }
    layout
        .pages
        .iter()
        .map(|page| {
            let mut points = page.edges.iter().map(|&e| separated_point(layout, n, e)).collect::<Result<Vec<_>>>()?;
            match page.kind {
                PageKind::Queue => points.sort_by_key(|p| (p.x, p.y)),
                PageKind::Stack => points.sort_by_key(|p| (p.x, std::cmp::Reverse(p.y))),
            }
            let path = GridPath { kind: page.kind, points };
            if !is_valid_path(&path, n) {
                return Err(Error::InvalidLayout(format!("{} page is not a monotone path", page.kind)));
            }
            Ok(path)
        })
        .collect()
}

/// Reverses the `v` part of the order and swaps every page kind; valid layouts stay valid.
pub fn flip_second_part(layout: &MixedLayout, n: usize) -> MixedLayout {
    let mut vertices: Vec<usize> = layout.order.vertices()[..n].to_vec();
    vertices.extend(layout.order.vertices()[n..].iter().rev());
    let order = LinearOrder::new(vertices).expect("permuting ranks keeps a bijection");
    let pages = layout.pages.iter().map(|p| Page::new(p.kind.other(), p.edges.clone())).collect();
    MixedLayout::new(order, pages)
}

/// Text picture of the grid, top row `y = n-1` first; each cell names its page (`S0`, `Q1`, ...).
pub fn grid_dump(layout: &MixedLayout, n: usize) -> Result<String> {
    let paths = layout_to_paths(layout, n)?;
    let mut label = vec![String::from("."); n * n];
    let (mut s, mut q) = (0, 0);
    for path in &paths {
        let name = match path.kind {
            PageKind::Stack => {
                s += 1;
                format!("S{}", s - 1)
            }
            PageKind::Queue => {
                q += 1;
                format!("Q{}", q - 1)
            }
        };
        for p in &path.points {
            label[p.y * n + p.x] = name.clone();
        }
    }
    let width = label.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for y in (0..n).rev() {
        let _ = write!(out, "{y:>3} |");
        for x in 0..n {
            let _ = write!(out, " {:>width$}", label[y * n + x]);
        }
        out.push('\n');
    }
    Ok(out)
}
