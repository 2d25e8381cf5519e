//! Closed-form edge-density and page-number bounds.

use std::fmt;

use serde::Serialize;

/// Where one side of a [`BoundReport`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `ceil(3(n-4)/8)` for complete graphs.
    CompleteFormula,
    /// Smallest `k` whose density bound admits the edge count.
    DensityInversion,
    /// No edges, no pages.
    Empty,
    /// The explicit `2 ceil(n/5)` layout of `K_n`.
    CompleteConstruction,
    /// `ceil(n/3)` for `K_{n,n}`.
    BipartiteFormula,
    /// Queue number `ceil(n/2)` of `K_{n,n}`.
    BipartiteQueueNumber,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::CompleteFormula => "ceil(3(n-4)/8)",
            BoundSource::DensityInversion => "density inversion",
            BoundSource::Empty => "empty graph",
            BoundSource::CompleteConstruction => "2 ceil(n/5) construction",
            BoundSource::BipartiteFormula => "ceil(n/3)",
            BoundSource::BipartiteQueueNumber => "queue number ceil(n/2)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower: usize,
    pub upper: usize,
    pub lower_source: BoundSource,
    pub upper_source: BoundSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnnBounds {
    /// Exact mixed page number when both parts are kept apart in the order.
    pub separated: usize,
    pub general: BoundReport,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Maximum edge count of an `n`-vertex graph with mixed page number `k`.
///
/// The second case is floored once at the end; its threshold `k <= n/4 + 2` is exact over rationals.
pub fn density_max_edges(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    if 4 * k <= n + 8 {
        2 * k * n - 2 * k * k + k - 2
    } else {
        (n * n + 8 * (k + 1) * n - 24 * k - 16).div_euclid(8)
    }
}

/// Smallest `k` with `density_max_edges(n, k) >= m`; zero for `m = 0`.
pub fn density_lower_bound_pages(n: usize, m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    (1..m).find(|&k| density_max_edges(n, k) >= m as i64).unwrap_or(m)
}

pub fn kn_bounds(n: usize) -> BoundReport {
    let m = n * n.saturating_sub(1) / 2;
    let formula = ceil_div(3 * (n as i64 - 4), 8).max(0) as usize;
    let inversion = density_lower_bound_pages(n, m);
    // the inversion is at least 1 for every non-empty graph
    let (lower, lower_source) = if m == 0 {
        (0, BoundSource::Empty)
    } else if inversion > formula {
        (inversion, BoundSource::DensityInversion)
    } else {
        (formula, BoundSource::CompleteFormula)
    };
    let upper = 2 * n.div_ceil(5);
    BoundReport { lower, upper, lower_source, upper_source: BoundSource::CompleteConstruction }
}

pub fn knn_bounds(n: usize) -> KnnBounds {
    let formula = n.div_ceil(3);
    let inversion = density_lower_bound_pages(2 * n, n * n);
    let (lower, lower_source) = if inversion > formula {
        (inversion, BoundSource::DensityInversion)
    } else {
        (formula, BoundSource::BipartiteFormula)
    };
    let upper = n.div_ceil(2).max(lower);
    KnnBounds {
        separated: (2 * n).div_ceil(3),
        general: BoundReport { lower, upper, lower_source, upper_source: BoundSource::BipartiteQueueNumber },
    }
}

/// Edges a separated `s`-stack `q`-queue layout of `K_{n,n}` can hold at most (unclamped).
pub fn sep_max_edges(n: usize, s: usize, q: usize) -> i64 {
    let (n, s, q) = (n as i64, s as i64, q as i64);
    2 * n * (s + q) - s * s - q * q - s * q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_values() {
        assert_eq!(density_max_edges(25, 6), 232);
        assert_eq!(density_max_edges(6, 1), 9);
        assert_eq!(density_max_edges(6, 2), 16);
        assert_eq!(density_max_edges(8, 2), 24);
        // second case: 4k > n + 8
        assert_eq!(density_max_edges(8, 5), (64 + 8 * 6 * 8 - 15 * 8 - 16) / 8);
        assert_eq!(density_max_edges(9, 5), (81 + 48 * 9 - 120 - 16_i64).div_euclid(8));
    }

    #[test]
    fn density_inversion() {
        assert_eq!(density_lower_bound_pages(6, 15), 2);
        assert_eq!(density_lower_bound_pages(8, 28), 3);
        assert_eq!(density_lower_bound_pages(5, 0), 0);
        assert_eq!(density_lower_bound_pages(2, 1), 1);
    }

    #[test]
    fn complete_graph_bounds() {
        let b = kn_bounds(6);
        assert_eq!((b.lower, b.upper, b.lower_source), (2, 4, BoundSource::DensityInversion));
        let b = kn_bounds(4);
        assert_eq!((b.lower, b.upper, b.lower_source), (2, 2, BoundSource::DensityInversion));
        assert_eq!(kn_bounds(3).lower, 1);
        let b = kn_bounds(25);
        assert_eq!((b.lower, b.upper), (10, 10));
        assert_eq!(ceil_div(3 * 21, 8), 8);
        assert_eq!(kn_bounds(1).lower, 0);
    }

    #[test]
    fn bipartite_bounds() {
        let b = knn_bounds(6);
        assert_eq!((b.separated, b.general.lower, b.general.upper), (4, 2, 3));
        let b = knn_bounds(3);
        assert_eq!((b.separated, b.general.lower, b.general.upper), (2, 1, 2));
        let b = knn_bounds(1);
        assert_eq!((b.separated, b.general.lower, b.general.upper), (1, 1, 1));
    }

    #[test]
    fn separated_edge_bound() {
        assert_eq!(sep_max_edges(6, 2, 2), 36);
        assert_eq!(sep_max_edges(6, 3, 0), 27);
        assert_eq!(sep_max_edges(9, 0, 0), 0);
    }

    #[test]
    fn balanced_split_maximizes_separated_bound() {
        for k in 1..=100usize {
            let n = 3 * k;
            let best = (0..=k).map(|q| sep_max_edges(n, k - q, q)).max().unwrap();
            assert_eq!(sep_max_edges(n, k - k / 2, k / 2), best, "k={k}");
            assert_eq!(sep_max_edges(n, k / 2, k - k / 2), best, "k={k}");
        }
    }
}
