//! Brute-force oracles shared by the integration tests. None of them reuse library search code.
#![allow(dead_code)]

use mixlayout::{Edge, EdgeRelation, Graph, LinearOrder, PageKind};
use rand::seq::SliceRandom;
use rand::Rng;

/// Relation straight from the definition, on ranks.
pub fn relation(order: &LinearOrder, e: Edge, f: Edge) -> EdgeRelation {
    let (a, b) = (order.rank(e.lo()).min(order.rank(e.hi())), order.rank(e.lo()).max(order.rank(e.hi())));
    let (c, d) = (order.rank(f.lo()).min(order.rank(f.hi())), order.rank(f.lo()).max(order.rank(f.hi())));
    if [a, b].iter().any(|x| *x == c || *x == d) {
        EdgeRelation::SharesEndpoint
    } else if a < c && c < b && b < d || c < a && a < d && d < b {
        EdgeRelation::Crossing
    } else if a < c && d < b || c < a && b < d {
        EdgeRelation::Nested
    } else {
        EdgeRelation::Disjoint
    }
}

pub fn clash(kind: PageKind, rel: EdgeRelation) -> bool {
    matches!((kind, rel), (PageKind::Stack, EdgeRelation::Crossing) | (PageKind::Queue, EdgeRelation::Nested))
}

/// Largest subset whose pairs all stand in `want`.
pub fn brute_clique(order: &LinearOrder, edges: &[Edge], want: EdgeRelation) -> usize {
    let m = edges.len();
    assert!(m <= 64);
    let mut ok = vec![0u64; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && relation(order, edges[i], edges[j]) == want {
                ok[i] |= 1 << j;
            }
        }
    }
    fn grow(cand: u64, size: usize, ok: &[u64], best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let i = cand.trailing_zeros() as usize;
        grow(cand & ok[i], size + 1, ok, best);
        grow(cand & !(1 << i), size, ok, best);
    }
    let mut best = 0;
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    grow(all, 0, &ok, &mut best);
    best
}

/// Every assignment of edges to `stacks` stack pages and `queues` queue pages, pruned only on clashes.
pub fn assignable(order: &LinearOrder, edges: &[Edge], stacks: usize, queues: usize) -> bool {
    let kinds: Vec<PageKind> =
        std::iter::repeat_n(PageKind::Stack, stacks).chain(std::iter::repeat_n(PageKind::Queue, queues)).collect();
    let mut page = vec![usize::MAX; edges.len()];
    fn go(i: usize, order: &LinearOrder, edges: &[Edge], kinds: &[PageKind], page: &mut [usize]) -> bool {
        if i == edges.len() {
            return true;
        }
        for p in 0..kinds.len() {
            if (0..i).any(|j| page[j] == p && clash(kinds[p], relation(order, edges[i], edges[j]))) {
                continue;
            }
            page[i] = p;
            if go(i + 1, order, edges, kinds, page) {
                return true;
            }
        }
        false
    }
    go(0, order, edges, &kinds, &mut page)
}

/// Fewest pages under `order`, any stack/queue mix.
pub fn brute_min_pages(order: &LinearOrder, edges: &[Edge]) -> usize {
    if edges.is_empty() {
        return 0;
    }
    (1..).find(|&k| (0..=k).any(|s| assignable(order, edges, s, k - s))).unwrap()
}

/// Two pages of the given kinds, by enumerating all `2^m` splits.
pub fn brute_two_pages(order: &LinearOrder, edges: &[Edge], kinds: [PageKind; 2]) -> bool {
    let m = edges.len();
    (0u32..1 << m).any(|mask| {
        (0..m).all(|i| {
            (i + 1..m).all(|j| {
                let same = (mask >> i & 1) == (mask >> j & 1);
                !same || !clash(kinds[(mask >> i & 1) as usize], relation(order, edges[i], edges[j]))
            })
        })
    })
}

/// Fewest monotone subsequences covering `values`, by trying every labelling.
pub fn brute_monotone_cover(values: &[usize]) -> usize {
    let n = values.len();
    let monotone = |idx: &[usize]| {
        let v: Vec<usize> = idx.iter().map(|&i| values[i]).collect();
        v.windows(2).all(|w| w[0] < w[1]) || v.windows(2).all(|w| w[0] > w[1])
    };
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut groups = vec![Vec::new(); k];
            for i in 0..n {
                groups[c % k].push(i);
                c /= k;
            }
            if groups.iter().all(|g| monotone(g)) {
                return k;
            }
        }
    }
    0
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, pairs).unwrap()
}

pub fn random_graph_with_edges(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}

pub fn random_order(rng: &mut impl Rng, n: usize) -> LinearOrder {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    LinearOrder::new(v).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let maps: Vec<Vec<usize>> =
        permutations(n).iter().map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect()).collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for map in &maps {
            let image = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << map[i]);
            seen[image] = true;
        }
        let g = Graph::new(n, (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i])).unwrap();
        if is_connected(&g) {
            reps.push(g);
        }
    }
    reps
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for e in g.edges() {
            let w = if e.lo() == v { e.hi() } else if e.hi() == v { e.lo() } else { continue };
            if !std::mem::replace(&mut seen[w], true) {
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Largest union of `s` stack paths and `q` queue paths, over corner-to-corner lattice paths.
/// Returns `None` when the union sets grow past `cap`.
pub fn brute_max_coverage(n: usize, s: usize, q: usize, cap: usize) -> Option<usize> {
    use std::collections::HashSet;
    assert!(n * n <= 64);
    // all unit-step paths from (0,0) to (n-1,n-1), as bitmasks over x + n*y
    fn walks(n: usize, x: usize, y: usize, mask: u64, out: &mut Vec<u64>) {
        let mask = mask | 1 << (x + n * y);
        if x == n - 1 && y == n - 1 {
            out.push(mask);
            return;
        }
        if x + 1 < n {
            walks(n, x + 1, y, mask, out);
        }
        if y + 1 < n {
            walks(n, x, y + 1, mask, out);
        }
    }
    let mut up = Vec::new();
    walks(n, 0, 0, 0, &mut up);
    let flip = |m: u64| (0..n * n).filter(|&c| m >> c & 1 == 1).fold(0u64, |a, c| a | 1 << (c % n + n * (n - 1 - c / n)));
    let down: Vec<u64> = up.iter().map(|&m| flip(m)).collect();
    let unions = |paths: &[u64], k: usize| -> Option<HashSet<u64>> {
        let mut cur: HashSet<u64> = HashSet::from([0]);
        for _ in 0..k {
            let next: HashSet<u64> = cur.iter().flat_map(|&u| paths.iter().map(move |&p| u | p)).collect();
            if next.len() > cap {
                return None;
            }
            cur = next;
        }
        Some(cur)
    };
    let (a, b) = (unions(&down, s.min(n))?, unions(&up, q.min(n))?);
    Some(a.iter().flat_map(|&x| b.iter().map(move |&y| (x | y).count_ones() as usize)).max().unwrap_or(0))
}
