use crate::graph::{Graph, LinearOrder};
use crate::layout::{span_relation, MixedLayout, Page, PageKind};

/// 2-SAT over variables `0..n`; literal `2v` is `v`, `2v + 1` is `not v`.
#[derive(Debug, Clone)]
pub struct TwoSat {
    vars: usize,
    implications: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat { vars, implications: vec![Vec::new(); 2 * vars] }
    }

    pub fn literal(var: usize, value: bool) -> usize {
        2 * var + usize::from(!value)
    }

    /// Adds the clause `a or b`.
    pub fn add_clause(&mut self, a: usize, b: usize) {
        self.implications[a ^ 1].push(b);
        self.implications[b ^ 1].push(a);
    }

    /// Satisfying assignment, if any.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = self.components();
        (0..self.vars)
            .map(|v| {
                let (t, f) = (comp[2 * v], comp[2 * v + 1]);
                // Tarjan numbers components in reverse topological order.
                (t != f).then_some(t < f)
            })
            .collect()
    }

    /// Tarjan's algorithm without recursion.
    fn components(&self) -> Vec<usize> {
        let n = self.implications.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut comp = vec![usize::MAX; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let (mut next_index, mut next_comp) = (0, 0);
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call = vec![(root, 0usize)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut child)) = call.last_mut() {
                if let Some(&w) = self.implications[v].get(*child) {
                    *child += 1;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
        comp
    }
}

#[derive(Debug, Clone)]
pub struct TwoPageSolution {
    pub kinds: [PageKind; 2],
    pub layout: MixedLayout,
}

/// Two pages of the given kinds under a fixed order, if possible. Either page may end up empty.
pub fn two_pages_with_kinds(g: &Graph, order: &LinearOrder, kinds: [PageKind; 2]) -> Option<MixedLayout> {
    let edges = g.edges();
    let spans: Vec<_> = edges.iter().map(|&e| order.span(e)).collect();
    let mut sat = TwoSat::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let rel = span_relation(spans[i], spans[j]);
            if !kinds[0].admits(rel) {
                sat.add_clause(TwoSat::literal(i, false), TwoSat::literal(j, false));
            }
            if !kinds[1].admits(rel) {
                sat.add_clause(TwoSat::literal(i, true), TwoSat::literal(j, true));
            }
        }
    }
    let on_first = sat.solve()?;
    let split = |want: bool| edges.iter().zip(&on_first).filter(|(_, &f)| f == want).map(|(&e, _)| e).collect();
    let pages = vec![Page::new(kinds[0], split(true)), Page::new(kinds[1], split(false))];
    Some(MixedLayout::new(order.clone(), pages))
}

/// Tries (stack, queue), then (stack, stack), then (queue, queue).
pub fn fixed_order_two_pages_2sat(g: &Graph, order: &LinearOrder) -> Option<TwoPageSolution> {
    use PageKind::{Queue, Stack};
    [[Stack, Queue], [Stack, Stack], [Queue, Queue]]
        .into_iter()
        .find_map(|kinds| two_pages_with_kinds(g, order, kinds).map(|layout| TwoPageSolution { kinds, layout }))
}
