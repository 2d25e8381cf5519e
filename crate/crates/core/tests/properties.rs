//! Randomised invariants.

use std::collections::BTreeMap;

use mixlayout::constructions::build_greedy_mixed;
use mixlayout::document::LayoutDocument;
use mixlayout::solvers::fixed_order_min_pages;
use mixlayout::{
    edge_relation, max_rainbow, max_twist, min_queues_fixed_order, validate_layout, EdgeRelation, Graph,
    LinearOrder, MixedLayout, Page,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph_and_order(max_n: usize) -> impl Strategy<Value = (Graph, LinearOrder)> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let total = pairs.len();
        (subsequence(pairs, 0..=total), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(move |(edges, order)| (Graph::new(n, edges).unwrap(), LinearOrder::new(order).unwrap()))
    })
}

proptest! {
    #[test]
    fn relation_is_symmetric_and_reversal_invariant((g, order) in graph_and_order(9)) {
        let rev = order.reversed();
        for &e in g.edges() {
            for &f in g.edges() {
                let r = edge_relation(&order, e, f).unwrap();
                prop_assert_eq!(r, edge_relation(&order, f, e).unwrap());
                prop_assert_eq!(r, edge_relation(&rev, e, f).unwrap());
                if e == f {
                    prop_assert_eq!(r, EdgeRelation::SharesEndpoint);
                }
            }
        }
    }

    #[test]
    fn verdict_survives_reversal((g, order) in graph_and_order(8), split in any::<u64>()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &e) in g.edges().iter().enumerate() {
            if split >> (i % 64) & 1 == 1 { a.push(e) } else { b.push(e) }
        }
        let layout = MixedLayout::new(order, vec![Page::stack(a), Page::queue(b)]);
        prop_assert_eq!(validate_layout(&g, &layout).is_ok(), validate_layout(&g, &layout.reversed()).is_ok());
    }

    #[test]
    fn nesting_levels_are_valid_and_optimal((g, order) in graph_and_order(10)) {
        let queues = min_queues_fixed_order(&g, &order);
        prop_assert_eq!(queues.len(), max_rainbow(&g, &order).0);
        prop_assert!(validate_layout(&g, &MixedLayout::new(order, queues)).is_ok());
    }

    #[test]
    fn single_page_validity_matches_patterns((g, order) in graph_and_order(8)) {
        let edges = g.edges().to_vec();
        let stack = MixedLayout::new(order.clone(), vec![Page::stack(edges.clone())]);
        let queue = MixedLayout::new(order.clone(), vec![Page::queue(edges)]);
        prop_assert_eq!(validate_layout(&g, &stack).is_ok(), max_twist(&g, &order).0 <= 1);
        prop_assert_eq!(validate_layout(&g, &queue).is_ok(), max_rainbow(&g, &order).0 <= 1);
    }

    #[test]
    fn greedy_respects_its_bound((g, order) in graph_and_order(12)) {
        let l = build_greedy_mixed(&g, &order).unwrap();
        prop_assert!(validate_layout(&g, &l).is_ok());
        prop_assert!(l.page_count() <= (2.0 * g.m() as f64).sqrt().floor() as usize);
    }

    #[test]
    fn document_round_trips((g, order) in graph_and_order(9)) {
        let l = build_greedy_mixed(&g, &order).unwrap();
        let doc = LayoutDocument::from_layout(&l, BTreeMap::new());
        let text = doc.to_json();
        let back = LayoutDocument::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.to_layout().unwrap(), l);
    }

    #[test]
    fn fixed_order_witness_uses_reported_pages((g, order) in graph_and_order(7)) {
        let r = fixed_order_min_pages(&g, &order, g.m().max(1));
        let pages = r.pages.unwrap();
        let w = r.witness.unwrap();
        prop_assert_eq!(w.page_count(), pages);
        prop_assert!(validate_layout(&g, &w).is_ok());
        prop_assert!(pages <= min_queues_fixed_order(&g, &order).len().max(1));
    }
}
