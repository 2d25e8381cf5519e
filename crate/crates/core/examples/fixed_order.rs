// Fixed-order questions: backtracking minimum, two pages by 2-SAT, queues by nesting depth.
//
// `cargo run --example fixed_order`

use mixlayout::solvers::{fixed_order_min_pages, fixed_order_two_pages_2sat, two_pages_with_kinds};
use mixlayout::{min_queues_fixed_order, Graph, LinearOrder, PageKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let order = LinearOrder::identity(6);
    let rainbow = Graph::new(6, [(0, 5), (1, 4), (2, 3)])?;
    let twist = Graph::new(6, [(0, 3), (1, 4), (2, 5)])?;
    for (name, g) in [("3-rainbow", &rainbow), ("3-twist", &twist)] {
        let best = fixed_order_min_pages(g, &order, 3);
        let queues = min_queues_fixed_order(g, &order).len();
        let qq = two_pages_with_kinds(g, &order, [PageKind::Queue, PageKind::Queue]).is_some();
        let kinds = fixed_order_two_pages_2sat(g, &order).map(|s| s.kinds);
        println!("{name}: min pages {:?}, queues needed {queues}, two queues ok={qq}, 2-SAT picks {kinds:?}", best.pages);
    }
    let k6 = Graph::complete(6);
    let r = fixed_order_min_pages(&k6, &order, 4);
    println!("K_6 on 0..5: {:?} pages, {} search nodes", r.pages, r.stats.nodes);
    let k8 = Graph::complete(8);
    println!("K_8 on 0..7 fits two pages: {}", fixed_order_two_pages_2sat(&k8, &LinearOrder::identity(8)).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
