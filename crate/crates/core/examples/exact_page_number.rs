// Exact mixed page numbers by searching all vertex orders.
//
// `cargo run --release --example exact_page_number`

use mixlayout::bounds::density_lower_bound_pages;
use mixlayout::solvers::{mixed_page_number_exact, ExactSearch, KindPolicy};
use mixlayout::Graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [4, 5, 6, 8] {
        let g = Graph::complete(n);
        let r = mixed_page_number_exact(&g, n)?;
        let w = r.witness.as_ref().ok_or("no witness")?;
        println!(
            "K_{n}: {} pages ({} stacks + {} queues), density lower bound {}",
            r.pages.unwrap_or(0),
            w.stacks(),
            w.queues(),
            density_lower_bound_pages(n, g.m())
        );
    }
    let petersen_like = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3), (1, 4), (2, 5), (3, 6)])?;
    for policy in [KindPolicy::Mixed, KindPolicy::StacksOnly, KindPolicy::QueuesOnly] {
        let r = ExactSearch::new(&petersen_like).policy(policy).run()?;
        println!("7-vertex graph, {policy:?}: {:?} pages after {} orders", r.pages, r.stats.orders_tried);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
