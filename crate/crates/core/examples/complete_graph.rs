// Layouts of complete graphs with `2 ceil(n/5)` pages.
//
// `cargo run --example complete_graph`

use mixlayout::bounds::kn_bounds;
use mixlayout::constructions::build_kn_mixed;
use mixlayout::{validate_layout, Graph, PageKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [5, 7, 10, 25] {
        let layout = build_kn_mixed(n)?;
        let report = validate_layout(&Graph::complete(n), &layout);
        let sizes: Vec<String> = layout
            .pages
            .iter()
            .map(|p| format!("{}{}", if p.kind == PageKind::Stack { 'S' } else { 'Q' }, p.edges.len()))
            .collect();
        let b = kn_bounds(n);
        println!(
            "K_{n}: {} stacks + {} queues, {} edges, valid={}, bounds [{}, {}], pages {}",
            layout.stacks(),
            layout.queues(),
            layout.edge_count(),
            report.is_ok(),
            b.lower,
            b.upper,
            sizes.join(" ")
        );
        if !report.is_ok() {
            return Err(report.summary().into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
