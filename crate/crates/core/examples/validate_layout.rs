// What the validator reports when a layout breaks the page rules.
//
// `cargo run --example validate_layout`

use mixlayout::constructions::build_kn_mixed;
use mixlayout::{edge_relation, validate_layout, Edge, Graph, LinearOrder, PageKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let order = LinearOrder::identity(4);
    for (e, f) in [((0, 2), (1, 3)), ((0, 3), (1, 2)), ((0, 1), (2, 3)), ((0, 1), (1, 2))] {
        let rel = edge_relation(&order, Edge::new(e.0, e.1), Edge::new(f.0, f.1))?;
        println!("{e:?} vs {f:?}: {rel:?}");
    }
    let g = Graph::complete(10);
    let mut layout = build_kn_mixed(10)?;
    println!("K_10 as built: valid={}", validate_layout(&g, &layout).is_ok());
    let queue = layout.pages.iter().position(|p| p.kind == PageKind::Queue).ok_or("no queue")?;
    let moved = layout.pages[queue].edges.remove(0);
    layout.pages[queue].kind = PageKind::Stack;
    println!("after retyping page {queue} and dropping {moved}:");
    for v in validate_layout(&g, &layout).violations.iter().take(4) {
        println!("  {v}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
