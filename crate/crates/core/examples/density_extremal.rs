// Graphs with the most edges a 1-stack `(k-1)`-queue layout can hold.
//
// `cargo run --example density_extremal`

use mixlayout::bounds::{density_lower_bound_pages, density_max_edges};
use mixlayout::constructions::{build_density_extremal, expand_double_star, DoubleStar};
use mixlayout::validate_layout;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, k) in [(9, 2), (13, 3), (25, 6), (41, 10)] {
        let (g, layout) = build_density_extremal(n, k)?;
        let ok = validate_layout(&g, &layout).is_ok();
        let sizes: Vec<usize> = layout.pages.iter().map(|p| p.edges.len()).collect();
        println!(
            "G({n},{k}): {} edges, f(n,k) = {}, pages {sizes:?}, valid={ok}, density lower bound {}",
            g.m(),
            density_max_edges(n, k),
            density_lower_bound_pages(n, g.m())
        );
    }
    let star = expand_double_star(DoubleStar { left: 9, right: 15 })?;
    println!("double star <9, 15> has {} edges", star.len());
    match build_density_extremal(24, 6) {
        Err(e) => println!("(24, 6) rejected: {e}"),
        Ok(_) => return Err("even n accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
