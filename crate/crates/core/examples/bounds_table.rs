// Closed-form bounds for complete and complete bipartite graphs.
//
// `cargo run --example bounds_table`

use mixlayout::bounds::{density_max_edges, kn_bounds, knn_bounds, sep_max_edges};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4} {:>14} {:>22}", "n", "K_n [lo, hi]", "K_(n,n) sep / [lo, hi]");
    for n in [1, 2, 4, 6, 8, 10, 15, 20, 25, 40] {
        let k = kn_bounds(n);
        let b = knn_bounds(n);
        println!(
            "{n:>4} {:>14} {:>22}",
            format!("[{}, {}]", k.lower, k.upper),
            format!("{} / [{}, {}]", b.separated, b.general.lower, b.general.upper)
        );
    }
    println!("f(25, k) for k = 1..8: {:?}", (1..=8).map(|k| density_max_edges(25, k)).collect::<Vec<_>>());
    println!("separated K_(6,6) edge capacity with (s, q) = (2, 2): {}", sep_max_edges(6, 2, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
