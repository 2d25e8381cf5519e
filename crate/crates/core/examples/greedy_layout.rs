// Greedy layout of an arbitrary graph under a fixed order, within `floor(sqrt(2m))` pages.
//
// `cargo run --example greedy_layout`

use mixlayout::constructions::build_greedy_mixed;
use mixlayout::{max_rainbow, max_twist, validate_layout, Graph, LinearOrder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [8, 12, 16] {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::new(n, pairs)?;
        let mut vertices: Vec<usize> = (0..n).collect();
        vertices.shuffle(&mut rng);
        let order = LinearOrder::new(vertices)?;
        let layout = build_greedy_mixed(&g, &order)?;
        let cap = (2.0 * g.m() as f64).sqrt().floor();
        println!(
            "n={n} m={}: rainbow {} twist {} -> {} stacks + {} queues (cap {cap}), valid={}",
            g.m(),
            max_rainbow(&g, &order).0,
            max_twist(&g, &order).0,
            layout.stacks(),
            layout.queues(),
            validate_layout(&g, &layout).is_ok()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
