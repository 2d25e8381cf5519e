// Separated layouts of `K_{n,n}` and their grid-path pictures.
//
// `cargo run --example separated_bipartite`

use mixlayout::bounds::knn_bounds;
use mixlayout::gridpaths::{build_separated_knn, build_windmill, grid_dump, layout_to_paths, max_coverage};
use mixlayout::{validate_layout, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (stacks, queues) = build_windmill(6)?;
    println!("windmill n=6: {} stack paths, {} queue paths, {} points each", stacks.len(), queues.len(), stacks[0].len());
    let layout = build_separated_knn(6)?;
    print!("{}", grid_dump(&layout, 6)?);
    for n in 1..=9 {
        let l = build_separated_knn(n)?;
        let ok = validate_layout(&Graph::complete_bipartite(n), &l).is_ok();
        let b = knn_bounds(n);
        println!(
            "K_({n},{n}): {} stacks + {} queues, valid={ok}, general bounds [{}, {}]",
            l.stacks(),
            l.queues(),
            b.general.lower,
            b.general.upper
        );
    }
    let paths = layout_to_paths(&layout, 6)?;
    let lens: Vec<usize> = paths.iter().map(|p| p.len()).collect();
    println!("K_(6,6) page paths have {lens:?} points; 2+2 paths cover at most {}", max_coverage(6, 2, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
