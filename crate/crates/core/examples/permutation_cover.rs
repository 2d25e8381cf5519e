// Monotone subsequence covers and the matching whose pages they describe.
//
// `cargo run --example permutation_cover`

use mixlayout::solvers::{fixed_order_min_pages, permutation_min_monotone_cover, permutation_to_matching, Permutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["1,2,3,4,5", "2,4,1,3", "5,4,3,2,1", "3,6,1,4,7,2,5"] {
        let pi: Permutation = text.parse()?;
        let (g, order) = permutation_to_matching(&pi);
        let pages = fixed_order_min_pages(&g, &order, pi.len()).pages.ok_or("unsolved")?;
        let runs = permutation_min_monotone_cover(&pi, pages).ok_or("cover missing")?;
        let shown: Vec<String> = runs
            .iter()
            .map(|r| format!("{}{:?}", if r.increasing { "inc" } else { "dec" }, r.values))
            .collect();
        println!("pi = <{pi}>: {pages} monotone runs = {pages} pages of its matching: {}", shown.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
