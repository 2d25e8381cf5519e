// Canonical JSON documents and SVG arc diagrams.
//
// `cargo run --example render_arc_diagram` writes `k66.json` and `k66.svg` to the temp directory.

use mixlayout::document::{meta, LayoutDocument};
use mixlayout::gridpaths::build_separated_knn;
use mixlayout::render::render_svg;
use serde_json::json;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let layout = build_separated_knn(6)?;
    let doc = LayoutDocument::from_layout(&layout, meta("knn-sep", json!({ "n": 6 })));
    let text = doc.to_json();
    let again = LayoutDocument::from_json(&text)?.to_json();
    if again != text {
        return Err("JSON round trip changed bytes".into());
    }
    let svg = render_svg(&layout);
    let dir = std::env::temp_dir();
    std::fs::write(dir.join("k66.json"), &text)?;
    std::fs::write(dir.join("k66.svg"), &svg)?;
    println!(
        "wrote {} ({} bytes) and {} with {} arcs",
        dir.join("k66.json").display(),
        text.len(),
        dir.join("k66.svg").display(),
        svg.matches("class=\"arc\"").count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
