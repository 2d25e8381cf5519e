//! SVG arc diagrams: vertices on a horizontal spine, stack pages above it, queue pages below.

use std::fmt::Write as _;

use crate::layout::{MixedLayout, PageKind};

const STEP: usize = 40;
const MARGIN: usize = 30;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

pub fn page_color(page: usize) -> &'static str {
    PALETTE[page % PALETTE.len()]
}

/// Deterministic SVG; the caller is expected to have validated `layout`.
pub fn render_svg(layout: &MixedLayout) -> String {
    let n = layout.order.len();
    let x = |rank: usize| MARGIN + rank * STEP;
    let reach = |kind: PageKind| {
        layout
            .pages
            .iter()
            .filter(|p| p.kind == kind)
            .flat_map(|p| p.edges.iter().map(|&e| layout.order.span(e)))
            .map(|(a, b)| (b - a) * STEP / 2)
            .max()
            .unwrap_or(0)
    };
    let (above, below) = (reach(PageKind::Stack), reach(PageKind::Queue));
    let spine = MARGIN + above;
    let width = 2 * MARGIN + n.saturating_sub(1) * STEP;
    let height = spine + below + MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r##"<line class="spine" x1="{}" y1="{spine}" x2="{}" y2="{spine}" stroke="#000" stroke-width="1"/>"##,
        MARGIN.min(width),
        width - MARGIN.min(width)
    );
    for (p, page) in layout.pages.iter().enumerate() {
        let sweep = match page.kind {
            PageKind::Stack => 1,
            PageKind::Queue => 0,
        };
        let _ = writeln!(svg, r#"<g class="page" data-page="{p}" data-kind="{}">"#, page.kind);
        for &e in &page.edges {
            let (a, b) = layout.order.span(e);
            let r = (b - a) * STEP / 2;
            let _ = writeln!(
                svg,
                r#"<path class="arc" d="M {} {spine} A {r} {r} 0 0 {sweep} {} {spine}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
                x(a),
                x(b),
                page_color(p)
            );
        }
        svg.push_str("</g>\n");
    }
    for (rank, &v) in layout.order.vertices().iter().enumerate() {
        let _ = writeln!(svg, r##"<circle class="vertex" cx="{}" cy="{spine}" r="4" fill="#000"/>"##, x(rank));
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{v}</text>"#,
            x(rank),
            spine + 14
        );
    }
    svg.push_str("</svg>\n");
    svg
}
