//! Deterministic SVG rendering: the boundary as a closed path, visibility
//! edges as chords, and optional class membership as vertex fill colors.

use polyvis::geom::{SimplePolygon, VisibilityGraph};
use std::fmt::Write as _;

/// Fill colors cycled by class id.
const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

/// Renders the polygon, its chords (when a graph is given), and per-vertex
/// class colors (when an assignment is given). Same inputs always produce
/// byte-identical output; the viewBox fits the polygon with a 5% margin.
pub fn render_svg(
    polygon: &SimplePolygon,
    visgraph: Option<&VisibilityGraph>,
    class_of: Option<&[usize]>,
) -> String {
    let n = polygon.len();
    // SVG y grows downward; mirror the y coordinates so the polygon keeps
    // its mathematical orientation on screen.
    let pts: Vec<(f64, f64)> = polygon
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = v.to_f64();
            (x, -y)
        })
        .collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let width = (max_x - min_x).max(1e-9);
    let height = (max_y - min_y).max(1e-9);
    let margin = 0.05 * width.max(height);
    let stroke = (width.max(height) / 200.0).max(1e-9);
    let vertex_r = 2.5 * stroke;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt(min_x - margin),
        fmt(min_y - margin),
        fmt(width + 2.0 * margin),
        fmt(height + 2.0 * margin),
    );
    if let Some(g) = visgraph {
        for i in 0..n {
            for &j in g.incident(i) {
                // Chords only, each once.
                if j > i && (i + 1) % n != j && (j + 1) % n != i {
                    let _ = writeln!(
                        out,
                        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999" stroke-width="{}"/>"##,
                        fmt(pts[i].0),
                        fmt(pts[i].1),
                        fmt(pts[j].0),
                        fmt(pts[j].1),
                        fmt(stroke),
                    );
                }
            }
        }
    }
    let mut d = String::new();
    for (idx, &(x, y)) in pts.iter().enumerate() {
        let _ = write!(d, "{}{} {}", if idx == 0 { "M" } else { " L" }, fmt(x), fmt(y));
    }
    let _ = writeln!(
        out,
        r##"  <path d="{d} Z" fill="none" stroke="#000000" stroke-width="{}"/>"##,
        fmt(2.0 * stroke),
    );
    for (i, &(x, y)) in pts.iter().enumerate() {
        let fill = match class_of {
            Some(classes) => PALETTE[classes[i] % PALETTE.len()],
            None => "#000000",
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
            fmt(x),
            fmt(y),
            fmt(vertex_r),
        );
    }
    out.push_str("</svg>\n");
    out
}

fn fmt(v: f64) -> String {
    // Shortest round-trip formatting keeps the output stable and diffable.
    format!("{v}")
}
