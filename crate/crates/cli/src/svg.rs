use std::fmt::Write as _;

use steinerspan::{GeoGraph, VertexKind};

const WIDTH: f64 = 800.0;

/// The graph on a viewport fitted to its bounding box plus a 5% margin.
/// Terminals are filled black discs, Steiner vertices smaller open red circles.
pub fn render(g: &GeoGraph) -> String {
    let pts = g.points();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(first) = pts.first() {
        (x0, x1, y0, y1) = (first.x, first.x, first.y, first.y);
        for p in pts {
            (x0, x1, y0, y1) = (x0.min(p.x), x1.max(p.x), y0.min(p.y), y1.max(p.y));
        }
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let m = 0.05 * span;
    let (w, h) = (x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);
    // SVG grows downwards, so y is mirrored.
    let (vx, vy) = (x0 - m, -(y1 + m));
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{}" viewBox="{vx} {vy} {w} {h}">"#,
        (WIDTH * h / w).round()
    )
    .unwrap();
    writeln!(out, r##"<rect x="{vx}" y="{vy}" width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();
    writeln!(out, r##"<g stroke="#404040" stroke-width="{}" stroke-linecap="round">"##, 0.002 * span).unwrap();
    for &[u, v] in g.edges() {
        let (p, q) = (pts[u as usize], pts[v as usize]);
        writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, p.x, -p.y, q.x, -q.y).unwrap();
    }
    out.push_str("</g>\n");
    writeln!(out, r##"<g fill="none" stroke="#d00000" stroke-width="{}">"##, 0.0015 * span).unwrap();
    for (p, _) in pts.iter().zip(g.kinds()).filter(|(_, k)| **k == VertexKind::Steiner) {
        writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, p.x, -p.y, 0.004 * span).unwrap();
    }
    out.push_str("</g>\n<g fill=\"#000000\">\n");
    for (p, _) in pts.iter().zip(g.kinds()).filter(|(_, k)| **k == VertexKind::Terminal) {
        writeln!(out, r#"<circle cx="{}" cy="{}" r="{}"/>"#, p.x, -p.y, 0.008 * span).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
