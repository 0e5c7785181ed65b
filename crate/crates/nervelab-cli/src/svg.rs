//! Deterministic SVG figures: one translucent shape per body with a
//! nine-color palette cycling by index, witness points as labeled dots.

use nervelab::constructions::ConvexFamily;
use nervelab::geom::{ConvexBody, Point, Rat};
use num_traits::ToPrimitive;
use std::fmt::Write;

const PALETTE: [&str; 9] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#9a6324",
    "#2f857a",
];

fn fx(r: &Rat) -> f64 {
    // rendering only; no verdict ever reads this value
    r.to_f64().expect("coordinate fits in f64")
}

/// Render `family` as a standalone SVG document. Identical inputs produce
/// identical bytes.
pub fn render_family(family: &ConvexFamily) -> String {
    // bounding box over hull rings and witness points
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for b in family.bodies() {
        for p in b.hull_ring() {
            pts.push((fx(&p.x), fx(&p.y)));
        }
    }
    for w in &family.witnesses {
        let p = family.witness_point(w);
        pts.push((fx(&p.x), fx(&p.y)));
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in &pts {
        x0 = x0.min(*x);
        y0 = y0.min(*y);
        x1 = x1.max(*x);
        y1 = y1.max(*y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let pad = 0.1 * ((x1 - x0).max(y1 - y0).max(1.0));
    let (x0, y0, x1, y1) = (x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    let scale = 640.0 / (x1 - x0).max(y1 - y0);
    let width = (x1 - x0) * scale;
    let height = (y1 - y0) * scale;
    let tx = move |x: f64| (x - x0) * scale;
    let ty = move |y: f64| (y1 - y) * scale;

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    );
    let _ = writeln!(s, "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for (i, body) in family.bodies().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        render_body(&mut s, body, color, &tx, &ty);
    }
    for w in &family.witnesses {
        let p = family.witness_point(w);
        let (cx, cy) = (tx(fx(&p.x)), ty(fx(&p.y)));
        let _ = writeln!(
            s,
            "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"3\" fill=\"black\"/>"
        );
        let label: Vec<String> = w.label.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            s,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" font-family=\"monospace\">{{{}}}</text>",
            cx + 5.0,
            cy - 5.0,
            label.join(",")
        );
    }
    // palette legend, one swatch per body index
    for (i, _) in family.bodies().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = 12.0 + 16.0 * i as f64;
        let _ = writeln!(
            s,
            "  <rect x=\"6\" y=\"{:.1}\" width=\"10\" height=\"10\" fill=\"{color}\"/>",
            y - 9.0
        );
        let _ = writeln!(
            s,
            "  <text x=\"20\" y=\"{y:.1}\" font-size=\"11\" font-family=\"monospace\">{i}</text>"
        );
    }
    s.push_str("</svg>\n");
    s
}

fn render_body(
    s: &mut String,
    body: &ConvexBody,
    color: &str,
    tx: &impl Fn(f64) -> f64,
    ty: &impl Fn(f64) -> f64,
) {
    let ring = body.hull_ring();
    let map = |p: &Point| (tx(fx(&p.x)), ty(fx(&p.y)));
    match body.dim() {
        0 => {
            let (cx, cy) = map(&ring[0]);
            let _ = writeln!(
                s,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"{color}\" fill-opacity=\"0.6\" stroke=\"{color}\"/>"
            );
        }
        1 => {
            let (x1, y1) = map(&ring[0]);
            let (x2, y2) = map(&ring[1]);
            let _ = writeln!(
                s,
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{color}\" stroke-width=\"3\" stroke-opacity=\"0.55\"/>"
            );
        }
        _ => {
            let mut coords = String::new();
            for p in ring {
                let (x, y) = map(p);
                let _ = write!(coords, "{x:.2},{y:.2} ");
            }
            let _ = writeln!(
                s,
                "  <polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.3\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
                coords.trim_end()
            );
        }
    }
}
