//! OBJ, canonical JSON and SVG projection output for Plattenbauten.

use plattenbau::plattenbau_geom::{Plattenbau, Rect3};
use std::fmt::Write;

/// Rectangles sorted by id; serialization of this is the canonical form.
pub fn canonical(p: &Plattenbau) -> Plattenbau {
    let mut q = p.clone();
    q.rects.sort_by_key(|r| r.id);
    q
}

pub fn to_json(p: &Plattenbau) -> String {
    serde_json::to_string_pretty(&canonical(p)).expect("Plattenbau serializes")
}

fn corners(r: &Rect3) -> [[f64; 3]; 4] {
    let (lo, hi) = r.bounds();
    let [j, k] = r.axis.others();
    let base: [f64; 3] = std::array::from_fn(|i| lo[i].to_f64());
    let mut out = [base; 4];
    out[1][j] = hi[j].to_f64();
    out[2][j] = hi[j].to_f64();
    out[2][k] = hi[k].to_f64();
    out[3][k] = hi[k].to_f64();
    out
}

/// One object per rectangle, two triangles each.
pub fn to_obj(p: &Plattenbau) -> String {
    let mut s = String::new();
    for (i, r) in canonical(p).rects.iter().enumerate() {
        writeln!(s, "o rect_{}", r.id).unwrap();
        for c in corners(r) {
            writeln!(s, "v {} {} {}", c[0], c[1], c[2]).unwrap();
        }
        let b = 4 * i + 1;
        writeln!(s, "f {} {} {}", b, b + 1, b + 2).unwrap();
        writeln!(s, "f {} {} {}", b, b + 2, b + 3).unwrap();
    }
    s
}

const AXES: [char; 3] = ['x', 'y', 'z'];

/// The projection along `drop`: rectangles parallel to the image plane are
/// drawn as filled rectangles, the others as segments.
pub fn to_svg(p: &Plattenbau, drop: usize) -> String {
    let [a, b] = [(drop + 1) % 3, (drop + 2) % 3];
    let (a, b) = (a.min(b), a.max(b));
    let p = canonical(p);
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for r in &p.rects {
        let (l, h) = r.bounds();
        for (t, k) in [a, b].into_iter().enumerate() {
            lo[t] = lo[t].min(l[k].to_f64());
            hi[t] = hi[t].max(h[k].to_f64());
        }
    }
    if p.rects.is_empty() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let scale = 400.0 / (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let pad = 20.0;
    let x = |v: f64| pad + (v - lo[0]) * scale;
    // svg y grows downwards
    let y = |v: f64| pad + (hi[1] - v) * scale;
    let (w, h) = (2.0 * pad + (hi[0] - lo[0]) * scale, 2.0 * pad + (hi[1] - lo[1]) * scale);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}">"#).unwrap();
    writeln!(s, "<!-- projection onto the {}{} plane -->", AXES[a], AXES[b]).unwrap();
    for r in &p.rects {
        let (l, u) = r.bounds();
        let (x0, x1, y0, y1) = (x(l[a].to_f64()), x(u[a].to_f64()), y(u[b].to_f64()), y(l[b].to_f64()));
        if r.axis.idx() == drop {
            writeln!(
                s,
                r#"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="steelblue" fill-opacity="0.15" stroke="black"><title>{}</title></rect>"#,
                x1 - x0,
                y1 - y0,
                r.id
            )
            .unwrap();
        } else {
            writeln!(s, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}" stroke="darkred" stroke-width="2"><title>{}</title></line>"#, r.id).unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}

/// File suffixes and contents of the three projections.
pub fn svg_projections(p: &Plattenbau) -> Vec<(String, String)> {
    (0..3)
        .map(|drop| {
            let [a, b] = [(drop + 1) % 3, (drop + 2) % 3];
            let name = format!("{}{}", AXES[a.min(b)], AXES[a.max(b)]);
            (name, to_svg(p, drop))
        })
        .collect()
}
