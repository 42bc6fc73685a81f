//! SVG rendering: one `<circle>` per circle, grouped by classification.

use std::fmt::Write;

use orthocircle::analysis::{select_red, Classification};
use orthocircle::arrangement::Arrangement;
use orthocircle::geom::CircleId;

const GROUPS: [(&str, &str); 4] = [("other", "#1f77b4"), ("green", "#2ca02c"), ("black", "#000000"), ("red", "#d62728")];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn group_of(id: &CircleId, class: Option<&Classification>) -> &'static str {
    match class {
        Some(c) if &c.red == id => "red",
        Some(c) if c.black.contains(id) => "black",
        Some(c) if c.green.contains(id) => "green",
        _ => "other",
    }
}

/// Renders the arrangement with y pointing up. Colors follow the red/black/
/// green classification when one exists.
pub fn render(arr: &Arrangement) -> String {
    let class = select_red(arr).ok().flatten();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for c in arr.circles() {
        x0 = x0.min(c.center.x - c.radius);
        x1 = x1.max(c.center.x + c.radius);
        y0 = y0.min(c.center.y - c.radius);
        y1 = y1.max(c.center.y + c.radius);
    }
    if arr.is_empty() {
        (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
    }
    let (w, h) = (x1 - x0, y1 - y0);
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = 0.005 * (w * w + h * h).sqrt();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        x0 - mx,
        -(y1 + my),
        w + 2.0 * mx,
        h + 2.0 * my
    );
    let _ = writeln!(out, "<g fill=\"none\" stroke-width=\"{stroke}\">");
    for (name, color) in GROUPS {
        let members: Vec<_> = arr.circles().iter().filter(|c| group_of(&c.id, class.as_ref()) == name).collect();
        if members.is_empty() {
            continue;
        }
        let _ = writeln!(out, "<g id=\"{name}\" stroke=\"{color}\">");
        for c in members {
            let _ = writeln!(
                out,
                "<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                escape(c.id.as_str()),
                c.center.x,
                -c.center.y,
                c.radius
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
