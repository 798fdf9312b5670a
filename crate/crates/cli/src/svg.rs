//! Static SVG snapshots of a deployment.
//!
//! Geometry is written in field meters with the y axis pointing up; a single
//! group transform flips it to screen orientation.

use std::fmt::Write;

use aaso::coverage::{CoverageField, Sensor};

const MARGIN: f64 = 10.0;

/// `(start, end)` points of the sector's two straight edges.
pub fn sector_endpoints(s: &Sensor<f64>) -> ((f64, f64), (f64, f64)) {
    let half = s.view_angle / 2.0;
    let a = s.deviation() - half;
    let b = s.deviation() + half;
    (
        (s.x + s.radius * a.cos(), s.y + s.radius * a.sin()),
        (s.x + s.radius * b.cos(), s.y + s.radius * b.sin()),
    )
}

/// Path data for one sector, counterclockwise from `θ - α/2` to `θ + α/2`.
pub fn sector_path(s: &Sensor<f64>) -> String {
    let ((x1, y1), (x2, y2)) = sector_endpoints(s);
    if s.view_angle >= std::f64::consts::TAU {
        // two half arcs, since a single arc between equal points draws nothing
        let (xo, yo) = (2.0 * s.x - x1, 2.0 * s.y - y1);
        return format!(
            "M {x1} {y1} A {r} {r} 0 1 1 {xo} {yo} A {r} {r} 0 1 1 {x1} {y1} Z",
            r = s.radius
        );
    }
    let large = u8::from(s.view_angle > std::f64::consts::PI);
    format!(
        "M {} {} L {x1} {y1} A {r} {r} 0 {large} 1 {x2} {y2} Z",
        s.x,
        s.y,
        r = s.radius
    )
}

pub fn render_layout(field: &CoverageField<f64>, sensors: &[Sensor<f64>], title: &str) -> String {
    let (ox, oy) = field.origin();
    let (l, w) = (field.length(), field.width());
    let (vw, vh) = (l + 2.0 * MARGIN, w + 2.0 * MARGIN + 20.0);
    let (tx, ty) = (MARGIN - ox, MARGIN + 20.0 + w + oy);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        "<!-- field meters, y up; screen = translate({tx} {ty}) scale(1 -1) applied to (x, y) -->"
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{vw}" height="{vh}" viewBox="0 0 {vw} {vh}">"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{MARGIN}" y="16" font-family="sans-serif" font-size="12">{}</text>"#,
        escape(title)
    );
    let _ = writeln!(out, r#"<g transform="translate({tx} {ty}) scale(1 -1)">"#);
    let _ = writeln!(
        out,
        r##"<rect x="{ox}" y="{oy}" width="{l}" height="{w}" fill="#ffffff" stroke="#000000" stroke-width="1"/>"##
    );
    for s in sensors {
        let _ = writeln!(
            out,
            r##"<path d="{}" fill="#3b78c2" fill-opacity="0.35" stroke="#1f4f86" stroke-width="0.5"/>"##,
            sector_path(s)
        );
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="1.5" fill="#c0392b"/>"##, s.x, s.y);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
