//! SVG 1.1 rendering of chord systems in the style of the figures:
//! endpoints on a circle, chords as circular arcs bulging toward the
//! center, arrowheads at heads, and index labels.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::chord::ChordSystem;

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const RADIUS: f64 = 150.0;

fn endpoint(k: usize, m: usize) -> (f64, f64) {
    // counterclockwise on screen: SVG y grows downward
    let a = 2.0 * PI * k as f64 / m as f64;
    (CENTER + RADIUS * a.cos(), CENTER - RADIUS * a.sin())
}

/// Circular arc from `p1` to `p2` bulging toward the disk center.
fn arc_path(p1: (f64, f64), p2: (f64, f64)) -> String {
    let (dx, dy) = (p2.0 - p1.0, p2.1 - p1.1);
    let d = (dx * dx + dy * dy).sqrt();
    let r = 0.72 * d;
    let h = (r * r - d * d / 4.0).sqrt();
    let mid = ((p1.0 + p2.0) / 2.0, (p1.1 + p2.1) / 2.0);
    let perp = (-dy / d, dx / d);
    // of the two arc centers, the one farther from the disk center makes
    // the arc bow inward
    let candidates = [
        (mid.0 + h * perp.0, mid.1 + h * perp.1),
        (mid.0 - h * perp.0, mid.1 - h * perp.1),
    ];
    let dist2 = |c: (f64, f64)| (c.0 - CENTER).powi(2) + (c.1 - CENTER).powi(2);
    let c = if dist2(candidates[0]) >= dist2(candidates[1]) {
        candidates[0]
    } else {
        candidates[1]
    };
    let v1 = (p1.0 - c.0, p1.1 - c.1);
    let v2 = (p2.0 - c.0, p2.1 - c.1);
    let sweep = if v1.0 * v2.1 - v1.1 * v2.0 > 0.0 { 1 } else { 0 };
    format!(
        "M {:.2} {:.2} A {:.2} {:.2} 0 0 {} {:.2} {:.2}",
        p1.0, p1.1, r, r, sweep, p2.0, p2.1
    )
}

/// Renders a chord system as a standalone SVG document. Chord paths
/// carry `data-tail`/`data-head` endpoint attributes so the drawing can
/// be checked against its source.
pub fn render_system(s: &ChordSystem, title: Option<&str>) -> String {
    let m = s.diagram().points();
    let mut out = String::new();
    out.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    out.push('\n');
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        out,
        r##"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="8" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="#1a1a1a"/></marker></defs>"##
    );
    if let Some(t) = title {
        let _ = writeln!(out, "  <title>{}</title>", escape(t));
    }
    let _ = writeln!(
        out,
        r##"  <circle cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="#999" stroke-width="1"/>"##
    );
    for k in 0..m {
        let (x, y) = endpoint(k, m);
        let _ = writeln!(
            out,
            r##"  <circle class="endpoint" cx="{x:.2}" cy="{y:.2}" r="3" fill="#333"/>"##
        );
        let lr = RADIUS + 16.0;
        let a = 2.0 * PI * k as f64 / m as f64;
        let (lx, ly) = (CENTER + lr * a.cos(), CENTER - lr * a.sin());
        let _ = writeln!(
            out,
            r##"  <text class="point-label" x="{lx:.2}" y="{ly:.2}" font-size="11" fill="#777" text-anchor="middle" dominant-baseline="middle">{k}</text>"##
        );
    }
    for (i, &(tail, head)) in s.orientations().iter().enumerate() {
        let p1 = endpoint(tail, m);
        let p2 = endpoint(head, m);
        let _ = writeln!(
            out,
            r##"  <path class="chord" data-tail="{tail}" data-head="{head}" d="{}" fill="none" stroke="#1a1a1a" stroke-width="1.6" marker-end="url(#arrow)"/>"##,
            arc_path(p1, p2)
        );
        // order label near the tail end, pulled slightly inward
        let t = 0.22;
        let (lx, ly) = (
            p1.0 + t * (CENTER - p1.0),
            p1.1 + t * (CENTER - p1.1),
        );
        let _ = writeln!(
            out,
            r##"  <text class="chord-label" x="{lx:.2}" y="{ly:.2}" font-size="13" fill="#b03030" text-anchor="middle" dominant-baseline="middle">{}</text>"##,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::{coxeter_order, ChordDiagram};

    fn chord_endpoints(svg: &str) -> Vec<(usize, usize)> {
        svg.lines()
            .filter(|l| l.contains(r#"class="chord""#))
            .map(|l| {
                let grab = |key: &str| {
                    let start = l.find(key).unwrap() + key.len();
                    l[start..].split('"').next().unwrap().parse().unwrap()
                };
                (grab(r#"data-tail=""#), grab(r#"data-head=""#))
            })
            .collect()
    }

    #[test]
    fn pentagon_structure() {
        let s = coxeter_order(&crate::realize::realize_cycle(5).unwrap());
        let svg = render_system(&s, Some("pentagon"));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"class="chord""#).count(), 5);
        assert_eq!(svg.matches(r#"class="endpoint""#).count(), 10);
        assert!(svg.contains("<title>pentagon</title>"));
    }

    #[test]
    fn single_chord() {
        let d = ChordDiagram::new(vec![(0, 1)]).unwrap();
        let s = crate::chord::ChordSystem::new(d, vec![(0, 1)]).unwrap();
        let svg = render_system(&s, None);
        assert_eq!(svg.matches(r#"class="chord""#).count(), 1);
        assert_eq!(svg.matches("marker-end").count(), 1);
    }

    #[test]
    fn rendered_chords_reproduce_the_input() {
        // triangle-with-tail: crossing pattern re-extracted from the SVG
        // equals the source diagram
        let d = ChordDiagram::new(vec![(0, 2), (1, 5), (3, 6), (4, 7)]).unwrap();
        let s = coxeter_order(&d);
        let svg = render_system(&s, None);
        let extracted = chord_endpoints(&svg);
        assert_eq!(extracted, s.orientations());
        let d2 = ChordDiagram::new(extracted).unwrap();
        assert!(d2.equivalent(&d));
    }

    #[test]
    fn arc_geometry_stays_inside_the_disk() {
        // arc endpoints must sit on the boundary circle
        for m in [2usize, 6, 10] {
            for k in 0..m {
                let (x, y) = endpoint(k, m);
                let r = ((x - CENTER).powi(2) + (y - CENTER).powi(2)).sqrt();
                assert!((r - RADIUS).abs() < 1e-9);
            }
        }
        // the arc path is well-formed for a near-diameter chord
        let p = arc_path(endpoint(0, 6), endpoint(3, 6));
        assert!(p.starts_with("M ") && p.contains(" A "));
    }
}
