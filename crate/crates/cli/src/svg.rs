//! Hand-written SVG for the projection diagrams.
//!
//! Plane coordinates are scaled by 100 with y pointing up, inside a fixed
//! `600 × 600` view box centred on the origin.

use std::fmt::Write;

use atlas_core::projection::{FigureSet, PanelPoint};

const SCALE: f64 = 100.0;
const HALF: f64 = 300.0;

/// Formats a coordinate with three decimals and no negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn header(out: &mut String, width: f64, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(-HALF),
        num(-HALF),
        num(width),
        num(2.0 * HALF),
        num(width),
        num(2.0 * HALF)
    );
    let _ = writeln!(out, "<title>{title}</title>");
}

fn axes(out: &mut String, cx: f64) {
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"0.000\" x2=\"{}\" y2=\"0.000\" stroke=\"#ccc\"/>",
        num(cx - HALF + 10.0),
        num(cx + HALF - 10.0)
    );
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccc\"/>",
        num(cx),
        num(-HALF + 10.0),
        num(cx),
        num(HALF - 10.0)
    );
}

fn dot(out: &mut String, x: f64, y: f64, label: &str) {
    let (px, py) = (x * SCALE, -y * SCALE);
    let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>", num(px), num(py));
    if !label.is_empty() {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{label}</text>",
            num(px + 6.0),
            num(py - 6.0)
        );
    }
}

/// One diagram: every projected point labelled with its multiplicity, the
/// centre (when roots land there) as `m+rank`.
pub fn figure_svg(set: &FigureSet) -> String {
    let mut out = String::new();
    header(&mut out, 2.0 * HALF, &set.name);
    axes(&mut out, 0.0);
    for p in &set.points {
        let at_center = set.center().is_some_and(|c| c.exact == p.exact);
        let label = if at_center {
            format!("{}+{}", p.multiplicity, set.rank)
        } else if p.multiplicity > 1 {
            p.multiplicity.to_string()
        } else {
            String::new()
        };
        dot(&mut out, p.x, p.y, &label);
    }
    out.push_str("</svg>\n");
    out
}

/// The three parallel planes of c3 side by side, each in its own `(s, t)`
/// coordinates.
pub fn panels_svg(panels: &[(String, Vec<PanelPoint>)]) -> String {
    let mut out = String::new();
    let width = 2.0 * HALF * panels.len() as f64;
    header(&mut out, width, "c3");
    for (k, (label, pts)) in panels.iter().enumerate() {
        let cx = 2.0 * HALF * k as f64;
        let _ = writeln!(out, "<g transform=\"translate({},0)\">", num(cx));
        axes(&mut out, 0.0);
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" font-size=\"16\">{label}</text>", num(-HALF + 20.0), num(-HALF + 30.0));
        for p in pts {
            dot(&mut out, p.x, p.y, "");
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_negative_zero() {
        assert_eq!(num(-0.0001), "0.000");
        assert_eq!(num(-1.5), "-1.500");
    }
}
