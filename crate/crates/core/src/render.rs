//! SVG drawings of polygons, their trajectories and dual graphs.
//!
//! Lattice values are exact everywhere else; Cartesian coordinates appear
//! only here, printed with three decimals.

use std::fmt::Write as _;

use crate::billiards::BilliardsSystem;
use crate::error::BilliardsError;
use crate::grid::{Cell, DPoint};
use crate::plabic::Color;
use crate::polygon::GridPolygon;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per pane.
    pub scale: f64,
    pub show_trajectories: bool,
    pub show_plabic: bool,
    /// Trajectory colors, cycled in cycle order.
    pub palette: Vec<String>,
    /// Blank border in pixels.
    pub margins: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 40.0,
            show_trajectories: true,
            show_plabic: false,
            palette: ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            margins: 20.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RenderError {
    #[error("scale must be positive, got {0}")]
    BadScale(f64),
    #[error("palette is empty")]
    EmptyPalette,
    #[error("margins must be nonnegative, got {0}")]
    BadMargins(f64),
    #[error(transparent)]
    Billiards(#[from] BilliardsError),
}

impl RenderOptions {
    pub fn validate(&self) -> Result<(), RenderError> {
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(RenderError::BadScale(self.scale));
        }
        if self.palette.is_empty() {
            return Err(RenderError::EmptyPalette);
        }
        if !(self.margins >= 0.0 && self.margins.is_finite()) {
            return Err(RenderError::BadMargins(self.margins));
        }
        Ok(())
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Maps lattice coordinates to SVG pixels (y grows downward).
struct Frame {
    scale: f64,
    min_x: f64,
    max_y: f64,
    margins: f64,
}

impl Frame {
    fn point(&self, (x, y): (f64, f64)) -> (String, String) {
        (
            num(self.margins + (x - self.min_x) * self.scale),
            num(self.margins + (self.max_y - y) * self.scale),
        )
    }

    fn dpoint(&self, p: DPoint) -> (String, String) {
        self.point(p.to_cartesian())
    }
}

fn centroid(c: Cell) -> (f64, f64) {
    let (x, y) = c.centroid3();
    let (x, y) = (f64::from(x), f64::from(y));
    (x / 3.0 + y / 6.0, y * 3f64.sqrt() / 6.0)
}

/// Render `polygon` as a standalone SVG 1.1 document.
pub fn render_svg(polygon: &GridPolygon, opts: &RenderOptions) -> Result<String, RenderError> {
    opts.validate()?;
    let corners: Vec<(f64, f64)> = polygon.corners().iter().map(|v| v.to_dpoint().to_cartesian()).collect();
    let min_x = corners.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = corners.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = corners.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = corners.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    // room for boundary stubs of the dual graph
    let pad = if opts.show_plabic { 0.5 } else { 0.0 };
    let frame = Frame {
        scale: opts.scale,
        min_x: min_x - pad,
        max_y: max_y + pad,
        margins: opts.margins,
    };
    let width = num((max_x - min_x + 2.0 * pad) * opts.scale + 2.0 * opts.margins);
    let height = num((max_y - min_y + 2.0 * pad) * opts.scale + 2.0 * opts.margins);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );

    let _ = writeln!(out, r##"<g class="cells" stroke="#cccccc" stroke-width="1" fill="none">"##);
    for pane in polygon.interior_panes() {
        let (a, b) = pane.endpoints();
        let (x1, y1) = frame.dpoint(a.to_dpoint());
        let (x2, y2) = frame.dpoint(b.to_dpoint());
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    out.push_str("</g>\n");

    let mut d = String::new();
    for (k, v) in polygon.corners().iter().enumerate() {
        let (x, y) = frame.dpoint(v.to_dpoint());
        let _ = write!(d, "{}{x} {y} ", if k == 0 { "M" } else { "L" });
    }
    d.push('Z');
    let _ = writeln!(
        out,
        r##"<path class="boundary" d="{d}" fill="none" stroke="#000000" stroke-width="2"/>"##
    );

    if opts.show_trajectories {
        let system = BilliardsSystem::analyze(polygon)?;
        for (k, t) in system.trajectories().iter().enumerate() {
            let color = &opts.palette[k % opts.palette.len()];
            let _ = writeln!(
                out,
                r#"<g class="trajectory" data-cycle="{}" stroke="{color}" stroke-width="2" fill="none">"#,
                k + 1
            );
            for &(a, b) in &t.segments {
                let (x1, y1) = frame.dpoint(a);
                let (x2, y2) = frame.dpoint(b);
                let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            }
            out.push_str("</g>\n");
        }
    }

    if opts.show_plabic {
        let graph = crate::plabic::dual(polygon);
        let cells = polygon.cells();
        let pos = |e: crate::plabic::End| -> (f64, f64) {
            match e {
                crate::plabic::End::Vertex(v) => centroid(cells[v]),
                crate::plabic::End::Boundary(k) => {
                    // half a pane outward from the boundary midpoint
                    let m = polygon.boundary()[k].midpoint().to_cartesian();
                    let c = centroid(polygon.interior_cell(k));
                    let (dx, dy) = (m.0 - c.0, m.1 - c.1);
                    let len = (dx * dx + dy * dy).sqrt();
                    (m.0 + 0.5 * dx / len, m.1 + 0.5 * dy / len)
                }
            }
        };
        out.push_str(r##"<g class="plabic" stroke="#555555" stroke-width="1.5">"##);
        out.push('\n');
        for ends in graph.edges() {
            let (x1, y1) = frame.point(pos(ends[0]));
            let (x2, y2) = frame.point(pos(ends[1]));
            let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
        let r = num(opts.scale * 0.08);
        for (v, color) in graph.colors().iter().enumerate() {
            let (cx, cy) = frame.point(centroid(cells[v]));
            let fill = match color {
                Color::Black => "#000000",
                Color::White => "#ffffff",
            };
            let _ = writeln!(
                out,
                r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="{fill}" stroke="#000000"/>"##
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn groups(svg: &str) -> Vec<usize> {
        svg.split(r#"<g class="trajectory""#)
            .skip(1)
            .map(|g| g.split("</g>").next().unwrap().matches("<line").count())
            .collect()
    }

    #[test]
    fn triangle_has_one_group() {
        let svg = render_svg(&fixtures::triangle(), &RenderOptions::default()).unwrap();
        assert_eq!(groups(&svg), vec![3]);
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn hexagon_has_two_groups() {
        let svg = render_svg(&fixtures::hexagon(), &RenderOptions::default()).unwrap();
        assert_eq!(groups(&svg), vec![3, 3]);
    }

    #[test]
    fn segments_match_perimeter() {
        let p = fixtures::thirty_three_pane_polygon();
        let svg = render_svg(&p, &RenderOptions::default()).unwrap();
        let g = groups(&svg);
        assert_eq!(g.len(), 4);
        assert_eq!(g.iter().sum::<usize>(), 33);
    }

    #[test]
    fn deterministic_with_overlay() {
        let opts = RenderOptions {
            show_plabic: true,
            ..RenderOptions::default()
        };
        let p = fixtures::nine_pane_polygon();
        let a = render_svg(&p, &opts).unwrap();
        assert_eq!(a, render_svg(&p, &opts).unwrap());
        assert_eq!(a.matches("<circle").count(), p.area());
        assert!(!a.contains("-0.000"));
    }

    #[test]
    fn rejects_bad_options() {
        let t = fixtures::triangle();
        let bad = RenderOptions {
            scale: 0.0,
            ..RenderOptions::default()
        };
        assert_eq!(render_svg(&t, &bad), Err(RenderError::BadScale(0.0)));
        let bad = RenderOptions {
            palette: vec![],
            ..RenderOptions::default()
        };
        assert_eq!(render_svg(&t, &bad), Err(RenderError::EmptyPalette));
    }
}
