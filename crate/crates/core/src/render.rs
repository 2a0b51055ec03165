//! Schematic drawings of decorated polytopes.
//!
//! Vertices are placed with [`AlgebraKind::embed`], so `δ` points straight
//! up. The two vertical δ-edges are cut by tick marks into pieces whose
//! lengths are the parts of the corresponding partition.

use std::fmt::Write as _;

use crate::lusztig::Partition;
use crate::polytope::DecoratedPolytope;
use crate::root_data::{AlgebraKind, RootVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "svg" => Some(Format::Svg),
            "tikz" => Some(Format::Tikz),
            _ => None,
        }
    }
}

/// Plane geometry of a polytope, ready to draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    /// Boundary polygon in cyclic order (one point for the zero polytope).
    pub outline: Vec<(i64, i64)>,
    /// Points where the δ-edges are cut, excluding the edge endpoints.
    pub ticks: Vec<(i64, i64)>,
}

fn cuts(kind: AlgebraKind, start: RootVector, parts: &Partition) -> Vec<(i64, i64)> {
    let delta = kind.delta();
    let mut at = start;
    let mut out = Vec::new();
    let n = parts.len();
    for (i, &p) in parts.parts().iter().enumerate() {
        at += delta * i64::from(p);
        if i + 1 < n {
            out.push(kind.embed(at));
        }
    }
    out
}

impl Drawing {
    pub fn of(p: &DecoratedPolytope) -> Self {
        let kind = p.kind();
        let fan = p.vertices();
        let outline = p.boundary().into_iter().map(|v| kind.embed(v)).collect();
        let mut ticks = cuts(kind, fan.r_inf(), p.right().delta());
        ticks.extend(cuts(kind, fan.l_inf(), p.left().delta()));
        Drawing { outline, ticks }
    }

    fn bounds(&self) -> (i64, i64, i64, i64) {
        let xs = self.outline.iter().map(|p| p.0);
        let ys = self.outline.iter().map(|p| p.1);
        (
            xs.clone().min().unwrap_or(0),
            ys.clone().min().unwrap_or(0),
            xs.max().unwrap_or(0),
            ys.max().unwrap_or(0),
        )
    }
}

const SCALE: i64 = 12;
const MARGIN: i64 = 12;
const TICK: i64 = 4;

pub fn to_svg(p: &DecoratedPolytope) -> String {
    let d = Drawing::of(p);
    let (x0, y0, x1, y1) = d.bounds();
    let w = (x1 - x0) * SCALE + 2 * MARGIN;
    let h = (y1 - y0) * SCALE + 2 * MARGIN;
    let place = |(x, y): (i64, i64)| ((x - x0) * SCALE + MARGIN, (y1 - y) * SCALE + MARGIN);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    let pts: Vec<String> = d
        .outline
        .iter()
        .map(|&q| {
            let (x, y) = place(q);
            format!("{x},{y}")
        })
        .collect();
    if d.outline.len() > 1 {
        writeln!(
            out,
            r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }
    for &q in &d.outline {
        let (x, y) = place(q);
        writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="2" fill="black"/>"#).unwrap();
    }
    for &q in &d.ticks {
        let (x, y) = place(q);
        writeln!(
            out,
            r#"  <line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black"/>"#,
            x - TICK,
            x + TICK
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn to_tikz(p: &DecoratedPolytope) -> String {
    let d = Drawing::of(p);
    let mut out = String::from("\\begin{tikzpicture}[scale=0.25]\n");
    if d.outline.len() > 1 {
        let pts: Vec<String> = d
            .outline
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        writeln!(out, "  \\draw {} -- cycle;", pts.join(" -- ")).unwrap();
    }
    for (x, y) in &d.outline {
        writeln!(out, "  \\fill ({x},{y}) circle (2pt);").unwrap();
    }
    for (x, y) in &d.ticks {
        writeln!(out, "  \\draw ({x},{y}) ++(-0.3,0) -- ++(0.6,0);").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

pub fn render(p: &DecoratedPolytope, format: Format) -> String {
    match format {
        Format::Svg => to_svg(p),
        Format::Tikz => to_tikz(p),
    }
}
