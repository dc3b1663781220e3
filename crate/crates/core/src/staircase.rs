//! Exponent-set pictures for ideals in two variables.
//!
//! The horizontal axis is the power of `x`, the vertical axis the power of
//! `y`. Each lattice point `(a, b)` with `a <= extent_x`, `b <= extent_y` is
//! one cell.

use std::fmt::Write;

use crate::error::{check_dims, Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::text::{format_ideal, VarStyle};

pub const OUTSIDE: char = '.';
pub const BASE: char = '#';
const OVERLAY_GLYPHS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyz";

const SVG_CELL: u32 = 24;
const SVG_MARGIN: u32 = 40;
const SVG_COLORS: [&str; 6] = [
    "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Debug)]
pub struct StaircaseRender {
    pub ideal: MonomialIdeal,
    /// Drawn in order; later overlays sit on top of earlier ones.
    pub overlays: Vec<(String, MonomialIdeal)>,
    pub format: RenderFormat,
    pub extent: ExponentVector,
}

impl StaircaseRender {
    pub fn new(ideal: MonomialIdeal, format: RenderFormat) -> Self {
        let extent = required_extent(&ideal, &[]);
        StaircaseRender {
            ideal,
            overlays: Vec::new(),
            format,
            extent,
        }
    }

    /// Glyph at lattice point `(a, b)`.
    pub fn glyph(&self, a: u32, b: u32) -> char {
        let p = ExponentVector::from_raw(vec![a, b]);
        for (k, (_, o)) in self.overlays.iter().enumerate().rev() {
            if o.has(&p) {
                return overlay_glyph(k);
            }
        }
        if self.ideal.has(&p) {
            BASE
        } else {
            OUTSIDE
        }
    }
}

pub fn overlay_glyph(k: usize) -> char {
    OVERLAY_GLYPHS.get(k).map_or('*', |&b| b as char)
}

/// Smallest extent containing every generator of the base ideal and overlays.
pub fn required_extent(
    ideal: &MonomialIdeal,
    overlays: &[(String, MonomialIdeal)],
) -> ExponentVector {
    let mut ext = vec![0u32; ideal.dim()];
    for i in std::iter::once(ideal).chain(overlays.iter().map(|(_, o)| o)) {
        for g in i.generators() {
            for (e, &v) in ext.iter_mut().zip(g.entries()) {
                *e = (*e).max(v);
            }
        }
    }
    ExponentVector::from_raw(ext)
}

pub fn render_staircase(req: &StaircaseRender) -> Result<String> {
    if req.ideal.dim() != 2 {
        return Err(Error::Precondition(format!(
            "staircases are drawn for two variables only, got {}",
            req.ideal.dim()
        )));
    }
    check_dims(2, req.extent.dim())?;
    for (_, o) in &req.overlays {
        check_dims(2, o.dim())?;
    }
    if req.overlays.len() > OVERLAY_GLYPHS.len() {
        return Err(Error::InvalidArgument(format!(
            "at most {} overlays are supported",
            OVERLAY_GLYPHS.len()
        )));
    }
    let required = required_extent(&req.ideal, &req.overlays);
    if !required.divides(&req.extent) {
        return Err(Error::ExtentTooSmall { required });
    }
    Ok(match req.format {
        RenderFormat::Ascii => ascii(req),
        RenderFormat::Svg => svg(req),
    })
}

fn ascii(req: &StaircaseRender) -> String {
    let (ex, ey) = (req.extent.get(0), req.extent.get(1));
    let width = ey.to_string().len();
    let mut out = String::new();
    let _ = writeln!(out, "{:>width$}", "y");
    for b in (0..=ey).rev() {
        let row: String = (0..=ex).map(|a| req.glyph(a, b)).collect();
        let _ = writeln!(out, "{b:>width$} |{row}");
    }
    let _ = writeln!(out, "{:>width$} +{}", "", "-".repeat(ex as usize + 1));
    let ticks: String = (0..=ex)
        .map(|a| char::from(b'0' + (a % 10) as u8))
        .collect();
    let _ = writeln!(out, "{:>width$}  {ticks} x", "");
    let style = VarStyle::Letters;
    let _ = writeln!(out, "{BASE} {}", format_ideal(&req.ideal, style));
    for (k, (label, o)) in req.overlays.iter().enumerate() {
        let _ = writeln!(
            out,
            "{} {label} {}",
            overlay_glyph(k),
            format_ideal(o, style)
        );
    }
    out
}

/// Path outlining the exponent set of `ideal` clipped to the box.
fn region_path(ideal: &MonomialIdeal, ex: u32, ey: u32) -> String {
    // cells are unit squares [a, a+1] x [b, b+1]; the region's lower-left
    // boundary is the staircase through the generators (sorted by x ascending,
    // hence y descending)
    let top = ey + 1;
    let right = ex + 1;
    let to_px = |x: u32, y: u32| (SVG_MARGIN + x * SVG_CELL, SVG_MARGIN + (top - y) * SVG_CELL);
    let mut gens: Vec<(u32, u32)> = ideal
        .generators()
        .iter()
        .map(|g| (g.get(0), g.get(1)))
        .collect();
    gens.sort();
    let mut pts = Vec::new();
    let (x0, _) = gens[0];
    pts.push((x0, top));
    for (idx, &(a, b)) in gens.iter().enumerate() {
        pts.push((a, b));
        let next_x = gens.get(idx + 1).map_or(right, |g| g.0);
        pts.push((next_x, b));
    }
    pts.push((right, top));
    let mut d = String::new();
    for (k, &(x, y)) in pts.iter().enumerate() {
        let (px, py) = to_px(x, y);
        let _ = write!(d, "{}{px},{py} ", if k == 0 { "M" } else { "L" });
    }
    d.push('Z');
    d
}

fn svg(req: &StaircaseRender) -> String {
    let (ex, ey) = (req.extent.get(0), req.extent.get(1));
    let w = 2 * SVG_MARGIN + (ex + 1) * SVG_CELL;
    let legend_rows = 1 + req.overlays.len() as u32;
    let h = 2 * SVG_MARGIN + (ey + 1) * SVG_CELL + legend_rows * 18;
    let grid_bottom = SVG_MARGIN + (ey + 1) * SVG_CELL;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
    );
    if !req.ideal.is_zero() {
        let _ = writeln!(
            out,
            r##"<path d="{}" fill="#1b9e77" fill-opacity="0.35" stroke="#1b9e77"/>"##,
            region_path(&req.ideal, ex, ey)
        );
    }
    for (k, (_, o)) in req.overlays.iter().enumerate() {
        if o.is_zero() {
            continue;
        }
        let color = SVG_COLORS[k % SVG_COLORS.len()];
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="2"/>"#,
            region_path(o, ex, ey)
        );
    }
    for a in 0..=ex + 1 {
        let x = SVG_MARGIN + a * SVG_CELL;
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{SVG_MARGIN}" x2="{x}" y2="{grid_bottom}" stroke="#bbbbbb" stroke-width="0.5"/>"##
        );
    }
    for b in 0..=ey + 1 {
        let y = SVG_MARGIN + b * SVG_CELL;
        let x2 = SVG_MARGIN + (ex + 1) * SVG_CELL;
        let _ = writeln!(
            out,
            r##"<line x1="{SVG_MARGIN}" y1="{y}" x2="{x2}" y2="{y}" stroke="#bbbbbb" stroke-width="0.5"/>"##
        );
    }
    for a in 0..=ex {
        let x = SVG_MARGIN + a * SVG_CELL + SVG_CELL / 2;
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" text-anchor="middle">{a}</text>"#,
            grid_bottom + 14
        );
    }
    for b in 0..=ey {
        let y = SVG_MARGIN + (ey - b) * SVG_CELL + SVG_CELL / 2 + 4;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{y}" text-anchor="end">{b}</text>"#,
            SVG_MARGIN - 6
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">power of x</text>"#,
        SVG_MARGIN + (ex + 1) * SVG_CELL / 2,
        grid_bottom + 30
    );
    let _ = writeln!(
        out,
        r#"<text x="12" y="{}" text-anchor="middle" transform="rotate(-90 12 {})">power of y</text>"#,
        SVG_MARGIN + (ey + 1) * SVG_CELL / 2,
        SVG_MARGIN + (ey + 1) * SVG_CELL / 2
    );
    let style = VarStyle::Letters;
    let mut y = grid_bottom + 50;
    let _ = writeln!(
        out,
        r##"<text x="{SVG_MARGIN}" y="{y}" fill="#1b9e77">{}</text>"##,
        escape(&format_ideal(&req.ideal, style))
    );
    for (k, (label, o)) in req.overlays.iter().enumerate() {
        y += 18;
        let _ = writeln!(
            out,
            r#"<text x="{SVG_MARGIN}" y="{y}" fill="{}">{} {}</text>"#,
            SVG_COLORS[k % SVG_COLORS.len()],
            escape(label),
            escape(&format_ideal(o, style))
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
