//! Deterministic SVG rendering of the density picture: the cumulative
//! profiles g_A, g_B, their sum g, the shifted sum h, the reference lines
//! y = x and y = x + D_A − D_B + Δ, and the three zones as colored spans
//! along the x axis.
//!
//! All geometry is computed in exact rationals and only converted to fixed
//! two-decimal strings at the last moment, so identical inputs always give
//! byte-identical documents.

use crate::density::{cumulative_profile, zone_partition, PiecewiseLinear, ZonePartition};
use crate::error::Result;
use crate::rational::{decimal_string, int, Rational};
use crate::sets::IntervalSet;
use num_traits::{Signed, Zero};
use std::fmt::Write as _;

const WIDTH: i64 = 720;
const HEIGHT: i64 = 540;
const MARGIN_L: i64 = 60;
const MARGIN_R: i64 = 24;
const MARGIN_T: i64 = 24;
const MARGIN_B: i64 = 56;

struct Frame {
    xmax: Rational,
    ymax: Rational,
}

impl Frame {
    fn sx(&self, x: &Rational) -> String {
        let w = int(WIDTH - MARGIN_L - MARGIN_R);
        decimal_string(&(int(MARGIN_L) + x * w / &self.xmax), 2)
    }

    fn sy(&self, y: &Rational) -> String {
        let h = int(HEIGHT - MARGIN_T - MARGIN_B);
        decimal_string(&(int(MARGIN_T) + (&self.ymax - y) * h / &self.ymax), 2)
    }
}

/// Renders the zone/profile figure for a normalized pair with
/// `diam(B) <= diam(A)`. Inputs are translated to start at 0 first.
pub fn plot_svg(a: &IntervalSet, b: &IntervalSet) -> Result<String> {
    let a = a.normalize_to_zero()?;
    let b = b.normalize_to_zero()?;
    let zp = zone_partition(&a, &b)?;
    let g_a = cumulative_profile(&a, &zp.d_a)?;
    let g_b = if zp.d_b.is_positive() {
        cumulative_profile(&b, &zp.d_b)?
    } else {
        // B a single point: flat profile
        PiecewiseLinear::new(vec![
            (Rational::zero(), Rational::zero()),
            (zp.d_a.clone(), Rational::zero()),
        ])?
    };
    let (g, h) = crate::density::build_g_h(&a, &b)?;

    let mut ymax = zp.d_a.clone();
    if zp.delta.is_positive() {
        ymax += &zp.delta;
    }
    let frame = Frame {
        xmax: zp.d_a.clone(),
        ymax,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");

    axes(&mut out, &frame);
    zone_band(&mut out, &frame, &zp);
    reference_lines(&mut out, &frame, &zp);
    polyline(&mut out, &frame, &g_a, "#2166ac", "g_A");
    polyline(&mut out, &frame, &g_b, "#92c5de", "g_B");
    polyline(&mut out, &frame, &g, "#1a9850", "g");
    polyline(&mut out, &frame, &h, "#d73027", "h");
    legend(&mut out);

    let _ = writeln!(out, "</svg>");
    Ok(out)
}

fn axes(out: &mut String, frame: &Frame) {
    let x0 = frame.sx(&Rational::zero());
    let x1 = frame.sx(&frame.xmax.clone());
    let y0 = frame.sy(&Rational::zero());
    let y1 = frame.sy(&frame.ymax.clone());
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\" stroke-width=\"1\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\" stroke-width=\"1\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{x1}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">x</text>",
        HEIGHT - MARGIN_B + 16
    );
}

fn zone_band(out: &mut String, frame: &Frame, zp: &ZonePartition) {
    let y = HEIGHT - MARGIN_B + 22;
    for (zone, color, label) in [
        (&zp.z1, "#4393c3", "Z1"),
        (&zp.z2, "#bdbdbd", "Z2"),
        (&zp.z3, "#f4a582", "Z3"),
    ] {
        let scale = int(WIDTH - MARGIN_L - MARGIN_R);
        for part in zone.parts() {
            let x0 = frame.sx(part.lo());
            if part.is_point() {
                let _ = writeln!(
                    out,
                    "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x0}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"3\"/>",
                    y + 10
                );
            } else {
                let w = decimal_string(&(part.len() * &scale / &frame.xmax), 2);
                let _ = writeln!(
                    out,
                    "<rect x=\"{x0}\" y=\"{y}\" width=\"{w}\" height=\"10\" fill=\"{color}\"><title>{label}</title></rect>",
                );
            }
        }
    }
}

fn reference_lines(out: &mut String, frame: &Frame, zp: &ZonePartition) {
    // y = x over the whole frame
    let x0 = frame.sx(&Rational::zero());
    let y0 = frame.sy(&Rational::zero());
    let x1 = frame.sx(&frame.xmax.clone());
    let y1 = frame.sy(&frame.xmax.clone());
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y1}\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>"
    );
    // y = x + (D_A - D_B) + delta over [0, D_B]
    let off = &zp.d_a - &zp.d_b + &zp.delta;
    let yl = frame.sy(&off.clone().max(Rational::zero()).min(frame.ymax.clone()));
    let end_y = (&zp.d_b + &off).max(Rational::zero()).min(frame.ymax.clone());
    let xe = frame.sx(&zp.d_b);
    let ye = frame.sy(&end_y);
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{yl}\" x2=\"{xe}\" y2=\"{ye}\" stroke=\"#bb6666\" stroke-width=\"1\" stroke-dasharray=\"2,3\"/>"
    );
}

fn polyline(out: &mut String, frame: &Frame, f: &PiecewiseLinear, color: &str, name: &str) {
    let mut pts = String::new();
    for (x, y) in f.breakpoints() {
        if !pts.is_empty() {
            pts.push(' ');
        }
        let _ = write!(pts, "{},{}", frame.sx(x), frame.sy(y));
    }
    let _ = writeln!(
        out,
        "<polyline points=\"{pts}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"><title>{name}</title></polyline>"
    );
}

fn legend(out: &mut String) {
    let entries = [
        ("#2166ac", "g_A"),
        ("#92c5de", "g_B"),
        ("#1a9850", "g = g_A + g_B"),
        ("#d73027", "h (shifted sum)"),
    ];
    let x = MARGIN_L + 12;
    for (i, (color, label)) in entries.iter().enumerate() {
        let y = MARGIN_T + 14 + 18 * i as i64;
        let _ = writeln!(
            out,
            "<line x1=\"{x}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            x + 22
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{label}</text>",
            x + 28,
            y + 4
        );
    }
}
