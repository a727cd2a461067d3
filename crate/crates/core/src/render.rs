//! Deterministic SVG output.
//!
//! Documents are standalone SVG 1.1 with a square `0 0 canvas canvas`
//! viewBox. Model coordinates are scaled uniformly about the canvas center
//! with the y-axis flipped, so counterclockwise arms stay counterclockwise on
//! screen. Every number is written with six fixed decimals.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{KolamError, Result};
use crate::geometry::{extent, make_strokes, to_cartesian, CartesianPoint, Stroke, StrokeKind};
use crate::layout::{build_closed_path, build_matrix, DotMatrix, PolarPoint};
use crate::sequence::{generate_sequence, KolamSpec};

pub const MIN_CANVAS_PX: u32 = 64;

const BACKGROUND: &str = "#ffffff";
const DOT_COLOR: &str = "#222222";
const ARM_COLOR: &str = "#b0b0b0";
/// Arm rays reach half a layer beyond the outermost dot.
const ARM_OVERHANG: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillMode {
    #[default]
    None,
    EvenOdd,
}

impl FillMode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::EvenOdd => "evenodd",
        }
    }
}

impl FromStr for FillMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(Self::None),
            "evenodd" | "even-odd" => Ok(Self::EvenOdd),
            other => Err(format!(
                "unknown fill mode '{other}' (expected none or evenodd)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub canvas_px: u32,
    pub margin_ratio: f64,
    pub show_dots: bool,
    pub show_arms: bool,
    pub stroke_width_px: f64,
    pub fill_mode: FillMode,
    /// `palette[0]` strokes the curve; `palette[1]` (or `palette[0]`) fills it.
    pub palette: Vec<String>,
}

impl Default for RenderConfig {
    fn default() -> Self {
        Self {
            canvas_px: 800,
            margin_ratio: 0.08,
            show_dots: true,
            show_arms: false,
            stroke_width_px: 2.0,
            fill_mode: FillMode::None,
            palette: vec!["#8c1c13".to_owned(), "#f2c14e".to_owned()],
        }
    }
}

fn is_hex_color(s: &str) -> bool {
    s.strip_prefix('#')
        .is_some_and(|h| matches!(h.len(), 3 | 6) && h.bytes().all(|b| b.is_ascii_hexdigit()))
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(KolamError::InvalidConfig(msg));
        if self.canvas_px < MIN_CANVAS_PX {
            return bad(format!(
                "canvas_px must be at least {MIN_CANVAS_PX} (got {})",
                self.canvas_px
            ));
        }
        if !(0.0..0.5).contains(&self.margin_ratio) {
            return bad(format!(
                "margin_ratio must lie in [0, 0.5) (got {})",
                self.margin_ratio
            ));
        }
        if !(self.stroke_width_px.is_finite() && self.stroke_width_px > 0.0) {
            return bad(format!(
                "stroke_width_px must be positive (got {})",
                self.stroke_width_px
            ));
        }
        if self.fill_mode == FillMode::EvenOdd && self.palette.is_empty() {
            return bad("palette must not be empty when fill_mode is evenodd".to_owned());
        }
        if let Some(c) = self.palette.iter().find(|c| !is_hex_color(c)) {
            return bad(format!(
                "palette entry '{c}' is not a #rgb or #rrggbb color"
            ));
        }
        Ok(())
    }

    fn stroke_color(&self) -> &str {
        self.palette.first().map_or("#000000", String::as_str)
    }

    fn fill_color(&self) -> &str {
        self.palette
            .get(1)
            .or(self.palette.first())
            .map_or("#000000", String::as_str)
    }
}

/// Fixed six-decimal formatting with negative zero folded to zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Maps model coordinates onto the canvas.
#[derive(Debug, Clone, Copy)]
struct Viewport {
    center: f64,
    scale: f64,
}

impl Viewport {
    /// `reach` is the largest model distance from the origin to be drawn; it
    /// lands on the margin boundary.
    fn new(cfg: &RenderConfig, reach: f64) -> Self {
        let half = f64::from(cfg.canvas_px) / 2.0;
        let usable = (1.0 - 2.0 * cfg.margin_ratio) * half;
        Self {
            center: half,
            scale: usable / reach.max(f64::MIN_POSITIVE),
        }
    }

    fn map(&self, p: CartesianPoint) -> CartesianPoint {
        CartesianPoint::new(
            self.center + p.x * self.scale,
            self.center - p.y * self.scale,
        )
    }

    fn dot_radius(&self) -> f64 {
        (self.scale * 0.08).clamp(1.0, 4.0)
    }
}

fn header(out: &mut String, cfg: &RenderConfig, desc: &str) {
    let c = cfg.canvas_px;
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#
    );
    let _ = writeln!(out, "<desc>{desc}</desc>");
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{c}" height="{c}" fill="{BACKGROUND}"/>"#
    );
}

fn arm_rays(out: &mut String, vp: &Viewport, m: u32, n: u32) {
    let _ = writeln!(
        out,
        r#"<g id="arms" stroke="{ARM_COLOR}" stroke-width="1.000000">"#
    );
    let o = vp.map(CartesianPoint::ORIGIN);
    for arm in 0..n {
        let theta = PolarPoint::new(1, arm, n).theta();
        let r = f64::from(m) + ARM_OVERHANG;
        let tip = vp.map(CartesianPoint::new(r * theta.cos(), r * theta.sin()));
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(o.x),
            num(o.y),
            num(tip.x),
            num(tip.y)
        );
    }
    let _ = writeln!(out, "</g>");
}

fn dots<'a>(out: &mut String, vp: &Viewport, points: impl Iterator<Item = PolarPoint> + 'a) {
    let r = num(vp.dot_radius());
    let _ = writeln!(out, r#"<g id="dots" fill="{DOT_COLOR}">"#);
    for p in points {
        let q = vp.map(to_cartesian(&p));
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{r}"/>"#,
            num(q.x),
            num(q.y)
        );
    }
    let _ = writeln!(out, "</g>");
    let o = vp.map(CartesianPoint::ORIGIN);
    let _ = writeln!(
        out,
        r#"<circle id="center" cx="{}" cy="{}" r="{}" fill="{DOT_COLOR}"/>"#,
        num(o.x),
        num(o.y),
        num(vp.dot_radius() * 1.2)
    );
}

fn path_data(vp: &Viewport, strokes: &[Stroke]) -> String {
    let mut d = String::new();
    let s0 = vp.map(strokes[0].start);
    let _ = write!(d, "M {} {}", num(s0.x), num(s0.y));
    for s in strokes {
        let end = vp.map(s.end);
        match s.kind {
            StrokeKind::Line => {
                let _ = write!(d, " L {} {}", num(end.x), num(end.y));
            }
            StrokeKind::Arc { mid } => {
                let start = vp.map(s.start);
                let mid = vp.map(mid);
                let radius = s.arc_radius().unwrap_or(0.0) * vp.scale;
                let large = u8::from(s.is_major_arc());
                // Positive-angle sweep keeps the midpoint to the right of start→end.
                let sweep = u8::from((end - start).cross(mid - start) < 0.0);
                let _ = write!(
                    d,
                    " A {r} {r} 0 {large} {sweep} {} {}",
                    num(end.x),
                    num(end.y),
                    r = num(radius)
                );
            }
        }
    }
    d.push_str(" Z");
    d
}

fn check_strokes(strokes: &[Stroke]) -> Result<()> {
    if strokes.is_empty() {
        return Err(KolamError::EmptyStrokeList);
    }
    for (index, s) in strokes.iter().enumerate() {
        let finite =
            s.start.is_finite() && s.end.is_finite() && s.arc_mid().is_none_or(|p| p.is_finite());
        if !finite {
            return Err(KolamError::NonFiniteCoordinate { index });
        }
    }
    Ok(())
}

/// Renders the styled kolam: background, optional arm rays, the closed
/// stroke as a single path, and the dots of `matrix`.
pub fn render_svg(
    spec: &KolamSpec,
    strokes: &[Stroke],
    matrix: &DotMatrix,
    cfg: &RenderConfig,
) -> Result<Vec<u8>> {
    cfg.validate()?;
    check_strokes(strokes)?;
    if matrix.rows() != spec.m() as usize || matrix.cols() != spec.n() as usize {
        return Err(KolamError::MatrixMismatch {
            rows: matrix.rows(),
            cols: matrix.cols(),
            m: spec.m(),
            n: spec.n(),
        });
    }
    let (m, n) = (spec.m(), spec.n());
    let mut reach = extent(strokes).max(f64::from(m));
    if cfg.show_arms {
        reach = reach.max(f64::from(m) + ARM_OVERHANG);
    }
    let vp = Viewport::new(cfg, reach);

    let mut out = String::new();
    header(
        &mut out,
        cfg,
        &format!("kolam m={m} n={n} style={}", spec.style()),
    );
    if cfg.show_arms {
        arm_rays(&mut out, &vp, m, n);
    }
    let (fill, rule) = match cfg.fill_mode {
        FillMode::None => ("none".to_owned(), String::new()),
        FillMode::EvenOdd => (
            cfg.fill_color().to_owned(),
            r#" fill-rule="evenodd""#.to_owned(),
        ),
    };
    let _ = writeln!(
        out,
        r#"<path id="kolam" d="{}" fill="{fill}"{rule} stroke="{}" stroke-width="{}" stroke-linejoin="round" stroke-linecap="round"/>"#,
        path_data(&vp, strokes),
        cfg.stroke_color(),
        num(cfg.stroke_width_px)
    );
    if cfg.show_dots {
        dots(
            &mut out,
            &vp,
            matrix
                .cells()
                .map(|(_, col, radius)| PolarPoint::new(radius, col as u32, n)),
        );
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

/// Full pipeline for one spec: path, strokes, matrix, SVG.
pub fn render_kolam(spec: &KolamSpec, cfg: &RenderConfig) -> Result<Vec<u8>> {
    let strokes = make_strokes(&build_closed_path(spec), spec.style(), spec.bulge())?;
    let matrix = build_matrix(&generate_sequence(spec), spec.n());
    render_svg(spec, &strokes, &matrix, cfg)
}

/// Renders the bare dot grid: `m` dots on each of `n` arms plus the center.
pub fn render_dot_grid(spec: &KolamSpec, cfg: &RenderConfig) -> Result<Vec<u8>> {
    cfg.validate()?;
    let (m, n) = (spec.m(), spec.n());
    let reach = f64::from(m) + if cfg.show_arms { ARM_OVERHANG } else { 0.0 };
    let vp = Viewport::new(cfg, reach);

    let mut out = String::new();
    header(&mut out, cfg, &format!("dot grid m={m} n={n}"));
    if cfg.show_arms {
        arm_rays(&mut out, &vp, m, n);
    }
    dots(
        &mut out,
        &vp,
        (0..n).flat_map(move |arm| (1..=m).map(move |r| PolarPoint::new(r, arm, n))),
    );
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}
