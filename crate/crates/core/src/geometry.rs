//! Planar strokes between consecutive dots.
//!
//! Arcs are circular and parameterized by a sagitta proportional to the
//! chord: the arc passes through both endpoints and through the chord
//! midpoint displaced by `bulge·‖chord‖` along the chord normal. Convex arcs
//! are displaced away from the pattern center, concave arcs toward it.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use crate::error::{KolamError, Result};
use crate::layout::{ClosedPath, PolarPoint};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

impl CartesianPoint {
    pub const ORIGIN: Self = Self { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Self) -> Self {
        Self::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    /// Rotates counterclockwise about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for CartesianPoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for CartesianPoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for CartesianPoint {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

pub fn to_cartesian(p: &PolarPoint) -> CartesianPoint {
    let r = f64::from(p.radius);
    let (s, c) = p.theta().sin_cos();
    CartesianPoint::new(r * c, r * s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ConnectionStyle {
    #[default]
    Straight,
    /// Arcs bulging away from the center.
    ConvexArc,
    /// Arcs bulging toward the center.
    ConcaveArc,
}

impl ConnectionStyle {
    pub const ALL: [ConnectionStyle; 3] = [Self::Straight, Self::ConvexArc, Self::ConcaveArc];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Straight => "straight",
            Self::ConvexArc => "convex",
            Self::ConcaveArc => "concave",
        }
    }
}

impl fmt::Display for ConnectionStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConnectionStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "straight" | "line" | "lines" => Ok(Self::Straight),
            "convex" | "outward" => Ok(Self::ConvexArc),
            "concave" | "inward" => Ok(Self::ConcaveArc),
            other => Err(format!(
                "unknown connection style '{other}' (expected straight, convex or concave)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StrokeKind {
    Line,
    /// Circular arc through the stroke endpoints and `mid`.
    Arc {
        mid: CartesianPoint,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stroke {
    pub start: CartesianPoint,
    pub end: CartesianPoint,
    pub kind: StrokeKind,
}

impl Stroke {
    pub fn line(start: CartesianPoint, end: CartesianPoint) -> Self {
        Self {
            start,
            end,
            kind: StrokeKind::Line,
        }
    }

    pub fn arc_mid(&self) -> Option<CartesianPoint> {
        match self.kind {
            StrokeKind::Line => None,
            StrokeKind::Arc { mid } => Some(mid),
        }
    }

    pub fn chord_length(&self) -> f64 {
        self.start.distance(self.end)
    }

    /// Distance from the chord midpoint to the arc midpoint (0 for lines).
    pub fn sagitta(&self) -> f64 {
        self.arc_mid()
            .map_or(0.0, |mid| mid.distance(self.start.midpoint(self.end)))
    }

    /// Circle radius of an arc stroke.
    pub fn arc_radius(&self) -> Option<f64> {
        self.arc_mid()?;
        let half = self.chord_length() / 2.0;
        let h = self.sagitta();
        Some((half * half + h * h) / (2.0 * h))
    }

    pub fn arc_center(&self) -> Option<CartesianPoint> {
        let mid = self.arc_mid()?;
        let chord_mid = self.start.midpoint(self.end);
        let h = self.sagitta();
        let r = self.arc_radius()?;
        Some(mid + (chord_mid - mid) * (r / h))
    }

    /// Whether the arc spans more than half its circle.
    pub fn is_major_arc(&self) -> bool {
        self.sagitta() > self.chord_length() / 2.0
    }

    pub fn reversed(&self) -> Self {
        Self {
            start: self.end,
            end: self.start,
            kind: self.kind,
        }
    }

    /// Greatest distance from the origin of any point on the stroke.
    pub fn max_distance_from_origin(&self) -> f64 {
        let ends = self.start.norm().max(self.end.norm());
        let (Some(mid), Some(center), Some(r)) =
            (self.arc_mid(), self.arc_center(), self.arc_radius())
        else {
            return ends;
        };
        let c = center.norm();
        if c == 0.0 {
            return r;
        }
        // Farthest circle point from the origin; count it only if it lies on
        // the drawn side of the chord.
        let far = center * ((c + r) / c);
        let chord = self.end - self.start;
        let side_mid = chord.cross(mid - self.start);
        let side_far = chord.cross(far - self.start);
        if side_mid * side_far > 0.0 {
            ends.max(c + r)
        } else {
            ends
        }
    }
}

fn arc_through(
    start: CartesianPoint,
    end: CartesianPoint,
    style: ConnectionStyle,
    bulge: f64,
) -> StrokeKind {
    if style == ConnectionStyle::Straight {
        return StrokeKind::Line;
    }
    let chord = end - start;
    let len = chord.norm();
    let chord_mid = start.midpoint(end);
    let mut normal = CartesianPoint::new(-chord.y / len, chord.x / len);
    let radial = normal.dot(chord_mid);
    if radial.abs() <= 1e-12 * (1.0 + chord_mid.norm()) {
        // No outward side (midpoint at the origin or chord along a ray):
        // use the normal pointing up, or right for a vertical chord.
        if normal.y < 0.0 || (normal.y == 0.0 && normal.x < 0.0) {
            normal = normal * -1.0;
        }
    } else if radial < 0.0 {
        normal = normal * -1.0;
    }
    let sign = if style == ConnectionStyle::ConvexArc {
        1.0
    } else {
        -1.0
    };
    StrokeKind::Arc {
        mid: chord_mid + normal * (sign * bulge * len),
    }
}

/// Turns consecutive path points into strokes of the given style.
pub fn make_strokes(path: &ClosedPath, style: ConnectionStyle, bulge: f64) -> Result<Vec<Stroke>> {
    if !(bulge > 0.0 && bulge < 1.0) {
        return Err(KolamError::BulgeOutOfRange(bulge));
    }
    let coords: Vec<CartesianPoint> = path.points().iter().map(to_cartesian).collect();
    coords
        .windows(2)
        .enumerate()
        .map(|(index, w)| {
            let (start, end) = (w[0], w[1]);
            if start == end {
                return Err(KolamError::DegenerateChord { index });
            }
            Ok(Stroke {
                start,
                end,
                kind: arc_through(start, end, style, bulge),
            })
        })
        .collect()
}

/// Largest distance from the origin reached by any stroke.
pub fn extent(strokes: &[Stroke]) -> f64 {
    strokes
        .iter()
        .map(Stroke::max_distance_from_origin)
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::build_closed_path;
    use crate::sequence::KolamSpec;
    use std::f64::consts::{PI, TAU};

    const EPS: f64 = 1e-9;

    fn close(a: CartesianPoint, b: CartesianPoint, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    fn path(m: i64, n: i64) -> ClosedPath {
        build_closed_path(&KolamSpec::new(m, n).unwrap())
    }

    #[test]
    fn to_cartesian_examples() {
        let p = to_cartesian(&PolarPoint::new(4, 0, 3));
        assert_eq!(p, CartesianPoint::new(4.0, 0.0));
        let p = to_cartesian(&PolarPoint::new(2, 1, 2));
        assert!(close(p, CartesianPoint::new(-2.0, 0.0), 1e-12));
        let p = to_cartesian(&PolarPoint::new(1, 1, 3));
        assert!(close(
            p,
            CartesianPoint::new(-0.5, 3f64.sqrt() / 2.0),
            1e-12
        ));
    }

    #[test]
    fn style_parsing() {
        for s in ConnectionStyle::ALL {
            assert_eq!(s.as_str().parse::<ConnectionStyle>(), Ok(s));
        }
        assert!("wavy".parse::<ConnectionStyle>().is_err());
    }

    #[test]
    fn straight_strokes_follow_path() {
        let p = path(4, 3);
        let strokes = make_strokes(&p, ConnectionStyle::Straight, 0.3).unwrap();
        assert_eq!(strokes.len(), 12);
        for (s, w) in strokes.iter().zip(p.points().windows(2)) {
            assert_eq!(s.kind, StrokeKind::Line);
            assert_eq!(s.start, to_cartesian(&w[0]));
            assert_eq!(s.end, to_cartesian(&w[1]));
        }
    }

    #[test]
    fn convex_and_concave_sides() {
        // Chord from (4, 0) to radius 3 on arm 1 of 3, the first stroke of (4, 3).
        let p = path(4, 3);
        let convex = make_strokes(&p, ConnectionStyle::ConvexArc, 0.3).unwrap()[0];
        let concave = make_strokes(&p, ConnectionStyle::ConcaveArc, 0.3).unwrap()[0];
        assert_eq!(convex.start, CartesianPoint::new(4.0, 0.0));
        let chord_mid = convex.start.midpoint(convex.end);
        assert!(convex.arc_mid().unwrap().norm() > chord_mid.norm());
        assert!(concave.arc_mid().unwrap().norm() < chord_mid.norm());
        for s in [convex, concave] {
            assert!((s.sagitta() - 0.3 * s.chord_length()).abs() < EPS);
            // arc_mid must not be collinear with the endpoints
            assert!(
                (s.end - s.start)
                    .cross(s.arc_mid().unwrap() - s.start)
                    .abs()
                    > 1e-6
            );
        }
    }

    #[test]
    fn degenerate_chord_rejected() {
        let p = path(1, 1);
        assert_eq!(
            make_strokes(&p, ConnectionStyle::Straight, 0.3),
            Err(KolamError::DegenerateChord { index: 0 })
        );
        assert!(matches!(
            make_strokes(&path(4, 3), ConnectionStyle::ConvexArc, 1.0),
            Err(KolamError::BulgeOutOfRange(_))
        ));
    }

    #[test]
    fn strokes_chain_and_close() {
        for style in ConnectionStyle::ALL {
            let s = make_strokes(&path(6, 5), style, 0.3).unwrap();
            for w in s.windows(2) {
                assert_eq!(w[0].end, w[1].start);
            }
            assert_eq!(s.last().unwrap().end, s[0].start);
        }
    }

    #[test]
    fn small_bulge_approaches_chord_midpoint() {
        for style in [ConnectionStyle::ConvexArc, ConnectionStyle::ConcaveArc] {
            for s in make_strokes(&path(8, 5), style, 1e-6).unwrap() {
                assert!(close(s.arc_mid().unwrap(), s.start.midpoint(s.end), 1e-5));
            }
        }
    }

    #[test]
    fn tie_break_for_chord_through_origin() {
        // (1, 2): radius 1 on arm 0 to radius 1 on arm 1 (angle π) passes through the origin.
        let p = path(1, 2);
        let s = make_strokes(&p, ConnectionStyle::ConvexArc, 0.25).unwrap();
        let mid = s[0].arc_mid().unwrap();
        assert!(mid.y > 0.0);
        assert!(mid.x.abs() < 1e-12);
        assert!((s[0].sagitta() - 0.5).abs() < EPS);
    }

    #[test]
    fn arc_circle_passes_through_three_points() {
        for bulge in [0.1, 0.3, 0.45, 0.55, 0.8] {
            for s in make_strokes(&path(5, 7), ConnectionStyle::ConvexArc, bulge).unwrap() {
                let c = s.arc_center().unwrap();
                let r = s.arc_radius().unwrap();
                for q in [s.start, s.end, s.arc_mid().unwrap()] {
                    assert!((c.distance(q) - r).abs() < 1e-9);
                }
                assert_eq!(s.is_major_arc(), bulge > 0.5);
            }
        }
    }

    #[test]
    fn max_distance_matches_sampling() {
        for style in [ConnectionStyle::ConvexArc, ConnectionStyle::ConcaveArc] {
            for bulge in [0.2, 0.6, 0.9] {
                for s in make_strokes(&path(4, 5), style, bulge).unwrap() {
                    let c = s.arc_center().unwrap();
                    let r = s.arc_radius().unwrap();
                    let a0 = (s.start - c).y.atan2((s.start - c).x);
                    let a1 = (s.end - c).y.atan2((s.end - c).x);
                    let am = (s.arc_mid().unwrap() - c)
                        .y
                        .atan2((s.arc_mid().unwrap() - c).x);
                    // Sweep from a0 through am to a1.
                    let norm = |a: f64| a.rem_euclid(TAU);
                    let ccw = norm(am - a0) < norm(a1 - a0);
                    let span = if ccw { norm(a1 - a0) } else { -norm(a0 - a1) };
                    let sampled = (0..=20000)
                        .map(|k| {
                            let a = a0 + span * f64::from(k) / 20000.0;
                            (c + CartesianPoint::new(a.cos(), a.sin()) * r).norm()
                        })
                        .fold(0.0, f64::max);
                    let exact = s.max_distance_from_origin();
                    assert!(exact >= sampled - 1e-9);
                    assert!(exact - sampled < 1e-4 * r.max(1.0));
                }
            }
        }
    }

    #[test]
    fn rotation_maps_strokes_onto_themselves() {
        let (m, n) = (6, 7);
        for style in ConnectionStyle::ALL {
            let strokes = make_strokes(&path(m, n), style, 0.3).unwrap();
            for s in &strokes {
                let rot = |q: CartesianPoint| q.rotated(TAU / n as f64);
                let found = strokes.iter().any(|t| {
                    close(rot(s.start), t.start, EPS)
                        && close(rot(s.end), t.end, EPS)
                        && match (s.arc_mid(), t.arc_mid()) {
                            (Some(a), Some(b)) => close(rot(a), b, EPS),
                            (None, None) => true,
                            _ => false,
                        }
                });
                assert!(found, "{style}");
            }
        }
        assert!(close(
            CartesianPoint::new(1.0, 0.0).rotated(PI),
            CartesianPoint::new(-1.0, 0.0),
            1e-12
        ));
    }
}
