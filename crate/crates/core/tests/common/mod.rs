//! SVG inspection helpers shared by the integration tests.
#![allow(dead_code)]

/// A point on the canvas.
pub type P = (f64, f64);

#[derive(Debug, Clone, Copy)]
pub enum Seg {
    Line {
        from: P,
        to: P,
    },
    Arc {
        from: P,
        to: P,
        r: f64,
        large: bool,
        sweep: bool,
    },
}

/// Parses the `M/L/A/Z` subset emitted by the renderer.
pub fn parse_path(d: &str) -> Vec<Seg> {
    let tok: Vec<&str> = d.split_whitespace().collect();
    let f = |i: usize| tok[i].parse::<f64>().unwrap();
    let mut segs = Vec::new();
    let mut cur = (0.0, 0.0);
    let mut i = 0;
    while i < tok.len() {
        match tok[i] {
            "M" => {
                cur = (f(i + 1), f(i + 2));
                i += 3;
            }
            "L" => {
                let to = (f(i + 1), f(i + 2));
                segs.push(Seg::Line { from: cur, to });
                cur = to;
                i += 3;
            }
            "A" => {
                let r = f(i + 1);
                assert_eq!(f(i + 1), f(i + 2), "circular arcs only");
                let large = tok[i + 4] == "1";
                let sweep = tok[i + 5] == "1";
                let to = (f(i + 6), f(i + 7));
                segs.push(Seg::Arc {
                    from: cur,
                    to,
                    r,
                    large,
                    sweep,
                });
                cur = to;
                i += 8;
            }
            "Z" => i += 1,
            other => panic!("unexpected path token {other}"),
        }
    }
    segs
}

/// Endpoint-to-center conversion for a circular SVG arc with no rotation,
/// following the SVG implementation notes. Returns (center, start angle,
/// signed sweep angle).
pub fn arc_center(from: P, to: P, r: f64, large: bool, sweep: bool) -> (P, f64, f64) {
    let (x1p, y1p) = ((from.0 - to.0) / 2.0, (from.1 - to.1) / 2.0);
    // Scale radius up if it is too small (rounding of a semicircle).
    let lambda = (x1p * x1p + y1p * y1p) / (r * r);
    let r = if lambda > 1.0 { r * lambda.sqrt() } else { r };
    let num = (r * r * r * r - r * r * y1p * y1p - r * r * x1p * x1p).max(0.0);
    let den = r * r * y1p * y1p + r * r * x1p * x1p;
    let mut coef = (num / den).sqrt();
    if large == sweep {
        coef = -coef;
    }
    let (cxp, cyp) = (coef * y1p, -coef * x1p);
    let c = (cxp + (from.0 + to.0) / 2.0, cyp + (from.1 + to.1) / 2.0);
    let angle = |ux: f64, uy: f64| uy.atan2(ux);
    let t1 = angle((x1p - cxp) / r, (y1p - cyp) / r);
    let t2 = angle((-x1p - cxp) / r, (-y1p - cyp) / r);
    let mut dt = t2 - t1;
    if sweep && dt < 0.0 {
        dt += std::f64::consts::TAU;
    } else if !sweep && dt > 0.0 {
        dt -= std::f64::consts::TAU;
    }
    (c, t1, dt)
}

/// Samples a segment at `k + 1` evenly spaced parameters.
pub fn sample(seg: &Seg, k: usize) -> Vec<P> {
    match *seg {
        Seg::Line { from, to } => (0..=k)
            .map(|i| {
                let t = i as f64 / k as f64;
                (from.0 + (to.0 - from.0) * t, from.1 + (to.1 - from.1) * t)
            })
            .collect(),
        Seg::Arc {
            from,
            to,
            r,
            large,
            sweep,
        } => {
            let (c, t1, dt) = arc_center(from, to, r, large, sweep);
            (0..=k)
                .map(|i| {
                    let t = t1 + dt * i as f64 / k as f64;
                    (c.0 + r * t.cos(), c.1 + r * t.sin())
                })
                .collect()
        }
    }
}

pub fn attr_f64(node: &roxmltree::Node, name: &str) -> f64 {
    node.attribute(name).unwrap().parse().unwrap()
}
