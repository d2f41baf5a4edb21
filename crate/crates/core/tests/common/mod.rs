//! Independent reference values shared by the integration tests.
#![allow(dead_code)]

use cheeger_core::{Point2, Polygon};

pub const PI: f64 = std::f64::consts::PI;

pub fn sqrt3() -> f64 {
    3f64.sqrt()
}

/// `3 + sqrt(pi sqrt 3)`.
pub fn equilateral_wh() -> f64 {
    3.0 + (PI * sqrt3()).sqrt()
}

/// Cheeger constant of an `a x b` rectangle: reciprocal of the smaller root
/// of `(4 - pi) t^2 - 2 (a + b) t + a b = 0`, by the textbook formula.
pub fn rectangle_h(a: f64, b: f64) -> f64 {
    let qa = 4.0 - PI;
    let qb = -2.0 * (a + b);
    let qc = a * b;
    let t = (-qb - (qb * qb - 4.0 * qa * qc).sqrt()) / (2.0 * qa);
    1.0 / t
}

fn seg_dist(q: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let s = if len2 == 0.0 {
        0.0
    } else {
        (((q.x - a.x) * dx + (q.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    };
    let (ex, ey) = (a.x + s * dx - q.x, a.y + s * dy - q.y);
    (ex * ex + ey * ey).sqrt()
}

/// Distance from `q` to the closed polygon, zero inside.
pub fn dist_to_polygon(q: Point2, p: &Polygon) -> f64 {
    let v = p.vertices();
    let n = v.len();
    let mut inside = true;
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        let cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
        if cross < 0.0 {
            inside = false;
        }
        best = best.min(seg_dist(q, a, b));
    }
    if inside {
        0.0
    } else {
        best
    }
}

/// Boundary samples: every vertex plus `per_edge - 1` interior points per edge.
pub fn boundary_samples(p: &Polygon, per_edge: usize) -> Vec<Point2> {
    let v = p.vertices();
    let n = v.len();
    let mut out = Vec::with_capacity(n * per_edge);
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        for k in 0..per_edge {
            let s = k as f64 / per_edge as f64;
            out.push(Point2::new(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)));
        }
    }
    out
}

/// Hausdorff distance as the larger of the two one-sided maxima of
/// point-to-polygon distances over dense boundary samples.
pub fn brute_hausdorff(p: &Polygon, q: &Polygon, per_edge: usize) -> f64 {
    let one = |a: &Polygon, b: &Polygon| {
        boundary_samples(a, per_edge)
            .into_iter()
            .map(|x| dist_to_polygon(x, b))
            .fold(0.0, f64::max)
    };
    one(p, q).max(one(q, p))
}

/// Directional width `max <x, u> - min <x, u>` over the vertices.
pub fn width_along(p: &Polygon, theta: f64) -> f64 {
    let (c, s) = (theta.cos(), theta.sin());
    let proj = p.vertices().iter().map(|v| v.x * c + v.y * s);
    let hi = proj.clone().fold(f64::NEG_INFINITY, f64::max);
    let lo = proj.fold(f64::INFINITY, f64::min);
    hi - lo
}
