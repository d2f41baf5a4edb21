use crate::geometry::polygon::ConvexPolygon;
use crate::point::Point;
use crate::scalar::Scalar;

fn normal_angles<T: Scalar>(p: &ConvexPolygon<T>, out: &mut Vec<T>) {
    for i in 0..p.len() {
        let a = p.edge_normal(i).angle();
        out.push(if a < T::zero() { a + T::TAU() } else { a });
    }
}

/// Index of the vertex maximizing `v . u`, walking forward from `start`.
///
/// Valid while `u` sweeps counterclockwise: the support vertex of a CCW
/// polygon only ever advances.
fn advance<T: Scalar>(p: &ConvexPolygon<T>, mut i: usize, u: Point<T>) -> usize {
    let n = p.len();
    for _ in 0..n {
        if p.vertex(i + 1).dot(u) > p.vertex(i).dot(u) {
            i = (i + 1) % n;
        } else {
            break;
        }
    }
    i
}

fn argmax<T: Scalar>(p: &ConvexPolygon<T>, u: Point<T>) -> usize {
    let mut best = 0;
    for i in 1..p.len() {
        if p.vertex(i).dot(u) > p.vertex(best).dot(u) {
            best = i;
        }
    }
    best
}

fn in_arc<T: Scalar>(phi: T, lo: T, hi: T) -> bool {
    let tau = T::TAU();
    let mut x = phi;
    while x < lo {
        x = x + tau;
    }
    while x >= lo + tau {
        x = x - tau;
    }
    x <= hi
}

/// Hausdorff distance of two convex polygons as the sup-norm of the
/// difference of their support functions.
///
/// The circle is cut at every edge normal of both polygons; on each arc the
/// two support vertices are fixed, the difference is `d . u(theta)` for a
/// fixed vector `d`, and its extreme over the arc is taken in closed form.
pub fn hausdorff<T: Scalar>(p: &ConvexPolygon<T>, q: &ConvexPolygon<T>) -> T {
    let mut cuts = Vec::with_capacity(p.len() + q.len() + 1);
    normal_angles(p, &mut cuts);
    normal_angles(q, &mut cuts);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup();
    let m = cuts.len();
    let first_mid = if m == 1 {
        cuts[0] + T::PI()
    } else {
        (cuts[0] + cuts[1]) / T::lit(2.0)
    };
    let mut ip = argmax(p, Point::polar(first_mid));
    let mut iq = argmax(q, Point::polar(first_mid));
    let mut best = T::zero();
    for k in 0..m {
        let lo = cuts[k];
        let hi = if k + 1 < m { cuts[k + 1] } else { cuts[0] + T::TAU() };
        let mid = Point::polar((lo + hi) / T::lit(2.0));
        ip = advance(p, ip, mid);
        iq = advance(q, iq, mid);
        let d = p.vertex(ip) - q.vertex(iq);
        let mut local = d.dot(Point::polar(lo)).abs().max(d.dot(Point::polar(hi)).abs());
        let len = d.norm();
        if len > T::zero() {
            let phi = d.angle();
            if in_arc(phi, lo, hi) || in_arc(phi + T::PI(), lo, hi) {
                local = len;
            }
        }
        best = best.max(local);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(f64, f64)]) -> ConvexPolygon<f64> {
        ConvexPolygon::from_xy(c).unwrap()
    }

    #[test]
    fn identical_and_nested() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(hausdorff(&sq, &sq), 0.0);
        let r = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]);
        assert!((hausdorff(&sq, &r) - 1.0).abs() < 1e-15);
        assert!((hausdorff(&r, &sq) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn corner_distance_is_attained_inside_an_arc() {
        // The far corner (2, 2) of the big square is sqrt(2) from the unit square.
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let big = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
        assert!((hausdorff(&sq, &big) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn translation() {
        let t = poly(&[(0.0, 0.0), (1.0, 0.0), (0.3, 0.8)]);
        let s = t.translated(Point::new(0.3, -0.4));
        assert!((hausdorff(&t, &s) - 0.5).abs() < 1e-14);
    }
}
