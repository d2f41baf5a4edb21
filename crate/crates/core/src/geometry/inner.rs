//! Inner parallel sets and the inradius.

use crate::error::{GeomError, Result};
use crate::geometry::halfplane::{intersect_half_planes, HalfPlane};
use crate::geometry::polygon::{canonicalize, ConvexPolygon};
use crate::point::Point;
use crate::scalar::Scalar;

impl<T: Scalar> ConvexPolygon<T> {
    /// Edge half-planes, one per edge, in counterclockwise order.
    pub fn half_planes(&self) -> Vec<HalfPlane<T>> {
        (0..self.len())
            .map(|i| {
                let n = self.edge_normal(i);
                HalfPlane {
                    normal: n,
                    offset: n.dot(self.vertex(i)),
                }
            })
            .collect()
    }
}

/// Raw vertex list of the polygon shrunk by `t`; may be degenerate.
pub(crate) fn offset_region<T: Scalar>(p: &ConvexPolygon<T>, t: T, tol: T) -> Vec<Point<T>> {
    let planes: Vec<HalfPlane<T>> = p.half_planes().iter().map(|h| h.shifted(t)).collect();
    intersect_half_planes(&planes, tol)
}

pub(crate) fn raw_area<T: Scalar>(pts: &[Point<T>]) -> T {
    let n = pts.len();
    if n < 3 {
        return T::zero();
    }
    let o = pts[0];
    let mut s = T::zero();
    for i in 1..n - 1 {
        s = s + (pts[i] - o).cross(pts[i + 1] - o);
    }
    (s / T::lit(2.0)).max(T::zero())
}

fn feasibility_tol<T: Scalar>(p: &ConvexPolygon<T>) -> T {
    T::rel_eps() * p.diameter()
}

/// Inner parallel set `{x in P : dist(x, boundary) >= t}`.
///
/// `Ok(None)` means the set is empty or has collapsed to a segment or point.
pub fn inner_parallel<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> Result<Option<ConvexPolygon<T>>> {
    if t < T::zero() {
        return Err(GeomError::NegativeOffset(t.to_f64_lossy()));
    }
    if t == T::zero() {
        return Ok(Some(p.clone()));
    }
    let raw = offset_region(p, t, feasibility_tol(p));
    if raw.len() < 3 {
        return Ok(None);
    }
    Ok(canonicalize(&raw).ok())
}

/// Area of the inner parallel set at offset `t`, zero once it has collapsed.
///
/// Returns `None` if the offset region is empty, i.e. `t` exceeds the
/// inradius by more than the feasibility tolerance.
pub(crate) fn inner_area<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> Option<T> {
    if t <= T::zero() {
        return Some(p.area());
    }
    let raw = offset_region(p, t, feasibility_tol(p));
    if raw.is_empty() {
        None
    } else {
        Some(raw_area(&raw))
    }
}

fn cluster_mean<T: Scalar>(pts: &[Point<T>], merge: T) -> Point<T> {
    let mut reps: Vec<Point<T>> = Vec::new();
    for &q in pts {
        if reps.iter().all(|r| r.dist(q) > merge) {
            reps.push(q);
        }
    }
    let n = T::from_usize(reps.len()).unwrap_or_else(T::one);
    reps.iter().fold(Point::origin(), |acc, &q| acc + q) / n
}

/// Inradius and a Chebyshev center.
///
/// Bisects on the offset at which the inner parallel set becomes empty. When
/// the center is not unique (rectangles, for example) the innermost region is
/// a segment and its midpoint is reported.
pub fn inradius_center<T: Scalar>(p: &ConvexPolygon<T>) -> (T, Point<T>) {
    let (w, _) = p.minimal_width();
    let tol = T::epsilon() * T::lit(8.0) * p.diameter();
    let stop = T::rel_eps() * w * T::lit(1e-3);
    let mut lo = T::zero();
    let mut hi = w;
    let mut best = p.vertices().to_vec();
    for _ in 0..200 {
        if hi - lo <= stop {
            break;
        }
        let mid = (lo + hi) / T::lit(2.0);
        let raw = offset_region(p, mid, tol);
        if raw.is_empty() {
            hi = mid;
        } else {
            lo = mid;
            best = raw;
        }
    }
    let a = raw_area(&best);
    let center = if a > T::rel_eps() * w * w {
        ConvexPolygon::from_ccw_unchecked(best).centroid()
    } else {
        cluster_mean(&best, T::lit(1e-9) * w)
    };
    (lo, center)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(f64, f64)]) -> ConvexPolygon<f64> {
        ConvexPolygon::from_xy(c).unwrap()
    }

    fn unit_square() -> ConvexPolygon<f64> {
        poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    fn tri_width_one() -> ConvexPolygon<f64> {
        let s = 1.0 / 3f64.sqrt();
        poly(&[(-s, 0.0), (s, 0.0), (0.0, 1.0)])
    }

    #[test]
    fn square_inner_sets() {
        let q = inner_parallel(&unit_square(), 0.25).unwrap().unwrap();
        assert!((q.area() - 0.25).abs() < 1e-14);
        for v in q.vertices() {
            assert!((v.x - 0.25).abs() < 1e-14 || (v.x - 0.75).abs() < 1e-14);
        }
        assert!(inner_parallel(&unit_square(), 0.6).unwrap().is_none());
        assert!(matches!(
            inner_parallel(&unit_square(), -0.1),
            Err(GeomError::NegativeOffset(_))
        ));
    }

    #[test]
    fn triangle_inner_set_is_scaled_copy() {
        let q = inner_parallel(&tri_width_one(), 1.0 / 6.0).unwrap().unwrap();
        assert_eq!(q.len(), 3);
        assert!((q.minimal_width().0 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn inradius_of_basic_shapes() {
        let (r, c) = inradius_center(&unit_square());
        assert!((r - 0.5).abs() < 1e-12);
        assert!(c.dist(Point::new(0.5, 0.5)) < 1e-9);

        let (r, c) = inradius_center(&tri_width_one());
        assert!((r - 1.0 / 3.0).abs() < 1e-12);
        assert!(c.dist(Point::new(0.0, 1.0 / 3.0)) < 1e-9);

        let rect = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]);
        let (r, c) = inradius_center(&rect);
        assert!((r - 0.5).abs() < 1e-12);
        assert!(c.dist(Point::new(1.0, 0.5)) < 1e-9, "{c:?}");
    }

    #[test]
    fn vertex_count_never_grows() {
        let p = poly(&[(0.0, 0.0), (4.0, 0.0), (4.2, 0.3), (3.0, 2.0), (0.5, 1.8)]);
        let (r, _) = inradius_center(&p);
        for k in 0..20 {
            let t = r * k as f64 / 20.0;
            if let Some(q) = inner_parallel(&p, t).unwrap() {
                assert!(q.len() <= p.len());
            }
        }
    }
}
