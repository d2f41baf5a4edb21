use crate::error::{GeomError, Result};
use crate::geometry::polygon::{ConvexPolygon, Direction};
use crate::point::Point;
use crate::scalar::Scalar;

/// Minkowski sum of a convex polygon with a closed disk of radius `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundedPolygon<T> {
    pub core: ConvexPolygon<T>,
    pub radius: T,
}

/// `P + rho * B`, the outer parallel body of `P`.
pub fn minkowski_disk<T: Scalar>(p: &ConvexPolygon<T>, rho: T) -> Result<RoundedPolygon<T>> {
    if !(rho >= T::zero()) {
        return Err(GeomError::ParamOutOfRange(format!(
            "disk radius must be nonnegative, got {rho}"
        )));
    }
    Ok(RoundedPolygon {
        core: p.clone(),
        radius: rho,
    })
}

impl<T: Scalar> RoundedPolygon<T> {
    /// Steiner formula: `|P| + per(P) rho + pi rho^2`.
    pub fn area(&self) -> T {
        let r = self.radius;
        self.core.area() + self.core.perimeter() * r + T::PI() * r * r
    }

    pub fn perimeter(&self) -> T {
        self.core.perimeter() + T::lit(2.0) * T::PI() * self.radius
    }

    pub fn support(&self, d: Direction<T>) -> T {
        self.core.support(d) + self.radius
    }

    /// Boundary as a closed polyline: each edge of the core pushed out by
    /// `radius`, joined by circular arcs sampled with `per_arc` interior points.
    pub fn boundary(&self, per_arc: usize) -> Vec<Point<T>> {
        let n = self.core.len();
        let r = self.radius;
        let mut out = Vec::with_capacity(n * (per_arc + 2));
        for i in 0..n {
            let v = self.core.vertex(i);
            let n_in = self.core.edge_normal(i + n - 1).angle();
            let mut n_out = self.core.edge_normal(i).angle();
            while n_out < n_in {
                n_out = n_out + T::TAU();
            }
            let steps = per_arc + 1;
            for k in 0..=steps {
                let s = T::from_usize(k).unwrap() / T::from_usize(steps).unwrap();
                let a = n_in + (n_out - n_in) * s;
                out.push(v + Point::polar(a) * r);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steiner_square() {
        let sq = ConvexPolygon::<f64>::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let r = minkowski_disk(&sq, 1.0).unwrap();
        let pi = std::f64::consts::PI;
        assert!((r.area() - (5.0 + pi)).abs() < 1e-14);
        assert!((r.perimeter() - (4.0 + 2.0 * pi)).abs() < 1e-14);
        let z = minkowski_disk(&sq, 0.0).unwrap();
        assert_eq!(z.area(), 1.0);
        assert_eq!(z.perimeter(), 4.0);
        assert!(minkowski_disk(&sq, -1.0).is_err());
    }

    #[test]
    fn steiner_triangle_perimeter() {
        let s = 1.0 / 3f64.sqrt();
        let t = ConvexPolygon::<f64>::from_xy(&[(-s, 0.0), (s, 0.0), (0.0, 1.0)]).unwrap();
        let r = minkowski_disk(&t, 1.0 / 3.0).unwrap();
        let want = 2.0 * 3f64.sqrt() + 2.0 * std::f64::consts::PI / 3.0;
        assert!((r.perimeter() - want).abs() < 1e-13);
    }

    #[test]
    fn boundary_polyline_hugs_body() {
        let sq = ConvexPolygon::<f64>::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let r = minkowski_disk(&sq, 0.5).unwrap();
        for q in r.boundary(16) {
            assert!((sq.distance_to(q) - 0.5).abs() < 1e-12);
        }
    }
}
