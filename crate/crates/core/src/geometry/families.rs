//! Named shapes and parametrized families.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geometry::polygon::{canonicalize, ConvexPolygon};
use crate::point::Point;
use crate::scalar::Scalar;

/// Equilateral triangle given by its width, incenter and rotation.
///
/// Rotation 0 puts a vertex straight above the center. Rotations are kept
/// in `[0, 2pi/3)` because of the threefold symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilateralPose<T> {
    pub width: T,
    pub center: Point<T>,
    pub rotation: T,
}

impl<T: Scalar> EquilateralPose<T> {
    pub fn new(width: T, center: Point<T>, rotation: T) -> Self {
        let period = T::TAU() / T::lit(3.0);
        let mut r = rotation % period;
        if r < T::zero() {
            r = r + period;
        }
        if r >= period {
            r = T::zero();
        }
        Self {
            width,
            center,
            rotation: r,
        }
    }

    pub fn vertices(&self) -> [Point<T>; 3] {
        let circ = T::lit(2.0) * self.width / T::lit(3.0);
        let third = T::TAU() / T::lit(3.0);
        let base = T::FRAC_PI_2() + self.rotation;
        [0.0, 1.0, 2.0].map(|k| self.center + Point::polar(base + third * T::lit(k)) * circ)
    }
}

pub fn make_equilateral<T: Scalar>(pose: &EquilateralPose<T>) -> Result<ConvexPolygon<T>> {
    if !(pose.width > T::zero()) {
        return Err(GeomError::ParamOutOfRange(format!(
            "triangle width must be positive, got {}",
            pose.width
        )));
    }
    canonicalize(&pose.vertices())
}

/// Equilateral triangle of the given width with a horizontal base on the x-axis.
pub fn equilateral<T: Scalar>(width: T) -> Result<ConvexPolygon<T>> {
    let pose = EquilateralPose::new(width, Point::new(T::zero(), width / T::lit(3.0)), T::zero());
    make_equilateral(&pose)
}

/// Rectangle `[-L, L] x [0, 1]`, of width 1 for `L >= 1`.
pub fn rect_rl<T: Scalar>(l: T) -> Result<ConvexPolygon<T>> {
    if !(l >= T::one()) || !l.is_finite() {
        return Err(GeomError::ParamOutOfRange(format!("rectangle half-length must be >= 1, got {l}")));
    }
    let (z, o) = (T::zero(), T::one());
    canonicalize(&[Point::new(-l, z), Point::new(l, z), Point::new(l, o), Point::new(-l, o)])
}

/// Equilateral triangle `(-1, 0), (1, 0), (0, sqrt 3)` of width `sqrt 3`.
pub fn family_t0<T: Scalar>() -> ConvexPolygon<T> {
    let (z, o) = (T::zero(), T::one());
    canonicalize(&[Point::new(-o, z), Point::new(o, z), Point::new(z, T::lit(3.0).sqrt())])
        .expect("nondegenerate triangle")
}

fn check_eps<T: Scalar>(eps: T) -> Result<()> {
    let cap = T::lit(3.0).sqrt() / T::lit(2.0);
    if eps > T::zero() && eps < cap {
        Ok(())
    } else {
        Err(GeomError::ParamOutOfRange(format!("eps must lie in (0, sqrt(3)/2), got {eps}")))
    }
}

/// Triangle with base `(+-(1 - eps/(2 sqrt 3)), 0)` and apex `(0, sqrt 3 - eps)`.
pub fn family_teps<T: Scalar>(eps: T) -> Result<ConvexPolygon<T>> {
    check_eps(eps)?;
    let s3 = T::lit(3.0).sqrt();
    let half = T::one() - eps / (T::lit(2.0) * s3);
    canonicalize(&[
        Point::new(-half, T::zero()),
        Point::new(half, T::zero()),
        Point::new(T::zero(), s3 - eps),
    ])
}

/// `family_t0` with its top corner cut off by the line `y = sqrt 3 - eps`.
pub fn family_reps<T: Scalar>(eps: T) -> Result<ConvexPolygon<T>> {
    check_eps(eps)?;
    let s3 = T::lit(3.0).sqrt();
    let top = s3 - eps;
    let dx = eps / s3;
    canonicalize(&[
        Point::new(-T::one(), T::zero()),
        Point::new(T::one(), T::zero()),
        Point::new(dx, top),
        Point::new(-dx, top),
    ])
}

/// Regular `n`-gon of the given minimal width with a vertex on top.
pub fn regular_ngon<T: Scalar>(n: usize, width: T) -> Result<ConvexPolygon<T>> {
    if n < 3 {
        return Err(GeomError::ParamOutOfRange(format!("need n >= 3, got {n}")));
    }
    if !(width > T::zero()) {
        return Err(GeomError::ParamOutOfRange(format!("width must be positive, got {width}")));
    }
    let nf = T::from_usize(n).unwrap();
    let c = (T::PI() / nf).cos();
    let circ = if n.is_multiple_of(2) {
        width / (T::lit(2.0) * c)
    } else {
        width / (T::one() + c)
    };
    let pts: Vec<Point<T>> = (0..n)
        .map(|k| Point::polar(T::FRAC_PI_2() + T::TAU() * T::from_usize(k).unwrap() / nf) * circ)
        .collect();
    canonicalize(&pts)
}

/// Polygon inscribed in the Reuleaux triangle of width 1, with `m` samples
/// per arc (arc endpoints included and shared).
pub fn reuleaux_polygon<T: Scalar>(m: usize) -> Result<ConvexPolygon<T>> {
    if m < 2 {
        return Err(GeomError::ParamOutOfRange(format!("need m >= 2 samples per arc, got {m}")));
    }
    let third = T::TAU() / T::lit(3.0);
    let corners: Vec<Point<T>> = (0..3)
        .map(|k| {
            let a = T::FRAC_PI_2() + third * T::lit(k as f64);
            Point::polar(a) / T::lit(3.0).sqrt()
        })
        .collect();
    let mut pts = Vec::with_capacity(3 * m);
    let mf = T::from_usize(m - 1).unwrap();
    for k in 0..3 {
        let center = corners[k];
        let from = corners[(k + 1) % 3] - center;
        let to = corners[(k + 2) % 3] - center;
        let a0 = from.angle();
        let mut a1 = to.angle();
        if a1 < a0 {
            a1 = a1 + T::TAU();
        }
        for j in 0..m - 1 {
            let s = T::from_usize(j).unwrap() / mf;
            pts.push(center + Point::polar(a0 + (a1 - a0) * s));
        }
    }
    canonicalize(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t0_and_reps_widths() {
        let t0 = family_t0::<f64>();
        assert!((t0.minimal_width().0 - 3f64.sqrt()).abs() < 1e-14);
        let r = family_reps(0.1).unwrap();
        assert_eq!(r.len(), 4);
        assert!((r.minimal_width().0 - (3f64.sqrt() - 0.1)).abs() < 1e-14);
        let t = family_teps(0.1).unwrap();
        assert!((t.minimal_width().0 - (3f64.sqrt() - 0.1)).abs() < 1e-14);
        for v in t.vertices() {
            assert!(r.contains(*v, 1e-14));
        }
        for v in r.vertices() {
            assert!(t0.contains(*v, 1e-14));
        }
    }

    #[test]
    fn eps_range_enforced() {
        assert!(family_reps(0.0f64).is_err());
        assert!(family_teps(0.9f64).is_err());
        assert!(rect_rl(0.5f64).is_err());
        assert!(regular_ngon(2, 1.0f64).is_err());
        assert!(reuleaux_polygon::<f64>(1).is_err());
    }

    #[test]
    fn equilateral_pose() {
        let pose = EquilateralPose::new(1.0f64, Point::new(0.0, 0.0), 0.0);
        let t = make_equilateral(&pose).unwrap();
        assert!((t.minimal_width().0 - 1.0).abs() < 1e-14);
        assert!((t.area() - 1.0 / 3f64.sqrt()).abs() < 1e-14);
        let p = EquilateralPose::new(1.0, Point::new(0.0, 0.0), 2.5);
        assert!(p.rotation < std::f64::consts::TAU / 3.0);
        assert!(make_equilateral(&EquilateralPose::new(0.0, Point::origin(), 0.0)).is_err());
    }

    #[test]
    fn regular_polygon_widths() {
        for n in [3, 4, 5, 6, 7, 12] {
            let p = regular_ngon(n, 2.0f64).unwrap();
            assert_eq!(p.len(), n);
            assert!((p.minimal_width().0 - 2.0).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn reuleaux_is_nearly_constant_width() {
        let p = reuleaux_polygon::<f64>(256).unwrap();
        assert_eq!(p.len(), 3 * 255);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for k in 0..2000 {
            let d = crate::geometry::Direction::new(k as f64 * 0.00157);
            let w = p.directional_width(d);
            lo = lo.min(w);
            hi = hi.max(w);
        }
        assert!(hi <= 1.0 + 1e-12);
        assert!(hi - lo < 1e-4, "{lo} {hi}");
    }
}
