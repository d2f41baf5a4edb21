//! Cheeger constant of a convex polygon.
//!
//! For a planar convex body `K` the Cheeger constant is `1 / r*`, where `r*`
//! is the unique root in `(0, r(K))` of `|K_{-r}| = pi r^2`, and the Cheeger
//! set is `K_{-r*} + r* B`. The area profile `t -> |K_{-t}|` is only
//! piecewise smooth (sides vanish as `t` grows), so the root is bracketed
//! and bisected.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geometry::{inner_area, inner_parallel, inradius_center, ConvexPolygon, RoundedPolygon};
use crate::scalar::Scalar;

const MAX_BISECTIONS: usize = 80;
const ROOT_REL_TOL: f64 = 1e-13;
const BRACKET_REL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CheegerResult<T> {
    /// Cheeger constant, `1 / r_star`.
    pub h: T,
    pub r_star: T,
    pub cheeger_set: RoundedPolygon<T>,
    /// `|K_{-r*}| - pi r*^2` at the returned root.
    pub residual: T,
    pub inradius: T,
}

/// Area of the inner parallel set `K_{-t}` for `0 <= t <= r(K)`.
pub fn area_profile<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> Result<T> {
    if t < T::zero() {
        return Err(GeomError::NegativeOffset(t.to_f64_lossy()));
    }
    inner_area(p, t).ok_or_else(|| GeomError::OffsetBeyondInradius {
        offset: t.to_f64_lossy(),
        inradius: inradius_center(p).0.to_f64_lossy(),
    })
}

fn excess<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> T {
    inner_area(p, t).unwrap_or_else(T::zero) - T::PI() * t * t
}

pub fn cheeger<T: Scalar>(p: &ConvexPolygon<T>) -> CheegerResult<T> {
    let (r_in, _) = inradius_center(p);
    let mut lo = r_in * T::lit(BRACKET_REL);
    let mut hi = r_in * (T::one() - T::lit(BRACKET_REL));
    let tol = T::lit(ROOT_REL_TOL).max(T::rel_eps() * T::lit(0.1));
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol * hi {
            break;
        }
        let mid = (lo + hi) / T::lit(2.0);
        if excess(p, mid) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r_star = (lo + hi) / T::lit(2.0);
    let core = inner_parallel(p, r_star)
        .ok()
        .flatten()
        .expect("inner parallel set at the Cheeger radius has positive area");
    let residual = core.area() - T::PI() * r_star * r_star;
    CheegerResult {
        h: T::one() / r_star,
        r_star,
        cheeger_set: RoundedPolygon {
            core,
            radius: r_star,
        },
        residual,
        inradius: r_in,
    }
}

/// Scalar functionals of one polygon together with its Cheeger constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheegerScalars<T> {
    pub w: T,
    pub r: T,
    pub area: T,
    pub perim: T,
    pub diam: T,
    pub h: T,
    pub wh: T,
}

pub fn cheeger_scalars<T: Scalar>(p: &ConvexPolygon<T>) -> CheegerScalars<T> {
    let c = cheeger(p);
    let (w, _) = p.minimal_width();
    CheegerScalars {
        w,
        r: c.inradius,
        area: p.area(),
        perim: p.perimeter(),
        diam: p.diameter(),
        h: c.h,
        wh: w * c.h,
    }
}

/// Root of `(a - 2t)(b - 2t) = pi t^2` below `min(a, b)/2`: the Cheeger
/// radius of an `a x b` rectangle.
pub fn rectangle_cheeger_radius(a: f64, b: f64) -> f64 {
    let k = 4.0 - std::f64::consts::PI;
    let s = a + b;
    // Smaller root of k t^2 - 2 s t + a b = 0, in cancellation-free form.
    a * b / (s + (s * s - k * a * b).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{equilateral, regular_ngon};

    fn poly(c: &[(f64, f64)]) -> ConvexPolygon<f64> {
        ConvexPolygon::from_xy(c).unwrap()
    }

    #[test]
    fn area_profile_values() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!((area_profile(&sq, 0.25).unwrap() - 0.25).abs() < 1e-14);
        assert!(matches!(
            area_profile(&sq, 0.7),
            Err(GeomError::OffsetBeyondInradius { .. })
        ));
        assert!(matches!(area_profile(&sq, -0.1), Err(GeomError::NegativeOffset(_))));

        // Inner sets of a triangle are scaled copies: (1/sqrt 3)(1 - 3t)^2.
        let t = equilateral(1.0f64).unwrap();
        let want = 0.49 / 3f64.sqrt();
        assert!((area_profile(&t, 0.1).unwrap() - want).abs() < 1e-13);
        assert!((want - 0.2829016).abs() < 1e-7);

        let (r, _) = inradius_center(&t);
        assert!(area_profile(&t, r).unwrap() <= 1e-9 * t.area());
    }

    #[test]
    fn closed_form_constants() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let c = cheeger(&sq);
        let want = 2.0 + std::f64::consts::PI.sqrt();
        assert!((c.h - want).abs() < 1e-9);

        let t = equilateral(1.0f64).unwrap();
        let c = cheeger(&t);
        assert!((c.h - crate::equilateral_wh::<f64>()).abs() < 1e-9);
        assert!((c.h - 5.3326805).abs() < 1e-7);

        let rect = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]);
        let c = cheeger(&rect);
        let pi = std::f64::consts::PI;
        let r = (6.0 - (4.0 + 8.0 * pi).sqrt()) / (2.0 * (4.0 - pi));
        assert!((c.r_star - r).abs() < 1e-12);
        assert!((r - 0.3509549).abs() < 1e-7);
        assert!((rectangle_cheeger_radius(2.0, 1.0) - r).abs() < 1e-15);
    }

    #[test]
    fn invariants_hold() {
        let p = poly(&[(0.0, 0.0), (4.0, 0.0), (4.2, 0.3), (3.0, 2.0), (0.5, 1.8)]);
        let c = cheeger(&p);
        assert_eq!(c.h, 1.0 / c.r_star);
        assert!(c.residual.abs() <= 1e-10 * p.area());
        assert!(c.r_star > 0.0 && c.r_star < c.inradius);
        let ratio = c.cheeger_set.perimeter() / c.cheeger_set.area();
        assert!((ratio - c.h).abs() <= 1e-9 * c.h);
    }

    #[test]
    fn scalars_of_hexagon() {
        let s = cheeger_scalars(&regular_ngon(6, 1.0f64).unwrap());
        let want = 2.0 + (2.0 * std::f64::consts::PI / 3f64.sqrt()).sqrt();
        assert!((s.wh - want).abs() < 1e-9, "{} vs {want}", s.wh);
        assert!((want - 3.9046).abs() < 1e-4);
    }

    #[test]
    fn single_precision_kernel() {
        let t = equilateral(1.0f32).unwrap();
        let c = cheeger(&t);
        assert!((c.h - 5.3326805f32).abs() < 1e-3);
    }
}
