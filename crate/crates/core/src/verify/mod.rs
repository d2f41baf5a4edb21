//! Functionals and inequality checks built on top of the geometry and
//! Cheeger kernels.
//!
//! Every margin is `rhs - lhs` of the checked inequality after dividing
//! lengths by the minimal width and areas by its square, so a single
//! absolute tolerance applies at every scale.

mod asymmetry;
mod corpus;
mod stability;
mod sweep;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use asymmetry::{asymmetry, asymmetry_objective, AsymmetryOptions};
pub use corpus::{corpus_shape, verify_corpus, verify_shapes, CorpusParams, CorpusReport, ShapeRow, Violation};
pub use stability::{
    admissible_constant, stability_check, stability_constant, StabilityOutcome, StabilityParams,
};
pub use sweep::{
    loglog_slope, sweep_rectangles, sweep_sharpness, sweeps_to_csv, sharpness_ratio_limit, SweepRecord,
};

use crate::cheeger::{cheeger, cheeger_scalars, CheegerScalars};
use crate::error::{GeomError, Result};
use crate::geometry::{inner_parallel, inradius_center, ConvexPolygon};
use crate::scalar::{equilateral_wh, Scalar};

/// Tolerance below which a negative margin counts as a violation.
pub const MARGIN_TOL: f64 = 1e-9;

pub const MAIN: &str = "main";
pub const LOWER: &str = "lower";
pub const FTOUHI: &str = "ftouhi";
pub const PAL_INRADIUS: &str = "pal_inradius";
pub const PAL_AREA: &str = "pal_area";
pub const WIDTH_LEMMA: &str = "width_lemma";
pub const AREA_COMPARISON: &str = "area_comparison";

/// Human-readable statement of each checked inequality.
pub fn theorem_name(check: &str) -> &'static str {
    match check {
        MAIN => "reverse Cheeger inequality w(K)h(K) <= 3 + sqrt(pi sqrt 3)",
        LOWER => "lower bound w(K)h(K) > 2",
        FTOUHI => "h(K) <= 1/r(K) + sqrt(pi/|K|)",
        PAL_INRADIUS => "Pal inequality w(K) <= 3 r(K)",
        PAL_AREA => "Pal inequality w(K)^2 <= sqrt(3) |K|",
        WIDTH_LEMMA => "width lemma w(K_-t) >= w(K) - 3t",
        AREA_COMPARISON => "area comparison |K_-t| >= |(T_e)_-t|",
        "cheeger_consistency" => "Cheeger set perimeter/area = h",
        _ => "unknown check",
    }
}

/// All scalar functionals of one shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeReport<T> {
    pub w: T,
    pub r: T,
    pub area: T,
    pub perim: T,
    pub diam: T,
    pub h: T,
    pub wh: T,
    pub deficit: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asymmetry: Option<T>,
    pub margins: BTreeMap<String, T>,
}

pub(crate) fn margins_from<T: Scalar>(s: &CheegerScalars<T>) -> BTreeMap<String, T> {
    let one = T::one();
    let mut m = BTreeMap::new();
    m.insert(MAIN.to_string(), equilateral_wh::<T>() - s.wh);
    m.insert(LOWER.to_string(), s.wh - T::lit(2.0));
    m.insert(
        FTOUHI.to_string(),
        s.w / s.r + s.w * (T::PI() / s.area).sqrt() - s.wh,
    );
    m.insert(PAL_INRADIUS.to_string(), T::lit(3.0) * s.r / s.w - one);
    m.insert(PAL_AREA.to_string(), T::lit(3.0).sqrt() * s.area / (s.w * s.w) - one);
    m
}

/// Report with every closed-form margin; asymmetry is filled in on request.
pub fn shape_report<T: Scalar>(p: &ConvexPolygon<T>, with_asymmetry: bool) -> ShapeReport<T> {
    let s = cheeger_scalars(p);
    let asym = with_asymmetry.then(|| asymmetry(p, &AsymmetryOptions::default()).0);
    ShapeReport {
        w: s.w,
        r: s.r,
        area: s.area,
        perim: s.perim,
        diam: s.diam,
        h: s.h,
        wh: s.wh,
        deficit: equilateral_wh::<T>() - s.wh,
        asymmetry: asym,
        margins: margins_from(&s),
    }
}

/// `3 + sqrt(pi sqrt 3) - w(K) h(K)`.
pub fn deficit<T: Scalar>(p: &ConvexPolygon<T>) -> T {
    let (w, _) = p.minimal_width();
    equilateral_wh::<T>() - w * cheeger(p).h
}

pub fn check_main<T: Scalar>(p: &ConvexPolygon<T>) -> T {
    deficit(p)
}

pub fn check_lower<T: Scalar>(p: &ConvexPolygon<T>) -> T {
    let (w, _) = p.minimal_width();
    w * cheeger(p).h - T::lit(2.0)
}

pub fn check_ftouhi<T: Scalar>(p: &ConvexPolygon<T>) -> T {
    margins_from(&cheeger_scalars(p))[FTOUHI]
}

/// Margins of `w <= 3r` and `w^2 <= sqrt(3)|K|`.
pub fn check_pal<T: Scalar>(p: &ConvexPolygon<T>) -> (T, T) {
    let (w, _) = p.minimal_width();
    let (r, _) = inradius_center(p);
    (
        T::lit(3.0) * r / w - T::one(),
        T::lit(3.0).sqrt() * p.area() / (w * w) - T::one(),
    )
}

fn offset_guard<T: Scalar>(t: T, r: T) -> Result<()> {
    if t < T::zero() {
        return Err(GeomError::NegativeOffset(t.to_f64_lossy()));
    }
    // The computed inradius carries a relative error near `rel_eps`.
    if t >= r * (T::one() - T::rel_eps()) {
        return Err(GeomError::OffsetBeyondInradius {
            offset: t.to_f64_lossy(),
            inradius: r.to_f64_lossy(),
        });
    }
    Ok(())
}

pub(crate) fn width_lemma_margin<T: Scalar>(p: &ConvexPolygon<T>, w: T, t: T) -> T {
    let wt = match inner_parallel(p, t) {
        Ok(Some(q)) => q.minimal_width().0,
        _ => T::zero(),
    };
    (wt - (w - T::lit(3.0) * t)) / w
}

pub(crate) fn area_comparison_margin<T: Scalar>(p: &ConvexPolygon<T>, w: T, t: T) -> T {
    let kt = crate::geometry::inner_area(p, t).unwrap_or_else(T::zero);
    let s = (T::one() - T::lit(3.0) * t / w).max(T::zero());
    let tri = w * w / T::lit(3.0).sqrt() * s * s;
    (kt - tri) / (w * w)
}

/// Margin of `w(K_-t) >= w(K) - 3t`, normalized by `w(K)`.
pub fn check_width_lemma<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> Result<T> {
    let (r, _) = inradius_center(p);
    offset_guard(t, r)?;
    let (w, _) = p.minimal_width();
    Ok(width_lemma_margin(p, w, t))
}

/// Margin of `|K_-t| >= |(T_e)_-t|` with `w(T_e) = w(K)`, normalized by `w(K)^2`.
pub fn check_area_comparison<T: Scalar>(p: &ConvexPolygon<T>, t: T) -> Result<T> {
    let (r, _) = inradius_center(p);
    offset_guard(t, r)?;
    let (w, _) = p.minimal_width();
    Ok(area_comparison_margin(p, w, t))
}

/// Outcome of the profile comparison between two bodies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileComparison {
    /// `|K_-t| > |H_-t|` held at every grid offset.
    pub dominates: bool,
    pub h_k: f64,
    pub h_h: f64,
}

/// Compares the area profiles of `k` and `h` on `grid` offsets
/// `t = r(K) j / grid`, `j = 0..grid`, together with both Cheeger constants.
/// When `dominates` is true, `h_k < h_h` is expected.
pub fn compare_profiles(k: &ConvexPolygon<f64>, h: &ConvexPolygon<f64>, grid: usize) -> ProfileComparison {
    let (rk, _) = inradius_center(k);
    let grid = grid.max(1);
    let dominates = (0..grid).all(|j| {
        let t = rk * j as f64 / grid as f64;
        let ak = crate::geometry::inner_area(k, t).unwrap_or(0.0);
        let ah = crate::geometry::inner_area(h, t).unwrap_or(0.0);
        ak > ah
    });
    ProfileComparison {
        dominates,
        h_k: cheeger(k).h,
        h_h: cheeger(h).h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{equilateral, rect_rl};

    fn unit_square() -> ConvexPolygon<f64> {
        ConvexPolygon::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    #[test]
    fn deficits() {
        for w in [0.01f64, 1.0, 250.0] {
            assert!(deficit(&equilateral(w).unwrap()).abs() < 1e-9);
        }
        let want = equilateral_wh::<f64>() - (2.0 + std::f64::consts::PI.sqrt());
        assert!((deficit(&unit_square()) - want).abs() < 1e-9);
        assert!((want - 1.5602266).abs() < 1e-7);
    }

    #[test]
    fn deficit_of_long_rectangles_increases() {
        let mut prev = 0.0;
        for l in [1.0, 4.0, 64.0, 1024.0] {
            let d = deficit(&rect_rl(l).unwrap());
            assert!(d > prev);
            assert!(d < 1.0 + crate::pal_root::<f64>());
            prev = d;
        }
    }

    #[test]
    fn named_checks() {
        let t = equilateral(1.0f64).unwrap();
        assert!(check_main(&t).abs() < 1e-9);
        let (a, b) = check_pal(&t);
        assert!(a.abs() < 1e-9 && b.abs() < 1e-9);
        // Every triangle attains equality: its inner parallel sets are homothetic.
        assert!(check_ftouhi(&t).abs() < 1e-9, "{}", check_ftouhi(&t));

        let m = check_width_lemma(&unit_square(), 0.2).unwrap();
        assert!((m - 0.2).abs() < 1e-12);
        assert!(check_width_lemma(&unit_square(), 0.5).is_err());
        assert!(check_area_comparison(&unit_square(), 0.7).is_err());
        assert!(check_area_comparison(&unit_square(), 0.1).unwrap() > 0.0);

        let l8 = check_lower(&rect_rl(8.0f64).unwrap());
        let l2 = check_lower(&rect_rl(2.0f64).unwrap());
        assert!(l8 > 0.0 && l8 < l2);
    }

    #[test]
    fn report_consistency() {
        let r = shape_report(&unit_square(), false);
        assert_eq!(r.wh, r.w * r.h);
        assert_eq!(r.deficit, equilateral_wh::<f64>() - r.wh);
        assert!(r.asymmetry.is_none());
        assert_eq!(r.margins.len(), 5);
    }
}
