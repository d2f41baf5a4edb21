use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cheeger::{cheeger, rectangle_cheeger_radius};
use crate::error::{GeomError, Result};
use crate::geometry::{family_reps, family_t0, family_teps, hausdorff, rect_rl};
use crate::scalar::equilateral_wh;
use crate::verify::{asymmetry, AsymmetryOptions};

/// Limit of `alpha_E(R_eps) / delta_wh(R_eps)` implied by the closed forms
/// `eps h(T_0)` and `eps / (2 (sqrt 3 - eps))`, about 0.0937615.
pub fn sharpness_ratio_limit() -> f64 {
    1.0 / (2.0 * equilateral_wh::<f64>())
}

/// One row of a parametrized family table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub family: String,
    pub param: f64,
    pub measured: BTreeMap<String, f64>,
    pub reference: BTreeMap<String, f64>,
    /// Largest relative error over quantities present in both maps.
    pub rel_err: f64,
}

impl SweepRecord {
    fn new(family: &str, param: f64, measured: BTreeMap<String, f64>, reference: BTreeMap<String, f64>) -> Self {
        let rel_err = measured
            .iter()
            .filter_map(|(k, m)| reference.get(k).map(|r| rel(*m, *r)))
            .fold(0.0, f64::max);
        Self {
            family: family.to_string(),
            param,
            measured,
            reference,
            rel_err,
        }
    }

    pub fn rel_err_of(&self, key: &str) -> Option<f64> {
        Some(rel(*self.measured.get(key)?, *self.reference.get(key)?))
    }
}

fn rel(m: f64, r: f64) -> f64 {
    if r == 0.0 {
        m.abs()
    } else {
        ((m - r) / r).abs()
    }
}

fn map(entries: &[(&str, f64)]) -> BTreeMap<String, f64> {
    entries.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// `h(T_0) = (3 + sqrt(pi sqrt 3)) / sqrt 3`.
fn h_t0() -> f64 {
    equilateral_wh::<f64>() / 3f64.sqrt()
}

/// Clipped-triangle family `R_eps` against its closed forms.
///
/// Measured: deficit, asymmetry, `d_H(R_eps, T_eps)`, their ratio and
/// `h(R_eps)`. The reference map also carries `alpha_e_diam_bound`, the
/// lower bound `eps / (sqrt 3 (sqrt 3 - eps))` forced by comparing diameters;
/// it has no measured counterpart and does not enter `rel_err`.
pub fn sweep_sharpness(eps_list: &[f64]) -> Result<Vec<SweepRecord>> {
    let cap = (3f64.sqrt() / 2.0).min(0.5);
    let s3 = 3f64.sqrt();
    let t0 = family_t0::<f64>();
    let h0 = cheeger(&t0).h;
    let mut out = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        if !(eps > 0.0 && eps <= cap) {
            return Err(GeomError::ParamOutOfRange(format!("eps must lie in (0, {cap}], got {eps}")));
        }
        let r = family_reps(eps)?;
        let t = family_teps(eps)?;
        let w = r.minimal_width().0;
        let h = cheeger(&r).h;
        let delta = equilateral_wh::<f64>() - w * h;
        let (alpha, _) = asymmetry(&r, &AsymmetryOptions::default());
        let dh = hausdorff(&r, &t);
        let measured = map(&[
            ("delta_wh", delta),
            ("alpha_e", alpha),
            ("d_h", dh),
            ("ratio", alpha / delta),
            ("h", h),
            ("h_t0", h0),
        ]);
        let reference = map(&[
            ("delta_wh", eps * h_t0()),
            ("alpha_e", eps / (2.0 * (s3 - eps))),
            ("d_h", eps / 2.0),
            ("h", h_t0()),
            ("h_t0", h_t0()),
            ("alpha_e_diam_bound", eps / (s3 * (s3 - eps))),
        ]);
        out.push(SweepRecord::new("reps", eps, measured, reference));
    }
    Ok(out)
}

/// Rectangles `[-L, L] x [0, 1]` against the rectangle root closed form.
pub fn sweep_rectangles(l_list: &[f64]) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::with_capacity(l_list.len());
    for &l in l_list {
        let rect = rect_rl(l)?;
        let w = rect.minimal_width().0;
        let h = cheeger(&rect).h;
        let h_ref = 1.0 / rectangle_cheeger_radius(2.0 * l, 1.0);
        let measured = map(&[("h", h), ("wh", w * h)]);
        let reference = map(&[("h", h_ref), ("wh", h_ref)]);
        out.push(SweepRecord::new("rectangles", l, measured, reference));
    }
    Ok(out)
}

/// Long-format CSV: one row per (record, quantity). Floats use the
/// shortest representation that parses back to the same value.
pub fn sweeps_to_csv(records: &[SweepRecord]) -> String {
    let mut s = String::from("family,param,quantity,measured,reference,rel_err\n");
    for rec in records {
        let mut keys: Vec<&String> = rec.measured.keys().chain(rec.reference.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let m = rec.measured.get(k).map(|v| format!("{v:?}")).unwrap_or_default();
            let r = rec.reference.get(k).map(|v| format!("{v:?}")).unwrap_or_default();
            let e = rec.rel_err_of(k).map(|v| format!("{v:?}")).unwrap_or_default();
            let _ = writeln!(s, "{},{:?},{},{},{},{}", rec.family, rec.param, k, m, r, e);
        }
    }
    s
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_limit_constant() {
        assert!((sharpness_ratio_limit() - 0.0937615).abs() < 1e-7);
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(1.5)).collect();
        assert!((loglog_slope(&xs, &ys) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn rectangle_sweep_matches_closed_form() {
        let recs = sweep_rectangles(&[1.0, 2.0, 512.0]).unwrap();
        for r in &recs {
            assert!(r.rel_err < 1e-10, "{r:?}");
        }
        assert!(recs[2].measured["h"] - 2.0 <= 0.01);
        assert!(sweep_rectangles(&[0.5]).is_err());
    }

    #[test]
    fn sharpness_deficit_is_linear() {
        let recs = sweep_sharpness(&[0.01]).unwrap();
        let r = &recs[0];
        assert!(r.rel_err_of("delta_wh").unwrap() < 1e-9);
        assert!((r.measured["h"] - h_t0()).abs() < 1e-9);
        assert!(sweep_sharpness(&[0.6]).is_err());
    }

    #[test]
    fn csv_layout() {
        let recs = sweep_rectangles(&[2.0]).unwrap();
        let csv = sweeps_to_csv(&recs);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "family,param,quantity,measured,reference,rel_err");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("rectangles,2.0,h,"));
    }
}
