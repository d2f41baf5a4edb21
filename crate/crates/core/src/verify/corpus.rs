use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cheeger::cheeger;
use crate::geometry::{item_rng, random_convex_with, ConvexPolygon};
use crate::scalar::equilateral_wh;
use crate::verify::{
    area_comparison_margin, asymmetry, margins_from, width_lemma_margin, AsymmetryOptions, StabilityParams,
    AREA_COMPARISON, MARGIN_TOL, WIDTH_LEMMA,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorpusParams {
    pub stability: StabilityParams,
    pub max_vertices: usize,
    /// Offsets `t = r k / t_grid`, `k = 0..t_grid`, for the offset checks.
    pub t_grid: usize,
    /// Measure the asymmetry of every shape whose deficit is at most `eta`.
    pub with_asymmetry: bool,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self {
            stability: StabilityParams::admissible_default(),
            max_vertices: 12,
            t_grid: 8,
            with_asymmetry: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeRow {
    pub index: usize,
    pub n: usize,
    pub w: f64,
    pub r: f64,
    pub area: f64,
    pub perim: f64,
    pub diam: f64,
    pub h: f64,
    pub wh: f64,
    pub deficit: f64,
    /// Relative mismatch between `h` and perimeter/area of the Cheeger set.
    pub cheeger_consistency: f64,
    pub margins: BTreeMap<String, f64>,
    pub asymmetry: Option<f64>,
    /// `C * deficit - asymmetry` when the asymmetry was measured.
    pub stability_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub check: String,
    pub theorem: String,
    pub margin: f64,
    pub vertices: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub count: usize,
    pub seed: u64,
    pub params: CorpusParams,
    pub min_margins: BTreeMap<String, f64>,
    pub max_cheeger_consistency: f64,
    pub violations: Vec<Violation>,
    /// Largest `asymmetry / deficit` among shapes with deficit in `(0, eta]`.
    pub max_alpha_over_delta: Option<f64>,
    /// Shapes for which `C * deficit < asymmetry` with the supplied `C`.
    pub stability_shortfalls: usize,
    pub rows: Vec<ShapeRow>,
}

impl CorpusReport {
    /// One CSV row per shape. Margin columns follow the sorted check names.
    pub fn to_csv(&self) -> String {
        let names: Vec<&String> = self.rows.first().map(|r| r.margins.keys().collect()).unwrap_or_default();
        let mut s = String::from("index,n,w,r,area,perim,diam,h,wh,deficit,cheeger_consistency");
        for k in &names {
            let _ = write!(s, ",{k}");
        }
        s.push_str(",asymmetry,stability_margin\n");
        let opt = |v: Option<f64>| v.map(|x| format!("{x:?}")).unwrap_or_default();
        for r in &self.rows {
            let _ = write!(
                s,
                "{},{},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?}",
                r.index, r.n, r.w, r.r, r.area, r.perim, r.diam, r.h, r.wh, r.deficit, r.cheeger_consistency
            );
            for k in &names {
                let _ = write!(s, ",{:?}", r.margins[*k]);
            }
            let _ = writeln!(s, ",{},{}", opt(r.asymmetry), opt(r.stability_margin));
        }
        s
    }
}

fn evaluate(index: usize, p: &ConvexPolygon<f64>, params: &CorpusParams) -> (ShapeRow, Vec<Violation>) {
    let c = cheeger(p);
    let (w, _) = p.minimal_width();
    let scalars = crate::cheeger::CheegerScalars {
        w,
        r: c.inradius,
        area: p.area(),
        perim: p.perimeter(),
        diam: p.diameter(),
        h: c.h,
        wh: w * c.h,
    };
    let mut margins = margins_from(&scalars);
    let grid = params.t_grid.max(1);
    let mut wl = f64::INFINITY;
    let mut ac = f64::INFINITY;
    for k in 0..grid {
        let t = c.inradius * k as f64 / grid as f64;
        wl = wl.min(width_lemma_margin(p, w, t));
        ac = ac.min(area_comparison_margin(p, w, t));
    }
    margins.insert(WIDTH_LEMMA.to_string(), wl);
    margins.insert(AREA_COMPARISON.to_string(), ac);

    let consistency = ((c.cheeger_set.perimeter() / c.cheeger_set.area() - c.h) / c.h).abs();
    let deficit = equilateral_wh::<f64>() - scalars.wh;
    let (asym, stab) = if params.with_asymmetry && deficit <= params.stability.eta {
        let a = asymmetry(p, &AsymmetryOptions::default()).0;
        (Some(a), Some(params.stability.c * deficit - a))
    } else {
        (None, None)
    };

    let mut violations = Vec::new();
    for (k, m) in &margins {
        if *m < -MARGIN_TOL {
            violations.push(Violation {
                index,
                check: k.clone(),
                theorem: super::theorem_name(k).to_string(),
                margin: *m,
                vertices: p.to_xy(),
            });
        }
    }
    if !(consistency <= MARGIN_TOL) {
        violations.push(Violation {
            index,
            check: "cheeger_consistency".into(),
            theorem: super::theorem_name("cheeger_consistency").to_string(),
            margin: -consistency,
            vertices: p.to_xy(),
        });
    }
    let row = ShapeRow {
        index,
        n: p.len(),
        w,
        r: scalars.r,
        area: scalars.area,
        perim: scalars.perim,
        diam: scalars.diam,
        h: c.h,
        wh: scalars.wh,
        deficit,
        cheeger_consistency: consistency,
        margins,
        asymmetry: asym,
        stability_margin: stab,
    };
    (row, violations)
}

/// Runs every check on a fixed list of shapes.
pub fn verify_shapes(shapes: &[ConvexPolygon<f64>], seed: u64, params: &CorpusParams) -> CorpusReport {
    let results: Vec<(ShapeRow, Vec<Violation>)> = shapes
        .par_iter()
        .enumerate()
        .map(|(i, p)| evaluate(i, p, params))
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut violations = Vec::new();
    for (row, v) in results {
        rows.push(row);
        violations.extend(v);
    }
    let mut min_margins: BTreeMap<String, f64> = BTreeMap::new();
    for r in &rows {
        for (k, m) in &r.margins {
            let e = min_margins.entry(k.clone()).or_insert(f64::INFINITY);
            *e = e.min(*m);
        }
    }
    let max_cheeger_consistency = rows.iter().map(|r| r.cheeger_consistency).fold(0.0, f64::max);
    let max_alpha_over_delta = rows
        .iter()
        .filter(|r| r.deficit > 0.0)
        .filter_map(|r| r.asymmetry.map(|a| a / r.deficit))
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x))));
    let stability_shortfalls = rows
        .iter()
        .filter(|r| r.stability_margin.is_some_and(|m| m < -MARGIN_TOL))
        .count();
    CorpusReport {
        count: rows.len(),
        seed,
        params: *params,
        min_margins,
        max_cheeger_consistency,
        violations,
        max_alpha_over_delta,
        stability_shortfalls,
        rows,
    }
}

/// Shape `i` of a corpus: `n` uniform in `3..=max_vertices`, then a random
/// convex polygon, both drawn from the stream for `(seed, i)`.
pub fn corpus_shape(seed: u64, index: usize, max_vertices: usize) -> ConvexPolygon<f64> {
    let mut rng = item_rng(seed, index as u64);
    let n = rng.random_range(3..=max_vertices.max(3));
    random_convex_with(n, &mut rng).expect("random polygon")
}

/// Random-polygon corpus checked against every inequality.
pub fn verify_corpus(count: usize, seed: u64, params: &CorpusParams) -> CorpusReport {
    let shapes: Vec<ConvexPolygon<f64>> = (0..count)
        .into_par_iter()
        .map(|i| corpus_shape(seed, i, params.max_vertices))
        .collect();
    verify_shapes(&shapes, seed, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{make_equilateral, reuleaux_polygon, EquilateralPose};
    use crate::point::Point;

    fn fast() -> CorpusParams {
        CorpusParams {
            with_asymmetry: false,
            ..CorpusParams::default()
        }
    }

    #[test]
    fn small_corpus_is_clean_and_deterministic() {
        let a = verify_corpus(40, 42, &fast());
        assert!(a.violations.is_empty(), "{:?}", a.violations);
        let b = verify_corpus(40, 42, &fast());
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.to_csv().lines().count(), 41);
    }

    #[test]
    fn equilateral_corpus_has_no_deficit() {
        let mut rng = item_rng(9, 0);
        let shapes: Vec<ConvexPolygon<f64>> = (0..20)
            .map(|_| {
                let pose = EquilateralPose::new(
                    10f64.powf(rng.random_range(-3.0..3.0)),
                    Point::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)),
                    rng.random_range(0.0..7.0),
                );
                make_equilateral(&pose).unwrap()
            })
            .collect();
        let rep = verify_shapes(&shapes, 9, &fast());
        assert!(rep.rows.iter().all(|r| r.deficit.abs() <= 1e-8));
    }

    #[test]
    fn reuleaux_is_not_a_maximizer() {
        let rep = verify_shapes(&[reuleaux_polygon(256).unwrap()], 0, &fast());
        assert!(rep.violations.is_empty());
        assert!(rep.rows[0].margins["main"] > 0.0);
    }
}
