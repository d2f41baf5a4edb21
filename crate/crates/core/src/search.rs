//! Random-restart hill climbing on `w(K) h(K)` over convex polygons.
//!
//! Each move displaces one vertex and re-canonicalizes, so the iterate stays
//! convex and may lose vertices along the way; `n_vertices` is an upper
//! bound. The objective is scale invariant and needs no normalization.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cheeger::{cheeger, rectangle_cheeger_radius};
use crate::error::{GeomError, Result};
use crate::geometry::{canonicalize, item_rng, random_convex_with, rect_rl, ConvexPolygon, ShapeJson};
use crate::point::Point;
use crate::scalar::equilateral_wh;
use crate::verify::{asymmetry, AsymmetryOptions};

pub const MIN_STEP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n_vertices: usize,
    pub iters: usize,
    pub seed: u64,
    /// Initial displacement, relative to the current minimal width.
    pub step: f64,
    /// Per-iteration geometric decay of the step, floored at [`MIN_STEP`].
    pub decay: f64,
    pub restarts: usize,
    /// Start every restart here instead of at a random polygon.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<ShapeJson>,
}

impl SearchConfig {
    /// Step decaying from 0.1 to 1e-5 over the run.
    pub fn new(n_vertices: usize, iters: usize, seed: u64, restarts: usize) -> Self {
        let decay = (1e-4f64).powf(1.0 / iters.max(1) as f64);
        Self {
            n_vertices,
            iters,
            seed,
            step: 0.1,
            decay,
            restarts,
            start: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(GeomError::ParamOutOfRange(m));
        if self.n_vertices < 3 {
            return bad(format!("n_vertices must be >= 3, got {}", self.n_vertices));
        }
        if self.iters == 0 || self.restarts == 0 {
            return bad("iters and restarts must be positive".into());
        }
        if !(self.step > 0.0) || !(self.decay > 0.0 && self.decay <= 1.0) {
            return bad(format!("invalid step schedule ({}, {})", self.step, self.decay));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_shape: ShapeJson,
    pub best_value: f64,
    /// Accepted improvements `(iteration, value)` of the winning restart.
    pub trajectory: Vec<(usize, f64)>,
    pub asym_of_best: f64,
    /// Largest value accepted by any restart.
    pub max_accepted: f64,
    pub accepted_moves: usize,
}

impl SearchResult {
    pub fn trajectory_csv(&self) -> String {
        let mut s = String::from("iteration,value\n");
        for (i, v) in &self.trajectory {
            s.push_str(&format!("{i},{v:?}\n"));
        }
        s
    }
}

pub fn wh(p: &ConvexPolygon<f64>) -> f64 {
    p.minimal_width().0 * cheeger(p).h
}

struct Run {
    shape: ConvexPolygon<f64>,
    value: f64,
    trajectory: Vec<(usize, f64)>,
    max_accepted: f64,
    accepted: usize,
}

fn climb(cfg: &SearchConfig, restart: usize) -> Result<Run> {
    let mut rng = item_rng(cfg.seed, restart as u64);
    let mut shape = match &cfg.start {
        Some(s) => s.to_polygon::<f64>()?,
        None => random_convex_with(cfg.n_vertices, &mut rng)?,
    };
    let mut value = wh(&shape);
    let mut trajectory = vec![(0, value)];
    let mut max_accepted = value;
    let mut accepted = 0;
    let mut step = cfg.step;
    for it in 1..=cfg.iters {
        let scale = step * shape.minimal_width().0;
        let i = rng.random_range(0..shape.len());
        let ang = rng.random_range(0.0..std::f64::consts::TAU);
        let rad = scale * rng.random::<f64>().sqrt();
        let mut pts = shape.vertices().to_vec();
        pts[i] = pts[i] + Point::polar(ang) * rad;
        step = (step * cfg.decay).max(MIN_STEP);
        let Ok(cand) = canonicalize(&pts) else { continue };
        let v = wh(&cand);
        if v > value {
            shape = cand;
            value = v;
            accepted += 1;
            max_accepted = max_accepted.max(v);
            trajectory.push((it, v));
        }
    }
    Ok(Run {
        shape,
        value,
        trajectory,
        max_accepted,
        accepted,
    })
}

fn serialized(p: &ConvexPolygon<f64>) -> Vec<[f64; 2]> {
    p.to_xy()
}

pub fn maximize_wh(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let runs: Vec<Run> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| climb(cfg, r))
        .collect::<Result<Vec<_>>>()?;
    let max_accepted = runs.iter().map(|r| r.max_accepted).fold(f64::NEG_INFINITY, f64::max);
    let accepted_moves = runs.iter().map(|r| r.accepted).sum();
    let best = runs
        .into_iter()
        .reduce(|a, b| {
            let ord = a.value.partial_cmp(&b.value).unwrap_or(std::cmp::Ordering::Equal).then_with(|| {
                serialized(&b.shape)
                    .partial_cmp(&serialized(&a.shape))
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
            if ord == std::cmp::Ordering::Less {
                b
            } else {
                a
            }
        })
        .expect("at least one restart");
    let asym_of_best = asymmetry(&best.shape, &AsymmetryOptions::default()).0;
    Ok(SearchResult {
        best_shape: ShapeJson::from(&best.shape),
        best_value: best.value,
        trajectory: best.trajectory,
        asym_of_best,
        max_accepted,
        accepted_moves,
    })
}

/// `w h` along the rectangles `[-L, L] x [0, 1]`, which decreases to 2.
pub fn minimize_wh_trace(l_list: &[f64]) -> Result<Vec<(f64, f64)>> {
    let mut prev = f64::NEG_INFINITY;
    let mut out = Vec::with_capacity(l_list.len());
    for &l in l_list {
        if !(l > prev) {
            return Err(GeomError::ParamOutOfRange("L values must be strictly increasing".into()));
        }
        prev = l;
        out.push((l, wh(&rect_rl(l)?)));
    }
    Ok(out)
}

/// Closed-form `w h` of `[-L, L] x [0, 1]`.
pub fn rectangle_wh(l: f64) -> f64 {
    1.0 / rectangle_cheeger_radius(2.0 * l, 1.0)
}

/// Bound that no accepted state may exceed.
pub fn wh_bound() -> f64 {
    equilateral_wh::<f64>() + 1e-9
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::equilateral;

    #[test]
    fn equilateral_start_cannot_improve() {
        let mut cfg = SearchConfig::new(3, 300, 1, 2);
        cfg.start = Some(ShapeJson::from(&equilateral(1.0).unwrap()));
        let r = maximize_wh(&cfg).unwrap();
        assert_eq!(r.accepted_moves, 0);
        assert!((r.best_value - equilateral_wh::<f64>()).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let cfg = SearchConfig::new(4, 200, 5, 3);
        assert_eq!(maximize_wh(&cfg).unwrap(), maximize_wh(&cfg).unwrap());
    }

    #[test]
    fn trajectory_is_monotone_and_bounded() {
        let r = maximize_wh(&SearchConfig::new(5, 400, 11, 2)).unwrap();
        assert!(r.trajectory.windows(2).all(|w| w[1].1 >= w[0].1 && w[1].0 > w[0].0));
        assert!(r.max_accepted <= wh_bound());
    }

    #[test]
    fn invalid_config() {
        assert!(maximize_wh(&SearchConfig::new(2, 10, 0, 1)).is_err());
        assert!(maximize_wh(&SearchConfig::new(3, 0, 0, 1)).is_err());
    }

    #[test]
    fn rectangle_trace() {
        let tr = minimize_wh_trace(&[1.0, 2.0, 32.0, 512.0]).unwrap();
        assert!(tr.windows(2).all(|w| w[1].1 < w[0].1));
        assert!(tr.iter().all(|(_, v)| *v > 2.0));
        assert!(tr[2].1 < 2.2);
        for (l, v) in tr {
            assert!((v - rectangle_wh(l)).abs() < 1e-9);
        }
        assert!(minimize_wh_trace(&[2.0, 1.0]).is_err());
    }
}
