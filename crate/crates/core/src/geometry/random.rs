//! Seeded random convex polygons.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::geometry::polygon::{canonicalize, ConvexPolygon};
use crate::point::Point;
use crate::scalar::Scalar;

/// RNG for item `index` of a run seeded with `seed`.
///
/// Each index gets its own ChaCha stream, so per-item results do not depend
/// on evaluation order.
pub fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Splits sorted coordinates into signed increments of two monotone chains.
fn chain_increments<R: Rng + ?Sized>(rng: &mut R, sorted: &[f64]) -> Vec<f64> {
    let n = sorted.len();
    let (lo, hi) = (sorted[0], sorted[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut last_a, mut last_b) = (lo, lo);
    for &x in &sorted[1..n - 1] {
        if rng.random_bool(0.5) {
            out.push(x - last_a);
            last_a = x;
        } else {
            out.push(last_b - x);
            last_b = x;
        }
    }
    out.push(hi - last_a);
    out.push(last_b - hi);
    out
}

/// Random convex polygon with at most `n` vertices, drawn with Valtr's
/// random-direction construction and recentered on its centroid.
pub fn random_convex_with<T: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ConvexPolygon<T>> {
    if n < 3 {
        return Err(GeomError::ParamOutOfRange(format!("need n >= 3, got {n}")));
    }
    for _ in 0..64 {
        let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let mut ys: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let dx = chain_increments(rng, &xs);
        let mut dy = chain_increments(rng, &ys);
        dy.shuffle(rng);
        let mut vecs: Vec<(f64, f64)> = dx.into_iter().zip(dy).collect();
        vecs.sort_by(|a, b| a.1.atan2(a.0).partial_cmp(&b.1.atan2(b.0)).unwrap());
        let (mut x, mut y) = (0.0, 0.0);
        let mut pts = Vec::with_capacity(n);
        for (vx, vy) in vecs {
            pts.push(Point::new(T::lit(x), T::lit(y)));
            x += vx;
            y += vy;
        }
        if let Ok(p) = canonicalize(&pts) {
            let c = p.centroid();
            return Ok(p.translated(-c));
        }
    }
    Err(GeomError::DegenerateInput("could not draw a nondegenerate polygon".into()))
}

pub fn random_convex<T: Scalar>(n: usize, seed: u64) -> Result<ConvexPolygon<T>> {
    random_convex_with(n, &mut item_rng(seed, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_convex() {
        for n in 3..=12 {
            let a = random_convex::<f64>(n, 7).unwrap();
            let b = random_convex::<f64>(n, 7).unwrap();
            assert_eq!(a, b);
            assert!(a.len() <= n && a.len() >= 3);
            assert!(a.area() > 0.0);
        }
    }

    #[test]
    fn streams_differ() {
        let a: ConvexPolygon<f64> = random_convex_with(6, &mut item_rng(1, 0)).unwrap();
        let b: ConvexPolygon<f64> = random_convex_with(6, &mut item_rng(1, 1)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn rejects_small_n() {
        assert!(random_convex::<f64>(2, 0).is_err());
    }
}
