use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::point::Point;
use crate::scalar::Scalar;

/// Closed half-plane `{x : normal . x <= offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane<T> {
    pub normal: Point<T>,
    pub offset: T,
}

impl<T: Scalar> HalfPlane<T> {
    /// Normalizes `normal`; panics on a zero vector.
    pub fn new(normal: Point<T>, offset: T) -> Self {
        let len = normal.norm();
        assert!(len > T::zero(), "half-plane normal must be nonzero");
        Self {
            normal: normal / len,
            offset: offset / len,
        }
    }

    /// Signed distance of `q` past the boundary (positive outside).
    #[inline]
    pub fn excess(&self, q: Point<T>) -> T {
        self.normal.dot(q) - self.offset
    }

    /// The same half-plane moved inward by `t`.
    pub fn shifted(&self, t: T) -> Self {
        Self {
            normal: self.normal,
            offset: self.offset - t,
        }
    }

    #[inline]
    fn dir(&self) -> Point<T> {
        self.normal.perp()
    }

    #[inline]
    fn angle(&self) -> T {
        self.dir().angle()
    }

    /// Intersection point of the two boundary lines, `None` if parallel.
    fn meet(&self, other: &Self) -> Option<Point<T>> {
        let det = self.normal.cross(other.normal);
        if det.abs() <= T::epsilon() {
            return None;
        }
        let x = (self.offset * other.normal.y - other.offset * self.normal.y) / det;
        let y = (self.normal.x * other.offset - other.normal.x * self.offset) / det;
        Some(Point::new(x, y))
    }
}

/// Intersection of a bounded family of half-planes.
///
/// Returns the vertices of the intersection in counterclockwise order. The
/// result can be degenerate (a sliver, segment or point) when the region is
/// thinner than `tol`; it is empty when no point violates every constraint
/// by at most `tol`. Near-parallel constraints (normal angle gap below
/// 1e-10) keep only the tighter offset.
pub fn intersect_half_planes<T: Scalar>(planes: &[HalfPlane<T>], tol: T) -> Vec<Point<T>> {
    let mut hp: Vec<(T, HalfPlane<T>)> = planes.iter().map(|h| (h.angle(), *h)).collect();
    hp.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(Ordering::Equal)
            .then(a.1.offset.partial_cmp(&b.1.offset).unwrap_or(Ordering::Equal))
    });
    let par = T::lit(1e-10);
    let mut uniq: Vec<HalfPlane<T>> = Vec::with_capacity(hp.len());
    for (ang, h) in hp {
        if let Some(last) = uniq.last() {
            if (ang - last.angle()).abs() < par {
                // Sorted by offset within a tie, so the first one is tightest.
                continue;
            }
        }
        uniq.push(h);
    }
    // The angle sort is cyclic: the first and last entries can also be parallel.
    if uniq.len() >= 2 {
        let first = uniq[0];
        let last = uniq[uniq.len() - 1];
        if (first.angle() - last.angle() + T::TAU()).abs() < par {
            if last.offset < first.offset {
                uniq[0] = last;
            }
            uniq.pop();
        }
    }
    if uniq.len() < 3 {
        return Vec::new();
    }

    let outside = |h: &HalfPlane<T>, q: Point<T>| h.excess(q) > tol;
    let mut dq: VecDeque<HalfPlane<T>> = VecDeque::with_capacity(uniq.len());
    for h in uniq {
        while dq.len() >= 2 {
            match dq[dq.len() - 1].meet(&dq[dq.len() - 2]) {
                Some(q) if outside(&h, q) => {
                    dq.pop_back();
                }
                _ => break,
            }
        }
        while dq.len() >= 2 {
            match dq[0].meet(&dq[1]) {
                Some(q) if outside(&h, q) => {
                    dq.pop_front();
                }
                _ => break,
            }
        }
        if let Some(back) = dq.back() {
            if back.dir().cross(h.dir()).abs() <= T::epsilon() && back.normal.dot(h.normal) < T::zero() {
                return Vec::new();
            }
        }
        dq.push_back(h);
    }
    while dq.len() >= 3 {
        match dq[dq.len() - 1].meet(&dq[dq.len() - 2]) {
            Some(q) if outside(&dq[0], q) => {
                dq.pop_back();
            }
            _ => break,
        }
    }
    while dq.len() >= 3 {
        match dq[0].meet(&dq[1]) {
            Some(q) if outside(&dq[dq.len() - 1], q) => {
                dq.pop_front();
            }
            _ => break,
        }
    }
    if dq.len() < 3 {
        return Vec::new();
    }
    let n = dq.len();
    let scale = planes.iter().fold(T::zero(), |m, h| m.max(h.offset.abs()));
    let mut out = Vec::with_capacity(n);
    let mut slack = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (&dq[i], &dq[(i + 1) % n]);
        match a.meet(b) {
            Some(q) => {
                // Rounding in `meet` grows like eps / |det| for nearly parallel lines.
                let det = a.normal.cross(b.normal).abs();
                let cond = T::epsilon() * T::lit(16.0) * (scale + q.norm()) / det;
                out.push(q);
                slack.push(tol * T::lit(4.0) + cond);
            }
            None => return Vec::new(),
        }
    }
    // The deque sweep can report a spurious inverted cycle when the true
    // region is empty; reject anything that violates a constraint.
    let ok = planes
        .iter()
        .all(|h| out.iter().zip(&slack).all(|(q, s)| h.excess(*q) <= *s));
    if !ok {
        return Vec::new();
    }
    out
}
