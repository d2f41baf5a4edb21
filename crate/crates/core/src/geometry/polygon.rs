use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::point::Point;
use crate::scalar::Scalar;

/// Direction on the unit circle, stored as an angle in `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction<T> {
    theta: T,
}

impl<T: Scalar> Direction<T> {
    pub fn new(theta: T) -> Self {
        let tau = T::TAU();
        let mut t = theta % tau;
        if t < T::zero() {
            t = t + tau;
        }
        if t >= tau {
            t = T::zero();
        }
        Self { theta: t }
    }

    pub fn from_vector(v: Point<T>) -> Self {
        Self::new(v.angle())
    }

    #[inline]
    pub fn theta(self) -> T {
        self.theta
    }

    #[inline]
    pub fn unit(self) -> Point<T> {
        Point::polar(self.theta)
    }

    pub fn opposite(self) -> Self {
        Self::new(self.theta + T::PI())
    }
}

/// Convex polygon with counterclockwise, strictly convex vertex list.
///
/// The first vertex is the lexicographically smallest `(x, y)` pair, which
/// makes canonicalization idempotent vertex for vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point<T>>,
}

fn lex_cmp<T: Scalar>(a: &Point<T>, b: &Point<T>) -> Ordering {
    a.x.partial_cmp(&b.x)
        .unwrap_or(Ordering::Equal)
        .then(a.y.partial_cmp(&b.y).unwrap_or(Ordering::Equal))
}

fn max_pairwise<T: Scalar>(pts: &[Point<T>]) -> T {
    let mut best = T::zero();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            best = best.max(a.dist(*b));
        }
    }
    best
}

fn signed_area<T: Scalar>(pts: &[Point<T>]) -> T {
    let n = pts.len();
    let mut s = T::zero();
    for i in 0..n {
        s = s + pts[i].cross(pts[(i + 1) % n]);
    }
    s / T::lit(2.0)
}

/// Drops near-duplicate and near-collinear vertices of a CCW convex chain
/// until no more can be removed.
fn prune<T: Scalar>(mut pts: Vec<Point<T>>, merge_dist: T, cross_tol: T) -> Vec<Point<T>> {
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let mut removed = None;
        for i in 0..n {
            let prev = pts[(i + n - 1) % n];
            let cur = pts[i];
            let next = pts[(i + 1) % n];
            if cur.dist(next) <= merge_dist || (cur - prev).cross(next - cur) <= cross_tol {
                removed = Some(i);
                break;
            }
        }
        match removed {
            Some(i) => {
                pts.remove(i);
            }
            None => return pts,
        }
    }
}

fn rotate_to_lex_min<T: Scalar>(pts: &mut [Point<T>]) {
    if let Some((k, _)) = pts
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| lex_cmp(a, b))
    {
        pts.rotate_left(k);
    }
}

/// Convex hull of `points`, counterclockwise, with duplicate and collinear
/// vertices merged under a scale-relative tolerance.
pub fn canonicalize<T: Scalar>(points: &[Point<T>]) -> Result<ConvexPolygon<T>> {
    if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(GeomError::DegenerateInput("non-finite coordinate".into()));
    }
    if points.len() < 3 {
        return Err(GeomError::DegenerateInput(format!(
            "{} points cannot bound an area",
            points.len()
        )));
    }
    let mut pts = points.to_vec();
    pts.sort_by(lex_cmp);
    pts.dedup();

    // Monotone chain with a strict turn test; tolerances are applied once the
    // hull, and therefore its diameter, is known.
    let mut hull: Vec<Point<T>> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point<T>>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - b) <= T::zero() {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }

    let diam = max_pairwise(&hull);
    if !(diam > T::zero()) {
        return Err(GeomError::DegenerateInput("all points coincide".into()));
    }
    let eps = T::rel_eps();
    let mut hull = prune(hull, eps * diam, eps * diam * diam);
    if hull.len() < 3 || signed_area(&hull) <= eps * diam * diam {
        return Err(GeomError::DegenerateInput("hull has no interior".into()));
    }
    rotate_to_lex_min(&mut hull);
    Ok(ConvexPolygon { vertices: hull })
}

impl<T: Scalar> ConvexPolygon<T> {
    pub fn new(points: &[Point<T>]) -> Result<Self> {
        canonicalize(points)
    }

    pub fn from_xy(coords: &[(f64, f64)]) -> Result<Self> {
        let pts: Vec<Point<T>> = coords
            .iter()
            .map(|&(x, y)| Point::new(T::lit(x), T::lit(y)))
            .collect();
        canonicalize(&pts)
    }

    /// Accepts a vertex list that is already CCW and strictly convex, only
    /// normalizing its starting vertex.
    pub(crate) fn from_ccw_unchecked(mut vertices: Vec<Point<T>>) -> Self {
        rotate_to_lex_min(&mut vertices);
        Self { vertices }
    }

    #[inline]
    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point<T> {
        self.vertices[i % self.vertices.len()]
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Outward unit normal of edge `i` (from vertex `i` to `i + 1`).
    pub fn edge_normal(&self, i: usize) -> Point<T> {
        let e = self.vertex(i + 1) - self.vertex(i);
        Point::new(e.y, -e.x) / e.norm()
    }

    pub fn area(&self) -> T {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> T {
        self.edges().fold(T::zero(), |acc, (a, b)| acc + a.dist(b))
    }

    /// Largest vertex-to-vertex distance, found with rotating calipers.
    pub fn diameter(&self) -> T {
        let p = &self.vertices;
        let n = p.len();
        let mut j = 1;
        let mut best = T::zero();
        for i in 0..n {
            let e = p[(i + 1) % n] - p[i];
            let mut guard = 0;
            while guard < n && e.cross(p[(j + 1) % n] - p[j % n]) > T::zero() {
                j += 1;
                guard += 1;
            }
            best = best
                .max(p[i].dist(p[j % n]))
                .max(p[(i + 1) % n].dist(p[j % n]));
        }
        best
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point<T> {
        let n = self.vertices.len();
        let o = self.vertices[0];
        let mut cx = T::zero();
        let mut cy = T::zero();
        let mut a2 = T::zero();
        for i in 0..n {
            let p = self.vertices[i] - o;
            let q = self.vertices[(i + 1) % n] - o;
            let c = p.cross(q);
            a2 = a2 + c;
            cx = cx + (p.x + q.x) * c;
            cy = cy + (p.y + q.y) * c;
        }
        let k = T::lit(3.0) * a2;
        o + Point::new(cx / k, cy / k)
    }

    /// Support function `max_v v . u` for a unit vector `u`.
    pub fn support_vec(&self, u: Point<T>) -> T {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(T::neg_infinity(), T::max)
    }

    pub fn support(&self, d: Direction<T>) -> T {
        self.support_vec(d.unit())
    }

    pub fn directional_width(&self, d: Direction<T>) -> T {
        let u = d.unit();
        self.support_vec(u) + self.support_vec(-u)
    }

    /// Minimal width and the outward normal of the edge realizing it.
    ///
    /// For each edge the farthest vertex from its supporting line is tracked
    /// with a monotone pointer, so the sweep is linear in the vertex count.
    pub fn minimal_width(&self) -> (T, Direction<T>) {
        let p = &self.vertices;
        let n = p.len();
        let height = |i: usize, j: usize| {
            let a = p[i % n];
            let e = p[(i + 1) % n] - a;
            e.cross(p[j % n] - a) / e.norm()
        };
        let mut j = (0..n)
            .max_by(|&a, &b| height(0, a).partial_cmp(&height(0, b)).unwrap_or(Ordering::Equal))
            .unwrap_or(0);
        let mut best = T::infinity();
        let mut best_edge = 0;
        for i in 0..n {
            let mut guard = 0;
            while guard < n && height(i, j + 1) > height(i, j) {
                j += 1;
                guard += 1;
            }
            let hgt = height(i, j);
            if hgt < best {
                best = hgt;
                best_edge = i;
            }
        }
        (best, Direction::from_vector(self.edge_normal(best_edge)))
    }

    /// Applies `p -> scale * R(angle) p + shift`.
    pub fn similarity(&self, scale: T, angle: T, shift: Point<T>) -> Self {
        assert!(scale > T::zero(), "similarity scale must be positive");
        let (s, c) = angle.sin_cos();
        let vs = self
            .vertices
            .iter()
            .map(|v| Point::new(c * v.x - s * v.y, s * v.x + c * v.y) * scale + shift)
            .collect();
        Self::from_ccw_unchecked(vs)
    }

    pub fn scaled(&self, s: T) -> Self {
        self.similarity(s, T::zero(), Point::origin())
    }

    pub fn translated(&self, shift: Point<T>) -> Self {
        self.similarity(T::one(), T::zero(), shift)
    }

    /// Whether `q` lies in the polygon, allowing `tol` outside each edge.
    pub fn contains(&self, q: Point<T>, tol: T) -> bool {
        (0..self.len()).all(|i| self.edge_normal(i).dot(q - self.vertex(i)) <= tol)
    }

    /// Euclidean distance from `q` to the polygon (zero inside).
    pub fn distance_to(&self, q: Point<T>) -> T {
        if self.contains(q, T::zero()) {
            return T::zero();
        }
        self.edges()
            .map(|(a, b)| point_segment_distance(q, a, b))
            .fold(T::infinity(), T::min)
    }

    pub fn cast<U: Scalar>(&self) -> ConvexPolygon<U> {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|p| p.cast()).collect(),
        }
    }

    pub fn to_xy(&self) -> Vec<[f64; 2]> {
        self.vertices
            .iter()
            .map(|p| [p.x.to_f64_lossy(), p.y.to_f64_lossy()])
            .collect()
    }
}

pub fn point_segment_distance<T: Scalar>(q: Point<T>, a: Point<T>, b: Point<T>) -> T {
    let e = b - a;
    let len2 = e.dot(e);
    let t = if len2 > T::zero() {
        ((q - a).dot(e) / len2).max(T::zero()).min(T::one())
    } else {
        T::zero()
    };
    q.dist(a + e * t)
}

/// Shape file layout: `{"vertices": [[x, y], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub vertices: Vec<[f64; 2]>,
}

impl ShapeJson {
    pub fn to_polygon<T: Scalar>(&self) -> Result<ConvexPolygon<T>> {
        let pts: Vec<Point<T>> = self
            .vertices
            .iter()
            .map(|&[x, y]| Point::new(T::lit(x), T::lit(y)))
            .collect();
        canonicalize(&pts)
    }
}

impl<T: Scalar> From<&ConvexPolygon<T>> for ShapeJson {
    fn from(p: &ConvexPolygon<T>) -> Self {
        Self { vertices: p.to_xy() }
    }
}
