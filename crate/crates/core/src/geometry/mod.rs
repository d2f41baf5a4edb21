//! Floating-point primitives for planar convex polygons.

mod families;
mod halfplane;
mod hausdorff;
mod inner;
mod polygon;
mod random;
mod rounded;

pub use families::{
    equilateral, family_reps, family_t0, family_teps, make_equilateral, rect_rl, reuleaux_polygon,
    regular_ngon, EquilateralPose,
};
pub use halfplane::{intersect_half_planes, HalfPlane};
pub use hausdorff::hausdorff;
pub use inner::{inner_parallel, inradius_center};
pub(crate) use inner::inner_area;
pub use polygon::{canonicalize, point_segment_distance, ConvexPolygon, Direction, ShapeJson};
pub use random::{item_rng, random_convex, random_convex_with};
pub use rounded::{minkowski_disk, RoundedPolygon};
