//! Width and Cheeger constant of planar convex polygons.
//!
//! The kernel is generic over the floating-point type (see [`Scalar`]);
//! `f64` aliases are provided at the crate root for everyday use.

// `!(x > 0)` style guards are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cheeger;
pub mod error;
pub mod geometry;
pub mod optim;
pub mod point;
pub mod scalar;
pub mod search;
pub mod verify;

pub use error::{GeomError, Result};
pub use point::Point;
pub use scalar::{equilateral_wh, pal_root, Scalar};

pub type Point2 = point::Point<f64>;
pub type Polygon = geometry::ConvexPolygon<f64>;
pub type Polygon32 = geometry::ConvexPolygon<f32>;
pub type Rounded = geometry::RoundedPolygon<f64>;
pub type Pose = geometry::EquilateralPose<f64>;
pub type Cheeger = cheeger::CheegerResult<f64>;
pub type Report = verify::ShapeReport<f64>;
