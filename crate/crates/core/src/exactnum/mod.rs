//! Exact rationals, saturating counts and slope polygons.

mod extcount;
mod fraction;
mod polygon;

pub use extcount::ExtCount;
pub use fraction::Fraction;
pub use polygon::{lies_on_or_above, polygon_from_slopes, share_endpoints, ConvexPolygon};
