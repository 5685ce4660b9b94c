//! Geometry, hidden-symmetry, geodesic and Dirac-index computations for the
//! generalized Taub-NUT metric family.

pub mod error;
pub mod geometry;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{Chart, ChartPoint, MetricParams};
