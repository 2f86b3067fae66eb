//! Exact geometry of left-invariant Lorentz metrics on 3-dimensional Lie groups and of
//! 4-dimensional Lorentz homogeneous models.
//!
//! Structure constants, metrics, connections, curvature and isotropy are computed in exact
//! rational arithmetic. Only the geodesic integrator works in floating point.

pub mod catalog;
pub mod classify;
pub mod geodesics;
pub mod isotropy;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod rational;
pub mod sampling;
pub mod tensor;

pub use lie::{AlgebraIdentity, AlgebraTag, LieAlgebra};
pub use linalg::{QMatrix, QVector};
pub use metric::InvariantMetric;
pub use rational::Rational;
