//! Exact computation of the Euclidean 1-center of static points and points
//! moving along rational parametric curves.
//!
//! The center of the smallest enclosing ball of `S ∪ V(t)` is a piecewise
//! rational function of `t`. This crate computes every piece exactly: the
//! event times where the set of boundary points changes (as real algebraic
//! numbers), the support set of each piece, and the rational parametric
//! curve the center follows between events.
//!
//! * [`polyalg`]: rationals, polynomials, rational functions, Sturm roots.
//! * [`curve`]: rational parametric curves on a compact interval.
//! * [`geom`]: points, circumcenters, smallest enclosing balls.
//! * [`voronoi`]: implicit farthest-point Voronoi queries via bisectors.
//! * [`tracker`]: the event-driven tracing of the center function.
//! * [`oracle`]: independent checks of a traced result.

pub mod curve;
pub mod geom;
pub mod oracle;
pub mod polyalg;
pub mod tracker;
pub mod voronoi;

pub use curve::RatCurve;
pub use geom::{Ball, Point};
pub use polyalg::{AlgebraicTime, Interval, Poly, Rat, RatFn};
pub use tracker::{Instance, PiecewiseCenter, SupportSet, TraceOptions};
