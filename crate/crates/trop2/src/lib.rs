//! Exact engine for tropical geometry over two nested valuation parameters.
//!
//! Coefficients live in a field of generalized power series in `t` and `u`
//! with `t` infinitesimally smaller than every power of `u`. Their valuations
//! are lexicographically ordered pairs, and tropicalizing a Laurent
//! polynomial with such coefficients produces a hypersurface that is a finite
//! union of products of ordinary rational polyhedra. This crate computes
//! those decompositions exactly, along with stable intersections of
//! hypersurfaces obtained by perturbing along the second parameter, and the
//! analogous decompositions of tropical cones spanned by finitely many
//! points.
//!
//! All arithmetic is exact: the kernel is generic over [`scalar::Scalar`]
//! and ships with arbitrary-precision rationals as the concrete field. No
//! floating point enters any decision procedure; floats appear only in the
//! SVG renderer when mapping exact coordinates onto a canvas.

pub mod convexity;
pub mod hypersurface;
pub mod json;
pub mod linalg;
pub mod polyhedra;
pub mod puiseux;
pub mod rank2;
pub mod scalar;
pub mod stable;
pub mod svg;

mod error;

pub use error::Error;

/// Concrete scalar used by the command line tools and most callers.
pub type Rat = num_rational::BigRational;

/// Rank-two tropical value over [`Rat`].
pub type Value2 = rank2::Rank2Value<Rat>;

/// Point with [`Rat`] coordinate pairs.
pub type Point2 = rank2::TropPoint2<Rat>;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
