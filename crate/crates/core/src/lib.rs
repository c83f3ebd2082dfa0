//! Exact Ehrhart theory for permutohedra and hypersimplices.
//!
//! The crate computes Ehrhart polynomials of Minkowski sums of dilated
//! hypersimplices, mixed lattice-point valuations of hypersimplices, and
//! the Berline-Vergne alpha values of the face orbits of the regular
//! permutohedron. Two independent routes to the alpha values are provided
//! (mixed valuations, and the Psi valuation on low-dimensional cones) so
//! each can check the other.
//!
//! All arithmetic is exact. The linear-algebra kernel in [`exact`] is
//! generic over a [`exact::Field`]; everything above it is specialised to
//! [`Rational`].

pub mod alpha;
pub mod cli;
pub mod conepsi;
pub mod counter;
pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod mixedval;
pub mod permdata;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision non-negative integer, used for lattice-point counts.
pub type Natural = num_bigint::BigUint;
/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
/// Exact rational vector.
pub type RatVector = exact::Vector<Rational>;

/// Shorthand for `p/q` as a [`Rational`].
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Integer::from(p), Integer::from(q))
}

/// Integer-valued [`Rational`].
pub fn int(p: i64) -> Rational {
    Rational::from_integer(Integer::from(p))
}
