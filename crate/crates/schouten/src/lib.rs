//! Exact homology engine for Z-graded (pre) Lie superalgebras.
//!
//! The central object is the superalgebra of multivector fields with
//! polynomial coefficients on R^n under the Schouten bracket, graded by
//! multivector degree and polynomial degree.  The crate builds the
//! double-weighted chain complexes of that algebra (and of finite
//! structure-constant superalgebras), assembles exact boundary matrices,
//! and computes dimensions, ranks, Betti numbers and Euler characteristics
//! over the rationals with no floating point anywhere.
//!
//! Modules:
//! - [`polyvector`]: exact multivector fields and the Schouten bracket
//! - [`superchain`]: canonical super-wedge words and chain-basis enumeration
//! - [`young`]: Young diagrams and the combinatorial dimension/Euler oracle
//! - [`exactlinalg`]: sparse rational matrices and fraction-free rank
//! - [`complex`]: boundary operators, homology summaries, theorem checks
//! - [`finitelsa`]: finite-dimensional superalgebras from structure tables

pub mod complex;
pub mod exactlinalg;
pub mod finitelsa;
pub mod polyvector;
pub mod superchain;
pub mod young;

/// Exact rational scalar used throughout the crate.
pub type Q = num::BigRational;

/// Arbitrary-precision integer used by the fraction-free elimination.
pub type Z = num::BigInt;

pub(crate) fn q_from_i64(v: i64) -> Q {
    Q::from_integer(Z::from(v))
}
