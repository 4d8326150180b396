//! Exact integer lattice toolkit for surface-style intersection forms.
//!
//! The crate models free Z-modules with an integer symmetric bilinear form
//! (Gram lattices) and layers on top of them the machinery needed to decide
//! whether a surface-like pair (lattice, canonical class) carries a
//! numerically exceptional collection of maximal length: trigonal chain
//! reduction, characteristic vectors and their orbit normalization, exact
//! Euler pairings on numerical classes, the collection criterion and witness
//! construction, a p_g = q = 0 classifier, and the associated toric fans.
//!
//! All arithmetic is exact; nothing is computed in floating point. Core
//! types are generic over the integer scalar through [`scalar::LatticeInt`],
//! and the crate-root aliases fix the default arbitrary-precision scalar.

pub mod characteristic;
pub mod classify;
pub mod collections;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod riemann_roch;
pub mod scalar;
pub mod search;
pub mod toric;
pub mod trigonal;

pub use error::{Error, Result};
pub use lattice::{BasisChange, GramLattice, LatticeVector, Signature};
pub use scalar::LatticeInt;

/// Default arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rational numbers over the default scalar.
pub type Rational = num_rational::BigRational;
/// Gram lattice over the default scalar.
pub type Lattice = lattice::GramLattice<Int>;
/// Lattice vector over the default scalar.
pub type Vector = lattice::LatticeVector<Int>;
/// Invertible integer basis change over the default scalar.
pub type Basis = lattice::BasisChange<Int>;
/// Surface-style numerical data over the default scalar.
pub type Surface = riemann_roch::SurfaceData<Int>;
