//! Symbolic calculus for graded Artin–Tate shapes.
//!
//! A shape is a finite multiset of shifted classes `F{i}` (Tate) and `A{i}`
//! (the nontrivial quadratic Artin class). Shapes form a commutative semiring
//! under direct sum and tensor product. On top of that calculus the crate
//! builds the concrete shapes attached to Weil transfers of Severi–Brauer
//! varieties and unitary involution varieties, an exact tiling solver for
//! graded multisets, and the verification reports that tie them together.
//!
//! Everything is generic over the multiplicity type (any unsigned
//! [`Multiplicity`]); [`Shape`] fixes it to arbitrary precision and
//! [`Shape64`] to `u64`.

mod class;
pub mod combinatorics;
mod error;
pub mod generators;
pub mod grid;
mod params;
mod scalar;
pub mod serial;
mod shape;
pub mod solver;
pub mod verify;

pub use class::ArtinClass;
pub use error::{Error, Result};
pub use params::Params;
pub use scalar::Multiplicity;
pub use shape::{ClassCounts, GradedShape, ShapeRatio, ShapeStats, Shift};

use num_bigint::BigUint;

/// Shapes with arbitrary-precision multiplicities.
pub type Shape = GradedShape<BigUint>;
/// Shapes with machine-word multiplicities.
pub type Shape64 = GradedShape<u64>;
pub type Stats = ShapeStats<BigUint>;
pub type Ratio = ShapeRatio<BigUint>;
pub type Tile = solver::Tile<BigUint>;
pub type Decomposition = generators::NamedDecomposition<BigUint>;
