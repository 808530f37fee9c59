//! Verma bases of irreducible `spo(4|1)`-modules.
//!
//! The algebra acts on `W = V^{(x) m1} (x) (wedge^2 V)^{(x) m2}` with
//! `V = C^{4|1}`; the cyclic submodule generated by the highest weight
//! vector realizes `L(lambda)` for `lambda = (m1 + m2, m2)`. The crate
//! enumerates KN tableaux and Verma exponent vectors, expands Verma vectors
//! exactly, and checks the structural theorems about them.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod module;
pub mod rank;
pub mod scalar;
pub mod tableau;
pub mod verify;
pub mod verma;

pub use algebra::{Generator, Letter, Shape, SuperMatrix, Weight};
pub use error::{Error, Result};
pub use module::{BasisIndex, SparseVector, WedgePair};
pub use scalar::Coefficient;
pub use tableau::Tableau;
pub use verma::BVector;

/// Arbitrary-precision integers, the default coefficient ring.
pub type Integer = num_bigint::BigInt;
pub type Vector = SparseVector<Integer>;
pub type Matrix = SuperMatrix<Integer>;
/// Machine integers; fine for small shapes where coefficients stay bounded.
pub type SmallVector = SparseVector<i64>;
