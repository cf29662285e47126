//! Exact rational linear algebra used by every homology computation.

mod eliminate;
mod rational;
mod reduce;
mod sparse;
mod symmetric;

pub use eliminate::{eliminate, Echelon};
pub use rational::{ParseRationalError, Rational};
pub use reduce::{reduce_columns, ColumnReduction};
pub use sparse::{axpy, dot, lookup, scale, SparseRationalMatrix, SparseVec};
pub use symmetric::{inertia, invert, is_symmetric, Inertia};
