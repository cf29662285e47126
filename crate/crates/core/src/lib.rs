//! Intersection homology, Witt conditions and signatures of combinatorial
//! stratified pseudomanifolds, computed with exact rational linear algebra.

pub mod complex;
pub mod corpus;
pub mod error;
pub mod ih;
pub mod linalg;
pub mod resolution;
pub mod signature;
pub mod strat;
pub mod witt;

pub use error::{Error, Result};
