//! Filtrations by closed skeleta, strata, the frontier order, depth and links.

mod build;
mod filtration;
mod link;
mod strata;

pub use build::{cone, product_with_manifold, staircase_product, suspension};
pub use filtration::{Filtration, StratifiedSpace};
pub use link::{stratum_link, StratifiedLink};
pub use strata::{validate_filtration, StrataPoset, Stratum};
