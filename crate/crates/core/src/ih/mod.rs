//! Perversities, allowable chains and intersection homology.

mod engine;
mod perversity;

pub use engine::{
    allowable_indices, allowable_simplices, ih_compare, ih_ranks, intersection_chain_complex, is_allowable, IHResult,
    IhComparison, IntersectionChainComplex,
};
pub use perversity::{middle_perversities, Perversity};
