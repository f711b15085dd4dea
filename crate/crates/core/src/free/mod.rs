//! Truncated free algebras, ideals and presented quotients.

mod algebra;
mod layers;
mod word;

pub use algebra::{
    ideal_span, induced_map, subspace_product, ProductSpan, TruncIdeal, TruncQuotAlgebra,
};
pub use word::{words_up_to, NCPoly, TruncTensorAlgebra, Word};
