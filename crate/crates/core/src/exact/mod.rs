//! Exact rational linear algebra: scalars, sparse vectors, echelon forms,
//! canonical subspaces and linear maps.

mod echelon;
mod linmap;
mod rational;
mod sparse;
mod subspace;

pub use echelon::{rref, Echelon};
pub use linmap::LinearMap;
pub use rational::{format_rational, frac, int, one, parse_rational, zero, Rational};
pub use sparse::{dense_zero, SparseVec};
pub use subspace::{QuotientBasis, Subspace};
