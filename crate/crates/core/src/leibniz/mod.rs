//! Finite-dimensional Leibniz algebras, actions and representations.

mod action;
mod algebra;
mod rep;

pub use action::LeibnizAction;
pub use algebra::{disjoint_names, LeibnizAlgebra, Liezation};
pub(crate) use rep::combine as rep_combine;
pub use rep::LeibnizRep;
