//! Crossed modules and cat¹-objects of Leibniz and associative algebras.

mod assoc;
mod assoc_xmod;
mod leibniz_xmod;

pub use assoc::AssocAlgebra;
pub use assoc_xmod::{assoc_xmod_round_trip, cat1_assoc_round_trip, AssocXMod, Cat1Assoc};
pub use leibniz_xmod::{cat1_round_trip, xmod_round_trip, Cat1Leibniz, LeibnizXMod, XLiez};
