pub mod envelope;
pub mod error;
pub mod exact;
pub mod free;
pub mod leibniz;
pub mod lm;
pub mod verdict;
pub mod xmod;
pub mod xrep;
pub mod xul;

pub use error::{Error, Result};
