pub mod caps;
pub mod error;
pub mod fiber;
pub mod graph;
pub mod graver;
pub mod lattice;
pub mod monomial;
pub mod random;
pub mod search;
mod text;

pub use dashu_int::IBig;
