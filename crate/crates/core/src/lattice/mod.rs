//! Exact lattice arithmetic: toric matrices, kernel moves, the conformal
//! order and the vector/binomial encoding.

mod binomial;
mod linalg;
mod matrix;
mod moves;

pub use binomial::{edge_names, parse_binomial, render_binomial};
pub use linalg::{det, det_rows, kernel_basis, null_dim, rank};
pub use matrix::ToricMatrix;
pub use moves::{conformal_leq, Move};

pub(crate) use moves::conformal_leq_slices;
