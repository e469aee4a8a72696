//! Sparse vectors and operators, exact rank, and small dense helpers.

mod commutant;
pub mod dense;
mod rank;
mod sparse;

pub use commutant::commutant_dim;
pub use rank::{in_span, rank, Echelon};
pub use sparse::{SparseOperator, SparseVector};
