//! Exact tensor-space representations of the Temperley-Lieb and blob
//! algebras, the localization functor between levels, and rank certificates
//! for the adjointness map.

pub mod adjoint;
pub mod coeff;
pub mod functor;
pub mod error;
pub mod linalg;
pub mod mult;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Scalar;
