//! Exact computations with Calabi–Yau differential operators.

pub mod algebra;
pub mod catalog;
pub mod cy;
pub mod error;
pub mod frobenius;
pub mod operator;
pub mod pullback;
pub mod sequences;

pub use error::{Error, Result};
