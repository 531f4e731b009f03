//! Closed-form coefficient sequences and related evaluators.

pub mod closed_form;
pub mod harmonic;
pub mod laurent;
pub mod zeta;

pub use closed_form::{binomial, closed_form, closed_form_values, Reading, SequenceId};
pub use harmonic::{harmonic, HarmonicCache};
pub use laurent::{constant_term_power, LaurentCT};
pub use zeta::{zeta4_error, Zeta4Report};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::operator::PRecurrence;

pub fn run_recurrence(rec: &PRecurrence, initials: &[Rational], len: usize) -> Result<Vec<Rational>> {
    rec.run(initials, len)
}

/// `(A∗B)_n = A_n B_n`.
pub fn hadamard(a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x * y).collect())
}
