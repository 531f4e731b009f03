//! Differential operators in θ-form and D-form.

mod convert;
mod dform;
mod exterior;
mod grammar;
mod recurrence;
mod theta;

pub use convert::{convert_operator, d_to_theta, theta_to_d, Form, Operator};
pub use dform::DOperator;
pub use exterior::exterior_square;
pub use grammar::parse_operator;
pub use recurrence::{recurrence_from_theta, PRecurrence};
pub use theta::{OperatorJson, ThetaOperator};

/// True iff the `x^0` part is a nonzero multiple of `θ^k`.
pub fn indicial_is_mum(op: &ThetaOperator) -> bool {
    op.is_mum()
}

/// Applies a θ-form operator to a log-series.
pub fn apply_operator(op: &ThetaOperator, u: &crate::algebra::LogSeries) -> crate::algebra::LogSeries {
    op.apply(u)
}
