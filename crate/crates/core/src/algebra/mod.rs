//! Exact scalar, polynomial, rational-function and series arithmetic.

pub mod logseries;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;

pub use logseries::LogSeries;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::{
    format_rational, from_bigint, parse_rational, rat, ratio, to_scientific, Rational,
};
pub use series::PowerSeries;
