//! Exact coefficient arithmetic.
//!
//! The coefficient tower is fixed as the fraction field of Laurent
//! polynomials in `v` over the Gaussian rationals, with `v^2 = q`. It is the
//! smallest exactly computable field housing `q`, `q^(1/2)`, `i` and rational
//! functions such as `kappa = (q+1)/(q-1)` at the same time. On top of it sit
//! truncated power series in the spectral variables.

mod gauss;
mod laurent;
pub mod qsymbols;
mod scalar;
mod series;

pub use gauss::GaussianRational;
pub use laurent::LaurentPoly;
pub use scalar::Scalar;
pub use series::{qpoch_infinite_series, SeriesVars, TruncatedSeries};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series division needs an invertible constant term")]
    NonInvertibleConstantTerm,
    #[error("{what} must be nonnegative, got {value}")]
    NegativeArgument { what: &'static str, value: i64 },
    #[error("invalid argument: {what}")]
    InvalidArgument { what: &'static str },
}
