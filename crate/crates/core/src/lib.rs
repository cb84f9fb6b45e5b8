//! Exact verification toolkit for a three-dimensional R matrix, the solutions
//! of the Yang-Baxter equation obtained from it by boundary-vector and trace
//! reductions, and the q-oscillator representations of the quantum affine
//! algebras those solutions intertwine.
//!
//! All arithmetic is exact: coefficients live in the fraction field of
//! Laurent polynomials in `v` (with `v^2 = q`) over the Gaussian rationals,
//! and spectral parameters are tracked as truncated formal power series.
//! Every identity check is therefore a decidable equality, not a numerical
//! comparison.

pub mod fock;
pub mod report;
pub mod ring;
pub mod threedim_r;

pub use report::{Failure, Report};
