//! Exact computation of Apostol–Bernoulli and Apostol–Euler polynomials of
//! higher order, the twisted difference calculus `Λf(x) = λf(x+1) − f(x)`,
//! expansion of polynomials in the Apostol–Bernoulli basis, and a catalog of
//! identity checks with machine-readable reports.
//!
//! All arithmetic is exact: λ is either a rational constant or a symbol, in
//! which case coefficients live in the rational function field ℚ(λ).

pub mod combinatorics;
pub mod error;
pub mod expansion;
pub mod field;
pub mod mode;
pub mod operators;
pub mod series;
pub mod special;
pub mod verify;
pub mod xpoly;

pub use error::{Error, Result};
pub use field::{BigRational, FieldElement, LambdaPoly, LambdaRatFunc};
pub use mode::LambdaMode;
pub use series::TruncatedSeries;
pub use xpoly::XPolynomial;
