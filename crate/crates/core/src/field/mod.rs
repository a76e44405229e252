//! Exact coefficient fields: ℚ via [`BigRational`] and ℚ(λ) via
//! [`LambdaRatFunc`], unified under [`FieldElement`].

mod element;
mod lambda_poly;
mod ratfunc;
mod rational;
mod render;

pub use element::{field_arith, FieldElement, FieldOp};
pub use lambda_poly::LambdaPoly;
pub use num_rational::BigRational;
pub use ratfunc::{ratfunc_canonical, LambdaRatFunc};
pub use rational::{parse_rational, rat_normalize, render_rational};
pub use render::{render_field, render_lambda_poly, render_ratfunc, Notation};

use crate::error::Result;

/// Substitutes `λ = at` into a rational function.
pub fn evaluate_at(f: &LambdaRatFunc, at: &BigRational) -> Result<BigRational> {
    f.evaluate_at(at)
}
