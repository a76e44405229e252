//! The twisted difference operator `Λf(x) = λf(x+1) − f(x)` and the
//! derivative `D` on polynomials.

use crate::combinatorics::{big, binomial, int};
use crate::field::FieldElement;
use crate::mode::LambdaMode;
use crate::xpoly::XPolynomial;

/// How `(Λᵏf)(0)` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorVariant {
    /// `Σ_{l=0}^{k} (−1)^l C(k,l) λ^l f(l)`, sign as stated in the closed form.
    PaperLemma,
    /// `k` literal applications of Λ, then evaluation at zero.
    DirectIteration,
}

/// `p(x + h)`.
pub fn shift_poly(p: &XPolynomial, h: &FieldElement) -> XPolynomial {
    p.shift(h)
}

/// `λ·p(x+1) − p(x)`.
///
/// # Panics
/// If `p` was built in a different mode.
pub fn lambda_op(p: &XPolynomial, mode: &LambdaMode) -> XPolynomial {
    assert_eq!(p.mode(), mode, "polynomial mode does not match operator mode");
    let shifted = p.shift(&mode.one()).scale(&mode.lambda());
    &shifted - p
}

/// `Λᵏp` by repeated application.
pub fn lambda_power(p: &XPolynomial, k: usize, mode: &LambdaMode) -> XPolynomial {
    (0..k).fold(p.clone(), |acc, _| lambda_op(&acc, mode))
}

/// `s`-th derivative.
pub fn d_op(p: &XPolynomial, s: usize) -> XPolynomial {
    (0..s).fold(p.clone(), |acc, _| acc.derivative())
}

fn signed_sum(p: &XPolynomial, k: usize, mode: &LambdaMode, sign_of: impl Fn(usize) -> bool) -> FieldElement {
    let lambda = mode.lambda();
    (0..=k).fold(mode.zero(), |acc, l| {
        let term = (&lambda.pow(l) * &p.eval_rational(&int(l as i64))).scale(&big(&binomial(k, l)));
        if sign_of(l) {
            &acc - &term
        } else {
            &acc + &term
        }
    })
}

/// `(Λᵏp)(0)` computed according to `variant`.
pub fn lambda_power_at_zero(
    p: &XPolynomial,
    k: usize,
    mode: &LambdaMode,
    variant: OperatorVariant,
) -> FieldElement {
    match variant {
        OperatorVariant::DirectIteration => lambda_power(p, k, mode).coeff(0),
        OperatorVariant::PaperLemma => signed_sum(p, k, mode, |l| l % 2 == 1),
    }
}

/// `Σ_{l=0}^{k} (−1)^{k−l} C(k,l) λ^l p(l)`, the binomial expansion of
/// `(λE − 1)ᵏ` with `E` the unit shift.
pub fn corrected_closed_form(p: &XPolynomial, k: usize, mode: &LambdaMode) -> FieldElement {
    signed_sum(p, k, mode, |l| (k - l) % 2 == 1)
}

/// Whether `ΛDp = DΛp` holds exactly.
pub fn commutator_check(p: &XPolynomial, mode: &LambdaMode) -> bool {
    lambda_op(&d_op(p, 1), mode) == d_op(&lambda_op(p, mode), 1)
}
