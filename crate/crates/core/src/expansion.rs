//! Expansion of a polynomial `q(x)` in the Apostol–Bernoulli family
//! `{Bⱼ⁽ᵏ⁾(x|λ)}`.
//!
//! Away from λ = 1 the member `Bⱼ⁽ᵏ⁾` vanishes for `j < k` and has degree
//! `j − k` otherwise, so the usable window is `j = k..k+deg q`. At λ = 1 the
//! classical `Bⱼ⁽ᵏ⁾` is monic of degree `j` and the window is `j = 0..deg q`.
//! Either way the system is triangular in the degree and back-substitution
//! solves it exactly.

use crate::combinatorics::inv_factorial;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::mode::LambdaMode;
use crate::operators::{d_op, lambda_power_at_zero, OperatorVariant};
use crate::special::apostol_bernoulli_poly;
use crate::xpoly::XPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionMethod {
    /// Exact triangular solve.
    Oracle,
    /// `bⱼ = (1/j!)·Σ_{a=0}^{k} (−1)^a C(k,a) λ^a (D^{j−k}q)(a)` for `j = k..deg q`.
    Theorem1Literal,
    /// `bⱼ = (1/j!)·(Λᵏ D^{j−k} q)(0)` for `j = k..k+deg q`.
    CorrectedConjecture,
}

impl ExpansionMethod {
    pub fn name(self) -> &'static str {
        match self {
            ExpansionMethod::Oracle => "oracle",
            ExpansionMethod::Theorem1Literal => "theorem1_literal",
            ExpansionMethod::CorrectedConjecture => "corrected_conjecture",
        }
    }
}

/// Coefficients `b_{j_lo}, b_{j_lo+1}, …` of `q = Σ bⱼ Bⱼ⁽ᵏ⁾(x|λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub k: usize,
    pub mode: LambdaMode,
    pub method: ExpansionMethod,
    pub j_lo: usize,
    pub coefficients: Vec<FieldElement>,
    /// Whether reconstruction reproduces the input exactly.
    pub exact: bool,
}

impl BasisExpansion {
    /// Last index, `None` when there are no coefficients.
    pub fn j_hi(&self) -> Option<usize> {
        (self.j_lo + self.coefficients.len()).checked_sub(1).filter(|_| !self.coefficients.is_empty())
    }

    /// `bⱼ`, zero outside the stored window.
    pub fn coeff(&self, j: usize) -> FieldElement {
        j.checked_sub(self.j_lo)
            .and_then(|i| self.coefficients.get(i).cloned())
            .unwrap_or_else(|| self.mode.zero())
    }

    /// Coefficientwise equality over `j ≥ from`, treating missing entries as zero.
    pub fn agrees_from(&self, other: &BasisExpansion, from: usize) -> bool {
        let top = |e: &BasisExpansion| e.j_lo + e.coefficients.len();
        (from..top(self).max(top(other))).all(|j| self.coeff(j) == other.coeff(j))
    }

    pub fn agrees_with(&self, other: &BasisExpansion) -> bool {
        self.agrees_from(other, 0)
    }
}

/// `Σ bⱼ·Bⱼ⁽ᵏ⁾(x|λ)`.
pub fn reconstruct(e: &BasisExpansion, mode: &LambdaMode) -> XPolynomial {
    e.coefficients
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .fold(XPolynomial::zero(mode), |acc, (i, b)| {
            &acc + &apostol_bernoulli_poly(e.j_lo + i, e.k, mode).scale(b)
        })
}

fn finish(
    q: &XPolynomial,
    k: usize,
    mode: &LambdaMode,
    method: ExpansionMethod,
    j_lo: usize,
    coefficients: Vec<FieldElement>,
) -> BasisExpansion {
    let mut e = BasisExpansion {
        k,
        mode: mode.clone(),
        method,
        j_lo,
        coefficients,
        exact: false,
    };
    e.exact = reconstruct(&e, mode) == *q;
    e
}

/// Ground-truth expansion by back-substitution.
pub fn expand_oracle(q: &XPolynomial, k: usize, mode: &LambdaMode) -> BasisExpansion {
    let classical = mode.is_classical();
    let j_lo = if classical { 0 } else { k };
    let Some(d) = q.degree() else {
        return finish(q, k, mode, ExpansionMethod::Oracle, j_lo, Vec::new());
    };
    let mut coefficients = vec![mode.zero(); d + 1];
    let mut residual = q.clone();
    for e in (0..=d).rev() {
        let j = j_lo + e;
        let basis = apostol_bernoulli_poly(j, k, mode);
        debug_assert_eq!(basis.degree(), Some(e));
        let lead = basis.leading().expect("basis member is nonzero");
        let b = residual
            .coeff(e)
            .checked_div(lead)
            .expect("leading coefficient is nonzero");
        if !b.is_zero() {
            residual = &residual - &basis.scale(&b);
        }
        coefficients[e] = b;
    }
    debug_assert!(residual.is_zero());
    finish(q, k, mode, ExpansionMethod::Oracle, j_lo, coefficients)
}

/// Closed-form coefficients with the sign and summation range exactly as
/// printed. Empty when `deg q < k`.
pub fn theorem1_coefficients(q: &XPolynomial, k: usize, mode: &LambdaMode) -> BasisExpansion {
    let n = q.degree().unwrap_or(0);
    let coefficients = (k..=n)
        .filter(|_| !q.is_zero())
        .map(|j| {
            let dq = d_op(q, j - k);
            lambda_power_at_zero(&dq, k, mode, OperatorVariant::PaperLemma)
                .scale(&inv_factorial(j as i64))
        })
        .collect();
    finish(q, k, mode, ExpansionMethod::Theorem1Literal, k, coefficients)
}

fn corrected_window(
    q: &XPolynomial,
    k: usize,
    mode: &LambdaMode,
    j_hi: Option<usize>,
) -> BasisExpansion {
    let coefficients = match j_hi {
        Some(hi) => (k..=hi)
            .map(|j| {
                let dq = d_op(q, j - k);
                lambda_power_at_zero(&dq, k, mode, OperatorVariant::DirectIteration)
                    .scale(&inv_factorial(j as i64))
            })
            .collect(),
        None => Vec::new(),
    };
    finish(q, k, mode, ExpansionMethod::CorrectedConjecture, k, coefficients)
}

/// `bⱼ = (1/j!)·(Λᵏ D^{j−k} q)(0)` over `j = k..k+deg q`.
///
/// Fails at λ = 1, where the basis window starts at zero and the formula
/// says nothing about `j < k`.
pub fn corrected_coefficients(q: &XPolynomial, k: usize, mode: &LambdaMode) -> Result<BasisExpansion> {
    if mode.is_classical() {
        return Err(Error::Unsupported(
            "corrected coefficients need lambda != 1; use corrected_upper_coefficients".into(),
        ));
    }
    Ok(corrected_window(q, k, mode, q.degree().map(|d| k + d)))
}

/// The same formula restricted to `j = k..deg q`, the indices it can speak
/// to at λ = 1. Compare with [`BasisExpansion::agrees_from`] at `k`.
pub fn corrected_upper_coefficients(q: &XPolynomial, k: usize, mode: &LambdaMode) -> BasisExpansion {
    let hi = q.degree().filter(|&d| d >= k);
    corrected_window(q, k, mode, hi)
}
