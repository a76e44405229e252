//! Numeric-mode linear combinations over a common denominator.
//!
//! Summing many `BigRational` products normalizes after every step, and the
//! gcds dominate the bivariate checks. Here each polynomial is stored as an
//! integer vector over one denominator, and a combination is accumulated in
//! integers and reduced once per coefficient at the end.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::mode::LambdaMode;
use crate::special::apostol_bernoulli_poly;
use crate::xpoly::XPolynomial;

/// `num / den` coefficientwise, `den > 0`.
#[derive(Clone, Debug)]
pub(super) struct IntPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl IntPoly {
    /// `None` in symbolic mode.
    pub(super) fn from_xpoly(p: &XPolynomial) -> Option<Self> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<BigRational>>>()?;
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Some(IntPoly { num, den })
    }

    pub(super) fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.num.is_empty() || other.num.is_empty() {
            return IntPoly { num: Vec::new(), den: BigInt::one() };
        }
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        IntPoly { num, den: &self.den * &other.den }
    }
}

type BasisKey = (usize, usize, LambdaMode);

static BASIS: LazyLock<Mutex<HashMap<BasisKey, Arc<IntPoly>>>> = LazyLock::new(Default::default);

/// `Bⱼ⁽ᵏ⁾(x|λ)` over a common denominator; `None` in symbolic mode.
pub(super) fn basis(j: usize, k: usize, mode: &LambdaMode) -> Option<Arc<IntPoly>> {
    let key = (j, k, mode.clone());
    if let Some(p) = BASIS.lock().expect("cache lock").get(&key) {
        return Some(p.clone());
    }
    let p = Arc::new(IntPoly::from_xpoly(&apostol_bernoulli_poly(j, k, mode))?);
    BASIS.lock().expect("cache lock").insert(key, p.clone());
    Some(p)
}

/// `Σ cᵢ pᵢ` as a polynomial of the numeric `mode`.
pub(super) fn combine(terms: &[(BigRational, &IntPoly)], mode: &LambdaMode) -> XPolynomial {
    let terms: Vec<_> = terms.iter().filter(|(c, p)| !c.is_zero() && !p.num.is_empty()).collect();
    let common = terms
        .iter()
        .fold(BigInt::one(), |acc, (c, p)| acc.lcm(&(c.denom() * &p.den)));
    let len = terms.iter().map(|(_, p)| p.num.len()).max().unwrap_or(0);
    let mut acc = vec![BigInt::zero(); len];
    for (c, p) in terms {
        let factor = c.numer() * (&common / (c.denom() * &p.den));
        for (slot, a) in acc.iter_mut().zip(&p.num) {
            *slot += &factor * a;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|a| mode.lift(BigRational::new(a, common.clone())))
        .collect();
    XPolynomial::from_coeffs(coeffs, mode)
}

/// `Σ aᵢ bᵢ` with a single reduction.
pub(super) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let pairs: Vec<_> = a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).collect();
    let common = pairs
        .iter()
        .fold(BigInt::one(), |acc, (x, y)| acc.lcm(&(x.denom() * y.denom())));
    let num = pairs.iter().fold(BigInt::zero(), |acc, (x, y)| {
        acc + x.numer() * y.numer() * (&common / (x.denom() * y.denom()))
    });
    BigRational::new(num, common)
}
