//! The rational function field ℚ(λ).

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::lambda_poly::LambdaPoly;
use crate::error::{Error, Result};
use crate::field::rational::render_rational;

/// A reduced fraction `num / den` of polynomials in λ.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, zero stored as `0/1`.
/// Structural equality therefore coincides with equality in ℚ(λ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaRatFunc {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl LambdaRatFunc {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: LambdaPoly, den: LambdaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LambdaPoly, den: LambdaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = LambdaPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lead = den.lead().expect("nonzero denominator").recip();
        LambdaRatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn zero() -> Self {
        LambdaRatFunc {
            num: LambdaPoly::zero(),
            den: LambdaPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LambdaPoly::one())
    }

    pub fn lambda() -> Self {
        Self::from_poly(LambdaPoly::lambda())
    }

    pub fn from_poly(p: LambdaPoly) -> Self {
        LambdaRatFunc {
            num: p,
            den: LambdaPoly::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(LambdaPoly::constant(r))
    }

    pub fn num(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn den(&self) -> &LambdaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the numerator's leading coefficient is negative.
    pub fn is_negative(&self) -> bool {
        self.num.lead().is_some_and(Signed::is_negative)
    }

    /// The constant value, if this element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaRatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Substitutes `λ = at`.
    pub fn evaluate_at(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluation(render_rational(at)));
        }
        Ok(self.num.eval(at) / d)
    }

    fn add_sub(&self, rhs: &Self, subtract: bool) -> Self {
        let combine = |a: &LambdaPoly, b: &LambdaPoly| if subtract { a - b } else { a + b };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = combine(&self.num, &rhs.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        let g = LambdaPoly::gcd(&self.den, &rhs.den);
        let left = rhs.den.exact_div(&g);
        let right = self.den.exact_div(&g);
        let num = combine(&(&self.num * &left), &(&rhs.num * &right));
        Self::canonical(num, &self.den * &left)
    }
}

impl Add for &LambdaRatFunc {
    type Output = LambdaRatFunc;
    fn add(self, rhs: &LambdaRatFunc) -> LambdaRatFunc {
        self.add_sub(rhs, false)
    }
}

impl Sub for &LambdaRatFunc {
    type Output = LambdaRatFunc;
    fn sub(self, rhs: &LambdaRatFunc) -> LambdaRatFunc {
        self.add_sub(rhs, true)
    }
}

impl Mul for &LambdaRatFunc {
    type Output = LambdaRatFunc;
    fn mul(self, rhs: &LambdaRatFunc) -> LambdaRatFunc {
        if self.is_zero() || rhs.is_zero() {
            return LambdaRatFunc::zero();
        }
        // Cross-cancel so the product of monic denominators stays reduced.
        let g1 = LambdaPoly::gcd(&self.num, &rhs.den);
        let g2 = LambdaPoly::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lead = den.lead().expect("nonzero denominator").recip();
        LambdaRatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }
}

impl Neg for &LambdaRatFunc {
    type Output = LambdaRatFunc;
    fn neg(self) -> LambdaRatFunc {
        LambdaRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Reduces `num / den` to canonical form; same as [`LambdaRatFunc::new`].
pub fn ratfunc_canonical(num: LambdaPoly, den: LambdaPoly) -> Result<LambdaRatFunc> {
    LambdaRatFunc::new(num, den)
}
