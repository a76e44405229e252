use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratfunc::LambdaRatFunc;
use super::render::{render_field, Notation};
use crate::error::{Error, Result};

/// A scalar from the active exact coefficient field: ℚ when λ is fixed to a
/// rational value, ℚ(λ) when λ is kept symbolic.
///
/// The operator impls panic when the two operands come from different
/// variants; a computation is always run inside a single
/// [`LambdaMode`](crate::mode::LambdaMode), so a mix is a programming error.
/// Use [`field_arith`] or the `checked_*` methods for a fallible surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Symbolic(LambdaRatFunc),
}

/// Field operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

impl FieldElement {
    fn variant_name(&self) -> &'static str {
        match self {
            FieldElement::Rational(_) => "rational",
            FieldElement::Symbolic(_) => "symbolic",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Symbolic(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Symbolic(f) => f.is_one(),
        }
    }

    /// Sign used for rendering: rationals by value, rational functions by the
    /// leading numerator coefficient.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Symbolic(f) => f.is_negative(),
        }
    }

    /// Zero of the same variant as `self`.
    pub fn zero_like(&self) -> Self {
        self.lift(BigRational::zero())
    }

    pub fn one_like(&self) -> Self {
        self.lift(BigRational::one())
    }

    /// Embeds a rational constant into the same variant as `self`.
    pub fn lift(&self, r: BigRational) -> Self {
        match self {
            FieldElement::Rational(_) => FieldElement::Rational(r),
            FieldElement::Symbolic(_) => FieldElement::Symbolic(LambdaRatFunc::from_rational(r)),
        }
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, c: &BigRational) -> Self {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(r * c),
            FieldElement::Symbolic(f) => FieldElement::Symbolic(f.scale(c)),
        }
    }

    /// The rational value when the element is constant in λ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r.clone()),
            FieldElement::Symbolic(f) => f.as_rational(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn same_variant(&self, rhs: &Self) -> Result<()> {
        if std::mem::discriminant(self) == std::mem::discriminant(rhs) {
            Ok(())
        } else {
            Err(Error::MixedVariants(self.variant_name(), rhs.variant_name()))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_variant(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_variant(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_variant(rhs)?;
        Ok(self * rhs)
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.recip())),
            FieldElement::Symbolic(f) => f.inv().map(FieldElement::Symbolic),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_variant(rhs)?;
        Ok(self * &rhs.inv()?)
    }

    /// Renders with λ spelled `L`.
    pub fn to_machine_string(&self) -> String {
        render_field(self, Notation::Machine)
    }
}

/// Applies one field operation. Binary operations require `b`; unary ones
/// ignore it.
pub fn field_arith(op: FieldOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
    let rhs = || b.ok_or_else(|| Error::InvalidConfig(format!("{op:?} needs two operands")));
    match op {
        FieldOp::Add => a.checked_add(rhs()?),
        FieldOp::Sub => a.checked_sub(rhs()?),
        FieldOp::Mul => a.checked_mul(rhs()?),
        FieldOp::Div => a.checked_div(rhs()?),
        FieldOp::Neg => Ok(-a),
        FieldOp::Inv => a.inv(),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match (self, rhs) {
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                        FieldElement::Rational(a.$method(b))
                    }
                    (FieldElement::Symbolic(a), FieldElement::Symbolic(b)) => {
                        FieldElement::Symbolic(a.$method(b))
                    }
                    (a, b) => panic!(
                        "mixed field variants: {} and {}",
                        a.variant_name(),
                        b.variant_name()
                    ),
                }
            }
        }

        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Symbolic(f) => FieldElement::Symbolic(-f),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Human rendering, λ spelled `λ`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_field(self, Notation::Human))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::lambda_poly::LambdaPoly;

    fn rat(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    fn inv_lambda_minus_one() -> FieldElement {
        FieldElement::Symbolic(
            LambdaRatFunc::new(LambdaPoly::one(), LambdaPoly::from_i64(&[-1, 1])).unwrap(),
        )
    }

    #[test]
    fn spec_arith_examples() {
        let a = inv_lambda_minus_one();
        let sum = field_arith(FieldOp::Add, &a, Some(&-&a)).unwrap();
        assert!(sum.is_zero());
        assert_eq!(field_arith(FieldOp::Mul, &rat(1, 2), Some(&rat(2, 3))).unwrap(), rat(1, 3));
        let lm1 = FieldElement::Symbolic(LambdaRatFunc::from_poly(LambdaPoly::from_i64(&[-1, 1])));
        assert_eq!(field_arith(FieldOp::Inv, &lm1, None).unwrap(), a);
    }

    #[test]
    fn errors() {
        assert_eq!(rat(0, 1).inv(), Err(Error::DivisionByZero));
        assert_eq!(
            field_arith(FieldOp::Div, &rat(1, 1), Some(&rat(0, 1))),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            field_arith(FieldOp::Add, &rat(1, 1), Some(&inv_lambda_minus_one())),
            Err(Error::MixedVariants(_, _))
        ));
        assert!(field_arith(FieldOp::Sub, &rat(1, 1), None).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed field variants")]
    fn operator_mix_panics() {
        let _ = &rat(1, 1) + &inv_lambda_minus_one();
    }
}
