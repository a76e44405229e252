use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{parse_rational, render_rational, FieldElement, LambdaRatFunc};

/// How λ is treated in a computation: as the indeterminate of ℚ(λ), or as a
/// fixed rational value.
///
/// `Numeric(1)` is the classical branch. Bernoulli-family kernels at λ = 1
/// are built from `t/(e^t − 1)` directly rather than by substitution into
/// symbolic values, which have a pole there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LambdaMode {
    Symbolic,
    Numeric(BigRational),
}

impl LambdaMode {
    pub fn numeric(n: i64, d: i64) -> Self {
        LambdaMode::Numeric(BigRational::new(n.into(), d.into()))
    }

    /// The classical branch λ = 1.
    pub fn classical() -> Self {
        LambdaMode::Numeric(BigRational::one())
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, LambdaMode::Numeric(v) if v.is_one())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, LambdaMode::Symbolic)
    }

    /// Embeds a rational constant in this mode's field.
    pub fn lift(&self, r: BigRational) -> FieldElement {
        match self {
            LambdaMode::Symbolic => FieldElement::Symbolic(LambdaRatFunc::from_rational(r)),
            LambdaMode::Numeric(_) => FieldElement::Rational(r),
        }
    }

    pub fn lift_int(&self, n: i64) -> FieldElement {
        self.lift(BigRational::from_integer(n.into()))
    }

    pub fn zero(&self) -> FieldElement {
        self.lift(BigRational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.lift(BigRational::one())
    }

    /// λ itself as a field element.
    pub fn lambda(&self) -> FieldElement {
        match self {
            LambdaMode::Symbolic => FieldElement::Symbolic(LambdaRatFunc::lambda()),
            LambdaMode::Numeric(v) => FieldElement::Rational(v.clone()),
        }
    }

    /// Whether `e` belongs to this mode's field variant.
    pub fn owns(&self, e: &FieldElement) -> bool {
        matches!(
            (self, e),
            (LambdaMode::Symbolic, FieldElement::Symbolic(_))
                | (LambdaMode::Numeric(_), FieldElement::Rational(_))
        )
    }

    /// Machine label: `symbolic` or the rational value.
    pub fn label(&self) -> String {
        match self {
            LambdaMode::Symbolic => "symbolic".to_string(),
            LambdaMode::Numeric(v) => render_rational(v),
        }
    }
}

impl fmt::Display for LambdaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for LambdaMode {
    type Err = Error;

    /// Accepts `symbolic`, `p/q` or `p`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("symbolic") {
            return Ok(LambdaMode::Symbolic);
        }
        parse_rational(s).map(LambdaMode::Numeric)
    }
}

/// Symbolic first, then numeric values in increasing order.
impl Ord for LambdaMode {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LambdaMode::Symbolic, LambdaMode::Symbolic) => Ordering::Equal,
            (LambdaMode::Symbolic, _) => Ordering::Less,
            (_, LambdaMode::Symbolic) => Ordering::Greater,
            (LambdaMode::Numeric(a), LambdaMode::Numeric(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for LambdaMode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("symbolic".parse::<LambdaMode>().unwrap(), LambdaMode::Symbolic);
        assert_eq!("1/3".parse::<LambdaMode>().unwrap(), LambdaMode::numeric(1, 3));
        assert!("1".parse::<LambdaMode>().unwrap().is_classical());
        assert!("-2".parse::<LambdaMode>().is_ok());
        assert!("x/2".parse::<LambdaMode>().is_err());
        assert_eq!(LambdaMode::numeric(-2, 4).label(), "-1/2");
    }

    #[test]
    fn ordering() {
        let mut v = vec![LambdaMode::numeric(2, 1), LambdaMode::Symbolic, LambdaMode::numeric(-2, 1)];
        v.sort();
        assert_eq!(v, vec![LambdaMode::Symbolic, LambdaMode::numeric(-2, 1), LambdaMode::numeric(2, 1)]);
    }
}
