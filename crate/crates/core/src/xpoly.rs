//! Dense polynomials in `x` with coefficients in the active exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::combinatorics::{big, binomial};
use crate::error::Result;
use crate::field::{render_field, FieldElement, Notation};
use crate::mode::LambdaMode;

/// `c₀ + c₁x + … + c_d x^d`, coefficients ascending, no trailing zeros.
///
/// Every polynomial carries the [`LambdaMode`] its coefficients belong to, so
/// zero and constants stay well-typed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    coeffs: Vec<FieldElement>,
    mode: LambdaMode,
}

impl XPolynomial {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    /// # Panics
    /// If a coefficient does not belong to `mode`'s field.
    pub fn from_coeffs(coeffs: Vec<FieldElement>, mode: &LambdaMode) -> Self {
        assert!(
            coeffs.iter().all(|c| mode.owns(c)),
            "coefficient variant does not match mode {mode}"
        );
        let mut p = XPolynomial {
            coeffs,
            mode: mode.clone(),
        };
        p.normalize();
        p
    }

    pub fn from_rationals(coeffs: &[BigRational], mode: &LambdaMode) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| mode.lift(c.clone())).collect(), mode)
    }

    pub fn zero(mode: &LambdaMode) -> Self {
        XPolynomial {
            coeffs: Vec::new(),
            mode: mode.clone(),
        }
    }

    pub fn one(mode: &LambdaMode) -> Self {
        Self::constant(mode.one(), mode)
    }

    pub fn constant(c: FieldElement, mode: &LambdaMode) -> Self {
        Self::from_coeffs(vec![c], mode)
    }

    pub fn x(mode: &LambdaMode) -> Self {
        Self::monomial(mode.one(), 1, mode)
    }

    /// `c·x^deg`.
    pub fn monomial(c: FieldElement, deg: usize, mode: &LambdaMode) -> Self {
        let mut coeffs = vec![mode.zero(); deg];
        coeffs.push(c);
        Self::from_coeffs(coeffs, mode)
    }

    pub fn mode(&self) -> &LambdaMode {
        &self.mode
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.mode.zero())
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect(), &self.mode)
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect(), &self.mode)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.mode.zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn eval_rational(&self, at: &BigRational) -> FieldElement {
        self.eval(&self.mode.lift(at.clone()))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&BigRational::from_integer(i.into())))
            .collect();
        Self::from_coeffs(coeffs, &self.mode)
    }

    /// `p(x + h)` by the binomial theorem.
    pub fn shift(&self, h: &FieldElement) -> Self {
        let Some(d) = self.degree() else {
            return self.clone();
        };
        let mut h_pows = vec![self.mode.one()];
        for i in 1..=d {
            h_pows.push(&h_pows[i - 1] * h);
        }
        let coeffs = (0..=d)
            .map(|j| {
                (j..=d).fold(self.mode.zero(), |acc, i| {
                    let term = (&self.coeffs[i] * &h_pows[i - j]).scale(&big(&binomial(i, j)));
                    &acc + &term
                })
            })
            .collect();
        Self::from_coeffs(coeffs, &self.mode)
    }

    /// Substitutes λ = `at` into every coefficient of a symbolic polynomial.
    /// Numeric polynomials are returned unchanged when `at` matches their λ.
    pub fn evaluate_lambda(&self, at: &BigRational) -> Result<XPolynomial> {
        let target = LambdaMode::Numeric(at.clone());
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                FieldElement::Symbolic(f) => f.evaluate_at(at).map(FieldElement::Rational),
                FieldElement::Rational(r) => Ok(FieldElement::Rational(r.clone())),
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(coeffs, &target))
    }

    /// Newton-form interpolation through `(xᵢ, yᵢ)` with distinct rational nodes.
    pub fn interpolate(points: &[(BigRational, FieldElement)], mode: &LambdaMode) -> Self {
        let n = points.len();
        let mut table: Vec<FieldElement> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]).scale(&dx.recip());
            }
        }
        let mut acc = Self::zero(mode);
        for i in (0..n).rev() {
            let factor = Self::from_coeffs(vec![mode.lift(-points[i].0.clone()), mode.one()], mode);
            acc = &(&acc * &factor) + &Self::constant(table[i].clone(), mode);
        }
        acc
    }

    /// Renders in ascending powers of `x`, e.g. `-L/(L-1) - x`.
    pub fn render(&self, notation: Notation) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            let body = term(&magnitude, i, notation);
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

fn term(c: &FieldElement, power: usize, notation: Notation) -> String {
    let cs = render_field(c, notation);
    let xs = match power {
        0 => return cs,
        1 => "x".to_string(),
        _ => format!("x^{power}"),
    };
    if c.is_one() {
        xs
    } else if cs.contains(['+', '-']) {
        format!("({cs})*{xs}")
    } else {
        format!("{cs}*{xs}")
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Human))
    }
}

impl Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(), &self.mode)
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect(), &self.mode)
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::zero(&self.mode);
        }
        let mut out = vec![self.mode.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPolynomial::from_coeffs(out, &self.mode)
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            mode: self.mode.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::int;
    use crate::field::{LambdaPoly, LambdaRatFunc};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> XPolynomial {
        let m = LambdaMode::classical();
        XPolynomial::from_rationals(&c.iter().map(|&v| int(v)).collect::<Vec<_>>(), &m)
    }

    #[test]
    fn shift_and_derivative() {
        let m = LambdaMode::classical();
        assert_eq!(poly(&[0, 0, 1]).shift(&m.one()), poly(&[1, 2, 1]));
        assert_eq!(poly(&[0, 0, 0, 1]).derivative(), poly(&[0, 0, 3]));
        assert!(poly(&[5]).derivative().is_zero());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let m = LambdaMode::Symbolic;
        let p = XPolynomial::from_coeffs(
            vec![m.lambda(), m.one(), m.lambda().pow(2), m.lift(q(1, 3))],
            &m,
        );
        let points: Vec<_> = (0..4).map(|i| (int(i), p.eval_rational(&int(i)))).collect();
        assert_eq!(XPolynomial::interpolate(&points, &m), p);
    }

    #[test]
    fn rendering() {
        let m = LambdaMode::Symbolic;
        let c = FieldElement::Symbolic(
            LambdaRatFunc::new(-&LambdaPoly::lambda(), LambdaPoly::from_i64(&[-1, 1])).unwrap(),
        );
        let w = XPolynomial::from_coeffs(vec![c, m.lift_int(-1)], &m);
        assert_eq!(w.render(Notation::Machine), "-L/(L-1) - x");
        assert_eq!(w.to_string(), "-λ/(λ-1) - x");
        let r = XPolynomial::from_rationals(&[q(-1, 2), int(1)], &LambdaMode::classical());
        assert_eq!(r.render(Notation::Machine), "-1/2 + x");
        let s = XPolynomial::from_coeffs(
            vec![m.zero(), FieldElement::Symbolic(LambdaRatFunc::from_poly(LambdaPoly::from_i64(&[1, 1])))],
            &m,
        );
        assert_eq!(s.render(Notation::Machine), "(L+1)*x");
        assert_eq!(poly(&[0, 0, 0, 1]).render(Notation::Machine), "x^3");
        assert_eq!(XPolynomial::from_rationals(&[int(0), q(3, 2)], &LambdaMode::classical()).render(Notation::Machine), "3/2*x");
        assert_eq!(XPolynomial::zero(&m).render(Notation::Machine), "0");
    }

    #[test]
    fn lambda_evaluation() {
        let m = LambdaMode::Symbolic;
        let p = XPolynomial::from_coeffs(vec![m.lambda(), m.one()], &m);
        let e = p.evaluate_lambda(&int(3)).unwrap();
        assert_eq!(e, XPolynomial::from_rationals(&[int(3), int(1)], &LambdaMode::numeric(3, 1)));
    }
}
