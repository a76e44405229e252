//! Canonical text rendering of field elements.
//!
//! Rationals print as `p/q` (just `p` for integers). A rational function
//! `c · N(λ) / D(λ)` is printed with its rational content pulled out and `N`,
//! `D` primitive over ℤ, e.g. `-2L/(L-1)^2` or `(L+1)/(2(L-1))`. Inside a
//! λ-expression there are no spaces. A denominator that is a perfect power
//! of a linear factor is printed as that power.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::FieldElement;
use super::lambda_poly::LambdaPoly;
use super::ratfunc::LambdaRatFunc;
use super::rational::render_rational;

/// Spelling of λ: `L` for machine formats, `λ` for human ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    Machine,
    Human,
}

impl Notation {
    pub fn symbol(self) -> &'static str {
        match self {
            Notation::Machine => "L",
            Notation::Human => "λ",
        }
    }
}

pub fn render_field(e: &FieldElement, notation: Notation) -> String {
    match e {
        FieldElement::Rational(r) => render_rational(r),
        FieldElement::Symbolic(f) => render_ratfunc(f, notation),
    }
}

/// Renders a polynomial in λ with rational coefficients, descending powers.
pub fn render_lambda_poly(p: &LambdaPoly, notation: Notation) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&rational_term(&c.abs(), e, notation));
    }
    out
}

/// `|c|·λ^e` with the denominator moved behind the power: `3λ^2/2`.
fn rational_term(c: &BigRational, e: usize, notation: Notation) -> String {
    if e == 0 {
        return render_rational(c);
    }
    let mut s = String::new();
    if !c.numer().is_one() {
        s.push_str(&c.numer().to_string());
    }
    s.push_str(&power(e, notation));
    if !c.denom().is_one() {
        s.push('/');
        s.push_str(&c.denom().to_string());
    }
    s
}

fn power(e: usize, notation: Notation) -> String {
    match e {
        0 => String::new(),
        1 => notation.symbol().to_string(),
        _ => format!("{}^{}", notation.symbol(), e),
    }
}

/// Renders an integer polynomial (ascending coefficients), descending powers.
fn render_int_poly(p: &[BigInt], notation: Notation) -> String {
    let mut out = String::new();
    for (e, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if e == 0 {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&power(e, notation));
        }
    }
    out
}

fn term_count(p: &[BigInt]) -> usize {
    p.iter().filter(|c| !c.is_zero()).count()
}

/// Detects `p = ℓ^m` with ℓ linear and `m ≥ 2`, returning ℓ.
fn linear_root_power(p: &[BigInt]) -> Option<(Vec<BigInt>, usize)> {
    let m = p.len().checked_sub(1)?;
    if m < 2 {
        return None;
    }
    // monic form (λ + c)^m has c = coeff_{m-1} / (m · lead)
    let lead = BigRational::from_integer(p[m].clone());
    let c = BigRational::from_integer(p[m - 1].clone()) / (lead * BigInt::from(m));
    let (_, lin) = LambdaPoly::from_coeffs(vec![c, BigRational::one()]).content_and_primitive();
    let lin_poly = int_poly(&lin);
    let (_, expanded) = lin_poly.pow(m).content_and_primitive();
    (expanded == p).then_some((lin, m))
}

fn int_poly(p: &[BigInt]) -> LambdaPoly {
    LambdaPoly::from_coeffs(p.iter().cloned().map(BigRational::from_integer).collect())
}

pub fn render_ratfunc(f: &LambdaRatFunc, notation: Notation) -> String {
    if f.den().is_one() {
        return render_lambda_poly(f.num(), notation);
    }
    let (num_content, n) = f.num().content_and_primitive();
    let (den_content, d) = f.den().content_and_primitive();
    let content = num_content / den_content;
    let p = content.numer().abs();
    let q = content.denom().clone();

    let mut out = String::new();
    if content.is_negative() {
        out.push('-');
    }
    if term_count(&n) == 1 {
        let e = n.len() - 1;
        if e == 0 || !p.is_one() {
            out.push_str(&p.to_string());
        }
        out.push_str(&power(e, notation));
    } else {
        if !p.is_one() {
            out.push_str(&p.to_string());
        }
        out.push('(');
        out.push_str(&render_int_poly(&n, notation));
        out.push(')');
    }

    let den_core = if term_count(&d) == 1 {
        power(d.len() - 1, notation)
    } else if let Some((lin, m)) = linear_root_power(&d) {
        format!("({})^{}", render_int_poly(&lin, notation), m)
    } else {
        format!("({})", render_int_poly(&d, notation))
    };
    out.push('/');
    if q.is_one() {
        out.push_str(&den_core);
    } else {
        out.push_str(&format!("({q}{den_core})"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> LambdaRatFunc {
        LambdaRatFunc::new(LambdaPoly::from_i64(n), LambdaPoly::from_i64(d)).unwrap()
    }

    fn machine(f: &LambdaRatFunc) -> String {
        render_ratfunc(f, Notation::Machine)
    }

    #[test]
    fn polynomials() {
        assert_eq!(machine(&rf(&[1, -2, 1], &[1])), "L^2-2L+1");
        assert_eq!(machine(&rf(&[0, 1], &[2])), "L/2");
        assert_eq!(machine(&rf(&[1, 0, 3], &[2])), "3L^2/2+1/2");
        assert_eq!(machine(&rf(&[0, -1], &[1])), "-L");
        assert_eq!(machine(&LambdaRatFunc::zero()), "0");
    }

    #[test]
    fn fractions() {
        assert_eq!(machine(&rf(&[1], &[-1, 1])), "1/(L-1)");
        assert_eq!(machine(&rf(&[0, -2], &[1, -2, 1])), "-2L/(L-1)^2");
        assert_eq!(machine(&rf(&[0, -1], &[-1, 1])), "-L/(L-1)");
        assert_eq!(machine(&rf(&[1, 1], &[-2, 2])), "(L+1)/(2(L-1))");
        assert_eq!(machine(&rf(&[2], &[1, 1])), "2/(L+1)");
        assert_eq!(machine(&rf(&[1], &[0, 0, 1])), "1/L^2");
        assert_eq!(machine(&rf(&[-3, -3], &[1, 0, 1])), "-3(L+1)/(L^2+1)");
        assert_eq!(machine(&rf(&[1], &[1, 3, 3, 1])), "1/(L+1)^3");
        assert_eq!(machine(&rf(&[1], &[1, 4, 4])), "1/(2L+1)^2");
        assert_eq!(render_ratfunc(&rf(&[0, -1], &[-1, 1]), Notation::Human), "-λ/(λ-1)");
    }
}
