//! Helpers around [`BigRational`], which already keeps the canonical form
//! (positive denominator, reduced, zero as `0/1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Builds the canonical rational `n/d`.
pub fn rat_normalize(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<BigRational> {
    let d = d.into();
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n.into(), d))
}

/// Parses `"p/q"` or `"p"` (optional leading sign, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => rat_normalize(parse_int(p)?, parse_int(q)?),
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::int;

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(2, 4).unwrap(), BigRational::new(1.into(), 2.into()));
        let z = rat_normalize(0, 5).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        let h = rat_normalize(3, -6).unwrap();
        assert_eq!((h.numer().clone(), h.denom().clone()), ((-1).into(), 2.into()));
        assert_eq!(rat_normalize(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("1/3").unwrap(), rat_normalize(1, 3).unwrap());
        assert_eq!(parse_rational(" -2 ").unwrap(), int(-2));
        assert_eq!(parse_rational("4/-6").unwrap(), rat_normalize(-2, 3).unwrap());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(render_rational(&rat_normalize(-3, 6).unwrap()), "-1/2");
        assert_eq!(render_rational(&int(7)), "7");
    }
}
