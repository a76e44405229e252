//! Exact integer combinatorics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n! / (n - s)!`, zero when `s > n`.
pub fn falling_factorial(n: usize, s: usize) -> BigInt {
    if s > n {
        return BigInt::zero();
    }
    ((n - s + 1)..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `1 / m!` as a rational, with the reciprocal-gamma convention that it
/// vanishes for negative `m`.
pub fn inv_factorial(m: i64) -> BigRational {
    if m < 0 {
        return BigRational::zero();
    }
    BigRational::new(BigInt::one(), factorial(m as usize))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn rat_pow(base: &BigRational, exp: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(60, 30), BigInt::parse_bytes(b"118264581564861424", 10).unwrap());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 3), BigInt::from(0));
        assert_eq!(falling_factorial(4, 0), BigInt::from(1));
        assert!(inv_factorial(-1).is_zero());
        assert_eq!(rat_pow(&int(0), 0), int(1));
    }
}
