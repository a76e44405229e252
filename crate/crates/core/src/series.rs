//! Truncated formal power series in `t` over an exact field.
//!
//! Coefficients use the ordinary convention: `coeffs[n]` is `[tⁿ]`, not
//! `n!·[tⁿ]`. Callers that want exponential-generating-function values
//! rescale at extraction time.

use crate::combinatorics::inv_factorial;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::mode::LambdaMode;

/// `c₀ + c₁t + … + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<FieldElement>,
}

impl TruncatedSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c0");
        TruncatedSeries { coeffs }
    }

    /// Pads or truncates `coeffs` to order `order`.
    pub fn from_prefix(mode: &LambdaMode, mut coeffs: Vec<FieldElement>, order: usize) -> Self {
        coeffs.resize(order + 1, mode.zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(mode: &LambdaMode, order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![mode.zero(); order + 1],
        }
    }

    pub fn one(mode: &LambdaMode, order: usize) -> Self {
        Self::constant(mode.one(), order)
    }

    pub fn constant(c: FieldElement, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// Inclusive truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &FieldElement {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Adds a constant to `c₀`.
    pub fn add_constant(&self, c: &FieldElement) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = &out.coeffs[0] + c;
        out
    }

    /// Truncated Cauchy product: `cₙ = Σ_{i≤n} aᵢ b_{n−i}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if let (Some(a), Some(b)) = (self.coeffs.first(), other.coeffs.first()) {
            a.checked_mul(b)?;
        }
        let n = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse via `b₀ = 1/a₀`, `bₙ = −(1/a₀)·Σ_{i=1}^{n} aᵢ b_{n−i}`.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = a0.inv()?;
        let neg_inv0 = -&inv0;
        let mut out: Vec<FieldElement> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0);
        for n in 1..self.coeffs.len() {
            let mut acc = a0.zero_like();
            for i in 1..=n {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc = &acc + &(ai * &out[n - i]);
                }
            }
            out.push(&acc * &neg_inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^k` by binary powering; `self^0 = 1`.
    pub fn pow(&self, k: usize) -> Self {
        let mut result = Self::constant(self.coeffs[0].one_like(), self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order and variant");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order and variant");
            }
        }
        result
    }

    /// Multiplies by `t^s`, dropping terms beyond the order.
    pub fn shift_up(&self, s: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|i| if i < s { zero.clone() } else { self.coeffs[i - s].clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Divides by `t^s`, padding the tail with zeros. The dropped low
    /// coefficients are discarded; callers use this only when they vanish.
    pub fn shift_down(&self, s: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i + s).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        TruncatedSeries { coeffs }
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.add(b)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

pub fn series_recip(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.recip()
}

pub fn series_pow(a: &TruncatedSeries, k: usize) -> TruncatedSeries {
    a.pow(k)
}

/// `e^{ct}` truncated at order `order`: coefficients `cᵐ/m!`.
pub fn exp_scaled_series(c: &FieldElement, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = c.one_like();
    for m in 0..=order {
        coeffs.push(power.scale(&inv_factorial(m as i64)));
        power = &power * c;
    }
    TruncatedSeries { coeffs }
}

/// `(e^t − 1)/t = Σ tᵐ/(m+1)!`.
pub fn expm1_over_t(mode: &LambdaMode, order: usize) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: (0..=order)
            .map(|m| mode.lift(inv_factorial(m as i64 + 1)))
            .collect(),
    }
}

/// Whether every coefficient is zero.
pub fn is_zero_series(s: &TruncatedSeries) -> bool {
    s.coeffs.iter().all(FieldElement::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{LambdaPoly, LambdaRatFunc};
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rational_series(values: &[BigRational]) -> TruncatedSeries {
        TruncatedSeries::new(values.iter().cloned().map(FieldElement::Rational).collect())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rs(v: &[(i64, i64)]) -> TruncatedSeries {
        rational_series(&v.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>())
    }

    fn numeric() -> LambdaMode {
        LambdaMode::classical()
    }

    #[test]
    fn add_examples() {
        let a = rs(&[(1, 1), (1, 1), (0, 1)]);
        let b = rs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(series_add(&a, &b).unwrap(), rs(&[(2, 1), (0, 1), (0, 1)]));
        let z = TruncatedSeries::zero(&numeric(), 2);
        assert_eq!(series_add(&a, &z).unwrap(), a);
        // e^t + e^{-t}
        let one = numeric().one();
        let e = exp_scaled_series(&one, 3);
        let em = exp_scaled_series(&-&one, 3);
        assert_eq!(series_add(&e, &em).unwrap(), rs(&[(2, 1), (0, 1), (1, 1), (0, 1)]));
        assert_eq!(
            series_add(&a, &TruncatedSeries::zero(&numeric(), 3)),
            Err(Error::OrderMismatch(2, 3))
        );
    }

    #[test]
    fn mul_examples() {
        let a = rs(&[(1, 1), (1, 1), (0, 1)]);
        let b = rs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(series_mul(&a, &b).unwrap(), rs(&[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(series_mul(&a, &TruncatedSeries::one(&numeric(), 2)).unwrap(), a);
        let e = exp_scaled_series(&numeric().one(), 3);
        assert_eq!(series_mul(&e, &e).unwrap(), rs(&[(1, 1), (2, 1), (2, 1), (4, 3)]));
        assert!(series_mul(&a, &TruncatedSeries::one(&LambdaMode::Symbolic, 2)).is_err());
    }

    #[test]
    fn recip_examples() {
        let geom = series_recip(&rs(&[(1, 1), (-1, 1), (0, 1), (0, 1)])).unwrap();
        assert_eq!(geom, rs(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
        let e = exp_scaled_series(&numeric().one(), 3);
        assert_eq!(series_recip(&e).unwrap(), rs(&[(1, 1), (-1, 1), (1, 2), (-1, 6)]));
        assert_eq!(
            series_recip(&rs(&[(0, 1), (1, 1)])),
            Err(Error::NonInvertibleSeries)
        );
    }

    #[test]
    fn recip_symbolic_one_step() {
        // λe^t − 1 at order 1 is (λ−1) + λt; its reciprocal is
        // 1/(λ−1) − λ/(λ−1)² t.
        let m = LambdaMode::Symbolic;
        let s = exp_scaled_series(&m.one(), 1).scale(&m.lambda()).add_constant(&-&m.one());
        let r = series_recip(&s).unwrap();
        let lm1 = LambdaPoly::from_i64(&[-1, 1]);
        let c0 = LambdaRatFunc::new(LambdaPoly::one(), lm1.clone()).unwrap();
        let c1 = LambdaRatFunc::new(-&LambdaPoly::lambda(), lm1.pow(2)).unwrap();
        assert_eq!(r.coeff(0), &FieldElement::Symbolic(c0));
        assert_eq!(r.coeff(1), &FieldElement::Symbolic(c1));
    }

    #[test]
    fn pow_examples() {
        let a = rs(&[(1, 1), (1, 1), (0, 1)]);
        assert_eq!(series_pow(&a, 0), TruncatedSeries::one(&numeric(), 2));
        assert_eq!(series_pow(&a, 2), rs(&[(1, 1), (2, 1), (1, 1)]));
        let m = LambdaMode::Symbolic;
        let s = exp_scaled_series(&m.one(), 2).scale(&m.lambda()).add_constant(&-&m.one());
        let sq = series_pow(&s, 2);
        let expected = LambdaRatFunc::from_poly(LambdaPoly::from_i64(&[-1, 1]).pow(2));
        assert_eq!(sq.coeff(0), &FieldElement::Symbolic(expected));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_scaled_series(&numeric().zero(), 2), rs(&[(1, 1), (0, 1), (0, 1)]));
        assert_eq!(exp_scaled_series(&numeric().one(), 3), rs(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
        let m = LambdaMode::Symbolic;
        let s = exp_scaled_series(&m.lambda(), 2);
        assert_eq!(s.coeff(1), &m.lambda());
        assert_eq!(s.coeff(2), &(&m.lambda() * &m.lambda()).scale(&q(1, 2)));
    }

    #[test]
    fn shifts() {
        let a = rs(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(a.shift_up(1), rs(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(a.shift_down(1), rs(&[(2, 1), (3, 1), (0, 1)]));
        assert!(is_zero_series(&a.shift_up(3)));
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
    }

    fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(small_rat(), order + 1).prop_map(|v| rational_series(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn recip_is_inverse(s in series_strategy(6), c0 in small_rat()) {
            prop_assume!(!c0.is_zero());
            let mut coeffs = s.coeffs().to_vec();
            coeffs[0] = FieldElement::Rational(c0);
            let a = TruncatedSeries::new(coeffs);
            let prod = series_mul(&a, &series_recip(&a).unwrap()).unwrap();
            prop_assert_eq!(prod, TruncatedSeries::one(&numeric(), 6));
        }

        #[test]
        fn pow_adds_exponents(s in series_strategy(5), j in 0usize..4, k in 0usize..4) {
            let lhs = series_pow(&s, j + k);
            let rhs = series_mul(&series_pow(&s, j), &series_pow(&s, k)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exp_is_homomorphic(a in small_rat(), b in small_rat()) {
            let ea = exp_scaled_series(&FieldElement::Rational(a.clone()), 6);
            let eb = exp_scaled_series(&FieldElement::Rational(b.clone()), 6);
            let eab = exp_scaled_series(&FieldElement::Rational(a + b), 6);
            prop_assert_eq!(eab, series_mul(&ea, &eb).unwrap());
        }
    }
}
