//! Bernoulli and Euler numbers and polynomials, their higher-order and
//! Apostol variants.
//!
//! Every family is read off a generating kernel built with the series
//! engine:
//!
//! | family            | kernel                         |
//! |-------------------|--------------------------------|
//! | Apostol–Bernoulli | `tᵏ / (λeᵗ − 1)ᵏ`              |
//! | Apostol–Euler     | `2ᵏ / (λeᵗ + 1)ᵏ`              |
//! | Bernoulli         | `(t / (eᵗ − 1))ᵏ`              |
//! | Euler             | `sechᵏ t` (Euler numbers Eₙ)   |
//!
//! The number at index `n` is `n!·[tⁿ]` of the kernel. Polynomials are the
//! coefficients of `kernel · e^{xt}`. At λ = 1 the Apostol–Bernoulli kernel
//! has a removable singularity, so the classical branch builds it from
//! `(eᵗ − 1)/t` instead of substituting into symbolic values.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{big, binomial, factorial, int};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::mode::LambdaMode;
use crate::series::{exp_scaled_series, expm1_over_t, TruncatedSeries};
use crate::xpoly::XPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ApostolBernoulli,
    ApostolEuler,
    Bernoulli,
    Euler,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::ApostolBernoulli => "apostol-bernoulli",
            Family::ApostolEuler => "apostol-euler",
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        }
    }

    /// Conventional letter: `B` or `E`.
    pub fn letter(self) -> char {
        match self {
            Family::ApostolBernoulli | Family::Bernoulli => 'B',
            Family::ApostolEuler | Family::Euler => 'E',
        }
    }
}

/// Values `n!·[tⁿ]` of a family's kernel for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberTable {
    pub family: Family,
    pub k: usize,
    pub mode: LambdaMode,
    pub values: Vec<FieldElement>,
}

/// Polynomial families expanded against `e^{xt}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Bernoulli,
    Euler,
}

// ---- kernels ----

fn lambda_exp_plus(mode: &LambdaMode, shift: i64, order: usize) -> TruncatedSeries {
    exp_scaled_series(&mode.one(), order)
        .scale(&mode.lambda())
        .add_constant(&mode.lift_int(shift))
}

/// Ordinary-coefficient series of `tᵏ/(λeᵗ − 1)ᵏ`, or of `(t/(eᵗ − 1))ᵏ` at λ = 1.
pub fn bernoulli_kernel(k: usize, order: usize, mode: &LambdaMode) -> TruncatedSeries {
    if mode.is_classical() {
        return expm1_over_t(mode, order)
            .pow(k)
            .recip()
            .expect("(e^t - 1)/t has constant term 1");
    }
    lambda_exp_plus(mode, -1, order)
        .pow(k)
        .recip()
        .expect("constant term (λ-1)^k is nonzero away from λ = 1")
        .shift_up(k)
}

/// Ordinary-coefficient series of `2ᵏ/(λeᵗ + 1)ᵏ`.
pub fn euler_kernel(k: usize, order: usize, mode: &LambdaMode) -> Result<TruncatedSeries> {
    let base = lambda_exp_plus(mode, 1, order).pow(k);
    match base.recip() {
        Ok(r) => Ok(r.scale(&mode.lift(big(&(BigInt::one() << k))))),
        Err(Error::NonInvertibleSeries) => Err(Error::EulerPole),
        Err(e) => Err(e),
    }
}

/// Ordinary-coefficient series of `sechᵏ t = 1/coshᵏ t`.
pub fn sech_kernel(k: usize, order: usize) -> TruncatedSeries {
    let mode = LambdaMode::classical();
    let cosh = TruncatedSeries::new(
        (0..=order)
            .map(|m| {
                if m % 2 == 0 {
                    mode.lift(BigRational::new(1.into(), factorial(m)))
                } else {
                    mode.zero()
                }
            })
            .collect(),
    );
    cosh.pow(k).recip().expect("cosh has constant term 1")
}

fn egf_values(kernel: &TruncatedSeries) -> Vec<FieldElement> {
    kernel
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&big(&factorial(n))))
        .collect()
}

// ---- memoized number tables ----

type NumberKey = (Family, usize, LambdaMode);

static NUMBER_CACHE: LazyLock<Mutex<HashMap<NumberKey, Vec<FieldElement>>>> =
    LazyLock::new(Default::default);

type PolyKey = (PolyFamily, usize, usize, LambdaMode);

static POLY_CACHE: LazyLock<Mutex<HashMap<PolyKey, XPolynomial>>> =
    LazyLock::new(Default::default);

/// Looks up a prefix of a memoized table, computing and storing the table
/// when the cached one is missing or too short. Truncation is exact, so a
/// longer cached table yields the same prefix a fresh computation would.
fn cached_values(
    key: NumberKey,
    n_max: usize,
    compute: impl FnOnce() -> Result<Vec<FieldElement>>,
) -> Result<Vec<FieldElement>> {
    if let Some(v) = NUMBER_CACHE.lock().expect("cache lock").get(&key) {
        if v.len() > n_max {
            return Ok(v[..=n_max].to_vec());
        }
    }
    let values = compute()?;
    let mut cache = NUMBER_CACHE.lock().expect("cache lock");
    let entry = cache.entry(key).or_default();
    if entry.len() < values.len() {
        *entry = values.clone();
    }
    Ok(values)
}

/// Apostol–Bernoulli numbers `Bₙ⁽ᵏ⁾(λ)`, `n = 0..=n_max`.
pub fn apostol_bernoulli_numbers(k: usize, n_max: usize, mode: &LambdaMode) -> NumberTable {
    let values = cached_values((Family::ApostolBernoulli, k, mode.clone()), n_max, || {
        Ok(egf_values(&bernoulli_kernel(k, n_max, mode)))
    })
    .expect("Bernoulli kernel is pole-free by branch selection");
    NumberTable {
        family: Family::ApostolBernoulli,
        k,
        mode: mode.clone(),
        values,
    }
}

/// Apostol–Euler numbers `Eₙ⁽ᵏ⁾(λ)`; fails at λ = −1.
pub fn apostol_euler_numbers(k: usize, n_max: usize, mode: &LambdaMode) -> Result<NumberTable> {
    let values = cached_values((Family::ApostolEuler, k, mode.clone()), n_max, || {
        Ok(egf_values(&euler_kernel(k, n_max, mode)?))
    })?;
    Ok(NumberTable {
        family: Family::ApostolEuler,
        k,
        mode: mode.clone(),
        values,
    })
}

/// Classical Bernoulli numbers of order `k`, `Bₙ⁽ᵏ⁾ = Bₙ⁽ᵏ⁾(0)`.
pub fn bernoulli_numbers(k: usize, n_max: usize) -> NumberTable {
    NumberTable {
        family: Family::Bernoulli,
        ..apostol_bernoulli_numbers(k, n_max, &LambdaMode::classical())
    }
}

/// Euler numbers of order `k` from `sechᵏ t`; order 1 gives 1, 0, −1, 0, 5, …
pub fn euler_numbers(k: usize, n_max: usize) -> NumberTable {
    let mode = LambdaMode::classical();
    let values = cached_values((Family::Euler, k, mode.clone()), n_max, || {
        Ok(egf_values(&sech_kernel(k, n_max)))
    })
    .expect("sech kernel is pole-free");
    NumberTable {
        family: Family::Euler,
        k,
        mode,
        values,
    }
}

/// Dispatches on `family`. `mode` is ignored for the classical families.
pub fn numbers(family: Family, k: usize, n_max: usize, mode: &LambdaMode) -> Result<NumberTable> {
    match family {
        Family::ApostolBernoulli => Ok(apostol_bernoulli_numbers(k, n_max, mode)),
        Family::ApostolEuler => apostol_euler_numbers(k, n_max, mode),
        Family::Bernoulli => Ok(bernoulli_numbers(k, n_max)),
        Family::Euler => Ok(euler_numbers(k, n_max)),
    }
}

/// `Bₙ` from `(B+1)ⁿ − Bₙ = δ_{n,1}` read umbrally (`Bʲ ↦ Bⱼ`):
/// `B₀ = 1`, `Bₘ = −(1/(m+1))·Σ_{j<m} C(m+1, j)·Bⱼ`.
pub fn bernoulli_numbers_by_recurrence(n_max: usize) -> NumberTable {
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let s: BigRational = (0..m).map(|j| big(&binomial(m + 1, j)) * &b[j]).sum();
        b.push(-s / int(m as i64 + 1));
    }
    NumberTable {
        family: Family::Bernoulli,
        k: 1,
        mode: LambdaMode::classical(),
        values: b.into_iter().map(FieldElement::Rational).collect(),
    }
}

/// `Eₙ` from `(E+1)ⁿ + (E−1)ⁿ = 2δ_{n,0}` read umbrally. The terms with
/// `n − j` odd cancel, leaving `Eₙ = δ_{n,0} − Σ_{j ≤ n−2, n−j even} C(n, j)·Eⱼ`.
pub fn euler_numbers_by_recurrence(n_max: usize) -> NumberTable {
    let mut e: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let delta = if n == 0 { BigRational::one() } else { int(0) };
        let s: BigRational = (0..n.saturating_sub(1))
            .filter(|j| (n - j) % 2 == 0)
            .map(|j| big(&binomial(n, j)) * &e[j])
            .sum();
        e.push(delta - s);
    }
    NumberTable {
        family: Family::Euler,
        k: 1,
        mode: LambdaMode::classical(),
        values: e.into_iter().map(FieldElement::Rational).collect(),
    }
}

/// `2ᵏ·Eₖ(1/2)` for `k = 0..=k_max`, with `Eₖ(x)` the classical Euler
/// polynomial. Equals the Euler numbers.
pub fn euler_numbers_via_half(k_max: usize) -> Vec<BigRational> {
    let mode = LambdaMode::classical();
    let half = BigRational::new(1.into(), 2.into());
    (0..=k_max)
        .map(|k| {
            let p = apostol_euler_poly(k, 1, &mode).expect("no pole at λ = 1");
            let v = p.eval_rational(&half).as_rational().expect("numeric mode");
            v * big(&(BigInt::one() << k))
        })
        .collect()
}

// ---- polynomials ----

fn poly_from_numbers(n: usize, numbers: &[FieldElement], mode: &LambdaMode) -> XPolynomial {
    let coeffs = (0..=n)
        .map(|l| numbers[n - l].scale(&big(&binomial(n, l))))
        .collect();
    XPolynomial::from_coeffs(coeffs, mode)
}

fn cached_poly(
    key: PolyKey,
    compute: impl FnOnce() -> Result<XPolynomial>,
) -> Result<XPolynomial> {
    if let Some(p) = POLY_CACHE.lock().expect("cache lock").get(&key) {
        return Ok(p.clone());
    }
    let p = compute()?;
    POLY_CACHE
        .lock()
        .expect("cache lock")
        .insert(key, p.clone());
    Ok(p)
}

/// `Bₙ⁽ᵏ⁾(x|λ) = Σ_{l} C(n, l)·xˡ·B_{n−l}⁽ᵏ⁾(λ)`.
pub fn apostol_bernoulli_poly(n: usize, k: usize, mode: &LambdaMode) -> XPolynomial {
    cached_poly((PolyFamily::Bernoulli, n, k, mode.clone()), || {
        let t = apostol_bernoulli_numbers(k, n, mode);
        Ok(poly_from_numbers(n, &t.values, mode))
    })
    .expect("Bernoulli family is pole-free")
}

/// `Eₙ⁽ᵏ⁾(x|λ) = Σ_{l} C(n, l)·xˡ·E_{n−l}⁽ᵏ⁾(λ)`; fails at λ = −1.
pub fn apostol_euler_poly(n: usize, k: usize, mode: &LambdaMode) -> Result<XPolynomial> {
    cached_poly((PolyFamily::Euler, n, k, mode.clone()), || {
        let t = apostol_euler_numbers(k, n, mode)?;
        Ok(poly_from_numbers(n, &t.values, mode))
    })
}

pub fn family_poly(family: PolyFamily, n: usize, k: usize, mode: &LambdaMode) -> Result<XPolynomial> {
    match family {
        PolyFamily::Bernoulli => Ok(apostol_bernoulli_poly(n, k, mode)),
        PolyFamily::Euler => apostol_euler_poly(n, k, mode),
    }
}

/// Second construction of the same polynomial: for `x₀ = 0..=n` take
/// `n!·[tⁿ](kernel · e^{x₀t})` with a full series product, then interpolate.
/// Shares only the kernel with the binomial-sum route.
pub fn poly_by_extraction(family: PolyFamily, n: usize, k: usize, mode: &LambdaMode) -> Result<XPolynomial> {
    let kernel = match family {
        PolyFamily::Bernoulli => bernoulli_kernel(k, n, mode),
        PolyFamily::Euler => euler_kernel(k, n, mode)?,
    };
    let n_fact = big(&factorial(n));
    let points: Vec<_> = (0..=n)
        .map(|x0| {
            let x0 = int(x0 as i64);
            let e = exp_scaled_series(&mode.lift(x0.clone()), n);
            let prod = kernel.mul(&e).expect("same order and mode");
            (x0, prod.coeff(n).scale(&n_fact))
        })
        .collect();
    Ok(XPolynomial::interpolate(&points, mode))
}
