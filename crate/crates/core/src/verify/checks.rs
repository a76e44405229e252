use num_rational::BigRational;
use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Zero};

use super::intpoly::{self, IntPoly};
use super::{CheckResult, GridPoint, IdentityId, Verdict};
use crate::combinatorics::{big, binomial, factorial, int, inv_factorial, rat_pow};
use crate::error::Result;
use crate::expansion::{
    corrected_coefficients, corrected_upper_coefficients, expand_oracle, reconstruct,
    theorem1_coefficients,
};
use crate::field::{render_field, FieldElement, Notation};
use crate::mode::LambdaMode;
use crate::operators::{corrected_closed_form, lambda_op, lambda_power_at_zero, OperatorVariant};
use crate::special::{apostol_bernoulli_numbers, apostol_bernoulli_poly, apostol_euler_numbers, apostol_euler_poly};
use crate::xpoly::XPolynomial;

fn outcome(point: &GridPoint, check: &str, pass: bool, witness: impl FnOnce() -> (String, String, String)) -> CheckResult {
    let (witness, lhs, rhs) = if pass {
        (None, None, None)
    } else {
        let (w, l, r) = witness();
        (Some(w), Some(l), Some(r))
    };
    CheckResult {
        point: point.clone(),
        check: check.to_string(),
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        witness,
        lhs,
        rhs,
    }
}

fn compare_poly(point: &GridPoint, check: &str, lhs: &XPolynomial, rhs: &XPolynomial) -> CheckResult {
    outcome(point, check, lhs == rhs, || {
        (
            (lhs - rhs).render(Notation::Machine),
            lhs.render(Notation::Machine),
            rhs.render(Notation::Machine),
        )
    })
}

fn compare_scalar(point: &GridPoint, check: &str, lhs: &FieldElement, rhs: &FieldElement) -> CheckResult {
    outcome(point, check, lhs == rhs, || {
        (
            render_field(&(lhs - rhs), Notation::Machine),
            render_field(lhs, Notation::Machine),
            render_field(rhs, Notation::Machine),
        )
    })
}

/// Re-embeds a classical polynomial in `mode`'s field.
fn lift_poly(p: &XPolynomial, mode: &LambdaMode) -> XPolynomial {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| mode.lift(c.as_rational().expect("classical coefficients are rational")))
        .collect();
    XPolynomial::from_coeffs(coeffs, mode)
}

fn classical() -> LambdaMode {
    LambdaMode::classical()
}

fn bernoulli(n: usize) -> XPolynomial {
    apostol_bernoulli_poly(n, 1, &classical())
}

fn euler(n: usize) -> XPolynomial {
    apostol_euler_poly(n, 1, &classical()).expect("no pole at lambda = 1")
}

fn value(p: &XPolynomial, at: &BigRational) -> BigRational {
    p.eval_rational(at).as_rational().expect("numeric mode")
}

/// Classical order-one polynomials `B_m` and `E_m`, indexed for the caches.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Classical {
    B,
    E,
}

impl Classical {
    fn poly(self, m: usize) -> XPolynomial {
        match self {
            Classical::B => bernoulli(m),
            Classical::E => euler(m),
        }
    }
}

type ValueKey = (Classical, usize, BigRational);

// The bivariate checks revisit the same (m, y) for every order and λ, so
// values and shifted polynomials are kept once computed.
static VALUES: LazyLock<Mutex<HashMap<ValueKey, BigRational>>> = LazyLock::new(Default::default);
static SHIFTED: LazyLock<Mutex<HashMap<ValueKey, XPolynomial>>> = LazyLock::new(Default::default);

/// `P_m(at)`, zero for negative `m`.
fn classical_value(family: Classical, m: i64, at: &BigRational) -> BigRational {
    if m < 0 {
        return int(0);
    }
    let key = (family, m as usize, at.clone());
    if let Some(v) = VALUES.lock().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = value(&family.poly(m as usize), at);
    VALUES.lock().expect("cache lock").insert(key, v.clone());
    v
}

/// `P_m(x + y)`, zero for negative `m`.
fn classical_shifted(family: Classical, m: i64, y: &BigRational) -> XPolynomial {
    if m < 0 {
        return XPolynomial::zero(&classical());
    }
    let key = (family, m as usize, y.clone());
    if let Some(p) = SHIFTED.lock().expect("cache lock").get(&key) {
        return p.clone();
    }
    let p = family.poly(m as usize).shift(&classical().lift(y.clone()));
    SHIFTED.lock().expect("cache lock").insert(key, p.clone());
    p
}

static CONVOLUTIONS: LazyLock<Mutex<HashMap<ValueKey, XPolynomial>>> = LazyLock::new(Default::default);

/// `Σ_i C(n,i) P_i(x) P_{n−i}(y)`.
fn convolution(family: Classical, n: usize, y: &BigRational) -> XPolynomial {
    let key = (family, n, y.clone());
    if let Some(p) = CONVOLUTIONS.lock().expect("cache lock").get(&key) {
        return p.clone();
    }
    let p = (0..=n).fold(XPolynomial::zero(&classical()), |acc, i| {
        let w = big(&binomial(n, i)) * classical_value(family, (n - i) as i64, y);
        &acc + &family.poly(i).scale_rational(&w)
    });
    CONVOLUTIONS.lock().expect("cache lock").insert(key, p.clone());
    p
}

/// `n!/m!` with the convention `1/m! = 0` for negative `m`.
fn factorial_ratio(n: usize, m: i64) -> BigRational {
    big(&factorial(n)) * inv_factorial(m)
}

/// Which reading of the printed expansion formula to use.
#[derive(Clone, Copy)]
enum Reading {
    /// Sign `(−1)^a`, range `j = k..n`.
    Printed,
    /// Sign `(−1)^{k−a}`, range `j = k..k+n`.
    Corrected,
}

/// `Σ_j (1/j!) Σ_{a=0}^{k} ±C(k,a) λ^a g(j, a) · Bⱼ⁽ᵏ⁾(x|λ)` where the
/// rational `g(j, a)` stands for `D^{j−k}q(a)` as the printed formulas
/// spell it out. `table[j − k][a]` holds `g(j, a)` for `j = k..=k+n`.
fn expansion_sum(n: usize, k: usize, mode: &LambdaMode, reading: Reading, table: &[Vec<BigRational>]) -> XPolynomial {
    let j_hi = match reading {
        Reading::Printed => n,
        Reading::Corrected => k + n,
    };
    let weights = signed_weights(k, mode, reading);
    if mode.is_symbolic() {
        return (k..=j_hi).fold(XPolynomial::zero(mode), |acc, j| {
            let inner = weights
                .iter()
                .zip(&table[j - k])
                .fold(mode.zero(), |acc, (w, g)| &acc + &w.scale(g));
            let c = inner.scale(&inv_factorial(j as i64));
            &acc + &apostol_bernoulli_poly(j, k, mode).scale(&c)
        });
    }
    let weights: Vec<BigRational> = weights
        .iter()
        .map(|w| w.as_rational().expect("numeric mode"))
        .collect();
    let coeffs: Vec<(usize, BigRational)> = (k..=j_hi)
        .map(|j| (j, intpoly::dot(&weights, &table[j - k]) * inv_factorial(j as i64)))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let bases: Vec<_> = coeffs
        .iter()
        .map(|(j, _)| intpoly::basis(*j, k, mode).expect("numeric mode"))
        .collect();
    let terms: Vec<_> = coeffs
        .iter()
        .zip(&bases)
        .map(|((_, c), b)| (c.clone(), &**b))
        .collect();
    intpoly::combine(&terms, mode)
}

/// `g(j, a)` for `j = k..=k+n`, `a = 0..=k`.
fn g_table(n: usize, k: usize, g: impl Fn(usize, usize) -> BigRational) -> Vec<Vec<BigRational>> {
    (k..=k + n).map(|j| (0..=k).map(|a| g(j, a)).collect()).collect()
}

/// `±C(k,a) λ^a` for `a = 0..=k`.
fn signed_weights(k: usize, mode: &LambdaMode, reading: Reading) -> Vec<FieldElement> {
    let lambda = mode.lambda();
    (0..=k)
        .map(|a| {
            let negative = match reading {
                Reading::Printed => a % 2 == 1,
                Reading::Corrected => (k - a) % 2 == 1,
            };
            let c = lambda.pow(a).scale(&big(&binomial(k, a)));
            if negative {
                -&c
            } else {
                c
            }
        })
        .collect()
}

type TableKey = (IdentityId, usize, usize, Option<BigRational>);
type Table = Arc<Vec<Vec<BigRational>>>;

// Expansion tables depend on the point but not on λ, and every λ of the
// grid asks for them again.
static TABLES: LazyLock<Mutex<HashMap<TableKey, Table>>> =
    LazyLock::new(Default::default);

/// [`g_table`] for `(id, point)`, computed once per λ-free key.
fn cached_table(
    id: IdentityId,
    point: &GridPoint,
    g: impl Fn(usize, usize) -> BigRational,
) -> Arc<Vec<Vec<BigRational>>> {
    let key = (id, point.n, point.k, point.y.clone());
    if let Some(t) = TABLES.lock().expect("cache lock").get(&key) {
        return t.clone();
    }
    let t = Arc::new(g_table(point.n, point.k, g));
    TABLES.lock().expect("cache lock").insert(key, t.clone());
    t
}

/// Checks the printed expansion and, away from λ = 1, the corrected one.
fn printed_and_corrected(
    id: IdentityId,
    point: &GridPoint,
    target: &XPolynomial,
    g: impl Fn(usize, usize) -> BigRational,
) -> Vec<CheckResult> {
    let (n, k, mode) = (point.n, point.k, &point.mode);
    let table = cached_table(id, point, g);
    let printed = expansion_sum(n, k, mode, Reading::Printed, &table);
    let mut out = vec![compare_poly(point, "as_printed", &printed, target)];
    if !mode.is_classical() {
        let corrected = expansion_sum(n, k, mode, Reading::Corrected, &table);
        out.push(compare_poly(point, "corrected", &corrected, target));
    }
    out
}

pub(super) fn check_point(id: IdentityId, p: &GridPoint) -> Result<Vec<CheckResult>> {
    let (n, k, mode) = (p.n, p.k, &p.mode);
    let res = match id {
        IdentityId::Deriv => {
            let lhs = apostol_bernoulli_poly(n, k, mode).derivative();
            let rhs = apostol_bernoulli_poly(n - 1, k, mode).scale_rational(&int(n as i64));
            vec![compare_poly(p, "as_stated", &lhs, &rhs)]
        }
        IdentityId::Diff => {
            let b = apostol_bernoulli_poly(n + 1, k, mode);
            let lhs = (&b.shift(&mode.one()).scale(&mode.lambda()) - &b)
                .scale_rational(&BigRational::new(1.into(), (n + 1).into()));
            let rhs = apostol_bernoulli_poly(n, k - 1, mode);
            vec![compare_poly(p, "as_stated", &lhs, &rhs)]
        }
        IdentityId::LowerOrder => {
            let lhs = lambda_op(&apostol_bernoulli_poly(n, k, mode), mode);
            let rhs = apostol_bernoulli_poly(n - 1, k - 1, mode).scale_rational(&int(n as i64));
            vec![compare_poly(p, "as_stated", &lhs, &rhs)]
        }
        IdentityId::ZeroOrder => {
            let xn = XPolynomial::monomial(mode.one(), n, mode);
            vec![
                compare_poly(p, "bernoulli", &apostol_bernoulli_poly(n, 0, mode), &xn),
                compare_poly(p, "euler", &apostol_euler_poly(n, 0, mode)?, &xn),
            ]
        }
        IdentityId::LemmaClosedForm => {
            let f = XPolynomial::monomial(mode.one(), n, mode);
            let direct = lambda_power_at_zero(&f, k, mode, OperatorVariant::DirectIteration);
            let paper = lambda_power_at_zero(&f, k, mode, OperatorVariant::PaperLemma);
            let corrected = corrected_closed_form(&f, k, mode);
            vec![
                compare_scalar(p, "paper_lemma", &paper, &direct),
                compare_scalar(p, "corrected_sign", &corrected, &direct),
            ]
        }
        IdentityId::Thm1 => thm1(p),
        IdentityId::CorXn => {
            let target = XPolynomial::monomial(mode.one(), n, mode);
            printed_and_corrected(id, p, &target, |j, a| {
                let m = (n + k) as i64 - j as i64;
                if m < 0 {
                    return int(0);
                }
                factorial_ratio(n, m) * rat_pow(&int(a as i64), m as usize)
            })
        }
        IdentityId::Thm2 | IdentityId::Thm3 => {
            let (target, numbers) = if id == IdentityId::Thm2 {
                let c = classical();
                (
                    apostol_euler_poly(n, k, &c)?,
                    apostol_euler_numbers(k, n + k, &c)?.values,
                )
            } else {
                (
                    apostol_bernoulli_poly(n, k, &classical()),
                    apostol_bernoulli_numbers(k, n + k, &classical()).values,
                )
            };
            let target = lift_poly(&target, mode);
            printed_and_corrected(id, p, &target, |j, a| {
                let m = (n + k) as i64 - j as i64;
                if m < 0 {
                    return int(0);
                }
                let m = m as usize;
                let a = int(a as i64);
                let sum: BigRational = (0..=m)
                    .map(|l| {
                        big(&binomial(m, l))
                            * rat_pow(&a, l)
                            * numbers[m - l].as_rational().expect("classical numbers")
                    })
                    .sum();
                factorial_ratio(n, m as i64) * sum
            })
        }
        IdentityId::Hansen => {
            let y = p.y.clone().expect("bivariate point");
            let c = classical();
            let lhs = convolution(Classical::B, n, &y);
            let yc = c.lift(y.clone());
            let x_plus_y = XPolynomial::from_coeffs(vec![yc, c.one()], &c);
            let mut rhs = classical_shifted(Classical::B, n as i64, &y).scale_rational(&int(1 - n as i64));
            if n >= 1 {
                let lin = (&x_plus_y - &XPolynomial::one(&c)).scale_rational(&int(n as i64));
                rhs = &rhs + &(&lin * &classical_shifted(Classical::B, n as i64 - 1, &y));
            }
            vec![compare_poly(p, "as_stated", &lhs, &rhs)]
        }
        IdentityId::EulerRamanujan => {
            let b = apostol_bernoulli_numbers(1, n, &classical()).values;
            let b: Vec<BigRational> = b.iter().map(|v| v.as_rational().expect("rational")).collect();
            let sum: BigRational = (2..=n.saturating_sub(2))
                .map(|i| big(&binomial(n, i)) * &b[i] * &b[n - i])
                .sum();
            let rhs = -sum / int(n as i64 + 1);
            let c = classical();
            vec![compare_scalar(p, "as_stated", &c.lift(b[n].clone()), &c.lift(rhs))]
        }
        IdentityId::Dilcher => {
            let y = p.y.clone().expect("bivariate point");
            let c = classical();
            let lhs = convolution(Classical::E, n, &y);
            let yc = c.lift(y.clone());
            let one_minus = XPolynomial::from_coeffs(vec![&c.one() - &yc, c.lift_int(-1)], &c);
            let rhs = &(&one_minus * &classical_shifted(Classical::E, n as i64, &y))
                + &classical_shifted(Classical::E, n as i64 + 1, &y);
            vec![compare_poly(p, "as_stated", &lhs, &rhs.scale_rational(&int(2)))]
        }
        IdentityId::Thm4 => thm4(p),
        IdentityId::Thm5 => thm5(p),
    };
    Ok(res)
}

fn thm1(p: &GridPoint) -> Vec<CheckResult> {
    let (n, k, mode) = (p.n, p.k, &p.mode);
    let q = XPolynomial::monomial(mode.one(), n, mode);
    let literal = theorem1_coefficients(&q, k, mode);
    let mut out = vec![compare_poly(p, "theorem1_literal", &reconstruct(&literal, mode), &q)];
    let oracle = expand_oracle(&q, k, mode);
    if mode.is_classical() {
        let upper = corrected_upper_coefficients(&q, k, mode);
        let pass = upper.agrees_from(&oracle, k);
        out.push(outcome(p, "corrected_upper", pass, || {
            let top = upper.j_lo + upper.coefficients.len();
            let diffs: Vec<String> = (k..top.max(oracle.j_lo + oracle.coefficients.len()))
                .filter(|&j| upper.coeff(j) != oracle.coeff(j))
                .map(|j| format!("b{j}: {}", render_field(&(&upper.coeff(j) - &oracle.coeff(j)), Notation::Machine)))
                .collect();
            (diffs.join("; "), String::new(), String::new())
        }));
    } else {
        let corrected = corrected_coefficients(&q, k, mode).expect("lambda != 1");
        let pass = corrected.agrees_with(&oracle);
        let rebuilt = reconstruct(&corrected, mode);
        out.push(outcome(p, "corrected_conjecture", pass, || {
            (
                (&rebuilt - &q).render(Notation::Machine),
                rebuilt.render(Notation::Machine),
                q.render(Notation::Machine),
            )
        }));
    }
    out
}

fn thm4(p: &GridPoint) -> Vec<CheckResult> {
    let (n, k, mode) = (p.n, p.k, &p.mode);
    let y = p.y.clone().expect("bivariate point");
    let target = lift_poly(&convolution(Classical::B, n, &y), mode);
    printed_and_corrected(IdentityId::Thm4, p, &target, |j, a| {
        let m = (n + k) as i64 - j as i64;
        let s = int(j as i64 - k as i64);
        let at = int(a as i64) + &y;
        let b_m = classical_value(Classical::B, m, &at);
        let b_m1 = classical_value(Classical::B, m - 1, &at);
        int(1 - n as i64) * factorial_ratio(n, m) * &b_m
            + (&at - BigRational::one()) * factorial_ratio(n, m - 1) * b_m1
            + s * factorial_ratio(n, m) * b_m
    })
}

/// The printed brace of the Euler convolution expansion for `j = k + s`,
/// `s = 0..=n`. It depends on `j` and `k` only through `s`.
struct Brace {
    poly: XPolynomial,
    int: IntPoly,
}

type Braces = Arc<Vec<Brace>>;

static BRACES: LazyLock<Mutex<HashMap<(usize, BigRational), Braces>>> =
    LazyLock::new(Default::default);

fn braces(n: usize, y: &BigRational) -> Arc<Vec<Brace>> {
    let key = (n, y.clone());
    if let Some(b) = BRACES.lock().expect("cache lock").get(&key) {
        return b.clone();
    }
    let c = classical();
    let one_minus = XPolynomial::from_coeffs(vec![&c.one() - &c.lift(y.clone()), c.lift_int(-1)], &c);
    let list: Vec<Brace> = (0..=n)
        .map(|s| {
            let m = (n - s) as i64;
            let first = (&one_minus * &classical_shifted(Classical::E, m, y))
                .scale_rational(&factorial_ratio(n, m));
            let next = classical_shifted(Classical::E, m + 1, y);
            let second = next.scale_rational(&(int(s as i64) * factorial_ratio(n, m + 1)));
            let third = next.scale_rational(&factorial_ratio(n + 1, m + 1));
            let poly = (&(&first - &second) + &third).scale_rational(&int(2));
            let int = IntPoly::from_xpoly(&poly).expect("classical brace");
            Brace { poly, int }
        })
        .collect();
    let list = Arc::new(list);
    BRACES.lock().expect("cache lock").insert(key, list.clone());
    list
}

fn thm5(p: &GridPoint) -> Vec<CheckResult> {
    let (n, k, mode) = (p.n, p.k, &p.mode);
    let y = p.y.clone().expect("bivariate point");
    let target = lift_poly(&convolution(Classical::E, n, &y), mode);
    // The printed brace keeps x where the other expansions substitute a,
    // so the printed reading is a polynomial in x; the corrected reading
    // evaluates it at x = a.
    let braces = braces(n, &y);
    // The brace does not depend on a, so the inner sum over a collapses to
    // the sum of the printed weights.
    let weight = signed_weights(k, mode, Reading::Printed)
        .iter()
        .fold(mode.zero(), |acc, w| &acc + w);
    let printed = if weight.is_zero() || k > n {
        XPolynomial::zero(mode)
    } else if mode.is_symbolic() {
        (k..=n).fold(XPolynomial::zero(mode), |acc, j| {
            let term = &lift_poly(&braces[j - k].poly, mode) * &apostol_bernoulli_poly(j, k, mode);
            &acc + &term.scale(&weight.scale(&inv_factorial(j as i64)))
        })
    } else {
        let weight = weight.as_rational().expect("numeric mode");
        let products: Vec<IntPoly> = (k..=n)
            .map(|j| braces[j - k].int.mul(&intpoly::basis(j, k, mode).expect("numeric mode")))
            .collect();
        let terms: Vec<_> = (k..=n)
            .zip(&products)
            .map(|(j, prod)| (&weight * inv_factorial(j as i64), prod))
            .collect();
        intpoly::combine(&terms, mode)
    };
    let mut out = vec![compare_poly(p, "as_printed", &printed, &target)];
    if !mode.is_classical() {
        let table = cached_table(IdentityId::Thm5, p, |j, a| value(&braces[j - k].poly, &int(a as i64)));
        let corrected = expansion_sum(n, k, mode, Reading::Corrected, &table);
        out.push(compare_poly(p, "corrected", &corrected, &target));
    }
    out
}
