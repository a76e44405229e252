use apostol_core::expansion::{corrected_coefficients, corrected_upper_coefficients, expand_oracle};
use apostol_core::special::apostol_euler_numbers;
use apostol_core::verify::{
    render_report, run_suite, verify_identity, GridPoint, IdentityId, ReportFormat, SuiteConfig,
    Verdict,
};
use apostol_core::{BigRational, Error, LambdaMode, XPolynomial};

#[test]
fn bounds_are_enforced() {
    let too_far = GridPoint::new(11, 1, LambdaMode::Symbolic);
    assert!(matches!(verify_identity(IdentityId::Deriv, &[too_far]), Err(Error::OutOfBounds(_))));
    let numeric_ok = GridPoint::new(24, 1, LambdaMode::numeric(2, 1));
    assert!(verify_identity(IdentityId::Deriv, &[numeric_ok]).is_ok());
    let numeric_far = GridPoint::new(25, 1, LambdaMode::numeric(2, 1));
    assert!(matches!(verify_identity(IdentityId::Deriv, &[numeric_far]), Err(Error::OutOfBounds(_))));
    let k_far = GridPoint::new(2, 6, LambdaMode::Symbolic);
    assert!(matches!(verify_identity(IdentityId::Deriv, &[k_far]), Err(Error::OutOfBounds(_))));
}

#[test]
fn bivariate_identities_need_y() {
    let p = GridPoint::new(2, 0, LambdaMode::classical());
    assert!(matches!(verify_identity(IdentityId::Hansen, &[p]), Err(Error::InvalidConfig(_))));
}

#[test]
fn unknown_identity_is_rejected() {
    assert!(matches!("ID_NOPE".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
    for &id in IdentityId::ALL.iter() {
        assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
    }
}

#[test]
fn euler_pole_is_reported() {
    assert!(matches!(apostol_euler_numbers(1, 3, &LambdaMode::numeric(-1, 1)), Err(Error::EulerPole)));
}

#[test]
fn grid_order_does_not_change_the_report() {
    let mut grid: Vec<GridPoint> = (0..4)
        .flat_map(|n| [LambdaMode::classical(), LambdaMode::Symbolic].map(|m| GridPoint::new(n, 1, m)))
        .collect();
    let a = render_report(&[verify_identity(IdentityId::Thm1, &grid).unwrap()], ReportFormat::Json);
    grid.reverse();
    grid.push(grid[0].clone());
    let b = render_report(&[verify_identity(IdentityId::Thm1, &grid).unwrap()], ReportFormat::Json);
    assert_eq!(a, b);
}

#[test]
fn corrected_upper_agrees_with_oracle_at_one() {
    let mode = LambdaMode::classical();
    for deg in 0..=5 {
        for k in 0..=3 {
            let q = XPolynomial::monomial(mode.one(), deg, &mode);
            let oracle = expand_oracle(&q, k, &mode);
            assert!(corrected_upper_coefficients(&q, k, &mode).agrees_from(&oracle, k));
        }
    }
    let q = XPolynomial::monomial(mode.one(), 2, &mode);
    assert!(matches!(corrected_coefficients(&q, 1, &mode), Err(Error::Unsupported(_))));
}

#[test]
fn validity_domains_of_the_printed_theorems() {
    let reports = run_suite(&SuiteConfig {
        ids: Some(vec![IdentityId::CorXn, IdentityId::Thm2]),
        max_n: Some(4),
        ..SuiteConfig::default()
    })
    .unwrap();
    for r in &reports {
        assert_eq!(r.check_summary("as_printed").unwrap().validity_domain, "k = 0");
        assert_eq!(r.check_summary("corrected").unwrap().fail, 0);
    }
}

#[test]
fn failing_rows_carry_both_sides() {
    let y = BigRational::new(1.into(), 3.into());
    let p = GridPoint::new(3, 1, LambdaMode::numeric(2, 1)).with_y(y);
    let r = verify_identity(IdentityId::Thm4, &[p]).unwrap();
    let printed = r.check_results("as_printed").next().unwrap();
    assert_eq!(printed.verdict, Verdict::Fail);
    assert!(printed.lhs.is_some() && printed.rhs.is_some() && printed.witness.is_some());
    let corrected = r.check_results("corrected").next().unwrap();
    assert_eq!(corrected.verdict, Verdict::Pass);
    assert!(corrected.witness.is_none());
}

/// A symbolic pass carries over to every sampled λ other than 1, where the
/// Apostol-Bernoulli family does not specialize.
#[test]
fn symbolic_passes_hold_numerically() {
    let modes = vec![
        LambdaMode::Symbolic,
        LambdaMode::numeric(2, 1),
        LambdaMode::numeric(-2, 1),
        LambdaMode::numeric(1, 3),
    ];
    let reports = run_suite(&SuiteConfig {
        max_n: Some(5),
        modes: Some(modes),
        ..SuiteConfig::default()
    })
    .unwrap();
    for r in &reports {
        for sym in r.results.iter().filter(|res| res.point.mode.is_symbolic() && res.verdict == Verdict::Pass) {
            for other in r.results.iter().filter(|res| {
                !res.point.mode.is_symbolic()
                    && res.check == sym.check
                    && (res.point.n, res.point.k, &res.point.y) == (sym.point.n, sym.point.k, &sym.point.y)
            }) {
                assert_eq!(other.verdict, Verdict::Pass, "{} {:?} [{}]", r.identity, other.point, other.check);
            }
        }
    }
}
