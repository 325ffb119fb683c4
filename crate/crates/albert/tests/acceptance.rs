//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The criteria run through the same report machinery the CLI uses
//! (tolerances are pinned there), and the headline numbers of the
//! worked-matrix criteria are additionally recomputed here straight from
//! the library primitives.

use std::sync::OnceLock;

use albert::eigen::{self, EigenPair, SearchOptions};
use albert::jordan::OctMatrix3;
use albert::octonion::Octonion;
use albert::report::{self, Check, CheckStatus, VerificationReport};
use albert::{catalog, table};

fn full_report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| report::verify_paper(42))
}

fn criterion_checks(n: u8) -> Vec<&'static Check> {
    let checks: Vec<&Check> = full_report()
        .checks
        .iter()
        .filter(|c| c.criterion == n)
        .collect();
    assert!(!checks.is_empty(), "criterion {n} has no checks");
    checks
}

fn assert_criterion_green(n: u8, label: &str) {
    let checks = criterion_checks(n);
    let failed: Vec<&&Check> = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {n:2} {status}: {label} ({} checks)",
        checks.len()
    );
    assert!(failed.is_empty(), "failed checks: {failed:#?}");
}

#[test]
fn criterion_01_algebra_identity_suite() {
    assert_criterion_green(1, "octonion identity battery over 10^4 seeded unit samples");
    for line in report::octonion_identity_battery(10_000, 42) {
        assert!(
            line.max_deviation <= 1e-12,
            "{}: {}",
            line.identity,
            line.max_deviation
        );
    }
}

#[test]
fn criterion_02_jordan_identities() {
    assert_criterion_green(2, "Jordan identities over 10^3 random matrices");
    for line in report::jordan_identity_battery(1000, 42) {
        assert!(
            line.max_deviation <= line.tolerance,
            "{}: {}",
            line.identity,
            line.max_deviation
        );
    }
}

#[test]
fn criterion_03_example1_eigenpairs() {
    assert_criterion_green(3, "all six listed eigenpairs at six parameter choices");
    // direct recomputation at the stated tolerance
    for (p, q) in [(0.0, 1.0), (1.0, 2.0)] {
        for theta in [0.0, std::f64::consts::PI / 5.0, std::f64::consts::PI / 3.0] {
            let a = catalog::example1(p, q, theta);
            for pair in catalog::example1_pairs(p, q, theta) {
                let r = eigen::residual_norm(&a, &pair.v.normalized(), pair.lambda);
                assert!(r <= 1e-12, "{} at ({p},{q},{theta}): {r}", pair.name);
            }
        }
    }
}

#[test]
fn criterion_04_example1_eigenspace_dimensions() {
    assert_criterion_green(4, "eigenspace dimensions 1 (lambda_w) and 5 (lambda_u)");
    let (p, q, theta) = (1.0, 2.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let pairs = catalog::example1_pairs(p, q, theta);
    let lam = |name: &str| pairs.iter().find(|x| x.name == name).unwrap().lambda;
    assert_eq!(eigen::eigenspace_dim(&a, lam("w+")), 1);
    assert_eq!(eigen::eigenspace_dim(&a, lam("u+")), 5);
}

#[test]
fn criterion_05_example1_decompositions() {
    assert_criterion_green(5, "sign-consistent triple decomposes in both senses");
    let (p, q, theta) = (1.0, 2.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let pairs = catalog::example1_pairs(p, q, theta);
    let get = |name: &str| {
        let pr = pairs.iter().find(|x| x.name == name).unwrap();
        EigenPair::new(&a, pr.v.normalized(), pr.lambda)
    };
    let devs = eigen::decomposition_checks(&a, &[get("u+"), get("v+"), get("w+")]);
    assert!(devs.left_weighted <= 1e-10, "{devs:?}");
    assert!(devs.right_weighted <= 1e-10, "{devs:?}");
    assert!(devs.unitarity <= 1e-10, "{devs:?}");
    assert!(devs.regrouping <= 1e-10, "{devs:?}");
}

#[test]
fn criterion_06_eigenvalue_band() {
    assert_criterion_green(
        6,
        "band betas vanish at the boundary, interior point verifies",
    );
    for q in [1.0, 2.0] {
        for rho in [q, -q, 2.0 * q, -2.0 * q] {
            let (beta, _) = eigen::band_beta(rho, q).unwrap();
            assert_eq!(beta, 0.0, "rho={rho} q={q}");
        }
    }
    let (p, q, theta) = (1.0, 1.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let rho = 2.5f64.sqrt() * q;
    let (beta, _) = eigen::band_beta(rho, q).unwrap();
    let lambda = Octonion::real(p + rho) - Octonion::KL.scale(beta);
    let found = eigen::eigen_search(&a, lambda, SearchOptions::default());
    assert!(found.residual <= 1e-8, "residual {}", found.residual);
    assert_eq!(eigen::eigenspace_dim(&a, lambda), 3);
}

#[test]
fn criterion_07_example2_eigenpairs_and_orthogonality() {
    assert_criterion_green(
        7,
        "six listed eigenpairs, six-square sum, orthogonality pattern",
    );
    let (p, q) = (0.7, 1.3);
    let a = catalog::example2(p, q);
    let pairs = catalog::example2_pairs(p, q);
    for pair in &pairs {
        let r = eigen::residual_norm(&a, &pair.v.normalized(), pair.lambda);
        assert!(r <= 1e-10, "{}: {r}", pair.name);
    }
    let vs: Vec<_> = pairs.iter().map(|x| x.v.normalized()).collect();
    let sum = eigen::six_square_sum(&vs.try_into().unwrap());
    assert!(sum.dist(&OctMatrix3::identity().scale(2.0)) <= 1e-10);
    let get = |name: &str| &pairs.iter().find(|x| x.name == name).unwrap().v;
    assert!(eigen::ortho_check(get("v1"), get("u1")) <= 1e-10);
    assert!(eigen::ortho_check(get("v1"), get("w1")) <= 1e-10);
    assert!(eigen::ortho_check(get("u1"), get("w1")) >= 0.05);
}

#[test]
fn criterion_08_example2_no_orthogonal_triple() {
    assert_criterion_green(
        8,
        "multi-restart triple search stays bounded away from zero",
    );
    let checks = criterion_checks(8);
    // the report ran >= 200 restarts; its best residual is the evidence
    assert!(checks[0].measured[0] > 0.01, "{:?}", checks[0].measured);
}

#[test]
fn criterion_09_example3() {
    assert_criterion_green(9, "listed eigenpair verifies; entry associator matches");
    let (p, q) = (0.4, 1.3);
    let a = catalog::example3(p, q);
    let pair = catalog::example3_pair(p, q);
    assert!(eigen::residual_norm(&a, &pair.v.normalized(), pair.lambda) <= 1e-12);
    let got = catalog::example3_entry_associator(q);
    let want = (Octonion::L - Octonion::K).scale(2.0);
    assert!(got.dist(&want).min(got.dist(&-want)) <= 1e-12);
}

#[test]
fn criterion_10_real_eigenvalue_solver_on_random_matrices() {
    assert_criterion_green(
        10,
        "100 random matrices: <= 2 multipliers, roots are eigenvalues, trace sums",
    );
}

#[test]
fn criterion_11_closed_forms_on_verified_pairs() {
    assert_criterion_green(
        11,
        "sandwich, Re/Im formulas, characteristic equation on every verified pair",
    );
}

#[test]
fn criterion_12_theorem_identities() {
    assert_criterion_green(12, "both vector identities over 10^3 random samples");
    for line in report::vector_identity_battery(1000, 42) {
        assert!(line.max_deviation <= 1e-12, "{}", line.identity);
    }
}

#[test]
fn criterion_13_discrepancy_reporting() {
    let checks = criterion_checks(13);
    let discrepancies: Vec<&&Check> = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Discrepancy)
        .collect();
    let report_total = full_report()
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Discrepancy)
        .count();
    let ok = discrepancies.len() == 2 && report_total == 2;
    println!(
        "criterion 13 {}: exactly two discrepancy entries with solver values attached",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{discrepancies:#?}");
    // solver-derived values are attached and decisive: the trace-consistent
    // real eigenvalue matches the solver, the listed one does not; the
    // mixed-sign lambda quotient matches on every pair where it is defined
    let third = checks
        .iter()
        .find(|c| c.name.contains("third real eigenvalue"))
        .unwrap();
    assert!(third.measured[0] > 1e-2 && third.measured[1] <= 1e-8);
    let quotient = checks
        .iter()
        .find(|c| c.name.contains("lambda quotient"))
        .unwrap();
    assert!(quotient.measured[0] <= 1e-8, "{:?}", quotient.measured);
}

#[test]
fn report_is_deterministic_and_calibrated() {
    let a = report::verify_paper(7).to_json_string();
    let b = report::verify_paper(7).to_json_string();
    assert_eq!(a, b);
    assert!(full_report().checks.len() >= 25);
    assert!(!full_report().has_failures());
    // the default convention is the unique consistent orientation
    let cal = table::calibrate().unwrap();
    assert_eq!(cal.passing_masks, vec![0]);
    assert!(full_report().table_convention.contains("cayley-dickson"));
}
