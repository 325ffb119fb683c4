//! Machine-readable verification reports.
//!
//! [`verify_paper`] runs the full battery: the algebra identity suite,
//! the Jordan-algebra identities, every worked eigenpair, eigenspace
//! dimensions, decompositions and their failure on the second worked
//! matrix, the eigenvalue band, the randomized real-eigenvalue solver
//! checks, and the two known discrepancies in the source listing (which
//! are reported as `discrepancy`, not failures). Reports are
//! deterministic functions of `(inputs, seed, table convention)`: checks
//! are emitted in sorted order and all randomness is ChaCha-seeded.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::eigen::{self, EigenPair, SearchOptions};
use crate::jordan::{JordanMatrix, OctMatrix3, OctVec3};
use crate::octonion::Octonion;
use crate::table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A mismatch between the source listing and solver-derived values;
    /// reported with the data attached, and not counted as a failure.
    Discrepancy,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub criterion: u8,
    pub status: CheckStatus,
    pub measured: Vec<f64>,
    pub expected: Vec<f64>,
    pub tolerance: f64,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub table_convention: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("table convention: {}\n", self.table_convention));
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Discrepancy => "DISCREPANCY",
            };
            out.push_str(&format!(
                "{status:12} {} (criterion {}) measured={:?} expected={:?} tol={}\n",
                c.name, c.criterion, c.measured, c.expected, c.tolerance
            ));
        }
        let (pass, fail, disc) = self.counts();
        out.push_str(&format!("{pass} pass, {fail} fail, {disc} discrepancy\n"));
        out
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut disc = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Discrepancy => disc += 1,
            }
        }
        (pass, fail, disc)
    }
}

fn status_of(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

// -- seeded sampling helpers -------------------------------------------

fn random_oct(rng: &mut impl Rng) -> Octonion {
    let mut c = [0.0; 8];
    for v in c.iter_mut() {
        *v = rng.gen_range(-1.0..1.0);
    }
    Octonion(c)
}

fn random_unit_oct(rng: &mut impl Rng) -> Octonion {
    loop {
        let o = random_oct(rng);
        if o.norm() > 1e-3 {
            return o.scale(1.0 / o.norm());
        }
    }
}

fn random_jordan(rng: &mut impl Rng) -> JordanMatrix {
    let (a, b, c) = (random_oct(rng), random_oct(rng), random_oct(rng));
    JordanMatrix::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        a,
        b,
        c,
    )
}

fn random_unit_vec(rng: &mut impl Rng) -> OctVec3 {
    OctVec3::new(random_oct(rng), random_oct(rng), random_oct(rng)).normalized()
}

// -- identity batteries (shared by verify_paper and property_suite) ------

/// One measured identity: its name, worst observed deviation, and the
/// tolerance it is held to.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyLine {
    pub identity: String,
    pub max_deviation: f64,
    pub tolerance: f64,
}

/// Worst deviations of the octonion identity battery over `trials`
/// seeded unit samples: the inner-product exchange rule, right-factor
/// scaling, norm multiplicativity, alternativity, and the four-slot
/// associator expansion.
pub fn octonion_identity_battery(trials: usize, seed: u64) -> Vec<PropertyLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0C7A);
    let mut exchange: f64 = 0.0;
    let mut scaling: f64 = 0.0;
    let mut norm_mult: f64 = 0.0;
    let mut alternativity: f64 = 0.0;
    let mut four_slot: f64 = 0.0;
    for _ in 0..trials {
        let a = random_unit_oct(&mut rng);
        let b = random_unit_oct(&mut rng);
        let x = random_unit_oct(&mut rng);
        let d = random_unit_oct(&mut rng);
        exchange = exchange.max((a.dot(&(x * b)) - b.dot(&(x.conj() * a))).abs());
        scaling = scaling.max(((a * x).dot(&(b * x)) - x.norm_sq() * a.dot(&b)).abs());
        norm_mult = norm_mult.max(((a * b).norm() - a.norm() * b.norm()).abs());
        alternativity = alternativity
            .max(Octonion::associator(&b, &a, &a).norm())
            .max(Octonion::associator(&b, &a, &a.conj()).norm());
        let lhs = Octonion::associator(&a, &b, &x) * d + a * Octonion::associator(&b, &x, &d);
        let rhs = Octonion::associator(&(a * b), &x, &d) - Octonion::associator(&a, &(b * x), &d)
            + Octonion::associator(&a, &b, &(x * d));
        four_slot = four_slot.max(lhs.dist(&rhs));
    }
    let line = |identity: &str, dev: f64| PropertyLine {
        identity: identity.to_string(),
        max_deviation: dev,
        tolerance: 1e-12,
    };
    vec![
        line("inner-product exchange", exchange),
        line("right-factor scaling", scaling),
        line("norm multiplicativity", norm_mult),
        line("alternativity", alternativity),
        line("four-slot associator expansion", four_slot),
    ]
}

/// Worst deviations of the Jordan-matrix identity battery over `trials`
/// seeded matrices with entries in `[-1, 1]`: power associativity, the
/// cubic characteristic identity, and the dual-route sigma/determinant
/// agreements.
pub fn jordan_identity_battery(trials: usize, seed: u64) -> Vec<PropertyLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x10AD);
    let mut power_assoc: f64 = 0.0;
    let mut char_identity: f64 = 0.0;
    let mut sigma_routes: f64 = 0.0;
    let mut det_routes: f64 = 0.0;
    for _ in 0..trials {
        let a = random_jordan(&mut rng);
        let cubic_scale = a.entry_scale().powi(3);
        let (p3a, p3b) = a.power3_both();
        power_assoc = power_assoc.max(p3a.sub(&p3b).norm() / cubic_scale);
        char_identity =
            char_identity.max(a.char_residual().to_matrix().max_entry_norm() / cubic_scale);
        sigma_routes =
            sigma_routes.max((a.sigma() - a.sigma_via_trace()).abs() / a.sigma().abs().max(1.0));
        det_routes =
            det_routes.max((a.det() - a.det_via_freudenthal()).abs() / a.det().abs().max(1.0));
    }
    vec![
        PropertyLine {
            identity: "power associativity (scaled)".into(),
            max_deviation: power_assoc,
            tolerance: 1e-12,
        },
        PropertyLine {
            identity: "characteristic identity (scaled)".into(),
            max_deviation: char_identity,
            tolerance: 1e-10,
        },
        PropertyLine {
            identity: "sigma: trace route vs closed form".into(),
            max_deviation: sigma_routes,
            tolerance: 1e-12,
        },
        PropertyLine {
            identity: "det: Freudenthal route vs closed form".into(),
            max_deviation: det_routes,
            tolerance: 1e-12,
        },
    ]
}

/// Worst deviations of the two vector/eigenvalue theorem identities over
/// `trials` seeded samples.
pub fn vector_identity_battery(trials: usize, seed: u64) -> Vec<PropertyLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1DE7);
    let mut weighted: f64 = 0.0;
    let mut assoc: f64 = 0.0;
    for _ in 0..trials {
        let v = random_unit_vec(&mut rng);
        let lambda = random_oct(&mut rng).scale(2.0);
        let scale = lambda.norm().max(1.0);
        let (first, second) = eigen::identity_checks(&v, lambda);
        weighted = weighted.max(first / scale);
        assoc = assoc.max(second / scale);
        // the associator identity holds without normalization
        let raw = v.scale(rng.gen_range(0.1..3.0));
        let (_, second_raw) = eigen::identity_checks(&raw, lambda);
        assoc = assoc.max(second_raw / (scale * raw.norm_sq().max(1.0)));
    }
    vec![
        PropertyLine {
            identity: "weighted outer-product identity".into(),
            max_deviation: weighted,
            tolerance: 1e-12,
        },
        PropertyLine {
            identity: "dagger associator identity".into(),
            max_deviation: assoc,
            tolerance: 1e-12,
        },
    ]
}

/// The randomized identity suites of all modules under deterministic
/// seeding, reporting the worst deviation per identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyReport {
    pub trials: usize,
    pub seed: u64,
    pub lines: Vec<PropertyLine>,
}

impl PropertyReport {
    pub fn all_within_tolerance(&self) -> bool {
        self.lines.iter().all(|l| l.max_deviation <= l.tolerance)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "property suite: {} trials, seed {}\n",
            self.trials, self.seed
        );
        for l in &self.lines {
            let status = if l.max_deviation <= l.tolerance {
                "PASS"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "{status:5} {:45} max deviation {:.3e} (tol {:.1e})\n",
                l.identity, l.max_deviation, l.tolerance
            ));
        }
        out
    }
}

pub fn property_suite(trials: usize, seed: u64) -> PropertyReport {
    assert!(trials >= 1);
    let mut lines = octonion_identity_battery(trials, seed);
    // the Jordan battery costs ~20 matrix products per trial; cap the
    // sample count so huge octonion trial counts stay fast
    let jordan_trials = trials.clamp(1, 2000);
    lines.extend(jordan_identity_battery(jordan_trials, seed));
    lines.extend(vector_identity_battery(trials.clamp(1, 5000), seed));
    PropertyReport {
        trials,
        seed,
        lines,
    }
}

// -- the full verification run -------------------------------------------

/// Runs every acceptance check and assembles the report. Exit semantics:
/// `discrepancy` entries (the two known source-listing issues) do not
/// fail the run; any `fail` entry does.
pub fn verify_paper(seed: u64) -> VerificationReport {
    let mut checks: Vec<Check> = Vec::new();
    let table_convention = match table::calibrate() {
        Ok(cal) => cal.describe(),
        Err(err) => {
            checks.push(Check {
                name: "c00 table calibration".into(),
                criterion: 0,
                status: CheckStatus::Fail,
                measured: vec![],
                expected: vec![],
                tolerance: 0.0,
                provenance: "derived".into(),
            });
            format!("calibration failed: {err}")
        }
    };

    criterion1_algebra_identities(&mut checks, seed);
    criterion2_jordan_identities(&mut checks, seed);
    let mut verified: Vec<(JordanMatrix, EigenPair)> = Vec::new();
    criterion3_worked_pair_residuals(&mut checks, &mut verified);
    criterion4_eigenspace_dims(&mut checks);
    criterion5_decompositions(&mut checks);
    criterion6_eigenvalue_band(&mut checks, &mut verified);
    criterion7_second_matrix(&mut checks, &mut verified);
    criterion8_triple_search(&mut checks, seed);
    criterion9_third_matrix(&mut checks, &mut verified);
    criterion10_random_families(&mut checks, seed);
    criterion11_closed_forms_on_verified(&mut checks, &verified);
    criterion12_theorem_identities(&mut checks, seed);
    criterion13_discrepancies(&mut checks, &verified);

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport {
        table_convention,
        checks,
    }
}

fn criterion1_algebra_identities(checks: &mut Vec<Check>, seed: u64) {
    for line in octonion_identity_battery(10_000, seed) {
        checks.push(Check {
            name: format!("c01 {}", line.identity),
            criterion: 1,
            status: status_of(line.max_deviation <= line.tolerance),
            measured: vec![line.max_deviation],
            expected: vec![0.0],
            tolerance: line.tolerance,
            provenance: "identity".into(),
        });
    }
}

fn criterion2_jordan_identities(checks: &mut Vec<Check>, seed: u64) {
    for line in jordan_identity_battery(1000, seed) {
        checks.push(Check {
            name: format!("c02 {}", line.identity),
            criterion: 2,
            status: status_of(line.max_deviation <= line.tolerance),
            measured: vec![line.max_deviation],
            expected: vec![0.0],
            tolerance: line.tolerance,
            provenance: "identity".into(),
        });
    }
}

const EX1_PARAMS: [(f64, f64); 2] = [(0.0, 1.0), (1.0, 2.0)];
const EX1_THETAS: [(&str, f64); 3] = [
    ("0", 0.0),
    ("pi/5", std::f64::consts::PI / 5.0),
    ("pi/3", std::f64::consts::PI / 3.0),
];

fn criterion3_worked_pair_residuals(
    checks: &mut Vec<Check>,
    verified: &mut Vec<(JordanMatrix, EigenPair)>,
) {
    for (p, q) in EX1_PARAMS {
        for (theta_name, theta) in EX1_THETAS {
            let a = catalog::example1(p, q, theta);
            let mut worst: f64 = 0.0;
            for pair in catalog::example1_pairs(p, q, theta) {
                let ep = EigenPair::new(&a, pair.v.normalized(), pair.lambda);
                worst = worst.max(ep.residual);
                verified.push((a, ep));
            }
            checks.push(Check {
                name: format!("c03 example1 eigenpairs p={p} q={q} theta={theta_name}"),
                criterion: 3,
                status: status_of(worst <= 1e-12),
                measured: vec![worst],
                expected: vec![0.0],
                tolerance: 1e-12,
                provenance: "listed".into(),
            });
        }
    }
}

fn criterion4_eigenspace_dims(checks: &mut Vec<Check>) {
    let (p, q, theta) = (1.0, 2.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let pairs = catalog::example1_pairs(p, q, theta);
    let lam = |name: &str| pairs.iter().find(|x| x.name == name).unwrap().lambda;
    for (name, lambda, want) in [("w+", lam("w+"), 1usize), ("u+", lam("u+"), 5usize)] {
        let dim = eigen::eigenspace_dim(&a, lambda);
        checks.push(Check {
            name: format!("c04 example1 eigenspace dimension at lambda_{name}"),
            criterion: 4,
            status: status_of(dim == want),
            measured: vec![dim as f64],
            expected: vec![want as f64],
            tolerance: 0.0,
            provenance: "listed".into(),
        });
    }
}

fn criterion5_decompositions(checks: &mut Vec<Check>) {
    let (p, q, theta) = (1.0, 2.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let pairs = catalog::example1_pairs(p, q, theta);
    let get = |name: &str| {
        let pr = pairs.iter().find(|x| x.name == name).unwrap();
        EigenPair::new(&a, pr.v.normalized(), pr.lambda)
    };

    // sign-consistent triples first, then every mixed grouping as data
    let mut grouping_devs = Vec::new();
    let mut sign_consistent_best = f64::INFINITY;
    for su in ["+", "-"] {
        for sv in ["+", "-"] {
            for sw in ["+", "-"] {
                let triple = [
                    get(&format!("u{su}")),
                    get(&format!("v{sv}")),
                    get(&format!("w{sw}")),
                ];
                let devs = eigen::decomposition_checks(&a, &triple);
                grouping_devs.push(devs.max());
                if su == sv && sv == sw {
                    sign_consistent_best = sign_consistent_best.min(devs.max());
                }
            }
        }
    }
    checks.push(Check {
        name: "c05 example1 sign-consistent decomposition".into(),
        criterion: 5,
        status: status_of(sign_consistent_best <= 1e-10),
        measured: vec![sign_consistent_best],
        expected: vec![0.0],
        tolerance: 1e-10,
        provenance: "listed".into(),
    });
    // which of the 8 groupings decompose is reported as data
    checks.push(Check {
        name: "c05 example1 grouping survey (max deviation per sign choice)".into(),
        criterion: 5,
        status: CheckStatus::Pass,
        measured: grouping_devs,
        expected: vec![],
        tolerance: 1e-10,
        provenance: "measured".into(),
    });
}

fn criterion6_eigenvalue_band(
    checks: &mut Vec<Check>,
    verified: &mut Vec<(JordanMatrix, EigenPair)>,
) {
    // boundary: beta vanishes exactly at rho = +-q and rho = +-2q
    let mut boundary = Vec::new();
    for q in [1.0, 2.0] {
        for rho in [q, -q, 2.0 * q, -2.0 * q] {
            let (beta, _) = eigen::band_beta(rho, q).expect("boundary is in range");
            boundary.push(beta);
        }
    }
    let worst_boundary = boundary.iter().fold(0.0f64, |m, b| m.max(b.abs()));
    checks.push(Check {
        name: "c06 band boundary betas vanish".into(),
        criterion: 6,
        status: status_of(worst_boundary == 0.0),
        measured: boundary,
        expected: vec![0.0],
        tolerance: 0.0,
        provenance: "listed".into(),
    });

    // interior: rho^2 = 2.5 q^2
    let (p, q, theta) = (1.0, 1.0, std::f64::consts::PI / 5.0);
    let a = catalog::example1(p, q, theta);
    let rho = (2.5f64).sqrt() * q;
    let (beta, _) = eigen::band_beta(rho, q).expect("interior point is in range");
    let lambda = Octonion::real(p + rho) - Octonion::KL.scale(beta);
    let found = eigen::eigen_search(&a, lambda, SearchOptions::default());
    checks.push(Check {
        name: "c06 band interior search residual".into(),
        criterion: 6,
        status: status_of(found.residual <= 1e-8),
        measured: vec![found.residual],
        expected: vec![0.0],
        tolerance: 1e-8,
        provenance: "derived".into(),
    });
    let dim = eigen::eigenspace_dim(&a, lambda);
    checks.push(Check {
        name: "c06 band interior eigenspace dimension".into(),
        criterion: 6,
        status: status_of(dim == 3),
        measured: vec![dim as f64],
        expected: vec![3.0],
        tolerance: 0.0,
        provenance: "listed".into(),
    });
    if found.residual <= 1e-8 {
        verified.push((a, found));
    }

    // dimensions across sampled interior rho values, reported as data
    let sampled: Vec<f64> = [1.25, 1.5, 1.75]
        .iter()
        .map(|&ratio| {
            let rho = ratio * q;
            let (beta, _) = eigen::band_beta(rho, q).expect("interior");
            let lam = Octonion::real(p + rho) - Octonion::KL.scale(beta);
            eigen::eigenspace_dim(&a, lam) as f64
        })
        .collect();
    checks.push(Check {
        name: "c06 band eigenspace dimensions over sampled rho (measured)".into(),
        criterion: 6,
        status: CheckStatus::Pass,
        measured: sampled,
        expected: vec![3.0],
        tolerance: 0.0,
        provenance: "measured".into(),
    });
}

const EX2_PARAMS: (f64, f64) = (0.7, 1.3);

fn criterion7_second_matrix(
    checks: &mut Vec<Check>,
    verified: &mut Vec<(JordanMatrix, EigenPair)>,
) {
    let (p, q) = EX2_PARAMS;
    let a = catalog::example2(p, q);
    let pairs = catalog::example2_pairs(p, q);

    let mut worst: f64 = 0.0;
    for pair in &pairs {
        let ep = EigenPair::new(&a, pair.v.normalized(), pair.lambda);
        worst = worst.max(ep.residual);
        verified.push((a, ep));
    }
    checks.push(Check {
        name: "c07 example2 eigenpair residuals".into(),
        criterion: 7,
        status: status_of(worst <= 1e-10),
        measured: vec![worst],
        expected: vec![0.0],
        tolerance: 1e-10,
        provenance: "listed".into(),
    });

    let vs: Vec<OctVec3> = pairs.iter().map(|x| x.v.normalized()).collect();
    let sum = eigen::six_square_sum(&vs.try_into().expect("six pairs"));
    let dev = sum.dist(&OctMatrix3::identity().scale(2.0));
    checks.push(Check {
        name: "c07 example2 six squares sum to twice identity".into(),
        criterion: 7,
        status: status_of(dev <= 1e-10),
        measured: vec![dev],
        expected: vec![0.0],
        tolerance: 1e-10,
        provenance: "listed".into(),
    });

    let get = |name: &str| pairs.iter().find(|x| x.name == name).unwrap();
    let (u1, v1, w1) = (get("u1"), get("v1"), get("w1"));
    let ortho_v1u1 = eigen::ortho_check(&v1.v, &u1.v);
    let ortho_v1w1 = eigen::ortho_check(&v1.v, &w1.v);
    checks.push(Check {
        name: "c07 example2 v1 orthogonal to u1 and w1".into(),
        criterion: 7,
        status: status_of(ortho_v1u1 <= 1e-10 && ortho_v1w1 <= 1e-10),
        measured: vec![ortho_v1u1, ortho_v1w1],
        expected: vec![0.0, 0.0],
        tolerance: 1e-10,
        provenance: "listed".into(),
    });
    let ortho_u1w1 = eigen::ortho_check(&u1.v, &w1.v);
    checks.push(Check {
        name: "c07 example2 u1 and w1 not orthogonal".into(),
        criterion: 7,
        status: status_of(ortho_u1w1 >= 0.05),
        measured: vec![ortho_u1w1],
        expected: vec![0.05],
        tolerance: 0.0,
        provenance: "listed".into(),
    });

    // eigenspace dimensions at the listed eigenvalues: at most 2 free
    // parameters are expected; the measured values are reported as data
    let dims: Vec<f64> = pairs
        .iter()
        .map(|pr| eigen::eigenspace_dim(&a, pr.lambda) as f64)
        .collect();
    let within = dims.iter().all(|&d| (1.0..=2.0).contains(&d));
    checks.push(Check {
        name: "c07 example2 eigenspace dimensions at listed eigenvalues (measured)".into(),
        criterion: 7,
        status: status_of(within),
        measured: dims,
        expected: vec![2.0],
        tolerance: 0.0,
        provenance: "measured".into(),
    });
}

fn criterion8_triple_search(checks: &mut Vec<Check>, seed: u64) {
    let (p, q) = EX2_PARAMS;
    let a = catalog::example2(p, q);
    let pairs = catalog::example2_pairs(p, q);
    let w1 = pairs.iter().find(|x| x.name == "w1").unwrap();
    let fixed = EigenPair::new(&a, w1.v.normalized(), w1.lambda);
    let others: Vec<(Octonion, Vec<OctVec3>)> = pairs
        .iter()
        .map(|pr| (pr.lambda, eigen::eigenspace_basis(&a, pr.lambda)))
        .collect();
    let best = eigen::orthogonal_triple_search(&a, &fixed, &others, 300, seed);
    checks.push(Check {
        name: "c08 example2 no orthogonal triple containing w1".into(),
        criterion: 8,
        status: status_of(best > 0.01),
        measured: vec![best],
        expected: vec![0.01],
        tolerance: 0.0,
        provenance: "derived".into(),
    });
}

fn criterion9_third_matrix(checks: &mut Vec<Check>, verified: &mut Vec<(JordanMatrix, EigenPair)>) {
    let (p, q) = (0.4, 1.3);
    let a = catalog::example3(p, q);
    let pair = catalog::example3_pair(p, q);
    let ep = EigenPair::new(&a, pair.v.normalized(), pair.lambda);
    checks.push(Check {
        name: "c09 example3 eigenpair residual".into(),
        criterion: 9,
        status: status_of(ep.residual <= 1e-12),
        measured: vec![ep.residual],
        expected: vec![0.0],
        tolerance: 1e-12,
        provenance: "listed".into(),
    });
    verified.push((a, ep));

    // entry associator equals 2(l - k) up to the calibrated orientation;
    // the matching sign is reported in `measured[2]`
    let got = catalog::example3_entry_associator(q);
    let want = (Octonion::L - Octonion::K).scale(2.0);
    let dev_plus = got.dist(&want);
    let dev_minus = got.dist(&-want);
    let sign = if dev_plus <= dev_minus { 1.0 } else { -1.0 };
    checks.push(Check {
        name: "c09 example3 entry associator".into(),
        criterion: 9,
        status: status_of(dev_plus.min(dev_minus) <= 1e-12),
        measured: vec![dev_plus, dev_minus, sign],
        expected: vec![0.0],
        tolerance: 1e-12,
        provenance: "listed".into(),
    });
}

fn criterion10_random_families(checks: &mut Vec<Check>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xFA71);
    let mut max_multipliers = 0usize;
    let mut min_nullity = usize::MAX;
    let mut worst_trace_dev: f64 = 0.0;
    let mut failures = 0usize;
    for _ in 0..100 {
        let a = random_jordan(&mut rng);
        match eigen::real_eigen_families(&a) {
            Err(_) => failures += 1,
            Ok(families) => {
                let mut distinct = vec![families[0].r];
                if (families[1].r - families[0].r).abs() > 1e-12 {
                    distinct.push(families[1].r);
                }
                max_multipliers = max_multipliers.max(distinct.len());
                for fam in &families {
                    for &n in &fam.nullities {
                        min_nullity = min_nullity.min(n);
                    }
                    if fam.lambdas.len() == 3 {
                        let sum: f64 = fam.lambdas.iter().sum();
                        worst_trace_dev = worst_trace_dev.max((sum - a.trace()).abs());
                    } else {
                        // fewer than three real roots would break the sum rule
                        worst_trace_dev = f64::INFINITY;
                    }
                }
            }
        }
    }
    checks.push(Check {
        name: "c10 random matrices: at most two real multipliers".into(),
        criterion: 10,
        status: status_of(failures == 0 && max_multipliers <= 2),
        measured: vec![max_multipliers as f64, failures as f64],
        expected: vec![2.0, 0.0],
        tolerance: 0.0,
        provenance: "derived".into(),
    });
    checks.push(Check {
        name: "c10 random matrices: every family root is an eigenvalue".into(),
        criterion: 10,
        status: status_of(min_nullity >= 1),
        measured: vec![min_nullity as f64],
        expected: vec![1.0],
        tolerance: 0.0,
        provenance: "derived".into(),
    });
    checks.push(Check {
        name: "c10 random matrices: family root sums equal the trace".into(),
        criterion: 10,
        status: status_of(worst_trace_dev <= 1e-9),
        measured: vec![worst_trace_dev],
        expected: vec![0.0],
        tolerance: 1e-9,
        provenance: "derived".into(),
    });
}

fn criterion11_closed_forms_on_verified(
    checks: &mut Vec<Check>,
    verified: &[(JordanMatrix, EigenPair)],
) {
    let mut sandwich_dev: f64 = 0.0;
    let mut im_dev: f64 = 0.0;
    let mut re_dev: f64 = 0.0;
    let mut char_dev: f64 = 0.0;
    for (a, pair) in verified {
        if pair.residual > 1e-9 {
            continue;
        }
        let v = &pair.v;
        let lambda = pair.lambda;
        let sandwich = eigen::hermitian_sandwich(a, v).expect("verified pairs are normalized");
        sandwich_dev = sandwich_dev.max(sandwich.dist(&(-lambda.im().scale(2.0))));
        let im = eigen::im_lambda_formula(a, v).expect("normalized");
        im_dev = im_dev.max(im.dist(&lambda.im()));
        let re_reference = eigen::lambda_from_vector(a, v).expect("normalized").re();
        for form in eigen::re_lambda_formulas(a, v).into_iter().flatten() {
            re_dev = re_dev.max((form - re_reference).abs());
        }
        let (lhs, rhs) = eigen::characteristic_sides(a, v, lambda);
        let scale = a.entry_scale().max(lambda.norm()).powi(3).max(1.0);
        char_dev = char_dev.max(lhs.dist(&rhs) / scale);
    }
    let push = |checks: &mut Vec<Check>, name: &str, dev: f64| {
        checks.push(Check {
            name: format!("c11 {name}"),
            criterion: 11,
            status: status_of(dev <= 1e-8),
            measured: vec![dev],
            expected: vec![0.0],
            tolerance: 1e-8,
            provenance: "derived".into(),
        });
    };
    push(
        checks,
        "sandwich equals -2 Im(lambda) on verified pairs",
        sandwich_dev,
    );
    push(checks, "imaginary-part formula on verified pairs", im_dev);
    push(
        checks,
        "cyclic real-part formulas on verified pairs",
        re_dev,
    );
    push(
        checks,
        "generalized characteristic equation on verified pairs (scaled)",
        char_dev,
    );
}

fn criterion12_theorem_identities(checks: &mut Vec<Check>, seed: u64) {
    for line in vector_identity_battery(1000, seed) {
        checks.push(Check {
            name: format!("c12 {}", line.identity),
            criterion: 12,
            status: status_of(line.max_deviation <= line.tolerance),
            measured: vec![line.max_deviation],
            expected: vec![0.0],
            tolerance: line.tolerance,
            provenance: "identity".into(),
        });
    }
}

fn criterion13_discrepancies(checks: &mut Vec<Check>, verified: &[(JordanMatrix, EigenPair)]) {
    // 1. the combined lambda quotient: mixed-sign variant vs uniform-sign
    // variant, evaluated on verified eigenpairs
    let mut mixed_dev: f64 = 0.0;
    let mut mixed_undefined = 0usize;
    let mut uniform_dev: f64 = 0.0;
    let mut count = 0usize;
    for (a, pair) in verified {
        if pair.residual > 1e-9 {
            continue;
        }
        count += 1;
        let variants = eigen::lambda_formula_variants(a, &pair.v);
        match variants.mixed_sign {
            Some(value) => mixed_dev = mixed_dev.max(value.dist(&pair.lambda)),
            None => mixed_undefined += 1,
        }
        uniform_dev = uniform_dev.max(variants.uniform_sign.dist(&pair.lambda));
    }
    checks.push(Check {
        name: "c13 lambda quotient sign variants (mixed dev, undefined count, uniform dev, pairs)"
            .into(),
        criterion: 13,
        status: CheckStatus::Discrepancy,
        measured: vec![mixed_dev, mixed_undefined as f64, uniform_dev, count as f64],
        expected: vec![0.0],
        tolerance: 1e-8,
        provenance: "measured".into(),
    });

    // 2. the listed third real eigenvalue of the second worked matrix
    // violates the trace sum rule; the solver value is attached
    let (p, q) = EX2_PARAMS;
    let a = catalog::example2(p, q);
    let listed = catalog::example2_listed_real_families(p, q);
    let corrected = catalog::example2_trace_consistent_real_families(p, q);
    let (solver_dev_listed, solver_dev_corrected) = match eigen::real_eigen_families(&a) {
        Err(_) => (f64::INFINITY, f64::INFINITY),
        Ok(families) => {
            let match_dev = |target: &[[f64; 3]; 2]| {
                let mut worst: f64 = 0.0;
                for fam in &families {
                    let mut got = fam.lambdas.clone();
                    got.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    let best = target
                        .iter()
                        .map(|t| {
                            let mut t = t.to_vec();
                            t.sort_by(|a, b| a.partial_cmp(b).unwrap());
                            got.iter()
                                .zip(&t)
                                .map(|(g, e)| (g - e).abs())
                                .fold(0.0f64, f64::max)
                        })
                        .fold(f64::INFINITY, f64::min);
                    worst = worst.max(best);
                }
                worst
            };
            (match_dev(&listed), match_dev(&corrected))
        }
    };
    checks.push(Check {
        name: "c13 example2 listed third real eigenvalue vs solver (listed dev, corrected dev)"
            .into(),
        criterion: 13,
        status: CheckStatus::Discrepancy,
        measured: vec![solver_dev_listed, solver_dev_corrected],
        expected: vec![0.0],
        tolerance: 1e-8,
        provenance: "measured".into(),
    });

    // 3. the report carries exactly the two discrepancy entries above
    let disc_count = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Discrepancy)
        .count();
    checks.push(Check {
        name: "c13 exactly two discrepancy entries".into(),
        criterion: 13,
        status: status_of(disc_count == 2),
        measured: vec![disc_count as f64],
        expected: vec![2.0],
        tolerance: 0.0,
        provenance: "derived".into(),
    });
}

// -- per-matrix reports (CLI) ---------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyLine {
    pub r: f64,
    pub lambdas: Vec<f64>,
    pub nullities: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NonrealLine {
    pub lambda: Octonion,
    pub residual: f64,
    pub nullity: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EigsReport {
    pub matrix: JordanMatrix,
    pub trace: f64,
    pub sigma: f64,
    pub det: f64,
    pub families: Vec<FamilyLine>,
    pub nonreal: Vec<NonrealLine>,
}

impl EigsReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "trace {}  sigma {}  det {}\n",
            self.trace, self.sigma, self.det
        );
        for fam in &self.families {
            out.push_str(&format!(
                "family r = {:+.6e}: lambdas {:?} (eigenspace dims {:?})\n",
                fam.r, fam.lambdas, fam.nullities
            ));
        }
        for nr in &self.nonreal {
            out.push_str(&format!(
                "nonreal lambda {:?} residual {:.3e} eigenspace dim {}\n",
                nr.lambda, nr.residual, nr.nullity
            ));
        }
        out
    }
}

/// Real families plus (optionally) non-real pairs found by seeded
/// searches, deduplicated by eigenvalue distance.
pub fn eigs_report(
    a: &JordanMatrix,
    search_nonreal: bool,
    seeds: usize,
    seed: u64,
    tol: f64,
) -> Result<EigsReport, eigen::EigenError> {
    let families = eigen::real_eigen_families(a)?;
    let mut nonreal: Vec<NonrealLine> = Vec::new();
    if search_nonreal {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
        let scale = a.entry_scale();
        for _ in 0..seeds {
            let lambda0 = random_oct(&mut rng).scale(2.0 * scale);
            let found = eigen::eigen_search(a, lambda0, SearchOptions { max_iter: 200, tol });
            if found.residual > tol.max(1e-8) {
                continue;
            }
            if found.lambda.im().norm() <= 1e-6 {
                continue; // real eigenvalues are covered by the families
            }
            if nonreal
                .iter()
                .any(|line| line.lambda.dist(&found.lambda) < 1e-6)
            {
                continue;
            }
            nonreal.push(NonrealLine {
                lambda: found.lambda,
                residual: found.residual,
                nullity: eigen::eigenspace_dim(a, found.lambda),
            });
        }
        nonreal.sort_by(|x, y| {
            x.lambda
                .re()
                .partial_cmp(&y.lambda.re())
                .unwrap()
                .then(x.lambda.0[4].partial_cmp(&y.lambda.0[4]).unwrap())
        });
    }
    Ok(EigsReport {
        matrix: *a,
        trace: a.trace(),
        sigma: a.sigma(),
        det: a.det(),
        families: families
            .iter()
            .map(|f| FamilyLine {
                r: f.r,
                lambdas: f.lambdas.clone(),
                nullities: f.nullities.clone(),
            })
            .collect(),
        nonreal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_suite_is_deterministic_and_clean() {
        let a = property_suite(200, 42);
        let b = property_suite(200, 42);
        assert_eq!(a.to_json_string(), b.to_json_string());
        assert!(a.all_within_tolerance(), "{}", a.render_text());
        let c = property_suite(200, 43);
        assert!(c.all_within_tolerance());
    }

    #[test]
    fn single_trial_property_suite_runs() {
        let r = property_suite(1, 9);
        assert_eq!(r.trials, 1);
        assert!(!r.lines.is_empty());
    }

    #[test]
    fn eigs_report_for_diagonal() {
        let d = JordanMatrix::diag(1.0, 2.0, 3.0);
        let rep = eigs_report(&d, false, 0, 1, 1e-10).unwrap();
        assert_eq!(rep.families.len(), 2);
        for fam in &rep.families {
            assert!(fam.r.abs() <= 1e-9);
            for (l, want) in fam.lambdas.iter().zip(&[1.0, 2.0, 3.0]) {
                assert!((l - want).abs() <= 1e-9);
            }
        }
    }
}
