//! The right eigenvalue problem `A v = v lambda` for 3x3 octonionic
//! Hermitian matrices.
//!
//! Because the octonions are noncommutative, `lambda` multiplies the
//! vector on the right, and because they are nonassociative the usual
//! spectral toolbox has to be rebuilt:
//!
//! - real eigenvalues come in two families of three, selected by the two
//!   real eigenvalues of an 8x8 "multiplier" operator
//!   ([`real_eigen_families`]);
//! - non-real eigenvalues are found numerically by alternating a
//!   smallest-singular-vector step on the 24x24 real linearization with
//!   the closed-form update `lambda = v^dag (A v)` ([`eigen_search`]);
//! - orthogonality of eigenvectors is the generalized `(v v^dag) w = 0`,
//!   not `v^dag w = 0` ([`ortho_check`], [`new_ortho_check`]);
//! - eigenspace dimensions are real null-space dimensions of the
//!   linearization ([`eigenspace_dim`]).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::jordan::{outer, outer_scaled, JordanMatrix, OctMatrix3, OctVec3};
use crate::octonion::Octonion;
use crate::realops::{self, RealMatrix, RealOpsError};

/// Relative tolerance for null-space thresholds (against the largest
/// singular value, floored at 1).
pub const DEFAULT_NULLITY_TOL: f64 = 1e-7;

/// How far a "normalized" vector's norm may deviate from 1.
pub const NORMALIZATION_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum EigenError {
    #[error("vector norm {norm} deviates from 1 by more than {NORMALIZATION_TOL}")]
    NotNormalized { norm: f64 },
    #[error("expected at most 2 distinct real multipliers, found {0:?}")]
    UnexpectedMultiplierCount(Vec<f64>),
    #[error("band relation has no real solution at rho = {rho}, q = {q}")]
    OutOfRange { rho: f64, q: f64 },
    #[error(transparent)]
    RealOps(#[from] RealOpsError),
}

/// An eigenpair candidate together with its residual `||A v - v lambda||`.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub lambda: Octonion,
    pub v: OctVec3,
    pub residual: f64,
}

impl EigenPair {
    pub fn new(a: &JordanMatrix, v: OctVec3, lambda: Octonion) -> EigenPair {
        EigenPair {
            lambda,
            v,
            residual: residual_norm(a, &v, lambda),
        }
    }
}

/// One family of real eigenvalues: the multiplier `r` it belongs to, the
/// roots of its cubic, and the measured eigenspace dimension per root.
#[derive(Clone, Debug)]
pub struct RealEigenFamily {
    pub r: f64,
    pub lambdas: Vec<f64>,
    pub nullities: Vec<usize>,
}

// -- residuals and closed-form lambda ---------------------------------

/// `A v - v lambda` (right multiplication by `lambda`).
pub fn residual(a: &JordanMatrix, v: &OctVec3, lambda: Octonion) -> OctVec3 {
    a.matvec(v) - v.mul_right(lambda)
}

pub fn residual_norm(a: &JordanMatrix, v: &OctVec3, lambda: Octonion) -> f64 {
    residual(a, v, lambda).norm()
}

fn require_normalized(v: &OctVec3) -> Result<(), EigenError> {
    let norm = v.norm();
    if (norm - 1.0).abs() > NORMALIZATION_TOL {
        return Err(EigenError::NotNormalized { norm });
    }
    Ok(())
}

/// `v^dag (A v)`, which equals `lambda` exactly on a normalized right
/// eigenpair. Also the lambda update step of [`eigen_search`].
pub fn lambda_from_vector(a: &JordanMatrix, v: &OctVec3) -> Result<Octonion, EigenError> {
    require_normalized(v)?;
    Ok(v.dagger_dot(&a.matvec(v)))
}

/// The associator `[v^dag, A, v] = (v^dag A) v - v^dag (A v)`; equals
/// `-2 Im(lambda)` on a normalized eigenpair.
pub fn hermitian_sandwich(a: &JordanMatrix, v: &OctVec3) -> Result<Octonion, EigenError> {
    require_normalized(v)?;
    let mat = a.to_matrix();
    // row vector v^dag A, entry j = sum_i conj(v_i) A[i][j]
    let row = |j: usize| {
        v.x.conj() * mat.entries[0][j]
            + v.y.conj() * mat.entries[1][j]
            + v.z.conj() * mat.entries[2][j]
    };
    let va_v = row(0) * v.x + row(1) * v.y + row(2) * v.z;
    let v_av = v.dagger_dot(&a.matvec(v));
    Ok(va_v - v_av)
}

/// The three cyclic quotient forms for `Re(lambda)`. Each is defined only
/// when its denominator component is nonzero; vanishing components yield
/// `None` rather than a guess.
pub fn re_lambda_formulas(a: &JordanMatrix, v: &OctVec3) -> [Option<f64>; 3] {
    let (x, y, z) = (v.x, v.y, v.z);
    let tiny = 1e-20 * v.norm_sq().max(1.0);
    let form = |num: f64, den: f64| if den > tiny { Some(num / den) } else { None };
    [
        form(
            x.dot(&(a.a * y)) + z.dot(&(a.b * x)) + a.p * x.norm_sq(),
            x.norm_sq(),
        ),
        form(
            x.dot(&(a.a * y)) + y.dot(&(a.c * z)) + a.m * y.norm_sq(),
            y.norm_sq(),
        ),
        form(
            y.dot(&(a.c * z)) + z.dot(&(a.b * x)) + a.n * z.norm_sq(),
            z.norm_sq(),
        ),
    ]
}

/// `Im(lambda) = [x, a, y] + [z, b, x] + [y, c, z]` for a normalized
/// eigenvector `v = (x, y, z)`.
pub fn im_lambda_formula(a: &JordanMatrix, v: &OctVec3) -> Result<Octonion, EigenError> {
    require_normalized(v)?;
    Ok(Octonion::associator(&v.x, &a.a, &v.y)
        + Octonion::associator(&v.z, &a.b, &v.x)
        + Octonion::associator(&v.y, &a.c, &v.z))
}

/// Both sign variants of the combined closed-form quotient for `lambda`.
///
/// The two variants differ in how the `z` terms enter the real part:
/// `mixed_sign` uses numerator `p|x|^2 + m|y|^2 - n|z|^2 + 2 x.(ay)` over
/// `|x|^2 + |y|^2 - |z|^2` (undefined when that denominator vanishes,
/// hence the `Option`); `uniform_sign` flips both minus signs to plus.
/// The imaginary part is the associator sum over `|v|^2` in both. This is
/// diagnostic machinery: [`re_lambda_formulas`] and [`im_lambda_formula`]
/// are the forms used for computation, and the report records which
/// variant agrees with `lambda` on verified eigenpairs.
#[derive(Clone, Debug)]
pub struct LambdaFormulaVariants {
    pub mixed_sign: Option<Octonion>,
    pub uniform_sign: Octonion,
}

pub fn lambda_formula_variants(a: &JordanMatrix, v: &OctVec3) -> LambdaFormulaVariants {
    let (x, y, z) = (v.x, v.y, v.z);
    let two_xay = 2.0 * x.dot(&(a.a * y));
    let imag = (Octonion::associator(&x, &a.a, &y)
        + Octonion::associator(&z, &a.b, &x)
        + Octonion::associator(&y, &a.c, &z))
    .scale(1.0 / v.norm_sq());

    let mixed_den = x.norm_sq() + y.norm_sq() - z.norm_sq();
    let mixed = if mixed_den.abs() > 1e-9 * v.norm_sq() {
        let re = (a.p * x.norm_sq() + a.m * y.norm_sq() - a.n * z.norm_sq() + two_xay) / mixed_den;
        Some(Octonion::real(re) + imag)
    } else {
        None
    };
    let uniform_re =
        (a.p * x.norm_sq() + a.m * y.norm_sq() + a.n * z.norm_sq() + two_xay) / v.norm_sq();
    LambdaFormulaVariants {
        mixed_sign: mixed,
        uniform_sign: Octonion::real(uniform_re) + imag,
    }
}

// -- the generalized characteristic equation ---------------------------

/// Left- and right-hand sides of the generalized characteristic equation,
/// evaluated with the stated parenthesization:
///
/// ```text
/// z (lambda^3 - tr(A) lambda^2 + sigma(A) lambda - det A)
///   = b(a(cz)) + conj(c)(conj(a)(conj(b) z)) - (b(ac) + (conj(c) conj(a)) conj(b)) z
///   + b [a,y,lambda] + [b, ay, lambda] + [b, x, lambda](lambda - m)
///   + conj(c) [conj(a), x, lambda] + [conj(c), conj(a) x, lambda]
///   + [conj(c), y, lambda](lambda - p)
/// ```
///
/// On any eigenpair the two sides agree.
pub fn characteristic_sides(
    a: &JordanMatrix,
    v: &OctVec3,
    lambda: Octonion,
) -> (Octonion, Octonion) {
    let (x, y, z) = (v.x, v.y, v.z);
    let l2 = lambda * lambda;
    let l3 = l2 * lambda;
    let poly = l3 - l2.scale(a.trace()) + lambda.scale(a.sigma()) - Octonion::real(a.det());
    let lhs = z * poly;

    let (ao, bo, co) = (a.a, a.b, a.c);
    let cbar = co.conj();
    let abar = ao.conj();
    let bbar = bo.conj();
    let lam_m = lambda - Octonion::real(a.m);
    let lam_p = lambda - Octonion::real(a.p);

    let rhs = bo * (ao * (co * z)) + cbar * (abar * (bbar * z))
        - (bo * (ao * co) + (cbar * abar) * bbar) * z
        + bo * Octonion::associator(&ao, &y, &lambda)
        + Octonion::associator(&bo, &(ao * y), &lambda)
        + Octonion::associator(&bo, &x, &lambda) * lam_m
        + cbar * Octonion::associator(&abar, &x, &lambda)
        + Octonion::associator(&cbar, &(abar * x), &lambda)
        + Octonion::associator(&cbar, &y, &lambda) * lam_p;
    (lhs, rhs)
}

/// The 8x8 real linearization of the associator-free right-hand side
/// `z -> b(a(cz)) + conj(c)(conj(a)(conj(b) z)) - (b(ac) + (conj(c) conj(a)) conj(b)) z`,
/// whose real eigenvalues select the real-eigenvalue families.
pub fn rhs_multiplier_operator(a: &JordanMatrix) -> RealMatrix {
    let (ao, bo, co) = (a.a, a.b, a.c);
    let cbar = co.conj();
    let abar = ao.conj();
    let bbar = bo.conj();
    let constant = bo * (ao * co) + (cbar * abar) * bbar;
    realops::linearize_oct_map(move |z| {
        bo * (ao * (co * z)) + cbar * (abar * (bbar * z)) - constant * z
    })
}

/// The two real-eigenvalue families of `A`.
///
/// The multipliers `r` are the deduplicated real eigenvalues of
/// [`rhs_multiplier_operator`]; each family's eigenvalues are the real
/// roots of `lambda^3 - tr(A) lambda^2 + sigma(A) lambda - (det A + r)`,
/// and each root's eigenspace dimension is measured and attached. A
/// single surviving multiplier is used for both families; more than two
/// is reported as an error rather than truncated.
pub fn real_eigen_families(a: &JordanMatrix) -> Result<[RealEigenFamily; 2], EigenError> {
    let op = rhs_multiplier_operator(a);
    let tol = DEFAULT_NULLITY_TOL * op.frob_norm().max(1.0);
    let multipliers = realops::real_eigenvalues(&op, tol)?;
    let (r0, r1) = match multipliers.len() {
        1 => (multipliers[0], multipliers[0]),
        2 => (multipliers[0], multipliers[1]),
        _ => return Err(EigenError::UnexpectedMultiplierCount(multipliers)),
    };
    let family = |r: f64| {
        let lambdas = realops::cubic_roots(-a.trace(), a.sigma(), -(a.det() + r));
        let nullities = lambdas
            .iter()
            .map(|&l| eigenspace_dim(a, Octonion::real(l)))
            .collect();
        RealEigenFamily {
            r,
            lambdas,
            nullities,
        }
    };
    Ok([family(r0), family(r1)])
}

// -- eigenspaces --------------------------------------------------------

/// The 24x24 real linearization of `v -> A v - v lambda`.
pub fn eigen_operator(a: &JordanMatrix, lambda: Octonion) -> RealMatrix {
    realops::linearize_vec_map(|v| a.matvec(v) - v.mul_right(lambda))
}

/// Real dimension of the eigenspace at `lambda` (numerical null space of
/// the linearization at the default tolerance).
pub fn eigenspace_dim(a: &JordanMatrix, lambda: Octonion) -> usize {
    realops::nullity(&eigen_operator(a, lambda), DEFAULT_NULLITY_TOL)
}

/// Orthonormal basis of the eigenspace at `lambda`, as octonion vectors.
pub fn eigenspace_basis(a: &JordanMatrix, lambda: Octonion) -> Vec<OctVec3> {
    realops::null_space(&eigen_operator(a, lambda), DEFAULT_NULLITY_TOL)
        .iter()
        .map(|flat| realops::flat_to_vec3(flat))
        .collect()
}

// -- the iterative eigen-search ----------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_iter: usize,
    pub tol: f64,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            max_iter: 200,
            tol: 1e-10,
        }
    }
}

/// Alternating search for a right eigenpair near `lambda0`.
///
/// Each iteration takes the smallest right singular vector of the 24x24
/// linearization at the current `lambda` (ties inside a singular-value
/// cluster are broken by maximal overlap with the previous iterate, which
/// keeps the iteration from wandering inside high-dimensional
/// eigenspaces), then updates `lambda = v^dag (A v)`. Convergence is not
/// guaranteed; the best pair found is returned and its `residual` field
/// is the contract.
pub fn eigen_search(a: &JordanMatrix, lambda0: Octonion, opts: SearchOptions) -> EigenPair {
    assert!(opts.max_iter >= 1);
    let mut lambda = lambda0;
    let mut prev_flat: Option<[f64; 24]> = None;
    let mut best: Option<EigenPair> = None;

    for _ in 0..opts.max_iter {
        let m = eigen_operator(a, lambda);
        let svd = realops::jacobi_svd(&m);
        let n = svd.sigmas.len();
        let smin = svd.sigmas[n - 1];
        let smax = svd.sigmas[0].max(1.0);
        let cluster: Vec<usize> = (0..n)
            .filter(|&j| svd.sigmas[j] <= smin + 1e-8 * smax)
            .collect();

        let flat = match (&prev_flat, cluster.len()) {
            (Some(prev), c) if c > 1 => {
                // project the previous iterate onto the cluster span
                let mut proj = [0.0; 24];
                for &j in &cluster {
                    let col = svd.v.column(j);
                    let w: f64 = col.iter().zip(prev.iter()).map(|(a, b)| a * b).sum();
                    for (pi, ci) in proj.iter_mut().zip(&col) {
                        *pi += w * ci;
                    }
                }
                let norm: f64 = proj.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 1e-6 {
                    for x in proj.iter_mut() {
                        *x /= norm;
                    }
                    proj
                } else {
                    let col = svd.v.column(n - 1);
                    let mut out = [0.0; 24];
                    out.copy_from_slice(&col);
                    out
                }
            }
            _ => {
                let col = svd.v.column(n - 1);
                let mut out = [0.0; 24];
                out.copy_from_slice(&col);
                out
            }
        };

        let v = realops::flat_to_vec3(&flat).normalized();
        let new_lambda = lambda_from_vector(a, &v).expect("v is normalized");
        let pair = EigenPair::new(a, v, new_lambda);
        let done = pair.residual < opts.tol;
        if best.as_ref().is_none_or(|b| pair.residual < b.residual) {
            best = Some(pair);
        }
        if done {
            break;
        }
        lambda = new_lambda;
        prev_flat = Some(flat);
    }
    best.expect("max_iter >= 1")
}

// -- the one-parameter eigenvalue band ----------------------------------

/// A point on the eigenvalue band `lambda = (p + rho) - beta kl` of the
/// first worked matrix.
#[derive(Clone, Copy, Debug)]
pub struct BandPoint {
    pub rho: f64,
    pub beta: f64,
    pub q: f64,
}

impl BandPoint {
    pub fn lambda(&self, p: f64) -> Octonion {
        Octonion::real(p + self.rho) - Octonion::KL.scale(self.beta)
    }

    /// Residual of the defining relation
    /// `32 beta^2 = (sqrt(32 rho^2 - 7 q^2) - 5q)(11q - sqrt(32 rho^2 - 7 q^2))`.
    pub fn relation_residual(&self) -> f64 {
        let root = (32.0 * self.rho * self.rho - 7.0 * self.q * self.q).sqrt();
        (32.0 * self.beta * self.beta - (root - 5.0 * self.q) * (11.0 * self.q - root)).abs()
    }
}

/// The two `beta` values (`+`, `-`) at a given `rho`; defined only for
/// `q^2 <= rho^2 <= 4 q^2`, where the right-hand side of the relation is
/// nonnegative.
pub fn band_beta(rho: f64, q: f64) -> Result<(f64, f64), EigenError> {
    let under = 32.0 * rho * rho - 7.0 * q * q;
    if under < 0.0 {
        return Err(EigenError::OutOfRange { rho, q });
    }
    let root = under.sqrt();
    let rhs = (root - 5.0 * q) * (11.0 * q - root);
    if rhs < 0.0 {
        return Err(EigenError::OutOfRange { rho, q });
    }
    let beta = (rhs / 32.0).sqrt();
    Ok((beta, -beta))
}

// -- orthogonality and decompositions ------------------------------------

/// Generalized orthogonality deviation `||(v v^dag) w|| / (|v|^2 |w|)`;
/// zero signals orthogonality.
pub fn ortho_check(v: &OctVec3, w: &OctVec3) -> f64 {
    let denom = v.norm_sq() * w.norm();
    if denom == 0.0 {
        return 0.0;
    }
    outer(v, v).matvec(w).norm() / denom
}

/// Eigenvalue-weighted orthogonality deviation
/// `||((v lambda) v^dag) w|| / (|v|^2 |lambda| |w|)`.
pub fn new_ortho_check(v: &OctVec3, lambda: Octonion, w: &OctVec3) -> f64 {
    let denom = v.norm_sq() * lambda.norm() * w.norm();
    if denom == 0.0 {
        return 0.0;
    }
    outer_scaled(v, lambda).matvec(w).norm() / denom
}

/// The scale-normalized deviations of a candidate eigenbasis: the two
/// decomposition forms, unitarity of the eigenvector matrix, the matrix
/// form of the eigen-equation, and the regrouping identity.
#[derive(Clone, Copy, Debug)]
pub struct DecompositionDeviations {
    /// `||A - sum lambda (v v^dag)||`, eigenvalue on the left.
    pub left_weighted: f64,
    /// `||A - sum (v lambda) v^dag||`, eigenvalue inside.
    pub right_weighted: f64,
    /// `||U U^dag - I||` for `U` with the eigenvectors as columns.
    pub unitarity: f64,
    /// `||A U - U D||` for `D = diag(lambda_1, lambda_2, lambda_3)`.
    pub eigen_equation: f64,
    /// `||(A U) U^dag - A (U U^dag)||`.
    pub regrouping: f64,
}

impl DecompositionDeviations {
    pub fn max(&self) -> f64 {
        self.left_weighted
            .max(self.right_weighted)
            .max(self.unitarity)
            .max(self.eigen_equation)
            .max(self.regrouping)
    }
}

/// Evaluates every deviation for three normalized eigenpairs.
pub fn decomposition_checks(a: &JordanMatrix, pairs: &[EigenPair; 3]) -> DecompositionDeviations {
    let amat = a.to_matrix();
    let scale = amat.norm().max(1.0);

    let mut left = OctMatrix3::ZERO;
    let mut right = OctMatrix3::ZERO;
    for pair in pairs {
        let vv = outer(&pair.v, &pair.v);
        left = left.add(&OctMatrix3::from_fn(|i, j| pair.lambda * vv.entries[i][j]));
        right = right.add(&outer_scaled(&pair.v, pair.lambda));
    }

    let u = OctMatrix3::from_columns(&[pairs[0].v, pairs[1].v, pairs[2].v]);
    let udag = u.dagger();
    let uu = u.matmul(&udag);
    let au = amat.matmul(&u);
    let ud = OctMatrix3::from_fn(|i, j| u.entries[i][j] * pairs[j].lambda);

    DecompositionDeviations {
        left_weighted: amat.dist(&left) / scale,
        right_weighted: amat.dist(&right) / scale,
        unitarity: uu.dist(&OctMatrix3::identity()),
        eigen_equation: au.dist(&ud) / scale,
        regrouping: au.matmul(&udag).dist(&amat.matmul(&uu)) / scale,
    }
}

/// Sum of the outer products of six vectors (callers normalize).
pub fn six_square_sum(vs: &[OctVec3; 6]) -> OctMatrix3 {
    let mut acc = OctMatrix3::ZERO;
    for v in vs {
        acc = acc.add(&outer(v, v));
    }
    acc
}

/// Deviations of the two theorem identities:
/// `((v lambda) v^dag) v = v lambda` for normalized `v` (first), and
/// `(v^dag v) lambda - v^dag (v lambda) = 0` for any `v` (second).
pub fn identity_checks(v: &OctVec3, lambda: Octonion) -> (f64, f64) {
    let first = (outer_scaled(v, lambda).matvec(v) - v.mul_right(lambda)).norm();
    let second = (v.dagger_dot(v) * lambda - v.dagger_dot(&v.mul_right(lambda))).norm();
    (first, second)
}

// -- randomized search for orthogonal triples ----------------------------

/// Multi-restart local minimization of the worst pairwise generalized
/// orthogonality deviation over triples `{fixed, u, w}`, with `u` and `w`
/// drawn from the given eigenspace bases (the same space may supply
/// both). Returns the best value found: near zero it is a witness that an
/// orthogonal triple exists; bounded away from zero over many restarts it
/// is evidence (not proof) that none does.
///
/// Restart `k` draws its randomness from `(seed, k)` only, so results are
/// reproducible regardless of scheduling.
pub fn orthogonal_triple_search(
    a: &JordanMatrix,
    fixed: &EigenPair,
    others: &[(Octonion, Vec<OctVec3>)],
    restarts: usize,
    seed: u64,
) -> f64 {
    debug_assert!(
        residual_norm(a, &fixed.v, fixed.lambda) <= 1e-6 * a.norm().max(1.0),
        "fixed pair should be an eigenpair of a"
    );
    // unordered space pairs, same-space pairs included
    let mut space_pairs = Vec::new();
    for i in 0..others.len() {
        for j in i..others.len() {
            if !others[i].1.is_empty() && !others[j].1.is_empty() {
                space_pairs.push((i, j));
            }
        }
    }
    if space_pairs.is_empty() {
        return f64::INFINITY;
    }

    let mut best = f64::INFINITY;
    for restart in 0..restarts {
        let (si, sj) = space_pairs[restart % space_pairs.len()];
        let basis_u = &others[si].1;
        let basis_w = &others[sj].1;
        let dim = basis_u.len() + basis_w.len();

        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (restart as u64).wrapping_mul(0x9E3779B97F4A7C15));
        let mut coeffs: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        levenberg_marquardt(&mut coeffs, 60, |c| {
            triple_residuals(&fixed.v, basis_u, basis_w, c)
        });

        let (u, w) = assemble_pair(basis_u, basis_w, &coeffs);
        if u.norm() < 1e-9 || w.norm() < 1e-9 {
            continue;
        }
        let worst = pairwise_checks(&fixed.v, &u, &w)
            .into_iter()
            .fold(0.0f64, f64::max);
        best = best.min(worst);
    }
    best
}

fn assemble_pair(basis_u: &[OctVec3], basis_w: &[OctVec3], coeffs: &[f64]) -> (OctVec3, OctVec3) {
    let combine = |basis: &[OctVec3], cs: &[f64]| {
        let mut acc = OctVec3::ZERO;
        for (b, &c) in basis.iter().zip(cs) {
            acc = acc + b.scale(c);
        }
        acc
    };
    (
        combine(basis_u, &coeffs[..basis_u.len()]),
        combine(basis_w, &coeffs[basis_u.len()..]),
    )
}

/// All six directed orthogonality deviations of a triple.
fn pairwise_checks(f: &OctVec3, u: &OctVec3, w: &OctVec3) -> [f64; 6] {
    [
        ortho_check(f, u),
        ortho_check(u, f),
        ortho_check(f, w),
        ortho_check(w, f),
        ortho_check(u, w),
        ortho_check(w, u),
    ]
}

/// Stacked residual vector (six scale-normalized matvec outputs, 144
/// reals) used as the least-squares objective of the triple search.
fn triple_residuals(
    f: &OctVec3,
    basis_u: &[OctVec3],
    basis_w: &[OctVec3],
    coeffs: &[f64],
) -> Vec<f64> {
    let (u, w) = assemble_pair(basis_u, basis_w, coeffs);
    let mut out = Vec::with_capacity(144);
    let push = |v: &OctVec3, t: &OctVec3, out: &mut Vec<f64>| {
        let denom = (v.norm_sq() * t.norm()).max(1e-12);
        let r = outer(v, v).matvec(t).scale(1.0 / denom);
        out.extend_from_slice(&realops::vec3_to_flat(&r));
    };
    push(f, &u, &mut out);
    push(&u, f, &mut out);
    push(f, &w, &mut out);
    push(&w, f, &mut out);
    push(&u, &w, &mut out);
    push(&w, &u, &mut out);
    out
}

/// Plain Levenberg-Marquardt with forward-difference Jacobians on a
/// small parameter vector.
fn levenberg_marquardt(coeffs: &mut [f64], max_iter: usize, resid: impl Fn(&[f64]) -> Vec<f64>) {
    let dim = coeffs.len();
    let mut mu = 1e-3;
    let mut r = resid(coeffs);
    let mut f: f64 = r.iter().map(|x| x * x).sum();

    for _ in 0..max_iter {
        if f < 1e-28 {
            break;
        }
        let h = 1e-7;
        let m = r.len();
        let mut jac = RealMatrix::zeros(m, dim);
        for j in 0..dim {
            let saved = coeffs[j];
            coeffs[j] = saved + h;
            let rp = resid(coeffs);
            coeffs[j] = saved;
            for i in 0..m {
                jac[(i, j)] = (rp[i] - r[i]) / h;
            }
        }
        let mut grad = vec![0.0; dim];
        let mut hess = RealMatrix::zeros(dim, dim);
        for i in 0..m {
            for j in 0..dim {
                grad[j] += jac[(i, j)] * r[i];
                for k in j..dim {
                    hess[(j, k)] += jac[(i, j)] * jac[(i, k)];
                }
            }
        }
        for j in 0..dim {
            for k in 0..j {
                hess[(j, k)] = hess[(k, j)];
            }
        }

        let mut accepted = false;
        for _ in 0..6 {
            let mut damped = hess.clone();
            for j in 0..dim {
                damped[(j, j)] += mu;
            }
            let Some(delta) = realops::solve(&damped, &grad) else {
                mu *= 10.0;
                continue;
            };
            let trial: Vec<f64> = coeffs.iter().zip(&delta).map(|(c, d)| c - d).collect();
            let rt = resid(&trial);
            let ft: f64 = rt.iter().map(|x| x * x).sum();
            if ft < f {
                coeffs.copy_from_slice(&trial);
                r = rt;
                f = ft;
                mu = (mu * 0.3).max(1e-12);
                accepted = true;
                break;
            }
            mu *= 5.0;
        }
        if !accepted {
            break;
        }
    }
}
