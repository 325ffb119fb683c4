//! 3x3 octonionic Hermitian matrices (the exceptional Jordan algebra),
//! together with general octonionic 3x3 matrices and 3-vectors.
//!
//! A Hermitian matrix is stored as its independent data `(p, m, n, a, b, c)`
//! and materialized on demand as
//!
//! ```text
//!     | p       a       conj(b) |
//!     | conj(a) m       c       |
//!     | b       conj(c) n       |
//! ```
//!
//! so Hermiticity holds by construction. Octonion products inside matrix
//! operations always multiply the left matrix entry on the left; since the
//! octonions are nonassociative this order is part of the contract.

use serde::{Deserialize, Serialize};

use crate::octonion::Octonion;
use crate::table::MultiplicationTable;

/// Column vector of three octonions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctVec3 {
    pub x: Octonion,
    pub y: Octonion,
    pub z: Octonion,
}

impl OctVec3 {
    pub const ZERO: OctVec3 = OctVec3 {
        x: Octonion::ZERO,
        y: Octonion::ZERO,
        z: Octonion::ZERO,
    };

    pub fn new(x: Octonion, y: Octonion, z: Octonion) -> OctVec3 {
        OctVec3 { x, y, z }
    }

    pub fn component(&self, i: usize) -> Octonion {
        match i {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("component index out of range"),
        }
    }

    pub fn component_mut(&mut self, i: usize) -> &mut Octonion {
        match i {
            0 => &mut self.x,
            1 => &mut self.y,
            2 => &mut self.z,
            _ => panic!("component index out of range"),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.x.norm_sq() + self.y.norm_sq() + self.z.norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, s: f64) -> OctVec3 {
        OctVec3::new(self.x.scale(s), self.y.scale(s), self.z.scale(s))
    }

    /// Unit-norm copy; panics on the zero vector.
    pub fn normalized(&self) -> OctVec3 {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scale(1.0 / n)
    }

    /// Componentwise right multiplication `v * s`.
    pub fn mul_right(&self, s: Octonion) -> OctVec3 {
        OctVec3::new(self.x * s, self.y * s, self.z * s)
    }

    /// `v^dag w = sum_i conj(v_i) w_i`, an octonion.
    pub fn dagger_dot(&self, w: &OctVec3) -> Octonion {
        self.x.conj() * w.x + self.y.conj() * w.y + self.z.conj() * w.z
    }

    /// Real Euclidean inner product of the underlying R^24 vectors.
    pub fn real_dot(&self, w: &OctVec3) -> f64 {
        self.x.dot(&w.x) + self.y.dot(&w.y) + self.z.dot(&w.z)
    }

    pub fn dist(&self, w: &OctVec3) -> f64 {
        (*self - *w).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl std::ops::Add for OctVec3 {
    type Output = OctVec3;
    fn add(self, rhs: OctVec3) -> OctVec3 {
        OctVec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for OctVec3 {
    type Output = OctVec3;
    fn sub(self, rhs: OctVec3) -> OctVec3 {
        OctVec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for OctVec3 {
    type Output = OctVec3;
    fn neg(self) -> OctVec3 {
        self.scale(-1.0)
    }
}

/// General (not necessarily Hermitian) 3x3 octonionic matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctMatrix3 {
    pub entries: [[Octonion; 3]; 3],
}

impl OctMatrix3 {
    pub const ZERO: OctMatrix3 = OctMatrix3 {
        entries: [[Octonion::ZERO; 3]; 3],
    };

    pub fn identity() -> OctMatrix3 {
        let mut m = OctMatrix3::ZERO;
        for i in 0..3 {
            m.entries[i][i] = Octonion::ONE;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Octonion) -> OctMatrix3 {
        let mut m = OctMatrix3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.entries[i][j] = f(i, j);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[OctVec3; 3]) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| cols[j].component(i))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| self.entries[j][i].conj())
    }

    /// Row-by-column product; the left entry multiplies on the left.
    pub fn matmul(&self, rhs: &OctMatrix3) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| {
            let mut acc = Octonion::ZERO;
            for t in 0..3 {
                acc += self.entries[i][t] * rhs.entries[t][j];
            }
            acc
        })
    }

    pub fn matvec(&self, v: &OctVec3) -> OctVec3 {
        let comp = |i: usize| {
            self.entries[i][0] * v.x + self.entries[i][1] * v.y + self.entries[i][2] * v.z
        };
        OctVec3::new(comp(0), comp(1), comp(2))
    }

    pub fn add(&self, rhs: &OctMatrix3) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| self.entries[i][j] + rhs.entries[i][j])
    }

    pub fn sub(&self, rhs: &OctMatrix3) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| self.entries[i][j] - rhs.entries[i][j])
    }

    pub fn scale(&self, s: f64) -> OctMatrix3 {
        OctMatrix3::from_fn(|i, j| self.entries[i][j].scale(s))
    }

    /// Frobenius norm over all 72 real coefficients.
    pub fn norm(&self) -> f64 {
        let mut acc = 0.0;
        for row in &self.entries {
            for e in row {
                acc += e.norm_sq();
            }
        }
        acc.sqrt()
    }

    pub fn max_entry_norm(&self) -> f64 {
        let mut acc: f64 = 0.0;
        for row in &self.entries {
            for e in row {
                acc = acc.max(e.norm());
            }
        }
        acc
    }

    pub fn dist(&self, rhs: &OctMatrix3) -> f64 {
        self.sub(rhs).norm()
    }
}

/// Outer product `v w^dag`: entry `(i, j)` is `v_i * conj(w_j)`.
pub fn outer(v: &OctVec3, w: &OctVec3) -> OctMatrix3 {
    OctMatrix3::from_fn(|i, j| v.component(i) * w.component(j).conj())
}

/// Right-weighted outer product `(v lambda) v^dag`:
/// entry `(i, j)` is `(v_i * lambda) * conj(v_j)`.
pub fn outer_scaled(v: &OctVec3, lambda: Octonion) -> OctMatrix3 {
    OctMatrix3::from_fn(|i, j| (v.component(i) * lambda) * v.component(j).conj())
}

/// 3x3 octonionic Hermitian matrix, stored as its independent data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JordanMatrix {
    pub p: f64,
    pub m: f64,
    pub n: f64,
    pub a: Octonion,
    pub b: Octonion,
    pub c: Octonion,
}

impl JordanMatrix {
    pub fn new(p: f64, m: f64, n: f64, a: Octonion, b: Octonion, c: Octonion) -> JordanMatrix {
        JordanMatrix { p, m, n, a, b, c }
    }

    pub fn diag(p: f64, m: f64, n: f64) -> JordanMatrix {
        JordanMatrix::new(p, m, n, Octonion::ZERO, Octonion::ZERO, Octonion::ZERO)
    }

    pub fn identity() -> JordanMatrix {
        JordanMatrix::diag(1.0, 1.0, 1.0)
    }

    /// Materialize the full Hermitian matrix.
    pub fn to_matrix(&self) -> OctMatrix3 {
        OctMatrix3 {
            entries: [
                [Octonion::real(self.p), self.a, self.b.conj()],
                [self.a.conj(), Octonion::real(self.m), self.c],
                [self.b, self.c.conj(), Octonion::real(self.n)],
            ],
        }
    }

    /// Reads the Hermitian data back off a full matrix. The caller is
    /// responsible for the matrix actually being Hermitian (as the
    /// symmetrized products below are); the off-diagonal entries are taken
    /// from the `a`, `b`, `c` slots and the diagonal real parts are kept.
    pub fn from_hermitian(mat: &OctMatrix3) -> JordanMatrix {
        JordanMatrix {
            p: mat.entries[0][0].re(),
            m: mat.entries[1][1].re(),
            n: mat.entries[2][2].re(),
            a: mat.entries[0][1],
            b: mat.entries[2][0],
            c: mat.entries[1][2],
        }
    }

    pub fn scale(&self, s: f64) -> JordanMatrix {
        JordanMatrix {
            p: s * self.p,
            m: s * self.m,
            n: s * self.n,
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
        }
    }

    pub fn add(&self, rhs: &JordanMatrix) -> JordanMatrix {
        JordanMatrix {
            p: self.p + rhs.p,
            m: self.m + rhs.m,
            n: self.n + rhs.n,
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
        }
    }

    pub fn sub(&self, rhs: &JordanMatrix) -> JordanMatrix {
        self.add(&rhs.scale(-1.0))
    }

    pub fn norm(&self) -> f64 {
        self.to_matrix().norm()
    }

    /// `max(1, largest entry norm)`: the scale residual tolerances of the
    /// cubic identities are quoted against.
    pub fn entry_scale(&self) -> f64 {
        self.to_matrix().max_entry_norm().max(1.0)
    }

    /// Jordan product `(AB + BA) / 2`; Hermitian for Hermitian inputs.
    pub fn jordan_product(&self, rhs: &JordanMatrix) -> JordanMatrix {
        let ma = self.to_matrix();
        let mb = rhs.to_matrix();
        let sym = ma.matmul(&mb).add(&mb.matmul(&ma)).scale(0.5);
        JordanMatrix::from_hermitian(&sym)
    }

    pub fn power2(&self) -> JordanMatrix {
        self.jordan_product(self)
    }

    /// Cube under the Jordan product. Both groupings `(A^2) o A` and
    /// `A o (A^2)` are equal; the first is returned.
    pub fn power3(&self) -> JordanMatrix {
        self.power3_both().0
    }

    /// The two groupings of the cube, for the power-associativity check.
    pub fn power3_both(&self) -> (JordanMatrix, JordanMatrix) {
        let sq = self.power2();
        (sq.jordan_product(self), self.jordan_product(&sq))
    }

    pub fn trace(&self) -> f64 {
        self.p + self.m + self.n
    }

    /// Second characteristic coefficient, closed form:
    /// `pm + pn + mn - |a|^2 - |b|^2 - |c|^2`.
    pub fn sigma(&self) -> f64 {
        self.p * self.m + self.p * self.n + self.m * self.n
            - self.a.norm_sq()
            - self.b.norm_sq()
            - self.c.norm_sq()
    }

    /// Second characteristic coefficient via traces:
    /// `((tr A)^2 - tr(A^2)) / 2`. Agrees with [`sigma`](Self::sigma).
    pub fn sigma_via_trace(&self) -> f64 {
        let t = self.trace();
        0.5 * (t * t - self.power2().trace())
    }

    /// Determinant, closed form:
    /// `pmn + b(ac) + conj(b(ac)) - n|a|^2 - m|b|^2 - p|c|^2`.
    pub fn det(&self) -> f64 {
        let bac = self.b * (self.a * self.c);
        self.p * self.m * self.n + 2.0 * bac.re()
            - self.n * self.a.norm_sq()
            - self.m * self.b.norm_sq()
            - self.p * self.c.norm_sq()
    }

    /// Determinant via the Freudenthal product, `tr((A*A) o A) / 3`.
    /// Agrees with [`det`](Self::det).
    pub fn det_via_freudenthal(&self) -> f64 {
        self.freudenthal(self).jordan_product(self).trace() / 3.0
    }

    /// Freudenthal product
    /// `A*B = A o B - (A tr B + B tr A)/2 + (tr A tr B - tr(A o B))/2 I`.
    pub fn freudenthal(&self, rhs: &JordanMatrix) -> JordanMatrix {
        let ab = self.jordan_product(rhs);
        let ta = self.trace();
        let tb = rhs.trace();
        let scalar = 0.5 * (ta * tb - ab.trace());
        ab.sub(&self.scale(tb).add(&rhs.scale(ta)).scale(0.5))
            .add(&JordanMatrix::identity().scale(scalar))
    }

    /// `A^3 - (tr A) A^2 + sigma(A) A - (det A) I`; vanishes for every
    /// Hermitian matrix (Cayley-Hamilton analogue).
    pub fn char_residual(&self) -> JordanMatrix {
        self.power3()
            .sub(&self.power2().scale(self.trace()))
            .add(&self.scale(self.sigma()))
            .sub(&JordanMatrix::identity().scale(self.det()))
    }

    /// `A v` with the matrix entry multiplying on the left, under the
    /// default table.
    pub fn matvec(&self, v: &OctVec3) -> OctVec3 {
        self.to_matrix().matvec(v)
    }

    /// `A v` under an explicit table (used by table calibration).
    pub fn matvec_with(&self, t: &MultiplicationTable, v: &OctVec3) -> OctVec3 {
        let mat = self.to_matrix();
        let comp = |i: usize| {
            mat.entries[i][0].mul_with(&v.x, t)
                + mat.entries[i][1].mul_with(&v.y, t)
                + mat.entries[i][2].mul_with(&v.z, t)
        };
        OctVec3::new(comp(0), comp(1), comp(2))
    }

    /// `||A v - v lambda||` under an explicit table.
    pub fn residual_norm_with(
        &self,
        t: &MultiplicationTable,
        v: &OctVec3,
        lambda: Octonion,
    ) -> f64 {
        let av = self.matvec_with(t, v);
        let vl = OctVec3::new(
            v.x.mul_with(&lambda, t),
            v.y.mul_with(&lambda, t),
            v.z.mul_with(&lambda, t),
        );
        (av - vl).norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_jordan(rng: &mut impl Rng) -> JordanMatrix {
        let mut oct = || {
            let mut c = [0.0; 8];
            for v in c.iter_mut() {
                *v = rng.gen_range(-1.0..1.0);
            }
            Octonion(c)
        };
        let (a, b, c) = (oct(), oct(), oct());
        let mut real = || -> f64 { rng.gen_range(-1.0..1.0) };
        JordanMatrix::new(real(), real(), real(), a, b, c)
    }

    fn assert_near(a: f64, b: f64, tol: f64, msg: &str) {
        assert!((a - b).abs() <= tol, "{msg}: {a} vs {b}");
    }

    #[test]
    fn jordan_product_identity_and_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_jordan(&mut rng);
        let id = JordanMatrix::identity();
        assert!(a.jordan_product(&id).sub(&a).norm() <= 1e-14);
        let d1 = JordanMatrix::diag(1.0, 2.0, 3.0);
        let d2 = JordanMatrix::diag(4.0, 5.0, 6.0);
        let prod = d1.jordan_product(&d2);
        assert!(prod.sub(&JordanMatrix::diag(4.0, 10.0, 18.0)).norm() == 0.0);
    }

    #[test]
    fn jordan_product_commutes() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let a = random_jordan(&mut rng);
            let b = random_jordan(&mut rng);
            let ab = a.jordan_product(&b);
            let ba = b.jordan_product(&a);
            assert!(ab.sub(&ba).norm() <= 1e-13);
        }
    }

    #[test]
    fn square_trace_for_worked_matrix() {
        // tr(A^2) = p^2 + m^2 + n^2 + 2(|a|^2 + |b|^2 + |c|^2) = 6 for the
        // first worked matrix at p = 0, q = 1, theta = 0.
        let a = catalog::example1(0.0, 1.0, 0.0);
        assert_near(a.power2().trace(), 6.0, 1e-13, "tr(A^2)");
    }

    #[test]
    fn diagonal_powers() {
        let d = JordanMatrix::diag(1.0, 2.0, 3.0);
        assert!(d.power2().sub(&JordanMatrix::diag(1.0, 4.0, 9.0)).norm() == 0.0);
        assert!(d.power3().sub(&JordanMatrix::diag(1.0, 8.0, 27.0)).norm() == 0.0);
    }

    #[test]
    fn power_associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = random_jordan(&mut rng);
            let (lhs, rhs) = a.power3_both();
            let scale = a.norm().powi(3).max(1.0);
            assert!(lhs.sub(&rhs).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn trace_sigma_det_diagonal() {
        let d = JordanMatrix::diag(1.0, 2.0, 3.0);
        assert_near(d.trace(), 6.0, 0.0, "tr");
        assert_near(d.sigma(), 11.0, 0.0, "sigma");
        assert_near(d.det(), 6.0, 0.0, "det");
    }

    #[test]
    fn det_for_worked_matrix() {
        // det = pmn + 2 Re(b(ac)) - n|a|^2 - m|b|^2 - p|c|^2 = 2 at
        // p = 0, q = 1, theta = 0; the Freudenthal route agrees.
        let a = catalog::example1(0.0, 1.0, 0.0);
        assert_near(a.det(), 2.0, 1e-13, "det closed form");
        assert_near(a.det_via_freudenthal(), 2.0, 1e-12, "det via freudenthal");
    }

    #[test]
    fn sigma_for_worked_matrix_any_theta() {
        for theta in [0.0, 0.7, 2.1] {
            let a = catalog::example1(1.5, 2.0, theta);
            // |a| = |b| = |c| = q since |s| = 1
            assert_near(a.sigma(), 3.0 * 1.5 * 1.5 - 3.0 * 4.0, 1e-12, "sigma");
        }
    }

    #[test]
    fn dual_route_sigma_and_det_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..200 {
            let a = random_jordan(&mut rng);
            let scale = a.norm().max(1.0);
            assert!((a.sigma() - a.sigma_via_trace()).abs() <= 1e-12 * scale * scale);
            assert!((a.det() - a.det_via_freudenthal()).abs() <= 1e-12 * scale.powi(3));
        }
    }

    #[test]
    fn freudenthal_adjugate_of_diagonal() {
        let d = JordanMatrix::diag(1.0, 2.0, 3.0);
        let adj = d.freudenthal(&d);
        assert!(adj.sub(&JordanMatrix::diag(6.0, 3.0, 2.0)).norm() <= 1e-14);
        let id = JordanMatrix::identity();
        assert!(id.freudenthal(&id).sub(&id).norm() <= 1e-14);
    }

    #[test]
    fn freudenthal_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_jordan(&mut rng);
        let b = random_jordan(&mut rng);
        assert!(a.freudenthal(&b).sub(&b.freudenthal(&a)).norm() <= 1e-13);
    }

    #[test]
    fn characteristic_identity() {
        assert!(JordanMatrix::diag(1.0, 2.0, 3.0).char_residual().norm() <= 1e-13);
        let b = catalog::example1(1.0, 1.0, std::f64::consts::PI / 3.0);
        assert!(b.char_residual().norm() <= 1e-10);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let a = random_jordan(&mut rng);
            let scale = a.entry_scale().powi(3);
            assert!(a.char_residual().to_matrix().max_entry_norm() <= 1e-10 * scale);
        }
    }

    #[test]
    fn trace_linear_det_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_jordan(&mut rng);
        let b = random_jordan(&mut rng);
        assert_near(a.add(&b).trace(), a.trace() + b.trace(), 1e-13, "tr linear");
        for alpha in [-2.0, 0.5, 3.0] {
            assert_near(
                a.scale(alpha).det(),
                alpha.powi(3) * a.det(),
                1e-12 * a.norm().powi(3).max(1.0),
                "det scaling",
            );
        }
    }

    #[test]
    fn matvec_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let j = random_jordan(&mut rng);
        let v = OctVec3::new(j.a, j.b, j.c);
        let id = JordanMatrix::identity();
        assert!(id.matvec(&v).dist(&v) == 0.0);
        let d = JordanMatrix::diag(2.0, 3.0, 4.0);
        let got = d.matvec(&v);
        assert!(got.x.dist(&v.x.scale(2.0)) == 0.0);
        assert!(got.y.dist(&v.y.scale(3.0)) == 0.0);
        assert!(got.z.dist(&v.z.scale(4.0)) == 0.0);
    }

    #[test]
    fn matvec_on_worked_eigenvector() {
        // A u = u (p + q conj(s)) for the "+" eigenvector of the first
        // worked matrix.
        let (p, q, theta) = (2.0, 3.0, std::f64::consts::PI / 5.0);
        let a = catalog::example1(p, q, theta);
        let pairs = catalog::example1_pairs(p, q, theta);
        let u_plus = pairs.iter().find(|pr| pr.name == "u+").unwrap();
        let got = a.matvec(&u_plus.v);
        let want = u_plus.v.mul_right(u_plus.lambda);
        assert!(got.dist(&want) <= 1e-12);
    }

    #[test]
    fn outer_products() {
        let e1 = OctVec3::new(Octonion::ONE, Octonion::ZERO, Octonion::ZERO);
        let m = outer(&e1, &e1);
        assert!(m.entries[0][0].dist(&Octonion::ONE) == 0.0);
        assert!(
            m.sub(&OctMatrix3::from_fn(|i, j| {
                if i == 0 && j == 0 {
                    Octonion::ONE
                } else {
                    Octonion::ZERO
                }
            }))
            .norm()
                == 0.0
        );

        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let j = random_jordan(&mut rng);
        let v = OctVec3::new(j.a, j.b, j.c);
        let vv = outer(&v, &v);
        // Hermitian: entry (i,j) is the conjugate of entry (j,i)
        assert!(vv.sub(&vv.dagger()).norm() <= 1e-14);
        // scaling by lambda = 1 reduces to the plain outer product
        assert!(outer_scaled(&v, Octonion::ONE).sub(&vv).norm() <= 1e-14);
    }

    #[test]
    fn matmul_identity_and_nonassociativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let rand_mat = |rng: &mut ChaCha8Rng| {
            OctMatrix3::from_fn(|_, _| {
                let mut c = [0.0; 8];
                for v in c.iter_mut() {
                    *v = rng.gen_range(-1.0..1.0);
                }
                let o = Octonion(c);
                o.scale(1.0 / o.norm())
            })
        };
        let b = rand_mat(&mut rng);
        assert!(OctMatrix3::identity().matmul(&b).sub(&b).norm() <= 1e-15);

        // Octonionic matrix multiplication is not associative: find unit
        // entry matrices with a visible regrouping gap.
        let mut best: f64 = 0.0;
        for _ in 0..20 {
            let a = rand_mat(&mut rng);
            let b = rand_mat(&mut rng);
            let c = rand_mat(&mut rng);
            let lhs = a.matmul(&b).matmul(&c);
            let rhs = a.matmul(&b.matmul(&c));
            best = best.max(lhs.dist(&rhs));
        }
        assert!(best > 0.1, "regrouping gap {best}");
    }

    #[test]
    fn unitary_columns_of_worked_eigenvectors() {
        // U with columns u+/sqrt(2), v+/sqrt(6), w+/sqrt(3) satisfies
        // U U^dag = I.
        let pairs = catalog::example1_pairs(1.0, 2.0, 0.9);
        let get = |name: &str| {
            pairs
                .iter()
                .find(|pr| pr.name == name)
                .unwrap()
                .v
                .normalized()
        };
        let u = OctMatrix3::from_columns(&[get("u+"), get("v+"), get("w+")]);
        let gram = u.matmul(&u.dagger());
        assert!(gram.sub(&OctMatrix3::identity()).norm() <= 1e-12);
    }

    #[test]
    fn json_shapes() {
        let a = JordanMatrix::diag(1.0, 2.0, 3.0);
        let text = serde_json::to_string(&a).unwrap();
        assert!(text.contains("\"p\":1.0"));
        assert!(text.contains("\"a\":[0.0,"));
        let back: JordanMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);

        let v = OctVec3::new(Octonion::I, Octonion::ZERO, Octonion::J);
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with("{\"x\":["));
        let back: OctVec3 = serde_json::from_str(&text).unwrap();
        assert_eq!(v, back);
    }
}
