//! Octonion arithmetic over a data-driven multiplication table.
//!
//! An octonion is stored as 8 real coefficients over the basis
//! `{1, i, j, k, kl, jl, il, l}` (in that order). Products route through
//! the active [`MultiplicationTable`](crate::table::MultiplicationTable);
//! everything else (conjugation, inner product, norm, associator) is
//! defined on top of the product.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::table::{self, MultiplicationTable};

/// Conventional names of the 8 basis units, in coefficient order.
pub const BASIS_NAMES: [&str; 8] = ["1", "i", "j", "k", "kl", "jl", "il", "l"];

/// An octonion: 8 real coefficients over `{1, i, j, k, kl, jl, il, l}`.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion::unit(0);
    pub const I: Octonion = Octonion::unit(1);
    pub const J: Octonion = Octonion::unit(2);
    pub const K: Octonion = Octonion::unit(3);
    pub const KL: Octonion = Octonion::unit(4);
    pub const JL: Octonion = Octonion::unit(5);
    pub const IL: Octonion = Octonion::unit(6);
    pub const L: Octonion = Octonion::unit(7);

    /// The basis unit with index `q` in `0..8` (0 is the real unit).
    pub const fn unit(q: usize) -> Octonion {
        let mut c = [0.0; 8];
        c[q] = 1.0;
        Octonion(c)
    }

    pub const fn real(x: f64) -> Octonion {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    pub fn coeff(&self, q: usize) -> f64 {
        self.0[q]
    }

    /// Conjugate: real part fixed, all imaginary coefficients negated.
    pub fn conj(&self) -> Octonion {
        let mut c = self.0;
        for v in c.iter_mut().skip(1) {
            *v = -*v;
        }
        Octonion(c)
    }

    /// Real part as a scalar.
    pub fn re(&self) -> f64 {
        self.0[0]
    }

    /// Imaginary part as an octonion (real coefficient zeroed).
    pub fn im(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    /// Euclidean inner product inherited from R^8.
    pub fn dot(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Product under an explicit multiplication table.
    pub fn mul_with(&self, rhs: &Octonion, table: &MultiplicationTable) -> Octonion {
        let mut out = [0.0; 8];
        for q in 0..8 {
            let aq = self.0[q];
            if aq == 0.0 {
                continue;
            }
            for r in 0..8 {
                let br = rhs.0[r];
                if br == 0.0 {
                    continue;
                }
                let (sign, s) = table.basis_product(q, r);
                out[s] += sign * aq * br;
            }
        }
        Octonion(out)
    }

    /// Associator `(ab)c - a(bc)`.
    pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
        (*a * *b) * *c - *a * (*b * *c)
    }

    pub fn scale(&self, s: f64) -> Octonion {
        let mut c = self.0;
        for v in c.iter_mut() {
            *v *= s;
        }
        Octonion(c)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Max-abs coefficient distance to another octonion.
    pub fn dist(&self, other: &Octonion) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Octonion, abs_tol: f64, rel_tol: f64) -> bool {
        let scale = self.norm().max(other.norm());
        self.dist(other) <= abs_tol + rel_tol * scale
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (v, w) in c.iter_mut().zip(rhs.0.iter()) {
            *v += w;
        }
        Octonion(c)
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (v, w) in c.iter_mut().zip(rhs.0.iter()) {
            *v -= w;
        }
        Octonion(c)
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

/// Octonion product under the default (startup-fixed) table.
impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        self.mul_with(&rhs, table::default_table())
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;
    fn div(self, rhs: f64) -> Octonion {
        self.scale(1.0 / rhs)
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, &v) in self.0.iter().enumerate() {
            if v == 0.0 {
                continue;
            }
            if first {
                write!(f, "{}", v)?;
            } else if v < 0.0 {
                write!(f, " - {}", -v)?;
            } else {
                write!(f, " + {}", v)?;
            }
            if q > 0 {
                write!(f, "*{}", BASIS_NAMES[q])?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_near(a: f64, b: f64, tol: f64, msg: &str) {
        assert!((a - b).abs() <= tol, "{msg}: {a} vs {b}");
    }

    fn assert_oct_near(a: &Octonion, b: &Octonion, tol: f64, msg: &str) {
        assert!(a.dist(b) <= tol, "{msg}: {a:?} vs {b:?}");
    }

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
            let n = o.norm();
            if n > 1e-3 {
                return o.scale(1.0 / n);
            }
        }
    }

    #[test]
    fn one_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..32 {
            let x = random_oct(&mut rng);
            assert_oct_near(&(Octonion::ONE * x), &x, 0.0, "1*x");
            assert_oct_near(&(x * Octonion::ONE), &x, 0.0, "x*1");
        }
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for q in 1..8 {
            let e = Octonion::unit(q);
            assert_oct_near(&(e * e), &(-Octonion::ONE), 0.0, BASIS_NAMES[q]);
        }
    }

    #[test]
    fn quaternionic_subalgebra() {
        assert_oct_near(&(Octonion::I * Octonion::J), &Octonion::K, 0.0, "ij=k");
        assert_oct_near(&(Octonion::J * Octonion::K), &Octonion::I, 0.0, "jk=i");
        assert_oct_near(&(Octonion::K * Octonion::I), &Octonion::J, 0.0, "ki=j");
        assert_oct_near(&(Octonion::J * Octonion::I), &(-Octonion::K), 0.0, "ji=-k");
    }

    #[test]
    fn doubling_unit_products_match_basis_names() {
        // i*l = il, j*l = jl, k*l = kl under the default convention.
        assert_oct_near(&(Octonion::I * Octonion::L), &Octonion::IL, 0.0, "il");
        assert_oct_near(&(Octonion::J * Octonion::L), &Octonion::JL, 0.0, "jl");
        assert_oct_near(&(Octonion::K * Octonion::L), &Octonion::KL, 0.0, "kl");
    }

    #[test]
    fn conjugation_fixed_points_and_involution() {
        assert_oct_near(&Octonion::ONE.conj(), &Octonion::ONE, 0.0, "conj(1)");
        assert_oct_near(&Octonion::I.conj(), &(-Octonion::I), 0.0, "conj(i)");
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_oct(&mut rng);
        assert_oct_near(&a.conj().conj(), &a, 0.0, "conj twice");
    }

    #[test]
    fn conjugation_is_antiautomorphism() {
        // Spot value: conj(i*j) = conj(j)*conj(i), i.e. -k = (-j)(-i).
        let lhs = (Octonion::I * Octonion::J).conj();
        let rhs = Octonion::J.conj() * Octonion::I.conj();
        assert_oct_near(&lhs, &(-Octonion::K), 0.0, "conj(ij)");
        assert_oct_near(&lhs, &rhs, 0.0, "antiautomorphism");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = random_oct(&mut rng);
            let b = random_oct(&mut rng);
            assert_oct_near(&(a * b).conj(), &(b.conj() * a.conj()), 1e-14, "conj(ab)");
        }
    }

    #[test]
    fn re_im_split() {
        let a = Octonion::real(3.0) + Octonion::I.scale(2.0);
        assert_near(a.re(), 3.0, 0.0, "re(3+2i)");
        assert_oct_near(&a.im(), &Octonion::I.scale(2.0), 0.0, "im(3+2i)");
        let b = Octonion::I + Octonion::L;
        assert_oct_near(&b.conj().im(), &(-b.im()), 0.0, "im(conj)");
        // re/im reassemble the value and agree with the conjugation forms.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = random_oct(&mut rng);
        assert_oct_near(&(Octonion::real(x.re()) + x.im()), &x, 0.0, "re+im");
        assert_oct_near(
            &(x + x.conj()).scale(0.5),
            &Octonion::real(x.re()),
            0.0,
            "re via conj",
        );
        assert_oct_near(&(x - x.conj()).scale(0.5), &x.im(), 0.0, "im via conj");
    }

    #[test]
    fn dot_basics() {
        assert_near(Octonion::I.dot(&Octonion::I), 1.0, 0.0, "i.i");
        assert_near(Octonion::I.dot(&Octonion::J), 0.0, 0.0, "i.j");
        // Product form of the inner product.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = random_oct(&mut rng);
            let b = random_oct(&mut rng);
            let via_mul = ((a * b.conj()) + (b * a.conj())).scale(0.5);
            assert_oct_near(&via_mul, &Octonion::real(a.dot(&b)), 1e-13, "dot via mul");
        }
    }

    #[test]
    fn dot_exchange_value() {
        // dot(i, k*j) = dot(j, conj(k)*i) = -1, an instance of the exchange rule.
        let lhs = Octonion::I.dot(&(Octonion::K * Octonion::J));
        let rhs = Octonion::J.dot(&(Octonion::K.conj() * Octonion::I));
        assert_near(lhs, -1.0, 0.0, "dot(i, kj)");
        assert_near(rhs, -1.0, 0.0, "dot(j, conj(k) i)");
    }

    #[test]
    fn norm_values() {
        assert_near(Octonion::ZERO.norm(), 0.0, 0.0, "norm 0");
        let a = Octonion::real(3.0) + Octonion::I.scale(4.0);
        assert_near(a.norm(), 5.0, 1e-15, "norm 3+4i");
        // |(1+i)(j+l)| = sqrt(2)*sqrt(2) = 2.
        let p = (Octonion::ONE + Octonion::I) * (Octonion::J + Octonion::L);
        assert_near(p.norm(), 2.0, 1e-15, "norm of product");
    }

    #[test]
    fn associator_values() {
        let zero = Octonion::ZERO;
        assert_oct_near(
            &Octonion::associator(&Octonion::I, &Octonion::J, &Octonion::K),
            &zero,
            0.0,
            "quaternionic triple associates",
        );
        // [b,a,a] = 0 for a = i+l, b = j.
        let a = Octonion::I + Octonion::L;
        assert_oct_near(
            &Octonion::associator(&Octonion::J, &a, &a),
            &zero,
            0.0,
            "[b,a,a]",
        );
        // [i,j,l] = (ij)l - i(jl) = kl - (-kl) = 2kl.
        assert_oct_near(
            &Octonion::associator(&Octonion::I, &Octonion::J, &Octonion::L),
            &Octonion::KL.scale(2.0),
            0.0,
            "[i,j,l]",
        );
    }

    // Randomized identity battery; the same identities are re-run at
    // 10^4 samples by the acceptance suite.
    #[test]
    fn identity_battery_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let a = random_unit_oct(&mut rng);
            let b = random_unit_oct(&mut rng);
            let x = random_unit_oct(&mut rng);
            let d = random_unit_oct(&mut rng);

            // a.(xb) = b.(conj(x) a)
            assert_near(a.dot(&(x * b)), b.dot(&(x.conj() * a)), 1e-12, "exchange");
            // (ax).(bx) = |x|^2 a.b
            assert_near(
                (a * x).dot(&(b * x)),
                x.norm_sq() * a.dot(&b),
                1e-12,
                "scaling",
            );
            // |ab| = |a||b|
            assert_near((a * b).norm(), a.norm() * b.norm(), 1e-12, "norm mult");
            // alternativity
            assert!(Octonion::associator(&b, &a, &a).norm() <= 1e-13, "[b,a,a]");
            assert!(
                Octonion::associator(&b, &a, &a.conj()).norm() <= 1e-13,
                "[b,a,conj a]"
            );
            // four-slot associator expansion
            let c = random_unit_oct(&mut rng);
            let lhs = Octonion::associator(&a, &b, &c) * d + a * Octonion::associator(&b, &c, &d);
            let rhs = Octonion::associator(&(a * b), &c, &d)
                - Octonion::associator(&a, &(b * c), &d)
                + Octonion::associator(&a, &b, &(c * d));
            assert_oct_near(&lhs, &rhs, 1e-12, "associator expansion");
        }
    }

    proptest! {
        #[test]
        fn associator_antisymmetric_and_imaginary(
            a in proptest::array::uniform8(-1.0f64..1.0),
            b in proptest::array::uniform8(-1.0f64..1.0),
            c in proptest::array::uniform8(-1.0f64..1.0),
        ) {
            let (a, b, c) = (Octonion(a), Octonion(b), Octonion(c));
            let assoc = Octonion::associator(&a, &b, &c);
            let scale = (a.norm() * b.norm() * c.norm()).max(1.0);
            prop_assert!(assoc.re().abs() <= 1e-12 * scale);
            // odd permutations flip the sign, even ones preserve it
            prop_assert!(assoc.dist(&-Octonion::associator(&b, &a, &c)) <= 1e-12 * scale);
            prop_assert!(assoc.dist(&-Octonion::associator(&a, &c, &b)) <= 1e-12 * scale);
            prop_assert!(assoc.dist(&Octonion::associator(&b, &c, &a)) <= 1e-12 * scale);
            prop_assert!(assoc.dist(&Octonion::associator(&c, &a, &b)) <= 1e-12 * scale);
            prop_assert!(assoc.dist(&-Octonion::associator(&c, &b, &a)) <= 1e-12 * scale);
            // conjugating one argument flips the sign
            prop_assert!(assoc.dist(&-Octonion::associator(&a.conj(), &b, &c)) <= 1e-12 * scale);
        }

        #[test]
        fn norm_positive_definite(a in proptest::array::uniform8(-1.0f64..1.0)) {
            let a = Octonion(a);
            prop_assert!(a.norm_sq() >= 0.0);
            if a.norm_sq() == 0.0 {
                prop_assert_eq!(a, Octonion::ZERO);
            }
        }

        #[test]
        fn json_roundtrip(a in proptest::array::uniform8(-1.0f64..1.0)) {
            let a = Octonion(a);
            let text = serde_json::to_string(&a).unwrap();
            // encoding is a bare array of 8 numbers
            prop_assert!(text.starts_with('['));
            let back: Octonion = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(a, back);
        }
    }
}
