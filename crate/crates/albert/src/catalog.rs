//! Built-in worked matrices with known right eigenpairs.
//!
//! Three parametric Hermitian matrices ship with the crate; each comes
//! with the non-real eigenpairs that are known in closed form. They serve
//! three purposes: they calibrate the multiplication table (a wrong line
//! orientation fails their eigen-equations loudly), they seed the
//! verification report, and they are available from the CLI via
//! `--example {1|2|3}` so users do not have to transcribe them.
//!
//! Example 1 (`example1`): diagonal `p`, off-diagonals built from
//! `s = cos(theta) + kl sin(theta)`; quaternionic when `theta = 0`.
//! Example 2 (`example2`): the same shape at a fixed `s = sqrt(5)/3 - (2/3) kl`
//! with halved `b`, `c` entries; six listed non-real eigenpairs.
//! Example 3 (`example3`): eigenvalue outside the complex subalgebra
//! spanned by the associator of its own entries.

use crate::jordan::{JordanMatrix, OctVec3};
use crate::octonion::Octonion;
use crate::table::{self, MultiplicationTable};

/// A named `(lambda, v)` right eigenpair attached to a worked matrix.
#[derive(Clone, Debug)]
pub struct WorkedPair {
    pub name: &'static str,
    pub lambda: Octonion,
    pub v: OctVec3,
}

/// A worked matrix together with its listed eigenpairs.
#[derive(Clone, Debug)]
pub struct WorkedFixture {
    pub name: String,
    pub matrix: JordanMatrix,
    pub pairs: Vec<WorkedPair>,
}

const SQRT5: f64 = 2.23606797749978969640917366873;

/// `s = cos(theta) + kl sin(theta)`.
fn s_of_theta(theta: f64) -> Octonion {
    Octonion::real(theta.cos()) + Octonion::KL.scale(theta.sin())
}

// -- Example 1 ------------------------------------------------------

fn example1_with(t: &MultiplicationTable, p: f64, q: f64, theta: f64) -> JordanMatrix {
    let s = s_of_theta(theta);
    let ks = Octonion::K.mul_with(&s, t);
    JordanMatrix::new(
        p,
        p,
        p,
        Octonion::I.scale(q),
        ks.scale(-q),
        Octonion::J.scale(q),
    )
}

fn example1_pairs_with(t: &MultiplicationTable, p: f64, q: f64, theta: f64) -> Vec<WorkedPair> {
    let s = s_of_theta(theta);
    let s_bar = s.conj();
    let ks = Octonion::K.mul_with(&s, t);
    let base_u = OctVec3::new(Octonion::I, Octonion::ZERO, Octonion::J);
    let base_v = OctVec3::new(Octonion::J, ks.scale(2.0), Octonion::I);
    let base_w = OctVec3::new(Octonion::J, ks.scale(-1.0), Octonion::I);
    let mul_right = |v: &OctVec3, f: Octonion| {
        OctVec3::new(
            v.x.mul_with(&f, t),
            v.y.mul_with(&f, t),
            v.z.mul_with(&f, t),
        )
    };
    // sign factor: -kl for the "+" family, 1 for the "-" family
    let s_plus = -Octonion::KL;
    let mut pairs = Vec::new();
    for (tag, factor, sign) in [("+", s_plus, 1.0), ("-", Octonion::ONE, -1.0)] {
        let lam_uv = Octonion::real(p) + s_bar.scale(sign * q);
        let lam_w = Octonion::real(p) - s_bar.scale(sign * 2.0 * q);
        let (un, vn, wn) = match tag {
            "+" => ("u+", "v+", "w+"),
            _ => ("u-", "v-", "w-"),
        };
        pairs.push(WorkedPair {
            name: un,
            lambda: lam_uv,
            v: mul_right(&base_u, factor),
        });
        pairs.push(WorkedPair {
            name: vn,
            lambda: lam_uv,
            v: mul_right(&base_v, factor),
        });
        pairs.push(WorkedPair {
            name: wn,
            lambda: lam_w,
            v: mul_right(&base_w, factor),
        });
    }
    pairs
}

/// First worked matrix: diagonal `p`, `a = qi`, `c = qj`,
/// `b = -q k s` with `s = cos(theta) + kl sin(theta)`.
pub fn example1(p: f64, q: f64, theta: f64) -> JordanMatrix {
    example1_with(table::default_table(), p, q, theta)
}

/// The six listed non-real eigenpairs of [`example1`]: `u±`, `v±`, `w±`
/// with eigenvalues `p ± q conj(s)` (for `u`, `v`) and `p ∓ 2q conj(s)`
/// (for `w`).
pub fn example1_pairs(p: f64, q: f64, theta: f64) -> Vec<WorkedPair> {
    example1_pairs_with(table::default_table(), p, q, theta)
}

// -- Example 2 ------------------------------------------------------

/// The fixed `s` of the second worked matrix: `sqrt(5)/3 - (2/3) kl`.
pub fn example2_s() -> Octonion {
    Octonion::real(SQRT5 / 3.0) - Octonion::KL.scale(2.0 / 3.0)
}

fn example2_with(t: &MultiplicationTable, p: f64, q: f64) -> JordanMatrix {
    let ks = Octonion::K.mul_with(&example2_s(), t);
    JordanMatrix::new(
        p,
        p,
        p,
        Octonion::I.scale(q),
        ks.scale(-q / 2.0),
        Octonion::J.scale(q / 2.0),
    )
}

fn example2_pairs_with(_t: &MultiplicationTable, p: f64, q: f64) -> Vec<WorkedPair> {
    // The listed eigenvectors are explicit coefficient vectors; only the
    // eigenvalues carry p and q.
    let oct = |re: f64, units: &[(Octonion, f64)]| {
        let mut o = Octonion::real(re);
        for (u, coeff) in units {
            o += u.scale(*coeff);
        }
        o
    };
    let lam = |shift: f64, kl_coeff: f64| {
        Octonion::real(p + shift * q) + Octonion::KL.scale(kl_coeff * q)
    };
    let fj2il = oct(0.0, &[(Octonion::J, SQRT5), (Octonion::IL, -2.0)]); // sqrt5 j - 2 il
    let fk2l = oct(0.0, &[(Octonion::K, SQRT5), (Octonion::L, 2.0)]); // sqrt5 k + 2 l
    vec![
        WorkedPair {
            name: "u1",
            lambda: lam(SQRT5 / 2.0, -0.5),
            v: OctVec3::new(
                Octonion::K.scale(3.0),
                fj2il,
                oct(1.0, &[(Octonion::KL, SQRT5)]),
            ),
        },
        WorkedPair {
            name: "u2",
            lambda: lam(SQRT5 / 2.0, 0.5),
            v: OctVec3::new(
                fk2l,
                Octonion::J.scale(3.0),
                oct(SQRT5, &[(Octonion::KL, -1.0)]),
            ),
        },
        WorkedPair {
            name: "v1",
            lambda: lam(-SQRT5 / 3.0, 2.0 / 3.0),
            v: OctVec3::new(fj2il, Octonion::K.scale(3.0), Octonion::ZERO),
        },
        WorkedPair {
            name: "v2",
            lambda: lam(-SQRT5 / 3.0, -2.0 / 3.0),
            v: OctVec3::new(Octonion::J.scale(3.0), fk2l, Octonion::ZERO),
        },
        WorkedPair {
            name: "w1",
            lambda: lam(-SQRT5 / 6.0, -1.0 / 6.0),
            v: OctVec3::new(
                Octonion::K.scale(3.0),
                fj2il,
                oct(-7.0, &[(Octonion::KL, -SQRT5)]),
            ),
        },
        WorkedPair {
            name: "w2",
            lambda: lam(-SQRT5 / 6.0, 1.0 / 6.0),
            v: OctVec3::new(
                fk2l,
                Octonion::J.scale(3.0),
                oct(-3.0 * SQRT5, &[(Octonion::KL, -3.0)]),
            ),
        },
    ]
}

/// Second worked matrix: diagonal `p`, `a = qi`, `c = (q/2) j`,
/// `b = -(q/2) k s` at the fixed `s` of [`example2_s`].
pub fn example2(p: f64, q: f64) -> JordanMatrix {
    example2_with(table::default_table(), p, q)
}

/// The six listed non-real eigenpairs of [`example2`]:
/// `u1`, `u2`, `v1`, `v2`, `w1`, `w2`.
pub fn example2_pairs(p: f64, q: f64) -> Vec<WorkedPair> {
    example2_pairs_with(table::default_table(), p, q)
}

/// The two real-eigenvalue families of [`example2`] as listed in the
/// source material. The third member of each family fails the trace sum
/// rule and is suspected to be a misprint; see
/// [`example2_trace_consistent_real_families`] for the corrected value.
pub fn example2_listed_real_families(p: f64, q: f64) -> [[f64; 3]; 2] {
    let third = |sign: f64| p - sign * (q / 2.0) * (1.0 - 3.0f64.sqrt() / 2.0);
    [
        [p + q, p - (q / 2.0) * (1.0 + 3.0f64.sqrt()), third(1.0)],
        [p - q, p + (q / 2.0) * (1.0 + 3.0f64.sqrt()), third(-1.0)],
    ]
}

/// The same families with the third member replaced by the value the
/// trace sum rule demands (`lambda_1 + lambda_2 + lambda_3 = 3p`).
pub fn example2_trace_consistent_real_families(p: f64, q: f64) -> [[f64; 3]; 2] {
    let third = |sign: f64| p - sign * (q / 2.0) * (1.0 - 3.0f64.sqrt());
    [
        [p + q, p - (q / 2.0) * (1.0 + 3.0f64.sqrt()), third(1.0)],
        [p - q, p + (q / 2.0) * (1.0 + 3.0f64.sqrt()), third(-1.0)],
    ]
}

// -- Example 3 ------------------------------------------------------

fn example3_with(t: &MultiplicationTable, p: f64, q: f64) -> JordanMatrix {
    let b = (Octonion::J - Octonion::IL - Octonion::JL).scale(q);
    let c = (Octonion::ONE + Octonion::K + Octonion::L).scale(q);
    let _ = t; // entries are plain basis combinations; no products involved
    JordanMatrix::new(p, p, p, Octonion::I.scale(q), b, c)
}

fn example3_pair_with(t: &MultiplicationTable, p: f64, q: f64) -> WorkedPair {
    let lk = Octonion::L.mul_with(&Octonion::K, t);
    WorkedPair {
        name: "v",
        lambda: Octonion::real(p) + lk.scale(q),
        v: OctVec3::new(Octonion::J, Octonion::L, Octonion::ZERO),
    }
}

/// Third worked matrix: diagonal `p`, `a = qi`, `b = q(j - il - jl)`,
/// `c = q(1 + k + l)`.
pub fn example3(p: f64, q: f64) -> JordanMatrix {
    example3_with(table::default_table(), p, q)
}

/// The listed eigenpair of [`example3`]: `v = (j, l, 0)` with
/// `lambda = p + q (l k)`, which lies outside the complex subalgebra
/// generated by the matrix entries' associator.
pub fn example3_pair(p: f64, q: f64) -> WorkedPair {
    example3_pair_with(table::default_table(), p, q)
}

/// `[a, b, c] / q^3` for the entries of [`example3`]; equals
/// `2 (l - k)` up to the table orientation.
pub fn example3_entry_associator(q: f64) -> Octonion {
    let a = example3(0.0, q);
    Octonion::associator(&a.a, &a.b, &a.c).scale(1.0 / q.powi(3))
}

// -- calibration fixtures -------------------------------------------

/// Every worked matrix with every listed eigenpair, built under an
/// explicit table. Used to validate candidate tables: the set of
/// eigen-equations over-determines the line orientations.
pub fn fixtures_with(t: &MultiplicationTable) -> Vec<WorkedFixture> {
    let mut out = Vec::new();
    for (p, q, theta) in [(0.0, 1.0, 0.6), (1.0, 2.0, 2.2)] {
        out.push(WorkedFixture {
            name: format!("example1(p={p}, q={q}, theta={theta})"),
            matrix: example1_with(t, p, q, theta),
            pairs: example1_pairs_with(t, p, q, theta),
        });
    }
    out.push(WorkedFixture {
        name: "example2(p=1.5, q=0.8)".to_string(),
        matrix: example2_with(t, 1.5, 0.8),
        pairs: example2_pairs_with(t, 1.5, 0.8),
    });
    out.push(WorkedFixture {
        name: "example3(p=0.5, q=1.3)".to_string(),
        matrix: example3_with(t, 0.5, 1.3),
        pairs: vec![example3_pair_with(t, 0.5, 1.3)],
    });
    out
}
