//! Dense real linear algebra for the tiny problems the eigen machinery
//! needs: linearizations of octonion-linear maps (8x8 and 24x24),
//! singular values and null spaces, real eigenvalues of small general
//! matrices, and real roots of cubics.
//!
//! Everything is implemented directly on row-major `Vec<f64>` storage;
//! the sizes involved (at most 24x24) make sophistication pointless.
//! Singular values come from one-sided Jacobi, eigenvalues from
//! Hessenberg reduction followed by Francis double-shift QR.

use thiserror::Error;

use crate::jordan::OctVec3;
use crate::octonion::Octonion;

pub type RealVec = Vec<f64>;

#[derive(Debug, Error)]
pub enum RealOpsError {
    #[error("QR iteration did not converge within the iteration budget")]
    NoConvergence,
}

/// Dense real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RealMatrix {
        RealMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> RealMatrix {
        let mut m = RealMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> RealMatrix {
        let mut m = RealMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn matvec(&self, v: &[f64]) -> RealVec {
        assert_eq!(v.len(), self.cols);
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn column(&self, j: usize) -> RealVec {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

// -- linearization ---------------------------------------------------

/// 8x8 real matrix of a real-linear octonion map: column `q` holds the
/// coefficients of `f(e_q)`.
pub fn linearize_oct_map(f: impl Fn(Octonion) -> Octonion) -> RealMatrix {
    let mut m = RealMatrix::zeros(8, 8);
    for q in 0..8 {
        let img = f(Octonion::unit(q));
        for (i, &coeff) in img.0.iter().enumerate() {
            m[(i, q)] = coeff;
        }
    }
    m
}

/// 24x24 real matrix of a real-linear map on octonion 3-vectors, in the
/// flat basis `(x_0..x_7, y_0..y_7, z_0..z_7)`.
pub fn linearize_vec_map(f: impl Fn(&OctVec3) -> OctVec3) -> RealMatrix {
    let mut m = RealMatrix::zeros(24, 24);
    for slot in 0..3 {
        for q in 0..8 {
            let mut basis = OctVec3::ZERO;
            *basis.component_mut(slot) = Octonion::unit(q);
            let img = f(&basis);
            let flat = vec3_to_flat(&img);
            let col = slot * 8 + q;
            for (i, &coeff) in flat.iter().enumerate() {
                m[(i, col)] = coeff;
            }
        }
    }
    m
}

pub fn vec3_to_flat(v: &OctVec3) -> [f64; 24] {
    let mut out = [0.0; 24];
    out[..8].copy_from_slice(&v.x.0);
    out[8..16].copy_from_slice(&v.y.0);
    out[16..].copy_from_slice(&v.z.0);
    out
}

pub fn flat_to_vec3(flat: &[f64]) -> OctVec3 {
    assert_eq!(flat.len(), 24);
    let grab = |off: usize| {
        let mut c = [0.0; 8];
        c.copy_from_slice(&flat[off..off + 8]);
        Octonion(c)
    };
    OctVec3::new(grab(0), grab(8), grab(16))
}

// -- singular values (one-sided Jacobi) -------------------------------

/// Singular values (descending) with the matching right singular vectors
/// as columns of `v`.
#[derive(Clone, Debug)]
pub struct Svd {
    pub sigmas: Vec<f64>,
    pub v: RealMatrix,
}

/// One-sided Jacobi: rotate column pairs of `B = M V` until all columns
/// are mutually orthogonal; the column norms are the singular values and
/// `V` accumulates the right singular vectors. Plenty accurate at these
/// sizes, and zero columns (exact null directions) need no special
/// casing.
pub fn jacobi_svd(m: &RealMatrix) -> Svd {
    assert_eq!(m.rows, m.cols, "one-sided Jacobi expects a square input");
    let n = m.cols;
    let mut b = m.clone();
    let mut v = RealMatrix::identity(n);
    let eps = 1e-15;

    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for i in 0..n {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    app += bp * bp;
                    aqq += bq * bq;
                    apq += bp * bq;
                }
                if apq.abs() <= eps * (app * aqq).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (2.0 * apq);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                for i in 0..n {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    b[(i, p)] = cs * bp - sn * bq;
                    b[(i, q)] = sn * bp + cs * bq;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = cs * vp - sn * vq;
                    v[(i, q)] = sn * vp + cs * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..n).map(|i| b[(i, j)] * b[(i, j)]).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap());
    let sigmas: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let v_sorted = RealMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Svd {
        sigmas,
        v: v_sorted,
    }
}

/// Smallest singular value and a unit right singular vector for it.
pub fn smallest_singular(m: &RealMatrix) -> (f64, RealVec) {
    let svd = jacobi_svd(m);
    let last = svd.sigmas.len() - 1;
    (svd.sigmas[last], svd.v.column(last))
}

/// Dimension of the numerical null space: singular values below
/// `tol * max(sigma_max, 1)`.
pub fn nullity(m: &RealMatrix, tol: f64) -> usize {
    let svd = jacobi_svd(m);
    let thresh = tol * svd.sigmas.first().copied().unwrap_or(0.0).max(1.0);
    svd.sigmas.iter().filter(|&&s| s < thresh).count()
}

/// Orthonormal basis (right singular vectors) of the numerical null
/// space at the same threshold as [`nullity`].
pub fn null_space(m: &RealMatrix, tol: f64) -> Vec<RealVec> {
    let svd = jacobi_svd(m);
    let thresh = tol * svd.sigmas.first().copied().unwrap_or(0.0).max(1.0);
    (0..svd.sigmas.len())
        .filter(|&j| svd.sigmas[j] < thresh)
        .map(|j| svd.v.column(j))
        .collect()
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot collapses (singular system).
pub fn solve(a: &RealMatrix, b: &[f64]) -> Option<RealVec> {
    assert_eq!(a.rows, a.cols);
    assert_eq!(b.len(), a.rows);
    let n = a.rows;
    let mut work = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| {
                work[(i, col)]
                    .abs()
                    .partial_cmp(&work[(j, col)].abs())
                    .unwrap()
            })
            .unwrap();
        let pivot = work[(pivot_row, col)];
        if pivot.abs() < 1e-300 {
            return None;
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = work[(col, j)];
                work[(col, j)] = work[(pivot_row, j)];
                work[(pivot_row, j)] = tmp;
            }
            rhs.swap(col, pivot_row);
        }
        for i in (col + 1)..n {
            let factor = work[(i, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                work[(i, j)] -= factor * work[(col, j)];
            }
            rhs[i] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        for j in (i + 1)..n {
            acc -= work[(i, j)] * x[j];
        }
        x[i] = acc / work[(i, i)];
    }
    Some(x)
}

// -- real eigenvalues (Hessenberg + Francis QR) ------------------------

/// All eigenvalues of a general square matrix as `(re, im)` pairs.
/// Householder reduction to Hessenberg form, then double-shift QR in the
/// classic EISPACK/JAMA arrangement with the eigenvector machinery
/// stripped out.
pub fn eigenvalues(m: &RealMatrix) -> Result<Vec<(f64, f64)>, RealOpsError> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = m.clone();
    hessenberg(&mut h);
    hqr_eigenvalues(&mut h)
}

fn hessenberg(h: &mut RealMatrix) {
    let n = h.rows;
    if n < 3 {
        return;
    }
    let mut ort = vec![0.0; n];
    for m in 1..(n - 1) {
        let mut scale = 0.0;
        for i in m..n {
            scale += h[(i, m - 1)].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut hsum = 0.0;
        for i in (m..n).rev() {
            ort[i] = h[(i, m - 1)] / scale;
            hsum += ort[i] * ort[i];
        }
        let mut g = hsum.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        hsum -= ort[m] * g;
        ort[m] -= g;

        // similarity transform H <- (I - u u^T / h) H (I - u u^T / h)
        for j in m..n {
            let mut f = 0.0;
            for i in (m..n).rev() {
                f += ort[i] * h[(i, j)];
            }
            f /= hsum;
            for i in m..n {
                h[(i, j)] -= f * ort[i];
            }
        }
        for i in 0..n {
            let mut f = 0.0;
            for j in (m..n).rev() {
                f += ort[j] * h[(i, j)];
            }
            f /= hsum;
            for j in m..n {
                h[(i, j)] -= f * ort[j];
            }
        }
        h[(m, m - 1)] = scale * g;
        for i in (m + 1)..n {
            h[(i, m - 1)] = 0.0;
        }
    }
}

fn hqr_eigenvalues(h: &mut RealMatrix) -> Result<Vec<(f64, f64)>, RealOpsError> {
    let nn = h.rows as isize;
    let at = |h: &RealMatrix, i: isize, j: isize| h[(i as usize, j as usize)];
    let mut re = vec![0.0; nn as usize];
    let mut im = vec![0.0; nn as usize];

    let eps = f64::EPSILON;
    let mut norm = 0.0;
    for i in 0..nn {
        for j in (i - 1).max(0)..nn {
            norm += at(h, i, j).abs();
        }
    }
    if norm == 0.0 {
        return Ok(vec![(0.0, 0.0); nn as usize]);
    }

    let mut n = nn - 1;
    let mut exshift = 0.0;
    let mut iter = 0;
    let (mut p, mut q, mut r, mut s, mut z);
    let (mut w, mut x, mut y);

    while n >= 0 {
        // single small subdiagonal element
        let mut l = n;
        while l > 0 {
            s = at(h, l - 1, l - 1).abs() + at(h, l, l).abs();
            if s == 0.0 {
                s = norm;
            }
            if at(h, l, l - 1).abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // one real root
            re[n as usize] = at(h, n, n) + exshift;
            im[n as usize] = 0.0;
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // a 2x2 block: real pair or complex conjugate pair
            w = at(h, n, n - 1) * at(h, n - 1, n);
            p = (at(h, n - 1, n - 1) - at(h, n, n)) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            x = at(h, n, n) + exshift;
            if q >= 0.0 {
                z = if p >= 0.0 { p + z } else { p - z };
                re[(n - 1) as usize] = x + z;
                re[n as usize] = if z != 0.0 { x - w / z } else { x + z };
                im[(n - 1) as usize] = 0.0;
                im[n as usize] = 0.0;
            } else {
                re[(n - 1) as usize] = x + p;
                re[n as usize] = x + p;
                im[(n - 1) as usize] = z;
                im[n as usize] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // form shift
            x = at(h, n, n);
            y = at(h, n - 1, n - 1);
            w = at(h, n, n - 1) * at(h, n - 1, n);

            if iter == 10 || iter == 20 {
                // exceptional shift
                exshift += x;
                for i in 0..=n {
                    h[(i as usize, i as usize)] -= x;
                }
                s = at(h, n, n - 1).abs() + at(h, n - 1, n - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            iter += 1;
            if iter > 60 {
                return Err(RealOpsError::NoConvergence);
            }

            // two consecutive small subdiagonal elements
            let mut m = n - 2;
            loop {
                z = at(h, m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / at(h, m + 1, m) + at(h, m, m + 1);
                q = at(h, m + 1, m + 1) - z - r - s;
                r = at(h, m + 2, m + 1);
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let lhs = at(h, m, m - 1).abs() * (q.abs() + r.abs());
                let rhs =
                    p.abs() * (at(h, m - 1, m - 1).abs() + z.abs() + at(h, m + 1, m + 1).abs());
                if lhs < eps * rhs {
                    break;
                }
                m -= 1;
            }

            for i in (m + 2)..=n {
                h[(i as usize, (i - 2) as usize)] = 0.0;
                if i > m + 2 {
                    h[(i as usize, (i - 3) as usize)] = 0.0;
                }
            }

            // double QR step on rows l..n, columns m..n
            for k in m..n {
                let notlast = k != n - 1;
                if k != m {
                    p = at(h, k, k - 1);
                    q = at(h, k + 1, k - 1);
                    r = if notlast { at(h, k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s == 0.0 {
                    continue;
                }
                if k != m {
                    h[(k as usize, (k - 1) as usize)] = -s * x;
                } else if l != m {
                    h[(k as usize, (k - 1) as usize)] = -at(h, k, k - 1);
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;

                for j in k..nn {
                    p = at(h, k, j) + q * at(h, k + 1, j);
                    if notlast {
                        p += r * at(h, k + 2, j);
                        h[((k + 2) as usize, j as usize)] -= p * z;
                    }
                    h[(k as usize, j as usize)] -= p * x;
                    h[((k + 1) as usize, j as usize)] -= p * y;
                }
                for i in 0..=n.min(k + 3) {
                    p = x * at(h, i, k) + y * at(h, i, k + 1);
                    if notlast {
                        p += z * at(h, i, k + 2);
                        h[(i as usize, (k + 2) as usize)] -= p * r;
                    }
                    h[(i as usize, k as usize)] -= p;
                    h[(i as usize, (k + 1) as usize)] -= p * q;
                }
            }
        }
    }

    Ok(re.into_iter().zip(im).collect())
}

/// Real eigenvalues only: eigenvalues with `|imag| < tol`, clustered and
/// deduplicated at absolute tolerance `tol`.
pub fn real_eigenvalues(m: &RealMatrix, tol: f64) -> Result<Vec<f64>, RealOpsError> {
    let eigs = eigenvalues(m)?;
    let mut reals: Vec<f64> = eigs
        .into_iter()
        .filter(|&(_, im)| im.abs() < tol)
        .map(|(re, _)| re)
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut dedup: Vec<f64> = Vec::new();
    for v in reals {
        match dedup.last() {
            Some(&last) if (v - last).abs() <= tol => {}
            _ => dedup.push(v),
        }
    }
    Ok(dedup)
}

// -- cubic roots -------------------------------------------------------

/// Real roots of `x^3 + t2 x^2 + t1 x + t0`, with multiplicity when the
/// discriminant indicates three real roots (trigonometric branch). Each
/// returned root is polished by a couple of Newton steps.
pub fn cubic_roots(t2: f64, t1: f64, t0: f64) -> Vec<f64> {
    // depressed form: x = t - t2/3, t^3 + p t + q = 0
    let shift = t2 / 3.0;
    let p = t1 - t2 * t2 / 3.0;
    let q = 2.0 * t2.powi(3) / 27.0 - t2 * t1 / 3.0 + t0;
    let scale = t2.abs().max(t1.abs()).max(t0.abs()).max(1.0);

    let mut roots = if p.abs() <= 1e-14 * scale && q.abs() <= 1e-14 * scale * scale {
        vec![0.0, 0.0, 0.0]
    } else {
        let disc = (q / 2.0) * (q / 2.0) + (p / 3.0).powi(3);
        if disc <= 0.0 {
            // three real roots (p < 0 here)
            let mag = 2.0 * (-p / 3.0).sqrt();
            let arg = (3.0 * q / (p * mag)).clamp(-1.0, 1.0);
            let phi = arg.acos() / 3.0;
            (0..3)
                .map(|k| mag * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
                .collect()
        } else {
            // one real root; pick the cube root on the side that avoids
            // cancellation, the other Cardano term is -p/(3a)
            let sq = disc.sqrt();
            let u = if q >= 0.0 {
                -q / 2.0 - sq
            } else {
                -q / 2.0 + sq
            };
            let a = u.cbrt();
            vec![if a != 0.0 { a - p / (3.0 * a) } else { 0.0 }]
        }
    };

    for r in roots.iter_mut() {
        let mut x = *r - shift;
        for _ in 0..3 {
            let f = ((x + t2) * x + t1) * x + t0;
            let df = (3.0 * x + 2.0 * t2) * x + t1;
            if df.abs() > 1e-12 * scale {
                let step = f / df;
                if step.is_finite() && step.abs() < 1.0 + x.abs() {
                    x -= step;
                }
            }
        }
        *r = x;
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}
