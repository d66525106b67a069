use num_complex::Complex64;

use super::SpectralDecomposition;
use crate::error::{Error, Result};
use crate::matrix::{frobenius, hermiticity_defect, identity, CMatrix};

/// Off-diagonal Frobenius norm target, relative to `‖A‖_F`.
const OFF_TOLERANCE: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;
/// Largest accepted `‖A − A†‖_max`.
pub(crate) const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Eigenvalues are real and sorted ascending; eigenvector `k` is column `k`.
pub fn eig_hermitian(m: &CMatrix) -> Result<SpectralDecomposition> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let defect = hermiticity_defect(m);
    if !(defect < HERMITIAN_TOLERANCE) {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.nrows();
    let mut a = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut v = identity(n);
    let target = OFF_TOLERANCE * frobenius(&a);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal(&a) > target {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order
        .iter()
        .map(|&i| Complex64::new(a[(i, i)].re, 0.0))
        .collect();
    let eigenvectors = CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p,q]` with `G = diag(1, e^{−iφ})·R(θ)` acting on rows and
/// columns `p, q`, where `a[p,q] = r e^{iφ}`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let e = phase.conj();
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;

    // columns: A ← A G
    let g_pp = Complex64::new(cs, 0.0);
    let g_pq = Complex64::new(sn, 0.0);
    let g_qp = e * (-sn);
    let g_qq = e * cs;
    let n = a.nrows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
    // rows: A ← G† A
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g_pp * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}
