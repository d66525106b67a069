use num_complex::Complex64;

use super::{eig_hermitian, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::matrix::{unitarity_defect, CMatrix};

/// Largest accepted `‖U†U − I‖_max`.
pub(crate) const UNITARY_TOLERANCE: f64 = 1e-8;
/// Eigenvalues of a Hermitian part closer than this are refined together.
const CLUSTER_TOLERANCE: f64 = 1e-4;

/// Eigendecomposition of a unitary matrix through its commuting Hermitian
/// parts `A = (U+U†)/2` and `B = (U−U†)/2i`.
///
/// `A` is diagonalized first; every cluster of nearly equal `A`-eigenvalues
/// (conjugate phase pairs `±θ`) is split by diagonalizing `B` restricted to
/// the cluster. Eigenvalues are the Rayleigh quotients `⟨v|U|v⟩` projected
/// to the unit circle, sorted by phase in `(−π, π]`. Exactly degenerate
/// eigenvalues yield an arbitrary orthonormal basis of the eigenspace.
pub fn eig_unitary(u: &CMatrix) -> Result<SpectralDecomposition> {
    if u.nrows() != u.ncols() {
        return Err(Error::DimensionMismatch {
            expected: u.nrows(),
            found: u.ncols(),
        });
    }
    let defect = unitarity_defect(u);
    if !(defect < UNITARY_TOLERANCE) {
        return Err(Error::NotUnitary(defect));
    }
    let n = u.nrows();
    let ud = u.adjoint();
    let a = (u + &ud) * Complex64::new(0.5, 0.0);
    let b = (u - &ud) * Complex64::new(0.0, -0.5);
    // hermitize against rounding in the input
    let a = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
    let b = (&b + b.adjoint()) * Complex64::new(0.5, 0.0);

    let first = eig_hermitian(&a)?;
    let mut vectors = first.eigenvectors.clone();
    for cluster in clusters(&first.eigenvalues) {
        if cluster.len() < 2 {
            continue;
        }
        let refined = refine(&vectors, &cluster, &b)?;
        // the remaining sub-clusters are degenerate in both parts; one
        // more pass over a generic combination separates near-collisions
        let mixed = &a + &b * Complex64::new(0.618_033_988_749_894_9, 0.0);
        let cols = cluster.clone();
        write_columns(&mut vectors, &cols, &refined.0);
        for sub in refined.1 {
            if sub.len() < 2 {
                continue;
            }
            let idx: Vec<usize> = sub.iter().map(|&i| cols[i]).collect();
            let (w, _) = refine(&vectors, &idx, &mixed)?;
            write_columns(&mut vectors, &idx, &w);
        }
    }

    let mut pairs: Vec<(Complex64, usize)> = (0..n)
        .map(|k| {
            let v = vectors.column(k);
            let lambda = (v.adjoint() * u * v)[(0, 0)];
            let lambda = if lambda.norm() > 0.0 {
                lambda / lambda.norm()
            } else {
                lambda
            };
            (lambda, k)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.arg().total_cmp(&y.0.arg()));
    let eigenvalues = pairs.iter().map(|p| p.0).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |r, c| vectors[(r, pairs[c].1)]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Groups indices of consecutive sorted real eigenvalues closer than the
/// cluster tolerance.
fn clusters(values: &[Complex64]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(last) if (v.re - values[*last.last().unwrap()].re).abs() < CLUSTER_TOLERANCE => {
                last.push(i)
            }
            _ => out.push(vec![i]),
        }
    }
    out
}

/// Diagonalizes `h` restricted to the span of the given columns. Returns the
/// new column block and the sub-clusters (as positions within the block).
fn refine(vectors: &CMatrix, cols: &[usize], h: &CMatrix) -> Result<(CMatrix, Vec<Vec<usize>>)> {
    let n = vectors.nrows();
    let q = CMatrix::from_fn(n, cols.len(), |r, c| vectors[(r, cols[c])]);
    let restricted = q.adjoint() * h * &q;
    let restricted = (&restricted + restricted.adjoint()) * Complex64::new(0.5, 0.0);
    let local = eig_hermitian(&restricted)?;
    let sub = clusters(&local.eigenvalues);
    Ok((q * local.eigenvectors, sub))
}

fn write_columns(vectors: &mut CMatrix, cols: &[usize], block: &CMatrix) {
    for (c, &col) in cols.iter().enumerate() {
        vectors.set_column(col, &block.column(c));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{c, identity, max_abs_diff};
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn identity_has_unit_eigenvalues() {
        let s = eig_unitary(&identity(4)).unwrap();
        assert!(s
            .eigenvalues
            .iter()
            .all(|z| (z - c(1.0, 0.0)).norm() < 1e-15));
        assert!(s.gram_defect() < 1e-14);
    }

    #[test]
    fn diagonal_phases() {
        let u = CMatrix::from_row_slice(
            2,
            2,
            &[
                c(0.0, -FRAC_PI_4).exp(),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, FRAC_PI_4).exp(),
            ],
        );
        let s = eig_unitary(&u).unwrap();
        assert!((s.eigenvalues[0] - c(0.0, -FRAC_PI_4).exp()).norm() < 1e-15);
        assert!((s.eigenvalues[1] - c(0.0, FRAC_PI_4).exp()).norm() < 1e-15);
    }

    #[test]
    fn conjugate_pair_is_split() {
        // eigenvalues e^{±iθ} share the same Hermitian part cos θ
        let th = 0.9_f64;
        let d = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(0.0, th).exp(),
            c(0.0, -th).exp(),
            c(1.0, 0.0),
        ]));
        let h = eig_hermitian(&CMatrix::from_row_slice(
            3,
            3,
            &[
                c(1.0, 0.0),
                c(0.2, 0.3),
                c(0.0, -0.4),
                c(0.2, -0.3),
                c(0.0, 0.0),
                c(0.6, 0.0),
                c(0.0, 0.4),
                c(0.6, 0.0),
                c(-0.5, 0.0),
            ],
        ))
        .unwrap();
        let q = h.eigenvectors;
        let u = &q * d * q.adjoint();
        let s = eig_unitary(&u).unwrap();
        assert!(max_abs_diff(&s.reconstruct(), &u) < 1e-13);
        assert!(s.gram_defect() < 1e-13);
        assert!((s.eigenvalues[0] - c(0.0, -th).exp()).norm() < 1e-13);
        assert!((s.eigenvalues[2] - c(0.0, th).exp()).norm() < 1e-13);
    }

    #[test]
    fn rejects_non_unitary() {
        let m = identity(2) * c(2.0, 0.0);
        assert!(matches!(eig_unitary(&m), Err(Error::NotUnitary(_))));
    }
}
