//! Dense eigen-machinery for small Hermitian and unitary matrices and the
//! spectral calculus `f(M) = Σ_k f(m_k) P_k`.

mod functions;
mod jacobi;
mod poly;
mod unitary;

pub use functions::{
    apply_spectral, expansion_coeffs, expansion_coeffs_derivative, lagrange_projectors, ExpFamily,
    GAP_TOLERANCE, VANDERMONDE_COND_LIMIT,
};
pub use jacobi::eig_hermitian;
pub use poly::{char_poly, CharPoly};
pub use unitary::eig_unitary;

use num_complex::Complex64;

use crate::matrix::{identity, max_abs_diff, CMatrix};

/// Eigenvalues `m_k` with orthonormal eigenvectors `|m_k⟩` stored as the
/// columns of `eigenvectors`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `|m_k⟩⟨m_k|`.
    pub fn projector(&self, k: usize) -> CMatrix {
        let v = self.eigenvectors.column(k);
        v * v.adjoint()
    }

    /// `Σ_k m_k |m_k⟩⟨m_k|`.
    pub fn reconstruct(&self) -> CMatrix {
        apply_spectral(self, |x| x)
    }

    /// `‖V†V − I‖_max`.
    pub fn gram_defect(&self) -> f64 {
        let v = &self.eigenvectors;
        max_abs_diff(&(v.adjoint() * v), &identity(v.ncols()))
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues
            .iter()
            .fold(0.0, |acc, z| acc.max(z.norm()))
    }

    /// Smallest distance between two eigenvalues (infinite for `N = 1`).
    pub fn min_gap(&self) -> f64 {
        let e = &self.eigenvalues;
        let mut gap = f64::INFINITY;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                gap = gap.min((e[i] - e[j]).norm());
            }
        }
        gap
    }
}
