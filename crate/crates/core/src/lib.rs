//! Baker-Campbell-Hausdorff composition and similarity transformations for
//! the special unitary groups SU(N).
//!
//! Every function of a Lie-algebra element `M = M⃗·Λ⃗` reduces to a linear
//! combination `f₀ I + f⃗·Λ⃗` of the identity and the generators. Products of
//! two group elements stay in that form because `su(N)` is closed under
//! anticommutation, so composing `exp(−iM⃗·Λ⃗) exp(−iN⃗·Λ⃗)` only needs three
//! small eigendecompositions and the structure tensors `f` and `d`.
//!
//! Module map:
//!
//! - [`algebra`]: generalized Gell-Mann basis, structure tensors, the `⊗`
//!   and `⊙` vector products, and coordinate/matrix conversions.
//! - [`spectral`]: Jacobi eigensolver, characteristic polynomial, Lagrange
//!   projectors and power-series coefficients of matrix functions.
//! - [`linearize`]: the power recursion, `f(M⃗·Λ⃗) → (f₀, f⃗)` and the inverse
//!   step back to algebra coordinates.
//! - [`bch`]: composition, adjoint similarity and their dense oracles.

// Tolerance checks are written `!(x < tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod bch;
pub mod error;
pub mod linearize;
pub mod matrix;
pub mod sampling;
pub mod spectral;
pub mod wire;

pub use algebra::{algebra_dim, AlgebraCoords, ComplexCoords, GeneratorBasis, StructureTensors};
pub use bch::{
    compose, compose_direct, compose_element, exp_dense, similarity, similarity_detailed,
    similarity_direct, su2_compose_closed_form, su2_exp_closed_form, AdjointKernel,
    SimilarityOutcome,
};
pub use error::{Error, Result};
pub use linearize::{
    delinearize_exp, f0_trace, linearize_exp, linearize_fn, power_table, unitary_log, PowerTable,
};
pub use matrix::{CMatrix, Complex64};
pub use spectral::{
    apply_spectral, char_poly, eig_hermitian, eig_unitary, expansion_coeffs,
    expansion_coeffs_derivative, lagrange_projectors, CharPoly, ExpFamily, SpectralDecomposition,
};

/// Convenience bundle of a basis and its structure tensors for one `N`.
#[derive(Debug, Clone)]
pub struct SuN {
    pub basis: GeneratorBasis,
    pub tensors: StructureTensors,
}

impl SuN {
    pub fn new(n: usize) -> Result<Self> {
        let basis = GeneratorBasis::build(n)?;
        let tensors = StructureTensors::from_basis(&basis);
        Ok(Self { basis, tensors })
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }
}
