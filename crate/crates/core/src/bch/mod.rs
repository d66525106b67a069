//! Composition `exp(−iR⃗·Λ⃗) = exp(−iM⃗·Λ⃗) exp(−iN⃗·Λ⃗)` and the adjoint
//! similarity `exp(−iM) N exp(iM)`, each with a dense-matrix counterpart.

mod similarity;
mod su2;

pub use similarity::{
    similarity, similarity_detailed, similarity_direct, AdjointKernel, SimilarityOutcome,
};
pub use su2::{su2_compose_closed_form, su2_exp_closed_form};

use num_complex::Complex64;

use crate::algebra::{AlgebraCoords, ComplexCoords, GeneratorBasis, StructureTensors};
use crate::error::Result;
use crate::linearize::{delinearize_exp, linearize_exp, unitary_log};
use crate::matrix::CMatrix;
use crate::spectral::{apply_spectral, eig_hermitian};

/// Linearized product `(ρ₀, ρ⃗)` of `exp(−iM⃗·Λ⃗)` and `exp(−iN⃗·Λ⃗)`.
pub fn compose_element(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<ComplexCoords> {
    let mu = linearize_exp(t, basis, m)?;
    let nu = linearize_exp(t, basis, nvec)?;
    t.multiply(&mu, &nu)
}

/// `R⃗` with `exp(−iR⃗·Λ⃗) = exp(−iM⃗·Λ⃗) exp(−iN⃗·Λ⃗)`.
pub fn compose(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<AlgebraCoords> {
    delinearize_exp(basis, &compose_element(t, basis, m, nvec)?)
}

/// Dense `exp(−iM⃗·Λ⃗)` through the Hermitian eigendecomposition.
pub fn exp_dense(basis: &GeneratorBasis, m: &AlgebraCoords) -> Result<CMatrix> {
    let spec = eig_hermitian(&basis.algebra_matrix(m)?)?;
    Ok(apply_spectral(&spec, |x| {
        (Complex64::new(0.0, -1.0) * x).exp()
    }))
}

/// Same contract as [`compose`], computed with dense exponentials and the
/// unitary logarithm.
pub fn compose_direct(
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<AlgebraCoords> {
    let u = exp_dense(basis, m)? * exp_dense(basis, nvec)?;
    unitary_log(basis, &u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::max_abs_diff;
    use std::f64::consts::FRAC_PI_2;

    fn su(n: usize) -> (GeneratorBasis, StructureTensors) {
        let b = GeneratorBasis::build(n).unwrap();
        let t = StructureTensors::from_basis(&b);
        (b, t)
    }

    fn v(n: usize, x: &[f64]) -> AlgebraCoords {
        AlgebraCoords::new(n, x.to_vec()).unwrap()
    }

    #[test]
    fn pauli_product() {
        let (b, t) = su(2);
        let x = v(2, &[FRAC_PI_2, 0.0, 0.0]);
        let y = v(2, &[0.0, FRAC_PI_2, 0.0]);
        let z = v(2, &[0.0, 0.0, FRAC_PI_2]);
        assert!(compose(&t, &b, &x, &y).unwrap().max_diff(&z) < 1e-12);
        assert!(compose_direct(&b, &x, &y).unwrap().max_diff(&z) < 1e-12);
    }

    #[test]
    fn zero_is_neutral() {
        let (b, t) = su(3);
        let m = v(3, &[0.1, -0.2, 0.3, 0.05, 0.4, -0.1, 0.2, 0.15]);
        let z = AlgebraCoords::zeros(3);
        assert!(compose(&t, &b, &m, &z).unwrap().max_diff(&m) < 1e-12);
        assert!(compose(&t, &b, &z, &m).unwrap().max_diff(&m) < 1e-12);
        assert!(compose_direct(&b, &m, &z).unwrap().max_diff(&m) < 1e-12);
    }

    #[test]
    fn linearized_and_dense_agree() {
        let (b, t) = su(4);
        let m = v(
            4,
            &[
                0.3, -0.1, 0.2, 0.05, 0.4, -0.3, 0.1, 0.2, -0.25, 0.15, 0.35, -0.05, 0.12, -0.2,
                0.07,
            ],
        );
        let n = v(
            4,
            &[
                -0.2, 0.1, 0.05, 0.3, -0.1, 0.2, 0.25, -0.15, 0.1, 0.05, -0.3, 0.2, -0.1, 0.3, 0.02,
            ],
        );
        let r = compose(&t, &b, &m, &n).unwrap();
        let rd = compose_direct(&b, &m, &n).unwrap();
        assert!(r.max_diff(&rd) < 1e-10);
        let lhs = exp_dense(&b, &r).unwrap();
        let rhs = exp_dense(&b, &m).unwrap() * exp_dense(&b, &n).unwrap();
        assert!(max_abs_diff(&lhs, &rhs) < 1e-10);
    }
}
