use num_complex::Complex64;

use crate::algebra::{AlgebraCoords, ComplexCoords, GeneratorBasis, StructureTensors};
use crate::error::{Error, Result};
use crate::linearize::linearize_fn;
use crate::matrix::CMatrix;

use super::exp_dense;

const KERNEL_COND_LIMIT: f64 = 1e12;
const SIMILARITY_TOLERANCE: f64 = 1e-9;
const DIRECT_TRACE_TOLERANCE: f64 = 1e-10;

/// `K± = μ₀ I + μ⃗⊙ ± i μ⃗⊗` acting on algebra vectors, built from
/// `exp(iM⃗·Λ⃗) = μ₀ I_N + μ⃗·Λ⃗`.
#[derive(Debug, Clone)]
pub struct AdjointKernel {
    pub kplus: CMatrix,
    pub kminus: CMatrix,
}

impl AdjointKernel {
    pub fn new(t: &StructureTensors, mu: &ComplexCoords) -> Result<Self> {
        let dim = t.dim();
        let mut sym = CMatrix::zeros(dim, dim);
        let mut anti = CMatrix::zeros(dim, dim);
        for l in 0..dim {
            let e = ComplexCoords::unit(t.n(), l);
            let s = t.dot_sym(mu, &e)?;
            let a = t.cross(mu, &e)?;
            for j in 0..dim {
                sym[(j, l)] = s.values()[j];
                anti[(j, l)] = a.values()[j] * Complex64::new(0.0, 1.0);
            }
        }
        for j in 0..dim {
            sym[(j, j)] += mu.scalar;
        }
        Ok(Self {
            kplus: &sym + &anti,
            kminus: sym - anti,
        })
    }
}

/// Result of [`similarity_detailed`] together with its self-checks.
#[derive(Debug, Clone)]
pub struct SimilarityOutcome {
    pub nprime: AlgebraCoords,
    /// `||N⃗′| − |N⃗||`
    pub norm_drift: f64,
    /// `|μ⃗·N⃗ − μ⃗·N⃗′|`
    pub scalar_constraint: f64,
    /// 1-norm condition number of `K₊`
    pub condition: f64,
}

/// `N⃗′` with `N⃗′·Λ⃗ = exp(−iM⃗·Λ⃗) (N⃗·Λ⃗) exp(iM⃗·Λ⃗)`.
pub fn similarity(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<AlgebraCoords> {
    similarity_detailed(t, basis, m, nvec).map(|o| o.nprime)
}

/// Solves `K₊ N⃗′ = K₋ N⃗` and checks reality, the scalar constraint and
/// norm preservation.
pub fn similarity_detailed(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<SimilarityOutcome> {
    let n = basis.n();
    if nvec.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: nvec.n(),
        });
    }
    let mu = linearize_fn(t, basis, m, |x| (Complex64::new(0.0, 1.0) * x).exp())?;
    let kernel = AdjointKernel::new(t, &mu)?;
    let nu = nvec.to_complex();
    let rhs = &kernel.kminus * nalgebra::DVector::from_column_slice(nu.values());

    let lu = kernel.kplus.clone().lu();
    let inverse = lu
        .try_inverse()
        .ok_or(Error::IllConditioned(f64::INFINITY))?;
    let condition = one_norm(&kernel.kplus) * one_norm(&inverse);
    if !(condition <= KERNEL_COND_LIMIT) {
        return Err(Error::IllConditioned(condition));
    }
    let x = lu.solve(&rhs).ok_or(Error::IllConditioned(f64::INFINITY))?;

    let scale = nvec.norm().max(1.0);
    let imag = x.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if imag > SIMILARITY_TOLERANCE * scale {
        return Err(Error::ConstraintViolation {
            name: "real conjugate",
            residual: imag,
        });
    }
    let nprime = AlgebraCoords::new(n, x.iter().map(|z| z.re).collect())?;

    let norm_drift = (nprime.norm() - nvec.norm()).abs();
    if norm_drift > SIMILARITY_TOLERANCE * scale {
        return Err(Error::ConstraintViolation {
            name: "norm preservation",
            residual: norm_drift,
        });
    }
    let scalar_constraint = (mu.dot(&nu) - mu.dot(&nprime.to_complex())).norm();
    if scalar_constraint > SIMILARITY_TOLERANCE * scale {
        return Err(Error::ConstraintViolation {
            name: "scalar constraint",
            residual: scalar_constraint,
        });
    }
    Ok(SimilarityOutcome {
        nprime,
        norm_drift,
        scalar_constraint,
        condition,
    })
}

/// Dense `U (N⃗·Λ⃗) U†` with `U = exp(−iM⃗·Λ⃗)`.
pub fn similarity_direct(
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    nvec: &AlgebraCoords,
) -> Result<AlgebraCoords> {
    let u = exp_dense(basis, m)?;
    let conj = &u * basis.algebra_matrix(nvec)? * u.adjoint();
    let coords = basis.from_matrix(&conj)?;
    let residue = coords.scalar.norm();
    if residue > DIRECT_TRACE_TOLERANCE * nvec.norm().max(1.0) {
        return Err(Error::ConstraintViolation {
            name: "traceless conjugate",
            residual: residue,
        });
    }
    Ok(coords.real_vector())
}

fn one_norm(m: &CMatrix) -> f64 {
    m.column_iter()
        .map(|col| col.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}
