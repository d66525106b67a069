//! Reduction of `f(M⃗·Λ⃗)` to `f₀ I_N + f⃗·Λ⃗` and the inverse step from a
//! group element back to algebra coordinates.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{AlgebraCoords, ComplexCoords, GeneratorBasis, StructureTensors};
use crate::error::{Error, Result};
use crate::matrix::{unitarity_defect, CMatrix};
use crate::spectral::{eig_hermitian, eig_unitary, expansion_coeffs};

/// Phases closer than this to `±π` are rejected as branch-cut ambiguous.
pub const BRANCH_CUT_TOLERANCE: f64 = 1e-9;
/// Allowed imaginary residue and scalar part of a recovered logarithm.
pub const REALITY_TOLERANCE: f64 = 1e-9;
const UNIMODULAR_TOLERANCE: f64 = 1e-8;

/// Powers `M^n = μ_{0,n} I_N + μ⃗_n·Λ⃗` for `n = 0..=count`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerTable {
    n: usize,
    rows: Vec<ComplexCoords>,
}

impl PowerTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[ComplexCoords] {
        &self.rows
    }

    pub fn row(&self, power: usize) -> &ComplexCoords {
        &self.rows[power]
    }
}

/// Runs the recursion
///
/// ```text
/// μ_{0,n+1} = (2/N) μ⃗_n·M⃗,   μ⃗_{n+1} = μ_{0,n} M⃗ + μ⃗_n ⊙ M⃗
/// ```
///
/// from `(μ_{0,0}, μ⃗_0) = (1, 0⃗)` and `(μ_{0,1}, μ⃗_1) = (0, M⃗)`. The term
/// `i μ⃗_n ⊗ M⃗` is dropped because every `μ⃗_n` is a symmetric power of
/// `M⃗`; that it vanishes is checked at each step.
pub fn power_table(t: &StructureTensors, m: &AlgebraCoords, count: usize) -> Result<PowerTable> {
    let n = t.n();
    if m.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.n(),
        });
    }
    if count > n {
        return Err(Error::InvalidArgument(format!(
            "power_table count {count} exceeds N = {n}"
        )));
    }
    let mc = m.to_complex();
    let mut rows = vec![ComplexCoords::identity(n)];
    if count >= 1 {
        rows.push(mc.clone());
    }
    let m_norm = m.norm();
    for p in 1..count {
        let cur = &rows[p];
        let cross = t.cross(cur, &mc)?.vector_max_abs();
        let bound = 1e-10 * (cur.vector_norm() * m_norm).max(1.0);
        if cross > bound {
            return Err(Error::TensorIntegrity(format!(
                "μ⃗_{p} ⊗ M⃗ = {cross:e} does not vanish"
            )));
        }
        let sym = t.dot_sym(cur, &mc)?;
        let scalar = cur.dot(&mc) * (2.0 / n as f64);
        let values = sym
            .values()
            .iter()
            .zip(mc.values())
            .map(|(s, x)| cur.scalar * x + s)
            .collect();
        rows.push(ComplexCoords::new(n, scalar, values)?);
    }
    Ok(PowerTable { n, rows })
}

/// `f(M⃗·Λ⃗) = f₀ I_N + f⃗·Λ⃗` with `f₀ = Σ f_n μ_{0,n}` and
/// `f⃗ = Σ f_n μ⃗_n`, the `f_n` coming from the Lagrange expansion of `f`
/// over the eigenvalues of `M⃗·Λ⃗`.
///
/// The zero vector maps to `(f(0), 0⃗)`; any other degenerate spectrum is an
/// error.
pub fn linearize_fn<F>(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
    f: F,
) -> Result<ComplexCoords>
where
    F: Fn(Complex64) -> Complex64,
{
    let n = basis.n();
    if m.n() != n || t.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if m.n() != n { m.n() } else { t.n() },
        });
    }
    if m.is_zero() {
        let mut out = ComplexCoords::zeros(n);
        out.scalar = f(Complex64::new(0.0, 0.0));
        return Ok(out);
    }
    let spec = eig_hermitian(&basis.algebra_matrix(m)?)?;
    let coeffs = expansion_coeffs(&spec, f)?;
    let table = power_table(t, m, n - 1)?;
    let mut out = ComplexCoords::zeros(n);
    for (c, row) in coeffs.iter().zip(table.rows()) {
        out = out.add(&row.scale(*c));
    }
    Ok(out)
}

/// `exp(−i M⃗·Λ⃗)` in linearized form.
pub fn linearize_exp(
    t: &StructureTensors,
    basis: &GeneratorBasis,
    m: &AlgebraCoords,
) -> Result<ComplexCoords> {
    linearize_fn(t, basis, m, |x| (Complex64::new(0.0, -1.0) * x).exp())
}

/// `f₀ = (1/N) Σ_k f(m_k)`, the trace of `f(M⃗·Λ⃗)` over `N`.
pub fn f0_trace<F>(basis: &GeneratorBasis, m: &AlgebraCoords, f: F) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    if m.is_zero() {
        return Ok(f(Complex64::new(0.0, 0.0)));
    }
    let spec = eig_hermitian(&basis.algebra_matrix(m)?)?;
    let sum: Complex64 = spec.eigenvalues.iter().map(|x| f(*x)).sum();
    Ok(sum / basis.n() as f64)
}

/// Recovers `M⃗` from a linearized group element `g = (f₀, f⃗)` with
/// `to_matrix(g) = exp(−i M⃗·Λ⃗)`.
pub fn delinearize_exp(basis: &GeneratorBasis, g: &ComplexCoords) -> Result<AlgebraCoords> {
    unitary_log(basis, &basis.to_matrix(g)?)
}

/// Traceless Hermitian logarithm `M⃗` with `exp(−i M⃗·Λ⃗) = U` for
/// `U ∈ SU(N)`.
///
/// Branch rule: eigenphases `θ_k = arg u_k ∈ (−π, π]` sum to `2πs`; for
/// `s > 0` the `s` largest phases are lowered by `2π`, for `s < 0` the `|s|`
/// smallest are raised by `2π` (ties by eigenvalue index). For `s = 0` this
/// is the principal logarithm. Then `M = −Σ θ_k |u_k⟩⟨u_k|`.
pub fn unitary_log(basis: &GeneratorBasis, u: &CMatrix) -> Result<AlgebraCoords> {
    let n = basis.n();
    if u.nrows() != n || u.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.nrows(),
        });
    }
    let defect = unitarity_defect(u).max((u.determinant() - 1.0).norm());
    if !(defect < UNIMODULAR_TOLERANCE) {
        return Err(Error::NotUnitary(defect));
    }
    let spec = eig_unitary(u)?;
    let mut theta: Vec<f64> = spec.eigenvalues.iter().map(|z| z.arg()).collect();
    if let Some(&bad) = theta.iter().find(|t| PI - t.abs() < BRANCH_CUT_TOLERANCE) {
        return Err(Error::BranchCut(bad));
    }
    let total: f64 = theta.iter().sum();
    let s = (total / (2.0 * PI)).round();
    let winding_defect = (total - 2.0 * PI * s).abs();
    if winding_defect > 1e-6 {
        return Err(Error::NotUnitary(winding_defect));
    }
    let shifts = s.abs() as usize;
    if shifts > 0 {
        // eigenvalues are sorted by ascending phase
        let order: Vec<usize> = if s > 0.0 {
            (0..n).rev().collect()
        } else {
            (0..n).collect()
        };
        let last = theta[order[shifts - 1]];
        if let Some(&next) = order.get(shifts) {
            let gap = (theta[next] - last).abs();
            if gap < BRANCH_CUT_TOLERANCE {
                return Err(Error::DegenerateSpectrum {
                    gap,
                    tol: BRANCH_CUT_TOLERANCE,
                });
            }
        }
        let delta = if s > 0.0 { -2.0 * PI } else { 2.0 * PI };
        for &k in &order[..shifts] {
            theta[k] += delta;
        }
    }

    let mut log = CMatrix::zeros(n, n);
    for (k, th) in theta.iter().enumerate() {
        log += spec.projector(k) * Complex64::new(-th, 0.0);
    }
    let coords = basis.from_matrix(&log)?;
    let scale = coords.vector_norm().max(1.0);
    let residue = coords.max_imag().max(coords.scalar.norm());
    if residue > REALITY_TOLERANCE * scale {
        return Err(Error::ConstraintViolation {
            name: "real traceless logarithm",
            residual: residue,
        });
    }
    Ok(coords.real_vector())
}
