use num_complex::Complex64;

use super::{CharPoly, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::matrix::{identity, CMatrix};

/// Relative eigenvalue gap below which a spectrum counts as degenerate.
pub const GAP_TOLERANCE: f64 = 1e-9;
/// Largest accepted `∞`-norm condition number of the scaled Vandermonde
/// matrix `V_kn = (m_k/s)^n`.
pub const VANDERMONDE_COND_LIMIT: f64 = 1e12;

/// The exponential family `x ↦ exp(rate·x)` and its derivatives.
///
/// `rate = 0` is the constant function 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpFamily {
    pub rate: Complex64,
}

impl ExpFamily {
    pub fn new(rate: Complex64) -> Self {
        Self { rate }
    }

    /// `exp(−ix)`, the group exponential.
    pub fn exp_minus_i() -> Self {
        Self::new(Complex64::new(0.0, -1.0))
    }

    pub fn exp_plus_i() -> Self {
        Self::new(Complex64::new(0.0, 1.0))
    }

    pub fn constant() -> Self {
        Self::new(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self, x: Complex64) -> Complex64 {
        (self.rate * x).exp()
    }

    /// `d^p/dx^p exp(rate·x) = rate^p exp(rate·x)`.
    pub fn derivative(&self, order: usize, x: Complex64) -> Complex64 {
        self.rate.powu(order as u32) * self.value(x)
    }

    /// `rate^{−p} ∂_λ^p f(λx)` at `λ = 1`; equals `x^p f(x)` and is taken as
    /// that limit when `rate = 0`.
    fn normalized_lambda_derivative(&self, order: usize, x: Complex64) -> Complex64 {
        let xp = x.powu(order as u32);
        if self.rate == Complex64::new(0.0, 0.0) || order == 0 {
            xp * self.value(x)
        } else {
            xp * self.derivative(order, x) / self.rate.powu(order as u32)
        }
    }

    fn scaled(&self, s: f64) -> Self {
        Self::new(self.rate * s)
    }
}

/// `f(M) = Σ_k f(m_k) |m_k⟩⟨m_k|`. Works for degenerate spectra.
pub fn apply_spectral<F>(spec: &SpectralDecomposition, f: F) -> CMatrix
where
    F: Fn(Complex64) -> Complex64,
{
    let n = spec.eigenvectors.nrows();
    let mut out = CMatrix::zeros(n, n);
    for (k, m) in spec.eigenvalues.iter().enumerate() {
        let v = spec.eigenvectors.column(k);
        out += (v * v.adjoint()) * f(*m);
    }
    out
}

/// Spectral radius, after checking that no two eigenvalues are closer than
/// `GAP_TOLERANCE·radius`.
fn nondegenerate_radius(spec: &SpectralDecomposition) -> Result<f64> {
    let radius = spec.spectral_radius();
    let gap = spec.min_gap();
    let tol = GAP_TOLERANCE * radius;
    if !(gap > tol) || radius == 0.0 {
        return Err(Error::DegenerateSpectrum { gap, tol });
    }
    Ok(radius)
}

/// Lagrange projectors `P_k = Π_{n≠k} (M − m_n)/(m_k − m_n)`.
pub fn lagrange_projectors(m: &CMatrix, spec: &SpectralDecomposition) -> Result<Vec<CMatrix>> {
    nondegenerate_radius(spec)?;
    let n = m.nrows();
    let e = &spec.eigenvalues;
    Ok((0..e.len())
        .map(|k| {
            let mut p = identity(n);
            for (j, mj) in e.iter().enumerate() {
                if j != k {
                    p *= (m - identity(n) * *mj) / (e[k] - mj);
                }
            }
            p
        })
        .collect())
}

/// Row `k` holds the monomial coefficients of the Lagrange basis polynomial
/// `L_k(x) = Π_{j≠k} (x − y_j)/(y_k − y_j)`; as a matrix this is the
/// transposed inverse of the Vandermonde matrix of `y`.
fn lagrange_basis(y: &[Complex64]) -> Vec<Vec<Complex64>> {
    y.iter()
        .enumerate()
        .map(|(k, yk)| {
            let mut poly = vec![Complex64::new(1.0, 0.0)];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, yj) in y.iter().enumerate() {
                if j == k {
                    continue;
                }
                let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * yj;
                }
                poly = next;
                denom *= yk - yj;
            }
            poly.iter().map(|c| c / denom).collect()
        })
        .collect()
}

fn vandermonde_condition(y: &[Complex64], basis: &[Vec<Complex64>]) -> f64 {
    let n = y.len();
    let v_norm = y
        .iter()
        .map(|yk| (0..n).map(|p| yk.norm().powi(p as i32)).sum::<f64>())
        .fold(0.0, f64::max);
    let inv_norm = (0..n)
        .map(|p| basis.iter().map(|row| row[p].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    v_norm * inv_norm
}

/// Scaled eigenvalues `m_k/s`, the radius `s` and the Lagrange basis, after
/// the degeneracy and conditioning checks shared by both coefficient routes.
fn scaled_setup(
    spec: &SpectralDecomposition,
) -> Result<(f64, Vec<Complex64>, Vec<Vec<Complex64>>)> {
    let radius = nondegenerate_radius(spec)?;
    let y: Vec<Complex64> = spec.eigenvalues.iter().map(|m| m / radius).collect();
    let basis = lagrange_basis(&y);
    let cond = vandermonde_condition(&y, &basis);
    if !(cond <= VANDERMONDE_COND_LIMIT) {
        return Err(Error::IllConditioned(cond));
    }
    Ok((radius, y, basis))
}

/// Coefficients `f_n` of `f(M) = Σ_{n<N} f_n M^n`, with
/// `f_n = Σ_k P_kn f(m_k)` from the Lagrange projectors expanded in powers
/// of `M`.
pub fn expansion_coeffs<F>(spec: &SpectralDecomposition, f: F) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Complex64,
{
    let (radius, _, basis) = scaled_setup(spec)?;
    let values: Vec<Complex64> = spec.eigenvalues.iter().map(|m| f(*m)).collect();
    let n = values.len();
    Ok((0..n)
        .map(|p| {
            let g: Complex64 = basis.iter().zip(&values).map(|(row, fv)| row[p] * fv).sum();
            g / radius.powi(p as i32)
        })
        .collect())
}

/// The same coefficients from the top one,
/// `f_{N−1}(λ) = Σ_k Δ_k f(λ m_k)` with `Δ_k = Π_{j≠k} (m_k − m_j)^{−1}`,
/// and the characteristic-polynomial recurrence
///
/// ```text
/// f_n = Σ_{ν=0}^{N−n−1} a_{N−ν} D^{N−n−1−ν} f_{N−1}(λ) |_{λ=1},   a_N = 1,
/// ```
///
/// where `D = rate^{−1} ∂_λ`, so that `D f(λM) = M f(λM)` for the
/// exponential family. Computed on `M/s` with `s` the spectral radius.
pub fn expansion_coeffs_derivative(
    spec: &SpectralDecomposition,
    char: &CharPoly,
    family: &ExpFamily,
) -> Result<Vec<Complex64>> {
    let n = spec.len();
    if char.degree() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: char.degree(),
        });
    }
    let (radius, y, _) = scaled_setup(spec)?;
    let fam = family.scaled(radius);

    let delta: Vec<Complex64> = y
        .iter()
        .enumerate()
        .map(|(k, yk)| {
            let prod: Complex64 = y
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, yj)| yk - yj)
                .product();
            prod.inv()
        })
        .collect();
    // h[p] = D^p f_{N−1}(λ) at λ = 1
    let h: Vec<Complex64> = (0..n)
        .map(|p| {
            delta
                .iter()
                .zip(&y)
                .map(|(d, yk)| d * fam.normalized_lambda_derivative(p, *yk))
                .sum()
        })
        .collect();
    // characteristic polynomial of M/s
    let a: Vec<Complex64> = (0..=n)
        .map(|m| char.coefficient(m) / radius.powi((n - m) as i32))
        .collect();

    Ok((0..n)
        .map(|p| {
            let top = n - p - 1;
            let g: Complex64 = (0..=top).map(|nu| a[n - nu] * h[top - nu]).sum();
            g / radius.powi(p as i32)
        })
        .collect())
}
