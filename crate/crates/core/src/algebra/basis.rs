use num_complex::Complex64;

use super::coords::check_same;
use super::{algebra_dim, AlgebraCoords, ComplexCoords};
use crate::error::{Error, Result};
use crate::matrix::{identity, trace_product, CMatrix};

/// Generalized Gell-Mann generators of `su(N)`, normalized to
/// `Tr(Λ_j Λ_k) = 2δ_jk`.
///
/// Ordering: the `N(N−1)/2` symmetric off-diagonal matrices `E_jk + E_kj`,
/// then the antisymmetric ones `−i E_jk + i E_kj`, each block over `j < k`
/// in row-major order, then the `N−1` diagonal generators
/// `√(2/(l(l+1))) · diag(1, …, 1, −l, 0, …)`. For `N = 2` this is `σ₁, σ₂, σ₃`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorBasis {
    n: usize,
    generators: Vec<CMatrix>,
}

impl GeneratorBasis {
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let zero = Complex64::new(0.0, 0.0);
        let mut generators = Vec::with_capacity(algebra_dim(n));

        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
            .collect();
        for &(j, k) in &pairs {
            let mut g = CMatrix::from_element(n, n, zero);
            g[(j, k)] = Complex64::new(1.0, 0.0);
            g[(k, j)] = Complex64::new(1.0, 0.0);
            generators.push(g);
        }
        for &(j, k) in &pairs {
            let mut g = CMatrix::from_element(n, n, zero);
            g[(j, k)] = Complex64::new(0.0, -1.0);
            g[(k, j)] = Complex64::new(0.0, 1.0);
            generators.push(g);
        }
        for l in 1..n {
            let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
            let mut g = CMatrix::from_element(n, n, zero);
            for m in 0..l {
                g[(m, m)] = Complex64::new(norm, 0.0);
            }
            g[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
            generators.push(g);
        }
        Ok(Self { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn generator(&self, j: usize) -> &CMatrix {
        &self.generators[j]
    }

    /// `scalar·I_N + Σ_j values_j Λ_j`.
    pub fn to_matrix(&self, c: &ComplexCoords) -> Result<CMatrix> {
        check_same(self.n, c.n())?;
        let mut out = identity(self.n) * c.scalar;
        for (g, v) in self.generators.iter().zip(c.values()) {
            if *v != Complex64::new(0.0, 0.0) {
                out += g * *v;
            }
        }
        Ok(out)
    }

    /// The Hermitian matrix `M⃗·Λ⃗`.
    pub fn algebra_matrix(&self, m: &AlgebraCoords) -> Result<CMatrix> {
        check_same(self.n, m.n())?;
        let mut out = CMatrix::from_element(self.n, self.n, Complex64::new(0.0, 0.0));
        for (g, v) in self.generators.iter().zip(m.values()) {
            if *v != 0.0 {
                out += g * Complex64::new(*v, 0.0);
            }
        }
        Ok(out)
    }

    /// Inverse of [`to_matrix`](Self::to_matrix): `scalar = Tr(m)/N`,
    /// `values_k = Tr(m Λ_k)/2`. Exact for every `N×N` matrix.
    pub fn from_matrix(&self, m: &CMatrix) -> Result<ComplexCoords> {
        if m.nrows() != self.n || m.ncols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: if m.nrows() != self.n {
                    m.nrows()
                } else {
                    m.ncols()
                },
            });
        }
        let scalar = m.trace() / self.n as f64;
        let values = self
            .generators
            .iter()
            .map(|g| trace_product(m, g) * 0.5)
            .collect();
        Ok(ComplexCoords::from_parts(self.n, scalar, values))
    }
}
