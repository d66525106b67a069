use num_complex::Complex64;

use crate::matrix::{identity, CMatrix};

/// Monic characteristic polynomial `Σ_{n=0}^{N} a_n x^n` with `a_N = 1`.
///
/// By Cayley–Hamilton `Σ a_n M^n = 0`; `a_{N−1} = −Tr M` and
/// `a_0 = (−1)^N det M`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    pub coefficients: Vec<Complex64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> Complex64 {
        self.coefficients[n]
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| acc * x + a)
    }

    /// `Σ a_n M^n`, which vanishes for the matrix the polynomial came from.
    pub fn eval_matrix(&self, m: &CMatrix) -> CMatrix {
        let n = m.nrows();
        let mut acc = CMatrix::zeros(n, n);
        for a in self.coefficients.iter().rev() {
            acc = &acc * m + identity(n) * *a;
        }
        acc
    }

    /// Coefficients of `Π_k (x − r_k)`, used to compare against roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (i, ci) in c.iter().enumerate() {
                next[i + 1] += ci;
                next[i] -= ci * r;
            }
            c = next;
        }
        Self { coefficients: c }
    }
}

/// Faddeev–LeVerrier recurrence:
/// `M_k = A M_{k−1} + a_{N−k+1} I`, `a_{N−k} = −Tr(A M_k)/k`.
pub fn char_poly(m: &CMatrix) -> CharPoly {
    let n = m.nrows();
    let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
    a[n] = Complex64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m * &mk + identity(n) * a[n - k + 1];
        let am = m * &mk;
        a[n - k] = -am.trace() / k as f64;
    }
    CharPoly { coefficients: a }
}
