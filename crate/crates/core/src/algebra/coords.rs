use num_complex::Complex64;

use super::algebra_dim;
use crate::error::{Error, Result};

/// Real coordinates `M⃗` of an algebra element `M⃗·Λ⃗`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraCoords {
    n: usize,
    values: Vec<f64>,
}

impl AlgebraCoords {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        check_len(n, values.len())?;
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { n, values })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            values: vec![0.0; algebra_dim(n)],
        }
    }

    /// Unit vector along generator `j` (0-based).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut out = Self::zeros(n);
        out.values[j] = 1.0;
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    /// Largest componentwise difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// Embeds as a pure vector `(0, M⃗)`.
    pub fn to_complex(&self) -> ComplexCoords {
        ComplexCoords {
            n: self.n,
            scalar: Complex64::new(0.0, 0.0),
            values: self
                .values
                .iter()
                .map(|v| Complex64::new(*v, 0.0))
                .collect(),
        }
    }
}

/// Coordinates `(f₀, f⃗)` of the matrix `f₀ I_N + f⃗·Λ⃗` with complex entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexCoords {
    n: usize,
    pub scalar: Complex64,
    values: Vec<Complex64>,
}

impl ComplexCoords {
    pub fn new(n: usize, scalar: Complex64, values: Vec<Complex64>) -> Result<Self> {
        check_len(n, values.len())?;
        if !(scalar.re.is_finite() && scalar.im.is_finite()) {
            return Err(Error::InvalidArgument("non-finite scalar part".into()));
        }
        if let Some(i) = values
            .iter()
            .position(|v| !(v.re.is_finite() && v.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { n, scalar, values })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            scalar: Complex64::new(0.0, 0.0),
            values: vec![Complex64::new(0.0, 0.0); algebra_dim(n)],
        }
    }

    /// `(1, 0⃗)`, the identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n);
        out.scalar = Complex64::new(1.0, 0.0);
        out
    }

    pub(crate) fn from_parts(n: usize, scalar: Complex64, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), algebra_dim(n));
        Self { n, scalar, values }
    }

    pub fn unit(n: usize, j: usize) -> Self {
        let mut out = Self::zeros(n);
        out.values[j] = Complex64::new(1.0, 0.0);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Bilinear `a⃗·b⃗` (no conjugation).
    pub fn dot(&self, other: &Self) -> Complex64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            n: self.n,
            scalar: self.scalar * s,
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            scalar: self.scalar + other.scalar,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            n: self.n,
            scalar: self.scalar.conj(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Largest modulus over the vector part.
    pub fn vector_max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.norm()))
    }

    pub fn vector_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest difference over scalar and vector parts.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold((self.scalar - other.scalar).norm(), |acc, (a, b)| {
                acc.max((a - b).norm())
            })
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.im.abs()))
    }

    /// Real part of the vector, dropping the scalar.
    pub fn real_vector(&self) -> AlgebraCoords {
        AlgebraCoords {
            n: self.n,
            values: self.values.iter().map(|v| v.re).collect(),
        }
    }
}

fn check_len(n: usize, len: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let expected = algebra_dim(n);
    if len != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: len,
        });
    }
    Ok(())
}

pub(crate) fn check_same(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}
