use std::collections::BTreeMap;

use num_complex::Complex64;

use super::coords::check_same;
use super::{ComplexCoords, GeneratorBasis};
use crate::error::Result;
use crate::matrix::{anticommutator, commutator, trace_product};

/// Entries below this magnitude are treated as structural zeros.
pub const SPARSE_THRESHOLD: f64 = 1e-13;

/// The antisymmetric tensor `f` and symmetric tensor `d` of `su(N)`,
///
/// ```text
/// [Λ_j, Λ_k] = 2i f_jkl Λ_l,   {Λ_j, Λ_k} = (4/N) δ_jk I + 2 d_jkl Λ_l.
/// ```
///
/// Only canonical index triples are stored (`j < k < l` for `f`,
/// `j ≤ k ≤ l` for `d`, all 0-based); other orderings are reconstructed on
/// access.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensors {
    n: usize,
    dim: usize,
    f: BTreeMap<(usize, usize, usize), f64>,
    d: BTreeMap<(usize, usize, usize), f64>,
}

impl StructureTensors {
    /// `f_jkl = Tr([Λ_j,Λ_k] Λ_l)/(4i)`, `d_jkl = Tr({Λ_j,Λ_k} Λ_l)/4`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_basis(basis: &GeneratorBasis) -> Self {
        let dim = basis.dim();
        let g = basis.generators();
        let mut f = BTreeMap::new();
        let mut d = BTreeMap::new();
        for j in 0..dim {
            for k in j..dim {
                let comm = commutator(&g[j], &g[k]);
                let anti = anticommutator(&g[j], &g[k]);
                for l in k..dim {
                    if j < k && k < l {
                        let v = (trace_product(&comm, &g[l]) / Complex64::new(0.0, 4.0)).re;
                        if v.abs() >= SPARSE_THRESHOLD {
                            f.insert((j, k, l), v);
                        }
                    }
                    let v = (trace_product(&anti, &g[l]) * 0.25).re;
                    if v.abs() >= SPARSE_THRESHOLD {
                        d.insert((j, k, l), v);
                    }
                }
            }
        }
        Self {
            n: basis.n(),
            dim,
            f,
            d,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical `(j<k<l, f_jkl)` entries in sorted order.
    pub fn f_entries(&self) -> impl Iterator<Item = ((usize, usize, usize), f64)> + '_ {
        self.f.iter().map(|(k, v)| (*k, *v))
    }

    /// Canonical `(j≤k≤l, d_jkl)` entries in sorted order.
    pub fn d_entries(&self) -> impl Iterator<Item = ((usize, usize, usize), f64)> + '_ {
        self.d.iter().map(|(k, v)| (*k, *v))
    }

    pub fn f_len(&self) -> usize {
        self.f.len()
    }

    pub fn d_len(&self) -> usize {
        self.d.len()
    }

    /// `f_jkl` for any ordering of the indices.
    pub fn f(&self, j: usize, k: usize, l: usize) -> f64 {
        if j == k || k == l || j == l {
            return 0.0;
        }
        let (key, odd) = sort3(j, k, l);
        let v = self.f.get(&key).copied().unwrap_or(0.0);
        if odd {
            -v
        } else {
            v
        }
    }

    /// `d_jkl` for any ordering of the indices.
    pub fn d(&self, j: usize, k: usize, l: usize) -> f64 {
        let (key, _) = sort3(j, k, l);
        self.d.get(&key).copied().unwrap_or(0.0)
    }

    /// `(a⃗ ⊗ b⃗)_j = f_jkl a_k b_l`. Swapping the arguments negates every
    /// component exactly.
    pub fn cross(&self, a: &ComplexCoords, b: &ComplexCoords) -> Result<ComplexCoords> {
        self.check(a)?;
        self.check(b)?;
        let (a, b) = (a.values(), b.values());
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (&(j, k, l), &v) in &self.f {
            out[j] += (a[k] * b[l] - a[l] * b[k]) * v;
            out[k] += (a[l] * b[j] - a[j] * b[l]) * v;
            out[l] += (a[j] * b[k] - a[k] * b[j]) * v;
        }
        Ok(ComplexCoords::from_parts(
            self.n,
            Complex64::new(0.0, 0.0),
            out,
        ))
    }

    /// `(a⃗ ⊙ b⃗)_j = d_jkl a_k b_l`, exactly symmetric in the arguments.
    pub fn dot_sym(&self, a: &ComplexCoords, b: &ComplexCoords) -> Result<ComplexCoords> {
        self.check(a)?;
        self.check(b)?;
        let (a, b) = (a.values(), b.values());
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        let sym = |p: usize, q: usize| a[p] * b[q] + a[q] * b[p];
        for (&(j, k, l), &v) in &self.d {
            match (j == k, k == l) {
                (true, true) => out[j] += a[j] * b[j] * v,
                (true, false) => {
                    out[j] += sym(j, l) * v;
                    out[l] += a[j] * b[j] * v;
                }
                (false, true) => {
                    out[j] += a[k] * b[k] * v;
                    out[k] += sym(j, k) * v;
                }
                (false, false) => {
                    out[j] += sym(k, l) * v;
                    out[k] += sym(j, l) * v;
                    out[l] += sym(j, k) * v;
                }
            }
        }
        Ok(ComplexCoords::from_parts(
            self.n,
            Complex64::new(0.0, 0.0),
            out,
        ))
    }

    /// `(a⃗·Λ⃗)(b⃗·Λ⃗) = (2/N) a⃗·b⃗ I + (a⃗⊙b⃗ + i a⃗⊗b⃗)·Λ⃗`. Scalar parts of
    /// the inputs are ignored.
    pub fn product_reduce(&self, a: &ComplexCoords, b: &ComplexCoords) -> Result<ComplexCoords> {
        let sym = self.dot_sym(a, b)?;
        let anti = self.cross(a, b)?;
        let i = Complex64::new(0.0, 1.0);
        let values = sym
            .values()
            .iter()
            .zip(anti.values())
            .map(|(s, x)| s + i * x)
            .collect();
        let scalar = a.dot(b) * (2.0 / self.n as f64);
        Ok(ComplexCoords::from_parts(self.n, scalar, values))
    }

    /// Product of two linearized elements,
    /// `(a₀ I + a⃗·Λ⃗)(b₀ I + b⃗·Λ⃗) = ρ₀ I + ρ⃗·Λ⃗` with
    /// `ρ₀ = a₀b₀ + (2/N) a⃗·b⃗` and `ρ⃗ = b₀a⃗ + a₀b⃗ + a⃗⊙b⃗ + i a⃗⊗b⃗`.
    pub fn multiply(&self, a: &ComplexCoords, b: &ComplexCoords) -> Result<ComplexCoords> {
        let quad = self.product_reduce(a, b)?;
        let values = quad
            .values()
            .iter()
            .zip(a.values().iter().zip(b.values()))
            .map(|(q, (x, y))| b.scalar * x + a.scalar * y + q)
            .collect();
        Ok(ComplexCoords::from_parts(
            self.n,
            a.scalar * b.scalar + quad.scalar,
            values,
        ))
    }

    fn check(&self, c: &ComplexCoords) -> Result<()> {
        check_same(self.n, c.n())
    }
}

/// Sorts three indices, reporting whether the permutation was odd.
fn sort3(a: usize, b: usize, c: usize) -> ((usize, usize, usize), bool) {
    let mut v = [a, b, c];
    let mut odd = false;
    for i in 0..2 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    ((v[0], v[1], v[2]), odd)
}
