//! Residuals of the algebraic identities satisfied by the generators and
//! the structure tensors. Each function returns the largest absolute defect.

use std::collections::HashMap;

use num_complex::Complex64;

use super::{ComplexCoords, GeneratorBasis, StructureTensors};
use crate::error::Result;
use crate::matrix::{anticommutator, commutator, identity, max_abs, max_abs_diff, trace_product};

/// Largest violation of `Λ_j = Λ_j†` and `Tr Λ_j = 0`.
pub fn hermitian_traceless_defect(basis: &GeneratorBasis) -> f64 {
    basis
        .generators()
        .iter()
        .map(|g| max_abs_diff(g, &g.adjoint()).max(g.trace().norm()))
        .fold(0.0, f64::max)
}

/// `max |Tr(Λ_j Λ_k) − 2δ_jk|`.
pub fn orthonormality_defect(basis: &GeneratorBasis) -> f64 {
    let g = basis.generators();
    let mut worst: f64 = 0.0;
    for j in 0..g.len() {
        for k in 0..g.len() {
            let expect = if j == k { 2.0 } else { 0.0 };
            worst = worst.max((trace_product(&g[j], &g[k]) - expect).norm());
        }
    }
    worst
}

/// `max ‖[Λ_j,Λ_k] − 2i f_jkl Λ_l‖`.
pub fn commutator_residual(basis: &GeneratorBasis, t: &StructureTensors) -> f64 {
    let g = basis.generators();
    let two_i = Complex64::new(0.0, 2.0);
    let mut worst: f64 = 0.0;
    for j in 0..g.len() {
        for k in 0..g.len() {
            let mut r = commutator(&g[j], &g[k]);
            for (l, gl) in g.iter().enumerate() {
                let v = t.f(j, k, l);
                if v != 0.0 {
                    r -= gl * (two_i * v);
                }
            }
            worst = worst.max(max_abs(&r));
        }
    }
    worst
}

/// `max ‖{Λ_j,Λ_k} − (4/N)δ_jk I − 2 d_jkl Λ_l‖`.
pub fn anticommutator_residual(basis: &GeneratorBasis, t: &StructureTensors) -> f64 {
    let g = basis.generators();
    let n = basis.n();
    let id = identity(n);
    let mut worst: f64 = 0.0;
    for j in 0..g.len() {
        for k in 0..g.len() {
            let mut r = anticommutator(&g[j], &g[k]);
            if j == k {
                r -= &id * Complex64::new(4.0 / n as f64, 0.0);
            }
            for (l, gl) in g.iter().enumerate() {
                let v = t.d(j, k, l);
                if v != 0.0 {
                    r -= gl * Complex64::new(2.0 * v, 0.0);
                }
            }
            worst = worst.max(max_abs(&r));
        }
    }
    worst
}

type Quad = (usize, usize, usize, usize);

/// `(x, y, f_xym)` for every ordered pair with nonzero `f_xym`, grouped by `m`.
fn f_by_last(t: &StructureTensors) -> Vec<Vec<(usize, usize, f64)>> {
    let mut out = vec![Vec::new(); t.dim()];
    for ((j, k, l), v) in t.f_entries() {
        // cyclic orderings carry +v, transpositions −v
        for (x, y, m) in [(j, k, l), (k, l, j), (l, j, k)] {
            out[m].push((x, y, v));
            out[m].push((y, x, -v));
        }
    }
    out
}

/// `(p, q, d_mpq)` for every ordered pair with nonzero `d_mpq`, grouped by `m`.
fn d_by_first(t: &StructureTensors) -> Vec<Vec<(usize, usize, f64)>> {
    let mut out = vec![Vec::new(); t.dim()];
    for ((j, k, l), v) in t.d_entries() {
        let mut perms = vec![
            (j, k, l),
            (j, l, k),
            (k, j, l),
            (k, l, j),
            (l, j, k),
            (l, k, j),
        ];
        perms.sort_unstable();
        perms.dedup();
        for (m, p, q) in perms {
            out[m].push((p, q, v));
        }
    }
    out
}

fn contract(
    left: &[Vec<(usize, usize, f64)>],
    right: &[Vec<(usize, usize, f64)>],
) -> HashMap<Quad, f64> {
    let mut acc: HashMap<Quad, f64> = HashMap::new();
    for (lm, rm) in left.iter().zip(right) {
        for &(k, l, a) in lm {
            for &(p, q, b) in rm {
                *acc.entry((k, l, p, q)).or_insert(0.0) += a * b;
            }
        }
    }
    acc
}

/// Jacobi identity for `f`, in cyclic form over `(k, l, p)` with `q` fixed:
/// `f_klm f_mpq + f_lpm f_mkq + f_pkm f_mlq = 0`, over every index quadruple.
pub fn jacobi_ff_residual(t: &StructureTensors) -> f64 {
    let by_last = f_by_last(t);
    // f_mpq = f_pqm, so both factors come from the same grouping
    let s = contract(&by_last, &by_last);
    let get = |key: Quad| s.get(&key).copied().unwrap_or(0.0);
    let term = |k, l, p, q| get((k, l, p, q)) + get((l, p, k, q)) + get((p, k, l, q));
    s.keys()
        .flat_map(|&(a, b, c, d)| [term(a, b, c, d), term(c, a, b, d), term(b, c, a, d)])
        .fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Mixed identity `f_klm d_mpq + f_kqm d_mpl + f_kpm d_mlq = 0`.
pub fn jacobi_fd_residual(t: &StructureTensors) -> f64 {
    let f = f_by_last(t);
    let d = d_by_first(t);
    let s = contract(&f, &d);
    let get = |key: Quad| s.get(&key).copied().unwrap_or(0.0);
    let term = |k, l, p, q| get((k, l, p, q)) + get((k, q, p, l)) + get((k, p, l, q));
    s.keys()
        .flat_map(|&(a, b, c, d)| [term(a, b, c, d), term(a, d, c, b), term(a, c, b, d)])
        .fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Vector form of the `f` Jacobi identity,
/// `(A⊗B)·(C⊗D) + (B⊗C)·(A⊗D) + (C⊗A)·(B⊗D) = 0`.
pub fn vector_jacobi_ff(
    t: &StructureTensors,
    a: &ComplexCoords,
    b: &ComplexCoords,
    c: &ComplexCoords,
    d: &ComplexCoords,
) -> Result<f64> {
    let r = t.cross(a, b)?.dot(&t.cross(c, d)?)
        + t.cross(b, c)?.dot(&t.cross(a, d)?)
        + t.cross(c, a)?.dot(&t.cross(b, d)?);
    Ok(r.norm())
}

/// `(A⊗B)·(C⊙D) + (A⊗D)·(C⊙B) + (A⊗C)·(B⊙D) = 0`.
pub fn vector_jacobi_fd(
    t: &StructureTensors,
    a: &ComplexCoords,
    b: &ComplexCoords,
    c: &ComplexCoords,
    d: &ComplexCoords,
) -> Result<f64> {
    let r = t.cross(a, b)?.dot(&t.dot_sym(c, d)?)
        + t.cross(a, d)?.dot(&t.dot_sym(c, b)?)
        + t.cross(a, c)?.dot(&t.dot_sym(b, d)?);
    Ok(r.norm())
}

/// Derivation rule `A⊗(B⊙C) = (A⊗B)⊙C + B⊙(A⊗C)`; largest component defect.
pub fn derivation_residual(
    t: &StructureTensors,
    a: &ComplexCoords,
    b: &ComplexCoords,
    c: &ComplexCoords,
) -> Result<f64> {
    let lhs = t.cross(a, &t.dot_sym(b, c)?)?;
    let rhs = t
        .dot_sym(&t.cross(a, b)?, c)?
        .add(&t.dot_sym(b, &t.cross(a, c)?)?);
    Ok(lhs.max_diff(&rhs))
}

/// `|Tr((A⃗·Λ⃗)(B⃗·Λ⃗)) − 2 A⃗·B⃗|` for the vector parts of `a` and `b`.
pub fn trace_pairing_residual(
    basis: &GeneratorBasis,
    a: &ComplexCoords,
    b: &ComplexCoords,
) -> Result<f64> {
    let a0 = ComplexCoords::new(a.n(), Complex64::new(0.0, 0.0), a.values().to_vec())?;
    let b0 = ComplexCoords::new(b.n(), Complex64::new(0.0, 0.0), b.values().to_vec())?;
    let tr = trace_product(&basis.to_matrix(&a0)?, &basis.to_matrix(&b0)?);
    Ok((tr - a.dot(b) * 2.0).norm())
}

/// `‖(A⃗·Λ⃗)(B⃗·Λ⃗) − to_matrix(product_reduce(A⃗, B⃗))‖_max`.
pub fn product_reduce_residual(
    basis: &GeneratorBasis,
    t: &StructureTensors,
    a: &ComplexCoords,
    b: &ComplexCoords,
) -> Result<f64> {
    let a0 = ComplexCoords::new(a.n(), Complex64::new(0.0, 0.0), a.values().to_vec())?;
    let b0 = ComplexCoords::new(b.n(), Complex64::new(0.0, 0.0), b.values().to_vec())?;
    let dense = basis.to_matrix(&a0)? * basis.to_matrix(&b0)?;
    let reduced = basis.to_matrix(&t.product_reduce(&a0, &b0)?)?;
    Ok(max_abs_diff(&dense, &reduced))
}
