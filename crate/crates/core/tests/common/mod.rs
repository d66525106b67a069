//! Helpers shared by the integration tests.
#![allow(dead_code)]

use sun_bch::matrix::{identity, max_abs};
use sun_bch::{AlgebraCoords, CMatrix, Complex64, GeneratorBasis, SuN};

/// `exp(A)` by Taylor series with scaling and squaring. Independent of the
/// eigensolver, so it serves as the dense oracle.
pub fn expm(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    let norm = a
        .row_iter()
        .map(|r| r.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a * Complex64::new(scale, 0.0);
    let mut term = identity(n);
    let mut sum = identity(n);
    for k in 1..=24 {
        term = &term * &x * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
        if max_abs(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// `exp(−i M⃗·Λ⃗)` through [`expm`].
pub fn group_element(basis: &GeneratorBasis, m: &AlgebraCoords) -> CMatrix {
    let h = basis.algebra_matrix(m).unwrap();
    expm(&(h * Complex64::new(0.0, -1.0)))
}

pub fn su(n: usize) -> SuN {
    SuN::new(n).unwrap()
}
