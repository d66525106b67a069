mod common;

use common::expm;
use proptest::prelude::*;
use sun_bch::matrix::{identity, max_abs, max_abs_diff};
use sun_bch::sampling::{random_complex, random_hermitian, trial_rng};
use sun_bch::{
    apply_spectral, char_poly, eig_hermitian, eig_unitary, expansion_coeffs, lagrange_projectors,
    CMatrix, Complex64,
};

fn hermitian() -> impl Strategy<Value = CMatrix> {
    (2usize..=6, any::<u32>()).prop_map(|(n, i)| random_hermitian(n, &mut trial_rng(11, 0, i)))
}

fn unitary() -> impl Strategy<Value = CMatrix> {
    hermitian().prop_map(|h| expm(&(h * Complex64::new(0.0, 2.0))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermitian_decomposition(h in hermitian()) {
        let spec = eig_hermitian(&h).unwrap();
        prop_assert!(max_abs_diff(&spec.reconstruct(), &h) < 1e-12);
        prop_assert!(spec.gram_defect() < 1e-12);
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0].re <= w[1].re));
        prop_assert!(spec.eigenvalues.iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn unitary_decomposition(u in unitary()) {
        let spec = eig_unitary(&u).unwrap();
        prop_assert!(max_abs_diff(&spec.reconstruct(), &u) < 1e-10);
        prop_assert!(spec.gram_defect() < 1e-10);
        prop_assert!(spec.eigenvalues.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn cayley_hamilton(n in 2usize..=6, i in any::<u32>()) {
        let m = random_complex(n, &mut trial_rng(12, 0, i));
        let p = char_poly(&m);
        prop_assert!(max_abs(&p.eval_matrix(&m)) < 1e-10);
        prop_assert_eq!(p.coefficient(n), Complex64::new(1.0, 0.0));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((p.coefficient(0) - m.determinant() * sign).norm() < 1e-10);
    }

    #[test]
    fn projectors_resolve_identity(h in hermitian()) {
        let spec = eig_hermitian(&h).unwrap();
        prop_assume!(spec.min_gap() > 1e-3);
        let p = lagrange_projectors(&h, &spec).unwrap();
        let sum = p.iter().fold(CMatrix::zeros(h.nrows(), h.nrows()), |acc, x| acc + x);
        prop_assert!(max_abs_diff(&sum, &identity(h.nrows())) < 1e-8);
        for (k, pk) in p.iter().enumerate() {
            prop_assert!(max_abs_diff(&(pk * pk), pk) < 1e-8);
            prop_assert!(max_abs_diff(pk, &spec.projector(k)) < 1e-8);
        }
    }

    #[test]
    fn power_series_matches_taylor(h in hermitian()) {
        let spec = eig_hermitian(&h).unwrap();
        prop_assume!(spec.min_gap() > 1e-3);
        let f = expansion_coeffs(&spec, |x| (Complex64::new(0.0, -1.0) * x).exp()).unwrap();
        let n = h.nrows();
        let mut power = identity(n);
        let mut sum = CMatrix::zeros(n, n);
        for c in &f {
            sum += &power * *c;
            power = &power * &h;
        }
        let oracle = expm(&(&h * Complex64::new(0.0, -1.0)));
        prop_assert!(max_abs_diff(&sum, &oracle) < 1e-8);
        let dense = apply_spectral(&spec, |x| (Complex64::new(0.0, -1.0) * x).exp());
        prop_assert!(max_abs_diff(&dense, &oracle) < 1e-12);
    }
}
