//! Acceptance criteria 1–8. Each test prints one `PASS`/`FAIL` line with the
//! worst residual seen and the bound it was held to.

mod common;

use std::io::Write;

use common::{expm, group_element, su};
use sun_bch::algebra::identities;
use sun_bch::linearize::linearize_exp;
use sun_bch::matrix::{identity, max_abs_diff, unitarity_defect};
use sun_bch::sampling::{random_algebra, random_unit_box, trial_rng, DEFAULT_SPECTRAL_CAP};
use sun_bch::{
    apply_spectral, char_poly, compose, compose_direct, compose_element, delinearize_exp,
    eig_hermitian, expansion_coeffs, expansion_coeffs_derivative, similarity_detailed,
    similarity_direct, su2_compose_closed_form, su2_exp_closed_form, AlgebraCoords, Complex64,
    ComplexCoords, ExpFamily, Result,
};

const SEED: u64 = 0x5eed_0001;

/// Worst residual over a run, with the trial that produced it.
#[derive(Default)]
struct Tally {
    worst: f64,
    at: String,
    errors: Vec<String>,
}

impl Tally {
    fn record(&mut self, residual: f64, at: impl FnOnce() -> String) {
        if residual.is_nan() || residual > self.worst {
            self.worst = residual;
            self.at = at();
        }
    }

    fn check(&mut self, r: Result<f64>, at: impl Fn() -> String) {
        match r {
            Ok(v) => self.record(v, at),
            Err(e) => self.errors.push(format!("{}: {e}", at())),
        }
    }

    fn finish(self, id: u32, name: &str, tol: f64) {
        self.finish_with(id, name, tol, &[]);
    }

    /// Like [`finish`](Self::finish), also holding secondary tallies to
    /// their own bounds on the same output line.
    fn finish_with(self, id: u32, name: &str, tol: f64, extra: &[(&str, Tally, f64)]) {
        let mut pass = self.errors.is_empty() && self.worst < tol;
        let mut line = format!(
            "max residual {:.3e} (tol {tol:.0e}) at {}",
            self.worst,
            if self.at.is_empty() { "-" } else { &self.at }
        );
        let mut errors = self.errors;
        for (label, tally, bound) in extra {
            pass &= tally.errors.is_empty() && tally.worst < *bound;
            line += &format!("; {label} {:.3e} (tol {bound:.0e})", tally.worst);
            errors.extend(tally.errors.iter().cloned());
        }
        if !errors.is_empty() {
            line += &format!("; {} errors, first: {}", errors.len(), errors[0]);
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        writeln!(
            std::io::stdout().lock(),
            "criterion {id} [{name}]: {verdict} {line}"
        )
        .unwrap();
        assert!(pass, "criterion {id} failed");
    }
}

fn ccoords_diff(a: &ComplexCoords, b: &ComplexCoords) -> f64 {
    a.max_diff(b)
}

#[test]
fn criterion_1_su2_closed_form() {
    let s = su(2);
    let mut tally = Tally::default();
    for i in 0..1000u32 {
        let mut rng = trial_rng(SEED, 1, i);
        let half_a = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
        let half_b = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
        let (alpha, beta) = (half_a.scale(2.0), half_b.scale(2.0));
        let at = || format!("pair {i}");
        tally.check(
            (|| {
                // single rotation
                let (e0, e) = su2_exp_closed_form(&alpha)?;
                let lin = linearize_exp(&s.tensors, &s.basis, &half_a)?;
                let closed = to_element(e0, &e);
                let single = ccoords_diff(&lin, &closed);
                // product coefficients
                let (g0, g) = su2_compose_closed_form(&alpha, &beta)?;
                let rho = compose_element(&s.tensors, &s.basis, &half_a, &half_b)?;
                let product = ccoords_diff(&rho, &to_element(g0, &g));
                // the composed rotation vector regenerates the same coefficients
                let r = compose(&s.tensors, &s.basis, &half_a, &half_b)?;
                let (c0, cv) = su2_exp_closed_form(&r.scale(2.0))?;
                let check = (c0 - g0).abs().max(cv.max_diff(&g));
                Ok(single.max(product).max(check))
            })(),
            at,
        );
    }
    tally.finish(1, "SU(2) closed form", 1e-10);
}

fn to_element(g0: f64, g: &AlgebraCoords) -> ComplexCoords {
    let values = g.values().iter().map(|x| Complex64::new(0.0, -x)).collect();
    ComplexCoords::new(2, Complex64::new(g0, 0.0), values).unwrap()
}

#[test]
fn criterion_2_compose_oracle() {
    let mut tally = Tally::default();
    for n in 2..=5 {
        let s = su(n);
        for i in 0..200u32 {
            let mut rng = trial_rng(SEED + n as u64, 2, i);
            let m = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
            let v = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
            tally.check(
                (|| {
                    let a = compose(&s.tensors, &s.basis, &m, &v)?;
                    let b = compose_direct(&s.basis, &m, &v)?;
                    let target = group_element(&s.basis, &m) * group_element(&s.basis, &v);
                    let closure = max_abs_diff(&group_element(&s.basis, &a), &target);
                    Ok(a.max_diff(&b).max(closure))
                })(),
                || format!("n={n} pair {i}"),
            );
        }
    }
    tally.finish(2, "compose vs dense", 1e-8);
}

#[test]
fn criterion_3_similarity_oracle() {
    let mut agree = Tally::default();
    let mut constraints = Tally::default();
    for n in 2..=4 {
        let s = su(n);
        for i in 0..200u32 {
            let mut rng = trial_rng(SEED + n as u64, 3, i);
            let m = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
            let v = random_unit_box(n, &mut rng).unwrap();
            let at = || format!("n={n} pair {i}");
            match similarity_detailed(&s.tensors, &s.basis, &m, &v) {
                Ok(out) => {
                    constraints.record(out.norm_drift.max(out.scalar_constraint), at);
                    agree.check(
                        similarity_direct(&s.basis, &m, &v).map(|d| d.max_diff(&out.nprime)),
                        at,
                    );
                }
                Err(e) => agree.errors.push(format!("{}: {e}", at())),
            }
        }
    }
    agree.finish_with(
        3,
        "similarity vs dense",
        1e-8,
        &[("norm/scalar constraint", constraints, 1e-9)],
    );
}

#[test]
fn criterion_4_algebra_identities() {
    let mut exhaustive = Tally::default();
    for n in 2..=3 {
        let s = su(n);
        let (b, t) = (&s.basis, &s.tensors);
        let r = identities::commutator_residual(b, t)
            .max(identities::anticommutator_residual(b, t))
            .max(identities::orthonormality_defect(b))
            .max(identities::jacobi_ff_residual(t))
            .max(identities::jacobi_fd_residual(t));
        exhaustive.record(r, || format!("n={n}"));
    }

    let mut vector = Tally::default();
    for n in 2..=4 {
        let s = su(n);
        let t = &s.tensors;
        for i in 0..100u32 {
            let mut rng = trial_rng(SEED, 4, i + 1000 * n as u32);
            let v: Vec<ComplexCoords> = (0..4)
                .map(|_| random_unit_box(n, &mut rng).unwrap().to_complex())
                .collect();
            vector.check(
                (|| {
                    Ok(identities::vector_jacobi_ff(t, &v[0], &v[1], &v[2], &v[3])?
                        .max(identities::vector_jacobi_fd(t, &v[0], &v[1], &v[2], &v[3])?)
                        .max(identities::derivation_residual(t, &v[0], &v[1], &v[2])?))
                })(),
                || format!("n={n} triple {i}"),
            );
        }
    }
    vector.finish_with(
        4,
        "algebra identities",
        1e-10,
        &[("exhaustive tensor identities", exhaustive, 1e-12)],
    );
}

#[test]
fn criterion_5_linearized_spectral_theorem() {
    let mut tally = Tally::default();
    for n in 2..=5 {
        let s = su(n);
        for i in 0..100u32 {
            let mut rng = trial_rng(SEED + n as u64, 5, i);
            let m = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
            tally.check(
                (|| {
                    let g = linearize_exp(&s.tensors, &s.basis, &m)?;
                    let h = s.basis.algebra_matrix(&m)?;
                    let spec = eig_hermitian(&h)?;
                    let dense = apply_spectral(&spec, |x| (Complex64::new(0.0, -1.0) * x).exp());
                    let oracle = s.basis.from_matrix(&dense)?;
                    let taylor = s
                        .basis
                        .from_matrix(&expm(&(h * Complex64::new(0.0, -1.0))))?;
                    let back = delinearize_exp(&s.basis, &g)?;
                    Ok(g.max_diff(&oracle)
                        .max(g.max_diff(&taylor))
                        .max(back.max_diff(&m)))
                })(),
                || format!("n={n} trial {i}"),
            );
        }
    }
    tally.finish(5, "linearized spectral theorem", 1e-9);
}

#[test]
fn criterion_6_su4_commuting_family() {
    let s = su(4);
    let t = &s.tensors;
    let mut family = Tally::default();
    let mut regroup = Tally::default();
    for i in 0..100u32 {
        let mut rng = trial_rng(SEED, 6, i);
        let m = random_unit_box(4, &mut rng).unwrap().to_complex();
        family.check(
            (|| {
                let mm = t.dot_sym(&m, &m)?;
                let mmm = t.dot_sym(&mm, &m)?;
                Ok(t.cross(&m, &mm)?
                    .vector_max_abs()
                    .max(t.cross(&m, &mmm)?.vector_max_abs())
                    .max(t.cross(&mm, &mmm)?.vector_max_abs()))
            })(),
            || format!("vector {i}"),
        );

        let m = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
        regroup.check(reduce4_residual(&s, &m), || format!("vector {i}"));
    }
    family.finish_with(
        6,
        "SU(4) commuting family",
        1e-10,
        &[("four-term regrouping", regroup, 1e-9)],
    );
}

/// `e₀ + e₂|M|²/2 + e₃(M⊙M)·M/2` and
/// `(e₁ + e₃|M|²/2) M + e₂ M⊙M + e₃ (M⊙M)⊙M` against `linearize_exp`.
fn reduce4_residual(s: &sun_bch::SuN, m: &AlgebraCoords) -> Result<f64> {
    let t = &s.tensors;
    let spec = eig_hermitian(&s.basis.algebra_matrix(m)?)?;
    let e = expansion_coeffs(&spec, |x| (Complex64::new(0.0, -1.0) * x).exp())?;
    let mc = m.to_complex();
    let mm = t.dot_sym(&mc, &mc)?;
    let mmm = t.dot_sym(&mm, &mc)?;
    let sq = m.dot(m) * 0.5;
    let scalar = e[0] + e[2] * sq + e[3] * mm.dot(&mc) * 0.5;
    let values = (0..15)
        .map(|k| {
            (e[1] + e[3] * sq) * mc.values()[k] + e[2] * mm.values()[k] + e[3] * mmm.values()[k]
        })
        .collect();
    let regrouped = ComplexCoords::new(4, scalar, values)?;
    Ok(regrouped.max_diff(&linearize_exp(t, &s.basis, m)?))
}

#[test]
fn criterion_7_coefficient_routes() {
    let mut tally = Tally::default();
    let families = [
        ExpFamily::exp_minus_i(),
        ExpFamily::exp_plus_i(),
        ExpFamily::new(Complex64::new(0.5, 0.0)),
    ];
    for n in 2..=4 {
        let s = su(n);
        for i in 0..100u32 {
            let mut rng = trial_rng(SEED + n as u64, 7, i);
            let m = random_algebra(&s.basis, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap();
            let fam = families[i as usize % families.len()];
            tally.check(
                (|| {
                    let h = s.basis.algebra_matrix(&m)?;
                    let spec = eig_hermitian(&h)?;
                    let lagrange = expansion_coeffs(&spec, |x| fam.value(x))?;
                    let derivative = expansion_coeffs_derivative(&spec, &char_poly(&h), &fam)?;
                    Ok(lagrange
                        .iter()
                        .zip(&derivative)
                        .map(|(a, b)| (a - b).norm())
                        .fold(0.0, f64::max))
                })(),
                || format!("n={n} trial {i}"),
            );
        }
    }
    tally.finish(7, "coefficient formulas", 1e-8);
}

#[test]
fn criterion_8_group_axioms() {
    let mut tally = Tally::default();
    for n in 2..=4 {
        let s = su(n);
        let (t, b) = (&s.tensors, &s.basis);
        let id = identity(n);
        for i in 0..100u32 {
            let mut rng = trial_rng(SEED + n as u64, 8, i);
            let x: Vec<AlgebraCoords> = (0..3)
                .map(|_| random_algebra(b, &mut rng, DEFAULT_SPECTRAL_CAP).unwrap())
                .collect();
            tally.check(
                (|| {
                    let ab = compose(t, b, &x[0], &x[1])?;
                    let u = group_element(b, &ab);
                    let unitary = unitarity_defect(&u);
                    let det = (u.determinant() - Complex64::new(1.0, 0.0)).norm();

                    let left = compose(t, b, &ab, &x[2])?;
                    let right = compose(t, b, &x[0], &compose(t, b, &x[1], &x[2])?)?;
                    let assoc = max_abs_diff(&group_element(b, &left), &group_element(b, &right));

                    let zero = AlgebraCoords::zeros(n);
                    let neutral = max_abs_diff(
                        &group_element(b, &compose(t, b, &x[0], &zero)?),
                        &group_element(b, &x[0]),
                    )
                    .max(max_abs_diff(
                        &group_element(b, &compose(t, b, &zero, &x[0])?),
                        &group_element(b, &x[0]),
                    ));

                    let inverse =
                        max_abs_diff(&group_element(b, &compose(t, b, &x[0], &x[0].neg())?), &id);

                    Ok(unitary.max(det).max(assoc).max(neutral).max(inverse))
                })(),
                || format!("n={n} triple {i}"),
            );
        }
    }
    tally.finish(8, "group axioms", 1e-8);
}
