use rayon::prelude::*;
use serde_json::{json, Value};
use sun_bch::algebra::identities;
use sun_bch::linearize::linearize_exp;
use sun_bch::matrix::{commutator, identity, max_abs, max_abs_diff, unitarity_defect};
use sun_bch::sampling::{random_algebra, random_hermitian, random_unit_box, trial_rng, TrialRng};
use sun_bch::{
    char_poly, compose, compose_direct, compose_element, delinearize_exp, eig_hermitian, exp_dense,
    expansion_coeffs, expansion_coeffs_derivative, f0_trace, similarity_detailed,
    similarity_direct, su2_compose_closed_form, su2_exp_closed_form, AlgebraCoords, Complex64,
    ComplexCoords, ExpFamily, Result, SuN,
};

use crate::{principal_cap, CmdOutput, RunConfig, EXIT_PASS, EXIT_PROPERTY};

type Check = fn(&SuN, &mut TrialRng, f64) -> Result<f64>;

struct Property {
    name: &'static str,
    applies: fn(usize) -> bool,
    /// Properties with no randomness run once.
    exhaustive: bool,
    check: Check,
}

fn any_n(_: usize) -> bool {
    true
}

fn only_su2(n: usize) -> bool {
    n == 2
}

fn only_su4(n: usize) -> bool {
    n == 4
}

const PROPERTIES: &[Property] = &[
    Property {
        name: "algebra.tensor_identities",
        applies: any_n,
        exhaustive: true,
        check: tensor_identities,
    },
    Property {
        name: "algebra.vector_identities",
        applies: any_n,
        exhaustive: false,
        check: vector_identities,
    },
    Property {
        name: "algebra.product_reduce",
        applies: any_n,
        exhaustive: false,
        check: product_reduce,
    },
    Property {
        name: "spectral.cayley_hamilton",
        applies: any_n,
        exhaustive: false,
        check: cayley_hamilton,
    },
    Property {
        name: "spectral.coefficient_routes",
        applies: any_n,
        exhaustive: false,
        check: coefficient_routes,
    },
    Property {
        name: "linearize.power_table",
        applies: any_n,
        exhaustive: false,
        check: power_rows,
    },
    Property {
        name: "linearize.dense_oracle",
        applies: any_n,
        exhaustive: false,
        check: dense_oracle,
    },
    Property {
        name: "linearize.f0_trace",
        applies: any_n,
        exhaustive: false,
        check: f0_agreement,
    },
    Property {
        name: "linearize.commutation",
        applies: any_n,
        exhaustive: false,
        check: commutation,
    },
    Property {
        name: "linearize.round_trip",
        applies: any_n,
        exhaustive: false,
        check: round_trip,
    },
    Property {
        name: "linearize.su4_commuting_family",
        applies: only_su4,
        exhaustive: false,
        check: commuting_family,
    },
    Property {
        name: "bch.closure",
        applies: any_n,
        exhaustive: false,
        check: closure,
    },
    Property {
        name: "bch.unimodularity",
        applies: any_n,
        exhaustive: false,
        check: unimodularity,
    },
    Property {
        name: "bch.compose_oracle",
        applies: any_n,
        exhaustive: false,
        check: compose_oracle,
    },
    Property {
        name: "bch.associativity",
        applies: any_n,
        exhaustive: false,
        check: associativity,
    },
    Property {
        name: "bch.identity",
        applies: any_n,
        exhaustive: false,
        check: neutral,
    },
    Property {
        name: "bch.inverse",
        applies: any_n,
        exhaustive: false,
        check: inverse,
    },
    Property {
        name: "bch.similarity_oracle",
        applies: any_n,
        exhaustive: false,
        check: similarity_oracle,
    },
    Property {
        name: "bch.similarity_constraints",
        applies: any_n,
        exhaustive: false,
        check: similarity_constraints,
    },
    Property {
        name: "bch.su2_closed_form",
        applies: only_su2,
        exhaustive: false,
        check: su2_closed_form,
    },
];

/// Aggregate of one property over all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub trials: usize,
    pub max_residual: f64,
    pub worst_trial: usize,
    pub errors: usize,
    pub first_error: Option<(usize, String)>,
    pub pass: bool,
}

impl PropertyReport {
    fn to_json(&self) -> Value {
        let mut v = json!({
            "property": self.name,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "worst_trial": self.worst_trial,
            "errors": self.errors,
            "pass": self.pass,
        });
        if let Some((trial, reason)) = &self.first_error {
            v["first_error"] = json!({"trial": trial, "reason": reason});
        }
        v
    }
}

/// Runs every property suite that applies to `cfg.n`. Trials run in
/// parallel, each on its own `(seed, property, trial)` stream, and are
/// aggregated in trial order.
pub fn cmd_verify(cfg: &RunConfig) -> anyhow::Result<CmdOutput> {
    cfg.validate()?;
    let su = SuN::new(cfg.n)?;
    let reports: Vec<PropertyReport> = PROPERTIES
        .iter()
        .enumerate()
        .filter(|(_, p)| (p.applies)(cfg.n))
        .map(|(stream, p)| run_property(&su, cfg, stream as u32, p))
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    let failing: Vec<Value> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| json!({"property": r.name, "trial": r.first_error.as_ref().map_or(r.worst_trial, |e| e.0)}))
        .collect();
    Ok(CmdOutput {
        json: json!({
            "n": cfg.n,
            "seed": cfg.seed,
            "trials": cfg.trials,
            "tol": cfg.tol,
            "spectral_cap": cfg.spectral_cap,
            "pass": pass,
            "failing": failing,
            "properties": reports.iter().map(PropertyReport::to_json).collect::<Vec<_>>(),
        }),
        exit_code: if pass { EXIT_PASS } else { EXIT_PROPERTY },
    })
}

fn run_property(su: &SuN, cfg: &RunConfig, stream: u32, p: &Property) -> PropertyReport {
    let trials = if p.exhaustive { 1 } else { cfg.trials };
    let results: Vec<Result<f64>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            (p.check)(
                su,
                &mut trial_rng(cfg.seed, stream, i as u32),
                cfg.spectral_cap,
            )
        })
        .collect();
    let mut report = PropertyReport {
        name: p.name,
        trials,
        max_residual: 0.0,
        worst_trial: 0,
        errors: 0,
        first_error: None,
        pass: true,
    };
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) if v > report.max_residual || v.is_nan() => {
                report.max_residual = v;
                report.worst_trial = i;
            }
            Ok(_) => {}
            Err(e) => {
                report.errors += 1;
                report
                    .first_error
                    .get_or_insert((i, e.reason().to_string()));
            }
        }
    }
    report.pass = report.errors == 0 && report.max_residual <= cfg.tol;
    report
}

fn draw(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<AlgebraCoords> {
    random_algebra(&su.basis, rng, cap)
}

fn exp_minus_i(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, -1.0) * x).exp()
}

fn tensor_identities(su: &SuN, _: &mut TrialRng, _: f64) -> Result<f64> {
    let (b, t) = (&su.basis, &su.tensors);
    Ok(identities::commutator_residual(b, t)
        .max(identities::anticommutator_residual(b, t))
        .max(identities::orthonormality_defect(b))
        .max(identities::hermitian_traceless_defect(b))
        .max(identities::jacobi_ff_residual(t))
        .max(identities::jacobi_fd_residual(t)))
}

fn vector_identities(su: &SuN, rng: &mut TrialRng, _: f64) -> Result<f64> {
    let t = &su.tensors;
    let v: Vec<ComplexCoords> = (0..4)
        .map(|_| random_unit_box(su.n(), rng).map(|c| c.to_complex()))
        .collect::<Result<_>>()?;
    Ok(identities::vector_jacobi_ff(t, &v[0], &v[1], &v[2], &v[3])?
        .max(identities::vector_jacobi_fd(t, &v[0], &v[1], &v[2], &v[3])?)
        .max(identities::derivation_residual(t, &v[0], &v[1], &v[2])?))
}

fn product_reduce(su: &SuN, rng: &mut TrialRng, _: f64) -> Result<f64> {
    let a = random_unit_box(su.n(), rng)?.to_complex();
    let b = random_unit_box(su.n(), rng)?.to_complex();
    identities::product_reduce_residual(&su.basis, &su.tensors, &a, &b)
}

fn cayley_hamilton(su: &SuN, rng: &mut TrialRng, _: f64) -> Result<f64> {
    let h = random_hermitian(su.n(), rng);
    Ok(max_abs(&char_poly(&h).eval_matrix(&h)))
}

fn coefficient_routes(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let h = su.basis.algebra_matrix(&m)?;
    let spec = eig_hermitian(&h)?;
    let fam = ExpFamily::exp_minus_i();
    let a = expansion_coeffs(&spec, |x| fam.value(x))?;
    let b = expansion_coeffs_derivative(&spec, &char_poly(&h), &fam)?;
    Ok(a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}

fn power_rows(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let table = sun_bch::power_table(&su.tensors, &m, su.n())?;
    let h = su.basis.algebra_matrix(&m)?;
    let mut power = identity(su.n());
    let mut worst: f64 = 0.0;
    for row in table.rows() {
        worst = worst.max(max_abs_diff(&su.basis.to_matrix(row)?, &power));
        power = &power * &h;
    }
    Ok(worst)
}

fn dense_oracle(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let g = linearize_exp(&su.tensors, &su.basis, &m)?;
    Ok(max_abs_diff(
        &su.basis.to_matrix(&g)?,
        &exp_dense(&su.basis, &m)?,
    ))
}

fn f0_agreement(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let g = linearize_exp(&su.tensors, &su.basis, &m)?;
    Ok((f0_trace(&su.basis, &m, exp_minus_i)? - g.scalar).norm())
}

fn commutation(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let mut g = linearize_exp(&su.tensors, &su.basis, &m)?;
    g.scalar = Complex64::new(0.0, 0.0);
    let h = su.basis.algebra_matrix(&m)?;
    Ok(max_abs(&commutator(&h, &su.basis.to_matrix(&g)?)))
}

fn round_trip(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, principal_cap(cap))?;
    let g = linearize_exp(&su.tensors, &su.basis, &m)?;
    Ok(delinearize_exp(&su.basis, &g)?.max_diff(&m))
}

fn commuting_family(su: &SuN, rng: &mut TrialRng, _: f64) -> Result<f64> {
    let t = &su.tensors;
    let m = random_unit_box(su.n(), rng)?.to_complex();
    let mm = t.dot_sym(&m, &m)?;
    let mmm = t.dot_sym(&mm, &m)?;
    Ok(t.cross(&m, &mm)?
        .vector_max_abs()
        .max(t.cross(&m, &mmm)?.vector_max_abs())
        .max(t.cross(&mm, &mmm)?.vector_max_abs()))
}

fn pair(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<(AlgebraCoords, AlgebraCoords)> {
    Ok((draw(su, rng, cap)?, draw(su, rng, cap)?))
}

fn closure(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let (m, v) = pair(su, rng, cap)?;
    let r = compose(&su.tensors, &su.basis, &m, &v)?;
    let product = exp_dense(&su.basis, &m)? * exp_dense(&su.basis, &v)?;
    Ok(max_abs_diff(
        &(exp_dense(&su.basis, &r)? * product.adjoint()),
        &identity(su.n()),
    ))
}

fn unimodularity(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let (m, v) = pair(su, rng, cap)?;
    let rho = compose_element(&su.tensors, &su.basis, &m, &v)?;
    let u = su.basis.to_matrix(&rho)?;
    Ok(unitarity_defect(&u).max((u.determinant() - Complex64::new(1.0, 0.0)).norm()))
}

fn compose_oracle(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let (m, v) = pair(su, rng, cap)?;
    let a = compose(&su.tensors, &su.basis, &m, &v)?;
    Ok(a.max_diff(&compose_direct(&su.basis, &m, &v)?))
}

fn associativity(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let (t, b) = (&su.tensors, &su.basis);
    let (x, y) = pair(su, rng, cap)?;
    let z = draw(su, rng, cap)?;
    let left = compose(t, b, &compose(t, b, &x, &y)?, &z)?;
    let right = compose(t, b, &x, &compose(t, b, &y, &z)?)?;
    Ok(max_abs_diff(&exp_dense(b, &left)?, &exp_dense(b, &right)?))
}

fn neutral(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let zero = AlgebraCoords::zeros(su.n());
    let a = compose(&su.tensors, &su.basis, &m, &zero)?;
    let b = compose(&su.tensors, &su.basis, &zero, &m)?;
    Ok(a.max_diff(&m).max(b.max_diff(&m)))
}

fn inverse(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let r = compose(&su.tensors, &su.basis, &m, &m.neg())?;
    Ok(max_abs_diff(&exp_dense(&su.basis, &r)?, &identity(su.n())))
}

fn similarity_oracle(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let v = random_unit_box(su.n(), rng)?;
    let out = similarity_detailed(&su.tensors, &su.basis, &m, &v)?;
    Ok(out.nprime.max_diff(&similarity_direct(&su.basis, &m, &v)?))
}

fn similarity_constraints(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let m = draw(su, rng, cap)?;
    let v = random_unit_box(su.n(), rng)?;
    let out = similarity_detailed(&su.tensors, &su.basis, &m, &v)?;
    Ok(out.norm_drift.max(out.scalar_constraint))
}

fn su2_closed_form(su: &SuN, rng: &mut TrialRng, cap: f64) -> Result<f64> {
    let (half_a, half_b) = pair(su, rng, cap)?;
    let (alpha, beta) = (half_a.scale(2.0), half_b.scale(2.0));
    let element = |g0: f64, g: &AlgebraCoords| {
        let values = g.values().iter().map(|x| Complex64::new(0.0, -x)).collect();
        ComplexCoords::new(2, Complex64::new(g0, 0.0), values)
    };
    let (e0, e) = su2_exp_closed_form(&alpha)?;
    let single = linearize_exp(&su.tensors, &su.basis, &half_a)?.max_diff(&element(e0, &e)?);
    let (g0, g) = su2_compose_closed_form(&alpha, &beta)?;
    let rho = compose_element(&su.tensors, &su.basis, &half_a, &half_b)?;
    Ok(single.max(rho.max_diff(&element(g0, &g)?)))
}
