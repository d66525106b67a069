//! Command implementations behind the `sun-bch` binary.
//!
//! Each `cmd_*` function returns the JSON document to print and the process
//! exit code, so the binary stays a thin argument parser.

mod verify;

use std::f64::consts::PI;

use anyhow::{bail, Context};
use serde_json::{json, Value};
use sun_bch::matrix::max_abs_diff;
use sun_bch::sampling::{random_algebra, trial_rng, DEFAULT_SPECTRAL_CAP};
use sun_bch::wire::{self, Emit};
use sun_bch::{
    compose_element, delinearize_exp, exp_dense, similarity_detailed, AlgebraCoords, SuN,
};

pub use verify::{cmd_verify, PropertyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest `N` accepted by `basis`.
pub const MAX_BASIS_N: usize = 8;

/// Settings shared by the randomized commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub tol: f64,
    pub spectral_cap: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 2,
            seed: 0,
            trials: 100,
            tol: 1e-8,
            spectral_cap: DEFAULT_SPECTRAL_CAP,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n < 2 {
            bail!("--n must be at least 2, got {}", self.n);
        }
        if self.trials < 1 {
            bail!("--trials must be at least 1");
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            bail!("--tol must be positive, got {}", self.tol);
        }
        if !(self.spectral_cap > 0.0 && self.spectral_cap.is_finite()) {
            bail!("--spectral-cap must be positive, got {}", self.spectral_cap);
        }
        Ok(())
    }
}

/// A finished command: the document to print and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct CmdOutput {
    pub json: Value,
    pub exit_code: i32,
}

impl CmdOutput {
    fn ok(json: Value) -> Self {
        Self {
            json,
            exit_code: EXIT_PASS,
        }
    }

    pub fn render(&self) -> String {
        wire::to_string(&self.json) + "\n"
    }
}

/// Maps an error to an exit code and a machine-readable document: numeric
/// domain failures of the library exit with 3, everything else with 2.
pub fn error_output(err: &anyhow::Error) -> CmdOutput {
    let lib = err.chain().find_map(|e| e.downcast_ref::<sun_bch::Error>());
    let (code, reason) = match lib {
        Some(e) if !e.is_usage() => (EXIT_DOMAIN, e.reason()),
        Some(e) => (EXIT_USAGE, e.reason()),
        None => (EXIT_USAGE, "usage"),
    };
    CmdOutput {
        json: json!({"error": {"reason": reason, "message": format!("{err:#}")}}),
        exit_code: code,
    }
}

/// Parses a JSON array of numbers.
pub fn parse_vector(text: &str) -> anyhow::Result<Vec<f64>> {
    let v: Vec<f64> = serde_json::from_str(text)
        .with_context(|| format!("not a JSON array of numbers: {text}"))?;
    Ok(v)
}

/// Uses `given` or draws a vector from `(seed, stream)`.
fn coords_or_random(
    su: &SuN,
    given: Option<Vec<f64>>,
    cfg: &RunConfig,
    stream: u32,
) -> anyhow::Result<AlgebraCoords> {
    Ok(match given {
        Some(v) => AlgebraCoords::new(su.n(), v)?,
        None => random_algebra(
            &su.basis,
            &mut trial_rng(cfg.seed, stream, 0),
            cfg.spectral_cap,
        )?,
    })
}

/// `R⃗` with `exp(−iR⃗·Λ⃗) = exp(−iM⃗·Λ⃗) exp(−iN⃗·Λ⃗)`, the linearized product
/// `(ρ₀, ρ⃗)` and the max-norm defect against the dense product.
pub fn cmd_compose(
    cfg: &RunConfig,
    m: Option<Vec<f64>>,
    nvec: Option<Vec<f64>>,
) -> anyhow::Result<CmdOutput> {
    cfg.validate()?;
    let su = SuN::new(cfg.n)?;
    let m = coords_or_random(&su, m, cfg, 0)?;
    let nvec = coords_or_random(&su, nvec, cfg, 1)?;
    let rho = compose_element(&su.tensors, &su.basis, &m, &nvec)?;
    let r = delinearize_exp(&su.basis, &rho)?;
    let product = exp_dense(&su.basis, &m)? * exp_dense(&su.basis, &nvec)?;
    let residual = max_abs_diff(&exp_dense(&su.basis, &r)?, &product);
    let (rho0, rho_vec) = wire::complex_coords(&rho);
    Ok(CmdOutput::ok(json!({
        "n": cfg.n,
        "m": wire::coords(&m),
        "nvec": wire::coords(&nvec),
        "r": wire::coords(&r),
        "rho0": rho0,
        "rho": rho_vec,
        "residual": residual,
    })))
}

/// `N⃗′` with `N⃗′·Λ⃗ = exp(−iM⃗·Λ⃗)(N⃗·Λ⃗)exp(iM⃗·Λ⃗)` and its self-checks.
pub fn cmd_similarity(
    cfg: &RunConfig,
    m: Option<Vec<f64>>,
    nvec: Option<Vec<f64>>,
) -> anyhow::Result<CmdOutput> {
    cfg.validate()?;
    let su = SuN::new(cfg.n)?;
    let m = coords_or_random(&su, m, cfg, 0)?;
    let nvec = coords_or_random(&su, nvec, cfg, 1)?;
    let out = similarity_detailed(&su.tensors, &su.basis, &m, &nvec)?;
    Ok(CmdOutput::ok(json!({
        "n": cfg.n,
        "m": wire::coords(&m),
        "nvec": wire::coords(&nvec),
        "nprime": wire::coords(&out.nprime),
        "norm_drift": out.norm_drift,
        "scalar_constraint": out.scalar_constraint,
        "condition": out.condition,
    })))
}

/// Structure tensors and generators for `SU(n)`, `2 ≤ n ≤ 8`.
pub fn cmd_basis(n: usize, emit: Emit) -> anyhow::Result<CmdOutput> {
    if !(2..=MAX_BASIS_N).contains(&n) {
        bail!("--n must be between 2 and {MAX_BASIS_N} for basis export, got {n}");
    }
    Ok(CmdOutput::ok(wire::basis_document(&SuN::new(n)?, emit)))
}

/// Round-trip draws stay this far inside the branch cut.
pub(crate) fn principal_cap(cap: f64) -> f64 {
    cap.min(PI - 0.1)
}
