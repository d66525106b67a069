//! Seeded random instances for property runs.
//!
//! Every trial draws from its own ChaCha8 stream keyed by `(seed, stream,
//! index)`, so results do not depend on execution order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraCoords, GeneratorBasis};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::spectral::eig_hermitian;

/// Default upper bound on the spectral radius of sampled algebra elements.
pub const DEFAULT_SPECTRAL_CAP: f64 = 0.9 * std::f64::consts::PI;
/// Samples whose eigenvalues are closer than this are redrawn.
pub const MIN_SAMPLE_GAP: f64 = 1e-6;
const MAX_ATTEMPTS: usize = 1000;

/// Generator type handed out by [`trial_rng`].
pub type TrialRng = ChaCha8Rng;

/// Generator for trial `index` of property `stream` under `seed`.
pub fn trial_rng(seed: u64, stream: u32, index: u32) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((stream as u64) << 32) | index as u64);
    rng
}

/// Algebra element with components uniform in `[−1, 1]`, rescaled so the
/// spectral radius of `M⃗·Λ⃗` is uniform in `(0, cap]`. Draws with an
/// eigenvalue gap below [`MIN_SAMPLE_GAP`] are rejected.
pub fn random_algebra<R: Rng>(
    basis: &GeneratorBasis,
    rng: &mut R,
    cap: f64,
) -> Result<AlgebraCoords> {
    if !(cap > 0.0 && cap.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "spectral cap {cap} must be positive"
        )));
    }
    let n = basis.n();
    for _ in 0..MAX_ATTEMPTS {
        let raw: Vec<f64> = (0..basis.dim())
            .map(|_| rng.gen_range(-1.0..=1.0))
            .collect();
        let target = cap * (1.0 - rng.gen::<f64>());
        let m = AlgebraCoords::new(n, raw)?;
        let spec = eig_hermitian(&basis.algebra_matrix(&m)?)?;
        let radius = spec.spectral_radius();
        if radius == 0.0 {
            continue;
        }
        let s = target / radius;
        if spec.min_gap() * s < MIN_SAMPLE_GAP {
            continue;
        }
        return Ok(m.scale(s));
    }
    Err(Error::NoConvergence(MAX_ATTEMPTS))
}

/// Real vector with components uniform in `[−1, 1]`, no rescaling.
pub fn random_unit_box<R: Rng>(n: usize, rng: &mut R) -> Result<AlgebraCoords> {
    let dim = crate::algebra::algebra_dim(n);
    AlgebraCoords::new(n, (0..dim).map(|_| rng.gen_range(-1.0..=1.0)).collect())
}

/// Complex matrix with entries uniform in the square `[−1, 1]²`.
pub fn random_complex<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
    })
}

/// `(A + A†)/2` of [`random_complex`].
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let a = random_complex(n, rng);
    (&a + a.adjoint()) * Complex64::new(0.5, 0.0)
}
