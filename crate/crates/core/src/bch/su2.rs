use crate::algebra::AlgebraCoords;
use crate::error::{Error, Result};

/// `exp(−i (α⃗/2)·σ⃗) = γ₀ I − i γ⃗·σ⃗` for a rotation vector `α⃗`, returning
/// `(cos(α/2), sin(α/2) ê_α)`.
pub fn su2_exp_closed_form(alpha: &AlgebraCoords) -> Result<(f64, AlgebraCoords)> {
    let a = vec3(alpha)?;
    let (c, s, e) = half_angle(a);
    Ok((c, AlgebraCoords::new(2, e.iter().map(|x| s * x).collect())?))
}

/// Product of two SU(2) rotations with rotation vectors `α⃗` and `β⃗`:
///
/// ```text
/// γ₀ = cos(α/2)cos(β/2) − sin(α/2)sin(β/2) ê_α·ê_β
/// γ⃗ = sin(α/2)cos(β/2) ê_α + cos(α/2)sin(β/2) ê_β + sin(α/2)sin(β/2) ê_α×ê_β
/// ```
///
/// so that the product equals `γ₀ I − i γ⃗·σ⃗`.
pub fn su2_compose_closed_form(
    alpha: &AlgebraCoords,
    beta: &AlgebraCoords,
) -> Result<(f64, AlgebraCoords)> {
    let (ca, sa, ea) = half_angle(vec3(alpha)?);
    let (cb, sb, eb) = half_angle(vec3(beta)?);
    let dot: f64 = ea.iter().zip(&eb).map(|(x, y)| x * y).sum();
    let cross = [
        ea[1] * eb[2] - ea[2] * eb[1],
        ea[2] * eb[0] - ea[0] * eb[2],
        ea[0] * eb[1] - ea[1] * eb[0],
    ];
    let gamma0 = ca * cb - sa * sb * dot;
    let gamma = (0..3)
        .map(|k| sa * cb * ea[k] + ca * sb * eb[k] + sa * sb * cross[k])
        .collect();
    Ok((gamma0, AlgebraCoords::new(2, gamma)?))
}

fn vec3(v: &AlgebraCoords) -> Result<[f64; 3]> {
    if v.n() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: v.n(),
        });
    }
    let x = v.values();
    Ok([x[0], x[1], x[2]])
}

/// `(cos(α/2), sin(α/2), ê_α)`; the zero vector gets `ê = 0`.
fn half_angle(a: [f64; 3]) -> (f64, f64, [f64; 3]) {
    let angle = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if angle == 0.0 {
        return (1.0, 0.0, [0.0; 3]);
    }
    let h = 0.5 * angle;
    (h.cos(), h.sin(), a.map(|x| x / angle))
}
