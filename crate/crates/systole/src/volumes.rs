//! Ball volumes in Euclidean and hyperbolic d-space, the comparison
//! inequality between them, and the degree constant of the covering lemma.

use crate::error::{Error, Result};

/// A ball-volume query: dimension `d >= 2`, radius `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeQuery {
    pub d: usize,
    pub r: f64,
}

impl VolumeQuery {
    pub fn new(d: usize, r: f64) -> Result<VolumeQuery> {
        if d < 2 {
            return Err(Error::Domain(format!("dimension must be >= 2, got {d}")));
        }
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("radius must be finite positive, got {r}")));
        }
        Ok(VolumeQuery { d, r })
    }
}

/// `Gamma(k/2)` for positive integer `k`, via the half-integer recursion
/// `Gamma(1/2) = sqrt(pi)`, `Gamma(1) = 1`, `Gamma(z+1) = z Gamma(z)`.
pub fn gamma_half(k: usize) -> f64 {
    assert!(k >= 1, "gamma_half needs a positive argument");
    let mut value = if k % 2 == 0 { 1.0 } else { std::f64::consts::PI.sqrt() };
    let mut z = if k % 2 == 0 { 2 } else { 1 };
    while z + 2 <= k {
        value *= z as f64 / 2.0;
        z += 2;
    }
    value
}

/// Volume of the unit sphere `S^{d-1}`: `2 pi^{d/2} / Gamma(d/2)`.
pub fn unit_sphere_area(d: usize) -> f64 {
    2.0 * std::f64::consts::PI.powf(d as f64 / 2.0) / gamma_half(d)
}

/// `pi^{d/2} r^d / Gamma(d/2 + 1)`.
pub fn euclidean_ball_volume(q: VolumeQuery) -> f64 {
    std::f64::consts::PI.powf(q.d as f64 / 2.0) * q.r.powi(q.d as i32) / gamma_half(q.d + 2)
}

fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let err = (left + right - whole) / 15.0;
    if depth == 0 || err.abs() <= tol {
        (left + right + err, err.abs())
    } else {
        let (lv, le) = adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1);
        let (rv, re) = adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
        (lv + rv, le + re)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to relative tolerance
/// (scaled by the coarse estimate of the integral, so neither huge nor tiny
/// integrands distort the refinement).
fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let scaled_tol = tol * whole.abs().max(f64::MIN_POSITIVE);
    let (value, achieved) = adaptive_simpson(&f, a, b, fa, fm, fb, whole, scaled_tol, 48);
    if achieved > scaled_tol * 4.0 {
        return Err(Error::QuadratureFailure { requested: scaled_tol, achieved });
    }
    Ok(value)
}

/// `vol(S^{d-1}) * int_0^r sinh^{d-1}(t) dt`, cross-checked in tests against
/// the closed forms `2 pi (cosh r - 1)` (d = 2) and `pi (sinh 2r - 2r)`
/// (d = 3).
pub fn hyperbolic_ball_volume(q: VolumeQuery, tol: f64) -> Result<f64> {
    let exponent = (q.d - 1) as i32;
    let integral = integrate(|t| t.sinh().powi(exponent), 0.0, q.r, tol)?;
    Ok(unit_sphere_area(q.d) * integral)
}

/// The covering-lemma degree constant: volume of a 1.25-ball in hyperbolic
/// d-space over the volume of a 0.25-ball in Euclidean d-space.
pub fn lemma_constant(d: usize) -> Result<f64> {
    let hyp = hyperbolic_ball_volume(VolumeQuery::new(d, 1.25)?, 1e-10)?;
    let euc = euclidean_ball_volume(VolumeQuery::new(d, 0.25)?);
    Ok(hyp / euc)
}

/// Comparison report: is `vol_E <= vol_H` at every radius (with `1e-12`
/// slack)?
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub d: usize,
    pub rows: Vec<(f64, f64, f64)>,
    pub pass: bool,
}

pub fn verify_comparison(d: usize, radii: &[f64]) -> Result<ComparisonReport> {
    let mut rows = Vec::with_capacity(radii.len());
    let mut pass = true;
    for &r in radii {
        let q = VolumeQuery::new(d, r)?;
        let e = euclidean_ball_volume(q);
        let h = hyperbolic_ball_volume(q, 1e-10)?;
        if e > h + 1e-12 {
            pass = false;
        }
        rows.push((r, e, h));
    }
    Ok(ComparisonReport { d, rows, pass })
}
