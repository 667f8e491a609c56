//! End-to-end evaluation of the headline inequalities: the slowly growing
//! complexity factor, the systole-volume and systole-degree lower bounds, the
//! degree-from-covolume bound, and the covering complexity certificate.

use crate::error::{Error, Result};
use crate::volumes::{euclidean_ball_volume, hyperbolic_ball_volume, VolumeQuery};

/// `e^(e^e)`, the domain threshold for the triple-log formulas.
pub fn triple_log_threshold() -> f64 {
    std::f64::consts::E.exp().exp()
}

/// The otherwise-unspecified constants of the bound formulas, all explicit
/// and defaulting to 1, plus the dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub c: f64,
    pub c1: f64,
    pub c_prime: f64,
    pub c_tilde: f64,
    pub c3: f64,
    pub alpha: f64,
    pub d: usize,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams { c: 1.0, c1: 1.0, c_prime: 1.0, c_tilde: 1.0, c3: 1.0, alpha: 1.0, d: 2 }
    }
}

impl BoundParams {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("C", self.c),
            ("C1", self.c1),
            ("c_prime", self.c_prime),
            ("c_tilde", self.c_tilde),
            ("c3", self.c3),
            ("alpha", self.alpha),
        ] {
            if !(value > 0.0) && value != 0.0 {
                return Err(Error::Domain(format!("constant {name} must be nonnegative, got {value}")));
            }
        }
        if self.d < 2 {
            return Err(Error::Domain(format!("dimension must be >= 2, got {}", self.d)));
        }
        Ok(())
    }
}

/// The slowly growing factor `phi(v) = (loglog v / logloglog v)^{3d}`,
/// accepted for `v >= e^(e^e)`.
pub fn phi(v: f64, d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain(format!("dimension must be >= 2, got {d}")));
    }
    if !(v >= triple_log_threshold()) {
        return Err(Error::Domain(format!(
            "phi requires v >= e^(e^e) = {:.6}, got {v}",
            triple_log_threshold()
        )));
    }
    let ll = v.ln().ln();
    let lll = ll.ln();
    Ok((ll / lll).powi(3 * d as i32))
}

/// Systole lower bound in terms of volume:
/// `C1 (logloglog vol^C / loglog vol^C)^3`, accepted for `vol^C >= e^(e^e)`.
pub fn systole_volume_lb(vol: f64, p: &BoundParams) -> Result<f64> {
    p.validate()?;
    let log_vol_c = p.c * vol.ln();
    if !(log_vol_c >= triple_log_threshold().ln()) {
        return Err(Error::Domain(format!(
            "systole_volume_lb requires vol^C >= e^(e^e); log(vol^C) = {log_vol_c}"
        )));
    }
    let ll = log_vol_c.ln();
    let lll = ll.ln();
    Ok(p.c1 * (lll / ll).powi(3))
}

/// Systole lower bound in terms of the degree of definition:
/// `c' (loglog s / log s)^3` for integer `s >= 3`.
pub fn systole_degree_lb(s: usize, p: &BoundParams) -> Result<f64> {
    p.validate()?;
    if s < 3 {
        return Err(Error::Domain(format!("degree of definition must be >= 3, got {s}")));
    }
    let ls = (s as f64).ln();
    Ok(p.c_prime * (ls.ln() / ls).powi(3))
}

/// Upper bound on the degree of definition from the covolume:
/// `c3 log(covol)` for `covol > 1`.
pub fn degree_ub(covol: f64, p: &BoundParams) -> Result<f64> {
    p.validate()?;
    if !(covol > 1.0) {
        return Err(Error::Domain(format!("covolume must exceed 1, got {covol}")));
    }
    Ok(p.c3 * covol.ln())
}

/// Vertex-count and degree caps for the nerve of a systole-scale ball cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityCertificate {
    pub max_vertices: u64,
    pub max_degree: u64,
}

/// Covering certificate at scale `s = min(systole, 1)`:
/// `max_vertices = floor(vol / vol_E(B(s/4)))` (disjoint s/4-balls) and
/// `max_degree = floor(vol_H(B(1.25 s)) / vol_E(B(0.25 s)))` (comparison
/// theorem applied to numerator and denominator).
pub fn complexity_certificate(vol: f64, systole: f64, d: usize) -> Result<ComplexityCertificate> {
    if !(vol > 0.0) {
        return Err(Error::Domain(format!("volume must be positive, got {vol}")));
    }
    if !(systole > 0.0) {
        return Err(Error::Domain(format!("systole must be positive, got {systole}")));
    }
    let s = systole.min(1.0);
    let small_ball = euclidean_ball_volume(VolumeQuery::new(d, s / 4.0)?);
    let big_ball = hyperbolic_ball_volume(VolumeQuery::new(d, 1.25 * s)?, 1e-10)?;
    Ok(ComplexityCertificate {
        max_vertices: (vol / small_ball).floor() as u64,
        max_degree: (big_ball / small_ball).floor() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_boundary_and_values() {
        let threshold = triple_log_threshold();
        assert!(phi(threshold * (1.0 - 1e-9), 2).is_err());
        // just above the threshold: phi ~ e^6 for d = 2
        let v = threshold * (1.0 + 1e-6);
        let value = phi(v, 2).unwrap();
        assert!((value - 403.4287934927).abs() < 0.5);
        // doubling d squares the value; at v = e^(e^4) the inner logs are
        // exactly 4 and ln 4
        let v = 4f64.exp().exp();
        let p2 = phi(v, 2).unwrap();
        let p4 = phi(v, 4).unwrap();
        assert!((p4 - p2 * p2).abs() / p4 < 1e-9);
        assert!((p2 - (4.0 / 4f64.ln()).powi(6)).abs() / p2 < 1e-9);
    }

    #[test]
    fn systole_volume_lb_values() {
        let p = BoundParams::default();
        let v = triple_log_threshold();
        // at vol = e^(e^e) with C = C1 = 1 the logs collapse to e and 1
        let value = systole_volume_lb(v, &p).unwrap();
        assert!((value - (1.0 / std::f64::consts::E).powi(3)).abs() < 1e-12);
        // linear in C1
        let scaled = BoundParams { c1: 3.0, ..p };
        assert!((systole_volume_lb(v, &scaled).unwrap() / value - 3.0).abs() < 1e-12);
        // v = e^(e^4): (ln 4 / 4)^3
        let v2 = 4f64.exp().exp();
        let expected = (4f64.ln() / 4.0).powi(3);
        assert!((systole_volume_lb(v2, &p).unwrap() - expected).abs() < 1e-12);
        // below domain
        assert!(systole_volume_lb(v * 0.99, &p).is_err());
    }

    #[test]
    fn systole_degree_lb_values() {
        let p = BoundParams::default();
        // frozen from a 40-digit evaluation
        assert!((systole_degree_lb(16, &p).unwrap() - 0.049758233551296497).abs() < 1e-12);
        assert!((systole_degree_lb(10, &p).unwrap() - 0.04752277266230553).abs() < 1e-12);
        let zero = BoundParams { c_prime: 0.0, ..p };
        assert_eq!(systole_degree_lb(10, &zero).unwrap(), 0.0);
        assert!(systole_degree_lb(2, &p).is_err());
    }

    #[test]
    fn degree_ub_values() {
        let p = BoundParams::default();
        let covol = std::f64::consts::E.powi(10);
        assert!((degree_ub(covol, &p).unwrap() - 10.0).abs() < 1e-12);
        let doubled = BoundParams { c3: 2.0, ..p };
        assert!((degree_ub(covol, &doubled).unwrap() - 20.0).abs() < 1e-12);
        assert!(degree_ub(1.0, &p).is_err());
    }

    #[test]
    fn composing_degree_bound_reproduces_triple_log_shape() {
        // systole_degree_lb(degree_ub(covol)) against the direct volume
        // formula at three volumes
        let p = BoundParams::default();
        for &vol in &[1e12f64, 1e20, 1e40] {
            let s = degree_ub(vol, &p).unwrap();
            let composed = {
                let ls = s.ln();
                (ls.ln() / ls).powi(3)
            };
            let direct = systole_volume_lb(vol, &p).unwrap();
            // same shape: log s = loglog vol, so the two agree exactly
            assert!((composed - direct).abs() / direct < 1e-9, "vol={vol}");
        }
    }

    #[test]
    fn certificate_worked_example() {
        let cert = complexity_certificate(100.0, 0.5, 2).unwrap();
        assert_eq!(cert.max_vertices, 2037);
        assert_eq!(cert.max_degree, 25);
        // systole above 1 clamps to the s = 1 certificate
        let clamped = complexity_certificate(100.0, 3.0, 2).unwrap();
        let unit = complexity_certificate(100.0, 1.0, 2).unwrap();
        assert_eq!(clamped, unit);
    }

    #[test]
    fn monotonicity_grids() {
        // phi increasing, systole_volume_lb decreasing in v
        let p = BoundParams::default();
        let mut prev_phi = 0.0;
        let mut prev_lb = f64::INFINITY;
        for i in 1..=40 {
            let v = triple_log_threshold() * (1.0 + i as f64);
            let f = phi(v, 2).unwrap();
            let lb = systole_volume_lb(v, &p).unwrap();
            assert!(f > prev_phi);
            assert!(lb < prev_lb);
            prev_phi = f;
            prev_lb = lb;
        }
        // certificate vertex cap decreases as the systole grows
        let mut prev = u64::MAX;
        for i in 1..=10 {
            let cert = complexity_certificate(100.0, 0.1 * i as f64, 2).unwrap();
            assert!(cert.max_vertices <= prev);
            prev = cert.max_vertices;
        }
    }
}
