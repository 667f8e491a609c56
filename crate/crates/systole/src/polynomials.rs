//! Exact integer polynomial arithmetic, Mahler measures and Dobrowolski's
//! lower bound.
//!
//! The Mahler measure of a monic integer polynomial is computed along two
//! independent routes: simultaneous root iteration and Graeffe root squaring.
//! A result is only returned when the two routes agree, so neither path can
//! silently drift.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::xfloat::XFloat;

/// Monic-friendly integer polynomial, coefficients stored in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients. Trailing zeros are
    /// trimmed; the zero polynomial is rejected.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<IntPolynomial> {
        while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() || coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Empty("zero polynomial"));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<IntPolynomial> {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n`-style helper: the constant polynomial `c`.
    pub fn constant(c: i64) -> Result<IntPolynomial> {
        IntPolynomial::from_i64(&[c])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty by construction")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
        }
        acc
    }

    pub fn derivative(&self) -> Result<IntPolynomial> {
        if self.degree() == 0 {
            return Err(Error::Empty("derivative of a constant"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Reciprocal polynomial `x^d f(1/x)` (coefficients reversed).
    pub fn reciprocal(&self) -> Result<IntPolynomial> {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::new(coeffs)
    }

    pub fn max_abs_coeff_f64(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact product of two integer polynomials.
pub fn poly_mul(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let mut out = vec![BigInt::zero(); f.degree() + g.degree() + 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    IntPolynomial::new(out).expect("product of nonzero polynomials is nonzero")
}

// ---------------------------------------------------------------------------
// rational polynomial helpers (gcd, exact division, squarefree decomposition)
// ---------------------------------------------------------------------------

type RatPoly = Vec<BigRational>;

fn rp_from_int(f: &IntPolynomial) -> RatPoly {
    f.coeffs.iter().map(|c| BigRational::from(c.clone())).collect()
}

fn rp_trim(p: &mut RatPoly) {
    while p.len() > 1 && p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn rp_is_zero(p: &RatPoly) -> bool {
    p.iter().all(Zero::is_zero)
}

fn rp_deg(p: &RatPoly) -> usize {
    p.len() - 1
}

fn rp_derivative(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    let mut out: RatPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
        .collect();
    rp_trim(&mut out);
    out
}

fn rp_divrem(num: &RatPoly, den: &RatPoly) -> (RatPoly, RatPoly) {
    assert!(!rp_is_zero(den), "division by zero polynomial");
    let mut rem = num.clone();
    rp_trim(&mut rem);
    let dd = rp_deg(den);
    if rp_is_zero(&rem) || rp_deg(&rem) < dd {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rp_deg(&rem) - dd + 1];
    let lead = den[dd].clone();
    while !rp_is_zero(&rem) && rp_deg(&rem) >= dd {
        let shift = rp_deg(&rem) - dd;
        let factor = &rem[rp_deg(&rem)] / &lead;
        quot[shift] = factor.clone();
        for (i, c) in den.iter().enumerate() {
            let idx = i + shift;
            let delta = c * &factor;
            rem[idx] = &rem[idx] - delta;
        }
        rem.pop();
        rp_trim(&mut rem);
        if rem.iter().all(Zero::is_zero) {
            rem = vec![BigRational::zero()];
            break;
        }
    }
    rp_trim(&mut quot);
    (quot, rem)
}

fn zp_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn zp_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    zp_trim(&mut p);
    let content = p.iter().fold(BigInt::zero(), |acc, c| Integer::gcd(&acc, c));
    if content > BigInt::one() {
        for c in p.iter_mut() {
            *c = &*c / &content;
        }
    }
    p
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) a mod b`, integer throughout.
fn zp_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    zp_trim(&mut rem);
    while rem.len() > 1 || !rem[0].is_zero() {
        let dr = rem.len() - 1;
        if dr < db {
            break;
        }
        let factor = rem[dr].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            let delta = c * &factor;
            rem[i + shift] -= delta;
        }
        zp_trim(&mut rem);
        if rem.iter().all(Zero::is_zero) {
            return vec![BigInt::zero()];
        }
    }
    rem
}

/// Monic gcd over the rationals, computed through a primitive
/// pseudo-remainder sequence over the integers (the naive rational Euclid
/// chain blows up on the big-coefficient polynomials the Graeffe orbit
/// produces).
fn rp_gcd_monic(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let clear = |p: &RatPoly| -> Vec<BigInt> {
        let lcm = p
            .iter()
            .fold(BigInt::one(), |acc, c| Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        zp_primitive(ints)
    };
    let mut a = clear(a);
    let mut b = clear(b);
    if b.len() > a.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        if b.len() == 1 {
            // zero: gcd is a; nonzero constant: the inputs are coprime
            break if b[0].is_zero() { a } else { vec![BigInt::one()] };
        }
        let r = zp_pseudo_rem(&a, &b);
        if r.iter().all(Zero::is_zero) {
            break b;
        }
        a = b;
        b = zp_primitive(r);
    };
    let lead = BigRational::from(g.last().unwrap().clone());
    g.iter().map(|c| BigRational::from(c.clone()) / &lead).collect()
}

fn rp_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    rp_trim(&mut out);
    out
}

fn rp_to_int(p: &RatPoly) -> Result<IntPolynomial> {
    let coeffs = p
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralCharPoly { coefficient: c.to_string() })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntPolynomial::new(coeffs)
}

/// Squarefree part `f / gcd(f, f')`, monic integer output for monic input.
pub fn squarefree_part(f: &IntPolynomial) -> Result<IntPolynomial> {
    if f.degree() == 0 {
        return Ok(f.clone());
    }
    let rf = rp_from_int(f);
    let g = rp_gcd_monic(&rf, &rp_derivative(&rf));
    let (q, r) = rp_divrem(&rf, &g);
    debug_assert!(rp_is_zero(&r));
    rp_to_int(&q)
}

/// Yun's squarefree decomposition: returns `(g_i, i)` with `f = prod g_i^i`
/// up to sign, each `g_i` squarefree.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Result<Vec<(IntPolynomial, usize)>> {
    if f.degree() == 0 {
        return Ok(vec![]);
    }
    let rf = rp_from_int(f);
    let df = rp_derivative(&rf);
    let a = rp_gcd_monic(&rf, &df);
    let (mut b, _) = rp_divrem(&rf, &a);
    let (mut c, _) = rp_divrem(&df, &a);
    let mut d = rp_sub(&c, &rp_derivative(&b));
    let mut out = Vec::new();
    let mut mult = 1usize;
    while rp_deg(&b) > 0 {
        let g = rp_gcd_monic(&b, &d);
        if rp_deg(&g) > 0 {
            out.push((rp_to_int(&g)?, mult));
        }
        let (nb, _) = rp_divrem(&b, &g);
        let (nc, _) = rp_divrem(&d, &g);
        b = nb;
        c = nc;
        d = rp_sub(&c, &rp_derivative(&b));
        mult += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

const ROOT_ITERATION_CAP: usize = 1000;
/// Sweeps without residual improvement before the iteration is declared
/// stalled at its conditioning-limited plateau.
const ROOT_PLATEAU_SWEEPS: usize = 50;
/// A plateau residual within this factor of the requested scale is accepted;
/// downstream consumers cross-check through the independent Graeffe path.
const ROOT_PLATEAU_SLACK: f64 = 1e4;

/// All complex roots (with multiplicity) by Durand-Kerner simultaneous
/// iteration. Deterministic start points on a circle of radius
/// `1 + max|c_i/c_d|`, angular offset 0.5 rad. Roots are sorted by real part,
/// then imaginary part.
pub fn complex_roots(f: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    if f.degree() < 1 {
        return Err(Error::Domain("complex_roots requires degree >= 1".into()));
    }
    let d = f.degree();
    let lead = f.leading().to_f64().unwrap_or(f64::INFINITY);
    let monic: Vec<Complex64> = f
        .coeffs
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY) / lead, 0.0))
        .collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + monic
            .iter()
            .take(d)
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.5;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let scale = tol * (1.0 + f.max_abs_coeff_f64());
    let mut best = roots.clone();
    let mut best_residual = f64::INFINITY;
    let mut stale = 0usize;
    for _ in 0..ROOT_ITERATION_CAP {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let zk = roots[k];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(zk) / denom;
            roots[k] = zk - step;
            max_step = max_step.max(step.norm());
        }
        let residual = roots.iter().map(|&z| eval(z).norm()).fold(0.0, f64::max);
        if residual < best_residual {
            best_residual = residual;
            best.copy_from_slice(&roots);
            stale = 0;
        } else {
            stale += 1;
        }
        // ill-conditioned root clusters plateau above the target; once the
        // residual stops improving, further sweeps only oscillate
        if best_residual < scale || max_step < 1e-300 || stale >= ROOT_PLATEAU_SWEEPS {
            break;
        }
    }
    if best_residual >= scale * ROOT_PLATEAU_SLACK {
        return Err(Error::RootDivergence {
            residual: best_residual,
            iterations: ROOT_ITERATION_CAP,
        });
    }
    let mut roots = best;
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

// ---------------------------------------------------------------------------
// Graeffe squaring and Mahler measure
// ---------------------------------------------------------------------------

/// One exact Graeffe step: maps `prod (x - a_i)` to `prod (x - a_i^2)`
/// via `g(y) = (-1)^d (fe(y)^2 - y fo(y)^2)` with `f(x) = fe(x^2) + x fo(x^2)`.
pub fn graeffe_step(f: &IntPolynomial) -> IntPolynomial {
    let d = f.degree();
    let even: Vec<BigInt> = f.coeffs.iter().step_by(2).cloned().collect();
    let odd: Vec<BigInt> = f.coeffs.iter().skip(1).step_by(2).cloned().collect();
    let mut out = vec![BigInt::zero(); d + 1];
    for (i, a) in even.iter().enumerate() {
        for (j, b) in even.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    for (i, a) in odd.iter().enumerate() {
        for (j, b) in odd.iter().enumerate() {
            out[i + j + 1] -= a * b;
        }
    }
    if d % 2 == 1 {
        for c in out.iter_mut() {
            *c = -&*c;
        }
    }
    IntPolynomial::new(out).expect("Graeffe image of a nonzero polynomial is nonzero")
}

fn graeffe_step_xfloat(coeffs: &[XFloat], d: usize) -> Vec<XFloat> {
    let even: Vec<XFloat> = coeffs.iter().step_by(2).cloned().collect();
    let odd: Vec<XFloat> = coeffs.iter().skip(1).step_by(2).cloned().collect();
    let mut out = vec![XFloat::ZERO; d + 1];
    for (i, a) in even.iter().enumerate() {
        for (j, b) in even.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    for (i, a) in odd.iter().enumerate() {
        for (j, b) in odd.iter().enumerate() {
            out[i + j + 1] = out[i + j + 1].add(&a.mul(b).neg());
        }
    }
    if d % 2 == 1 {
        for c in out.iter_mut() {
            *c = c.neg();
        }
    }
    out
}

const GRAEFFE_STEPS: u32 = 48;
const GRAEFFE_EXACT_BIT_CAP: u64 = 2048;

/// `log M(f)` by iterated root squaring, independent of any root finder.
/// Exact integer steps run until the coefficients pass a size cap, the rest
/// in extended-exponent floats.
pub fn log_mahler_graeffe(f: &IntPolynomial) -> f64 {
    let d = f.degree();
    let mut exact = f.clone();
    let mut float_coeffs: Option<Vec<XFloat>> = None;
    for _ in 0..GRAEFFE_STEPS {
        match float_coeffs {
            None => {
                let bits = exact.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
                if bits > GRAEFFE_EXACT_BIT_CAP {
                    float_coeffs =
                        Some(exact.coeffs.iter().map(XFloat::from_bigint).collect());
                    let cs = float_coeffs.as_mut().unwrap();
                    *cs = graeffe_step_xfloat(cs, d);
                } else {
                    exact = graeffe_step(&exact);
                }
            }
            Some(ref mut cs) => {
                *cs = graeffe_step_xfloat(cs, d);
            }
        }
    }
    let max_log2 = match float_coeffs {
        Some(cs) => cs.iter().map(XFloat::log2_abs).fold(f64::NEG_INFINITY, f64::max),
        None => exact
            .coeffs
            .iter()
            .map(|c| XFloat::from_bigint(c).log2_abs())
            .fold(f64::NEG_INFINITY, f64::max),
    };
    let log2_m = (max_log2 / (1u64 << GRAEFFE_STEPS) as f64).max(0.0);
    log2_m * std::f64::consts::LN_2
}

/// `log M(f)` along the root-finding path: squarefree decomposition first so
/// every root iteration sees simple roots only.
pub fn log_mahler_roots(f: &IntPolynomial) -> Result<f64> {
    let mut log_m = 0.0;
    for (factor, mult) in squarefree_decomposition(f)? {
        if factor.degree() == 0 {
            continue;
        }
        let roots = complex_roots(&factor, 1e-12)?;
        let part: f64 = roots
            .iter()
            .map(|z| z.norm())
            .filter(|r| *r > 1.0)
            .map(f64::ln)
            .sum();
        log_m += mult as f64 * part;
    }
    Ok(log_m)
}

/// Both Mahler paths: `(root_path, graeffe_path)`, as measures (not logs).
pub fn mahler_paths(f: &IntPolynomial) -> Result<(f64, f64)> {
    if !f.is_monic() {
        return Err(Error::Domain("Mahler measure requires a monic polynomial".into()));
    }
    if f.degree() < 1 {
        return Err(Error::Domain("Mahler measure requires degree >= 1".into()));
    }
    Ok((log_mahler_roots(f)?.exp(), log_mahler_graeffe(f).exp()))
}

const MAHLER_PATH_AGREEMENT: f64 = 1e-8;

/// Mahler measure `M(f) = prod_{|a_i|>1} |a_i|`, returned only when the root
/// and Graeffe routes agree to `1e-8` relative.
pub fn mahler_measure(f: &IntPolynomial) -> Result<f64> {
    let (root_path, graeffe_path) = mahler_paths(f)?;
    let scale = root_path.max(graeffe_path);
    if (root_path - graeffe_path).abs() > MAHLER_PATH_AGREEMENT * scale {
        return Err(Error::MahlerMismatch { root_path, graeffe_path });
    }
    Ok(root_path)
}

// ---------------------------------------------------------------------------
// cyclotomic detection
// ---------------------------------------------------------------------------

/// Exact decision: is every root of `f` a root of unity?
///
/// Works on the squarefree part and iterates the Graeffe transform; a set of
/// roots of unity has a finite squaring orbit and revisits a previous
/// polynomial within `deg + 2` steps, while any root off the unit circle
/// forces unbounded coefficient growth and the orbit never repeats. No
/// floating point is involved.
pub fn is_cyclotomic_product(f: &IntPolynomial) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::Domain("cyclotomic test requires a monic polynomial".into()));
    }
    if f.constant_term().is_zero() {
        return Err(Error::Domain(
            "cyclotomic test requires f(0) != 0; factor out x first".into(),
        ));
    }
    if f.degree() == 0 {
        return Ok(true);
    }
    // Cheap exact rejection: if every root is a root of unity, then at every
    // step of the raw Graeffe orbit the coefficients are elementary symmetric
    // functions of unit-modulus numbers, so |c_j| <= C(d, j). A coefficient
    // beyond that bound certifies a root off the unit circle. (Non-cyclotomic
    // polynomials with Mahler measure very close to 1 may survive all the
    // probe steps; they fall through to the orbit-revisit test below.)
    {
        let d = f.degree();
        let mut binom = vec![BigInt::one(); d + 1];
        for j in 1..=d {
            binom[j] = &binom[j - 1] * BigInt::from(d - j + 1) / BigInt::from(j);
        }
        let mut h = f.clone();
        for _ in 0..12 {
            if h.coeffs.iter().enumerate().any(|(j, c)| c.abs() > binom[j]) {
                return Ok(false);
            }
            h = graeffe_step(&h);
        }
    }
    let cap = f.degree() + 2;
    let mut h = squarefree_part(f)?;
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    for _ in 0..=cap {
        if !seen.insert(h.coeffs.clone()) {
            return Ok(true);
        }
        h = squarefree_part(&graeffe_step(&h))?;
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// Dobrowolski
// ---------------------------------------------------------------------------

/// Right-hand side of Dobrowolski's bound: `c_tilde * (loglog d / log d)^3`.
/// Requires `d >= 3` so that `loglog d > 0`.
pub fn dobrowolski_rhs(d: usize, c_tilde: f64) -> Result<f64> {
    if d < 3 {
        return Err(Error::Domain(format!("dobrowolski_rhs requires d >= 3, got {d}")));
    }
    let ld = (d as f64).ln();
    Ok(c_tilde * (ld.ln() / ld).powi(3))
}

/// Outcome of an exhaustive scan of monic integer polynomials against
/// Dobrowolski's bound.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub max_degree: usize,
    pub max_height: i64,
    /// non-cyclotomic polynomials whose ratio was evaluated
    pub scanned: usize,
    /// polynomials skipped because every root is a root of unity
    pub cyclotomic: usize,
    /// min over the scan of `log M(f) / (loglog d / log d)^3`
    pub min_ratio: f64,
    pub witness: IntPolynomial,
    pub witness_log_mahler: f64,
    pub partial: bool,
}

const SCAN_BUDGET: usize = 20_000_000;

/// Enumerates all monic integer polynomials with `3 <= degree <= max_degree`,
/// coefficients in `[-max_height, max_height]` and nonzero constant term,
/// skips cyclotomic products, and reports the minimal Dobrowolski ratio with
/// its witness. Enumeration is deterministic: degree ascending, then the
/// coefficient vector as a base-`2h+1` odometer with the constant term as the
/// least significant digit.
pub fn dobrowolski_scan(max_degree: usize, max_height: i64) -> Result<ScanReport> {
    if max_degree < 3 {
        return Err(Error::Domain("scan requires max_degree >= 3".into()));
    }
    if max_height < 1 {
        return Err(Error::Domain("scan requires max_height >= 1".into()));
    }
    let base = (2 * max_height + 1) as usize;
    let mut scanned = 0usize;
    let mut cyclotomic = 0usize;
    let mut min_ratio = f64::INFINITY;
    let mut witness: Option<IntPolynomial> = None;
    let mut witness_log_mahler = 0.0;
    let mut partial = false;
    'outer: for degree in 3..=max_degree {
        let rhs = dobrowolski_rhs(degree, 1.0)?;
        let total = base.pow(degree as u32);
        for code in 0..total {
            if scanned + cyclotomic >= SCAN_BUDGET {
                partial = true;
                break 'outer;
            }
            let mut digits = code;
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(BigInt::from((digits % base) as i64 - max_height));
                digits /= base;
            }
            if coeffs[0].is_zero() {
                continue;
            }
            coeffs.push(BigInt::one());
            let f = IntPolynomial::new(coeffs)?;
            if is_cyclotomic_product(&f)? {
                cyclotomic += 1;
                continue;
            }
            let log_m = mahler_measure(&f)?.ln();
            scanned += 1;
            let ratio = log_m / rhs;
            if ratio < min_ratio {
                min_ratio = ratio;
                witness = Some(f);
                witness_log_mahler = log_m;
            }
        }
    }
    let witness = witness.ok_or(Error::Empty("scan found no non-cyclotomic polynomial"))?;
    Ok(ScanReport {
        max_degree,
        max_height,
        scanned,
        cyclotomic,
        min_ratio,
        witness,
        witness_log_mahler,
        partial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs).unwrap()
    }

    #[test]
    fn mul_basic() {
        // (x-1)(x+1) = x^2 - 1
        assert_eq!(poly_mul(&p(&[-1, 1]), &p(&[1, 1])), p(&[-1, 0, 1]));
        // f * 1 = f
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(poly_mul(&f, &p(&[1])), f);
        // (x^2+x+1)(x-2) = x^3 - x^2 - x - 2
        assert_eq!(poly_mul(&p(&[1, 1, 1]), &p(&[-2, 1])), p(&[-2, -1, -1, 1]));
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let roots = complex_roots(&p(&[1, 0, 1]), 1e-12).unwrap();
        assert!((roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-9
            || (roots[0] - Complex64::new(0.0, 1.0)).norm() < 1e-9);
        assert!((roots[0].re - roots[1].re).abs() < 1e-9);
        assert!((roots[0].im + roots[1].im).abs() < 1e-9);
    }

    #[test]
    fn roots_golden_ratio() {
        let roots = complex_roots(&p(&[-1, -1, 1]), 1e-12).unwrap();
        assert!((roots[0].re + 0.6180339887498949).abs() < 1e-9);
        assert!((roots[1].re - 1.618033988749895).abs() < 1e-9);
    }

    #[test]
    fn roots_triple_root() {
        // (x-1)^3: a residual of r only pins a triple root to r^(1/3), so the
        // cluster radius here is about 1.6e-4; squarefree factoring (as used
        // by the Mahler pipeline) recovers full accuracy.
        let roots = complex_roots(&p(&[-1, 3, -3, 1]), 1e-12).unwrap();
        for z in roots {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-3);
        }
    }

    #[test]
    fn residuals_bounded() {
        let f = p(&[3, -5, 0, 2, 1]);
        let tol = 1e-12;
        for z in complex_roots(&f, tol).unwrap() {
            assert!(f.eval_complex(z).norm() < tol * (1.0 + f.max_abs_coeff_f64()));
        }
    }

    #[test]
    fn mahler_trivial_cases() {
        assert!((mahler_measure(&p(&[-1, 1])).unwrap() - 1.0).abs() < 1e-10);
        assert!((mahler_measure(&p(&[-2, 1])).unwrap() - 2.0).abs() < 1e-10);
        assert!((mahler_measure(&p(&[-1, -1, 1])).unwrap() - 1.618033988749895).abs() < 1e-8);
    }

    #[test]
    fn mahler_lehmer_polynomial() {
        let f = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let (root, graeffe) = mahler_paths(&f).unwrap();
        // value from an independent high-precision root computation
        assert!((root - 1.1762808182599175).abs() < 1e-8);
        assert!((graeffe - 1.1762808182599175).abs() < 1e-8);
    }

    #[test]
    fn mahler_handles_repeated_roots() {
        // (x+1)^2 (x-2): double root on the unit circle must not leak into M
        let f = poly_mul(&poly_mul(&p(&[1, 1]), &p(&[1, 1])), &p(&[-2, 1]));
        assert!((mahler_measure(&f).unwrap() - 2.0).abs() < 1e-8);
    }

    #[test]
    fn mahler_rejects_non_monic() {
        assert!(mahler_measure(&p(&[1, 2])).is_err());
    }

    #[test]
    fn cyclotomic_detection() {
        assert!(is_cyclotomic_product(&p(&[1, 1, 1])).unwrap());
        assert!(!is_cyclotomic_product(&p(&[-1, -1, 1])).unwrap());
        let mixed = poly_mul(&p(&[1, 1, 1]), &p(&[-1, -1, 1]));
        assert!(!is_cyclotomic_product(&mixed).unwrap());
        // x^4 + 1 (eighth cyclotomic), and a power of a cyclotomic
        assert!(is_cyclotomic_product(&p(&[1, 0, 0, 0, 1])).unwrap());
        let sq = poly_mul(&p(&[1, 1]), &p(&[1, 1]));
        assert!(is_cyclotomic_product(&sq).unwrap());
    }

    #[test]
    fn cyclotomic_rejects_zero_constant_term() {
        assert!(is_cyclotomic_product(&p(&[0, 1])).is_err());
    }

    #[test]
    fn dobrowolski_values() {
        // frozen from a 40-digit evaluation
        assert!((dobrowolski_rhs(10, 1.0).unwrap() - 0.04752277266230553).abs() < 1e-12);
        assert!((dobrowolski_rhs(3, 1.0).unwrap() - 6.27354398667221e-4).abs() < 1e-12);
        assert_eq!(dobrowolski_rhs(5, 0.0).unwrap(), 0.0);
        assert!(dobrowolski_rhs(2, 1.0).is_err());
    }

    #[test]
    fn squarefree_decomposition_splits_multiplicities() {
        // (x-1)^2 (x+2)
        let f = poly_mul(&poly_mul(&p(&[-1, 1]), &p(&[-1, 1])), &p(&[2, 1]));
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (p(&[2, 1]), 1));
        assert_eq!(parts[1], (p(&[-1, 1]), 2));
    }

    #[test]
    fn scan_small() {
        let report = dobrowolski_scan(4, 1).unwrap();
        assert!(!report.partial);
        assert!(report.min_ratio > 0.0);
        assert!(report.scanned > 0);
        assert!(report.cyclotomic > 0);
        // every reported minimum corresponds to M > 1
        assert!(report.witness_log_mahler > 0.0);
    }

    #[test]
    fn display_renders_signs() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3x + 1");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "x^2 - 2");
    }
}
