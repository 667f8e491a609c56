//! Geometry of `P(n, R) = SL(n, R)/SO(n)`, the space of unimodular symmetric
//! positive definite matrices: distances, the `g x g^t` isometry action,
//! displacement sampling, and the Mahler-measure lower bound on translation
//! distance.

use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{
    adjoint_matrix, char_poly_int_checked, mat_mul_f64, spd_inv_sqrt, sym_eigen,
    sym_eigenvalues, transpose_f64, IntMatrix, RatMatrix, RealSymMatrix,
};
use crate::polynomials::{mahler_measure, IntPolynomial};
use crate::rng::{seeded_rng, standard_normal};

const EIGEN_TOL: f64 = 1e-12;
const DET_TOL: f64 = 1e-9;

/// A point of `P(n, R)`: symmetric positive definite with determinant
/// normalized to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpdPoint {
    n: usize,
    entries: Vec<f64>,
}

impl SpdPoint {
    /// Validates an already-unimodular SPD matrix.
    pub fn new(m: RealSymMatrix) -> Result<SpdPoint> {
        let eigenvalues = sym_eigenvalues(&m, EIGEN_TOL)?;
        if let Some(&bad) = eigenvalues.iter().find(|&&a| a <= 0.0) {
            return Err(Error::NotPositiveDefinite { eigenvalue: bad, tol: 0.0 });
        }
        let det: f64 = eigenvalues.iter().product();
        if (det - 1.0).abs() >= DET_TOL {
            return Err(Error::NotUnimodular { got: det.to_string() });
        }
        Ok(SpdPoint { n: m.dim(), entries: m.entries().to_vec() })
    }

    pub fn identity(n: usize) -> SpdPoint {
        SpdPoint { n, entries: RealSymMatrix::identity(n).entries().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn as_sym(&self) -> RealSymMatrix {
        RealSymMatrix::new(self.n, self.entries.clone()).expect("stored symmetric")
    }
}

/// Scales an SPD matrix by `det^{-1/n}` so the result lies in `P(n, R)`.
pub fn normalize(x: &RealSymMatrix) -> Result<SpdPoint> {
    let eigenvalues = sym_eigenvalues(x, EIGEN_TOL)?;
    if let Some(&bad) = eigenvalues.iter().find(|&&a| a <= 0.0) {
        return Err(Error::NotPositiveDefinite { eigenvalue: bad, tol: 0.0 });
    }
    let log_det: f64 = eigenvalues.iter().map(|a| a.ln()).sum();
    let scale = (-log_det / x.dim() as f64).exp();
    let entries: Vec<f64> = x.entries().iter().map(|e| e * scale).collect();
    SpdPoint::new(RealSymMatrix::new(x.dim(), entries)?)
}

/// `d(I, x) = sqrt(sum_i log^2 a_i)` over the eigenvalues of `x`.
pub fn distance_to_identity(x: &SpdPoint) -> f64 {
    let eigenvalues = sym_eigenvalues(&x.as_sym(), EIGEN_TOL).expect("SPD input");
    eigenvalues.iter().map(|a| a.ln().powi(2)).sum::<f64>().sqrt()
}

/// Distance between two points, by reduction to the identity through
/// `sqrt(x)^{-1} y sqrt(x)^{-1}`.
pub fn distance(x: &SpdPoint, y: &SpdPoint) -> Result<f64> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch { left: x.n, right: y.n });
    }
    let n = x.n;
    let s = spd_inv_sqrt(&x.as_sym(), EIGEN_TOL)?;
    let z = mat_mul_f64(n, s.entries(), &mat_mul_f64(n, y.entries(), s.entries()));
    let z = RealSymMatrix::symmetrized(n, &z)?;
    let eigenvalues = sym_eigenvalues(&z, EIGEN_TOL)?;
    Ok(eigenvalues.iter().map(|a| a.ln().powi(2)).sum::<f64>().sqrt())
}

/// Element of `SL(n)` with exact rational entries and determinant exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    mat: RatMatrix,
}

impl GroupElement {
    pub fn new(mat: RatMatrix) -> Result<GroupElement> {
        let det = mat.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular { got: det.to_string() });
        }
        Ok(GroupElement { mat })
    }

    pub fn from_int(mat: IntMatrix) -> Result<GroupElement> {
        GroupElement::new(mat.to_rational())
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.mat
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        GroupElement::new(self.mat.mul(&other.mat)?)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.mat.to_f64()
    }
}

/// The isometry `I_g: x -> g x g^t` of `P(n, R)`.
pub fn apply_isometry(g: &GroupElement, x: &SpdPoint) -> Result<SpdPoint> {
    if g.dim() != x.n {
        return Err(Error::DimensionMismatch { left: g.dim(), right: x.n });
    }
    let n = x.n;
    let gf = g.to_f64();
    let gx = mat_mul_f64(n, &gf, x.entries());
    let gxgt = mat_mul_f64(n, &gx, &transpose_f64(n, &gf));
    // det(g x g^t) = det(x) exactly; renormalize to absorb float drift
    normalize(&RealSymMatrix::symmetrized(n, &gxgt)?)
}

/// `d(x, I_g(x))`, the displacement of `g` at `x`.
pub fn displacement(g: &GroupElement, x: &SpdPoint) -> Result<f64> {
    distance(x, &apply_isometry(g, x)?)
}

/// Characteristic polynomial used by the bound: of `g` itself, or of its
/// adjoint representation on traceless matrices. Either way the result must
/// be integral.
pub fn bound_char_poly(g: &GroupElement, use_adjoint: bool) -> Result<(IntPolynomial, usize)> {
    if use_adjoint {
        let ad = adjoint_matrix(&g.mat)?;
        Ok((char_poly_int_checked(&ad)?, ad.dim()))
    } else {
        Ok((char_poly_int_checked(&g.mat)?, g.dim()))
    }
}

/// Mahler measure of the characteristic polynomial backing the bound.
pub fn element_mahler(g: &GroupElement, use_adjoint: bool) -> Result<f64> {
    let (p, _) = bound_char_poly(g, use_adjoint)?;
    mahler_measure(&p)
}

/// Lower bound `2 log M / m` on the translation distance of `g`, where `M`
/// is the Mahler measure of the characteristic polynomial of `g` (direct,
/// `m = n`) or of `Ad(g)` (`m = n^2 - 1`).
pub fn translation_lower_bound(g: &GroupElement, use_adjoint: bool) -> Result<f64> {
    let (p, m) = bound_char_poly(g, use_adjoint)?;
    let measure = mahler_measure(&p)?;
    Ok((2.0 * measure.ln() / m as f64).max(0.0))
}

const MAHLER_NONTRIVIAL: f64 = 1.0 + 1e-12;

/// Systole lower bound: min over elements with `M > 1` of the translation
/// bound; `+inf` when no element moves.
pub fn systole_lower_bound(elements: &[GroupElement], use_adjoint: bool) -> Result<f64> {
    if elements.is_empty() {
        return Err(Error::Empty("systole bound needs at least one element"));
    }
    let mut best = f64::INFINITY;
    for g in elements {
        let (p, m) = bound_char_poly(g, use_adjoint)?;
        let measure = mahler_measure(&p)?;
        if measure > MAHLER_NONTRIVIAL {
            best = best.min(2.0 * measure.ln() / m as f64);
        }
    }
    Ok(best)
}

/// Seeded sample `Q diag(e^{t_1}..e^{t_n}) Q^t` with `sum t_i = 0` and `Q` a
/// random rotation; deterministic per seed.
pub fn sample_spd(n: usize, seed: u64) -> SpdPoint {
    assert!(n >= 2, "sample_spd requires n >= 2");
    let mut rng = seeded_rng(seed);
    // random rotation from Gram-Schmidt on a Gaussian matrix
    let mut q = vec![0.0; n * n];
    loop {
        for e in q.iter_mut() {
            *e = standard_normal(&mut rng);
        }
        if gram_schmidt_columns(n, &mut q) {
            break;
        }
    }
    let mut t: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mean = t.iter().sum::<f64>() / n as f64;
    for ti in t.iter_mut() {
        *ti -= mean;
    }
    let diag: Vec<f64> = t.iter().map(|ti| ti.exp()).collect();
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let mut s = 0.0;
            for k in 0..n {
                s += q[i * n + k] * diag[k] * q[j * n + k];
            }
            m[i * n + j] = s;
            m[j * n + i] = s;
        }
    }
    normalize(&RealSymMatrix::new(n, m).expect("constructed symmetric"))
        .expect("positive spectrum by construction")
}

fn gram_schmidt_columns(n: usize, a: &mut [f64]) -> bool {
    for col in 0..n {
        for prev in 0..col {
            let mut dot = 0.0;
            for row in 0..n {
                dot += a[row * n + col] * a[row * n + prev];
            }
            for row in 0..n {
                a[row * n + col] -= dot * a[row * n + prev];
            }
        }
        let norm: f64 = (0..n).map(|row| a[row * n + col].powi(2)).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return false;
        }
        for row in 0..n {
            a[row * n + col] /= norm;
        }
    }
    true
}

/// Seeded random word in the elementary generators `E_ij(+-1)` of
/// `SL(n, Z)`.
pub fn random_sl_word(n: usize, word_len: usize, seed: u64) -> GroupElement {
    let mut rng = seeded_rng(seed);
    let mut acc = IntMatrix::identity(n);
    for _ in 0..word_len {
        let mut i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            i = rng.gen_range(0..n);
            j = rng.gen_range(0..n);
        }
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut gen = IntMatrix::identity(n);
        let mut entries: Vec<_> = gen.entries().to_vec();
        entries[i * n + j] = num_bigint::BigInt::from(sign);
        gen = IntMatrix::new(n, entries).expect("square");
        acc = acc.mul(&gen).expect("same dimension");
    }
    GroupElement::from_int(acc).expect("elementary matrices have determinant 1")
}

/// Largest eigenvalue of `g g^t` (used by the proof-step check).
pub fn gram_top_eigenvalue(g: &GroupElement) -> Result<f64> {
    let n = g.dim();
    let gf = g.to_f64();
    let ggt = mat_mul_f64(n, &gf, &transpose_f64(n, &gf));
    let sym = RealSymMatrix::symmetrized(n, &ggt)?;
    Ok(sym_eigen(&sym, EIGEN_TOL)?.0[0])
}
