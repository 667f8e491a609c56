//! Exact and numeric matrix kernels shared by the geometry and polynomial
//! layers: integer/rational matrices with exact characteristic polynomials,
//! the adjoint representation on traceless matrices, and a cyclic Jacobi
//! eigensolver for real symmetric input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polynomials::IntPolynomial;

// ---------------------------------------------------------------------------
// integer matrices
// ---------------------------------------------------------------------------

/// Square matrix with arbitrary-precision integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<IntMatrix> {
        if n == 0 {
            return Err(Error::Empty("zero-dimensional matrix"));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: entries.len(), right: n * n });
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Result<IntMatrix> {
        IntMatrix::new(n, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entry(k, j);
                }
            }
        }
        IntMatrix::new(n, entries)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entry(i, i).clone()).sum()
    }

    /// Exact determinant, read off the characteristic polynomial.
    pub fn det(&self) -> BigInt {
        let p = char_poly(self);
        let c0 = p.constant_term().clone();
        if self.n % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| BigRational::from(e.clone())).collect(),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.to_f64().unwrap_or(f64::INFINITY)).collect()
    }
}

/// Exact monic characteristic polynomial `det(xI - m)` by the
/// Faddeev-LeVerrier recursion; every division by `k` is exact over the
/// integers. Coefficients are returned in ascending degree.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.n;
    let mut aux = IntMatrix::identity(n);
    let mut coeffs_desc = vec![BigInt::one()];
    for k in 1..=n {
        let am = m.mul(&aux).expect("dimensions match");
        let trace = am.trace();
        debug_assert!((&trace % BigInt::from(k)).is_zero());
        let c = -(trace / BigInt::from(k));
        let mut next = am;
        for i in 0..n {
            next.entries[i * n + i] += &c;
        }
        coeffs_desc.push(c);
        aux = next;
    }
    coeffs_desc.reverse();
    IntPolynomial::new(coeffs_desc).expect("characteristic polynomial is monic")
}

// ---------------------------------------------------------------------------
// rational matrices
// ---------------------------------------------------------------------------

/// Square matrix with exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(n: usize, entries: Vec<BigRational>) -> Result<RatMatrix> {
        if n == 0 {
            return Err(Error::Empty("zero-dimensional matrix"));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: entries.len(), right: n * n });
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        RatMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entry(k, j);
                }
            }
        }
        RatMatrix::new(n, entries)
    }

    pub fn transpose(&self) -> RatMatrix {
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entry(i, j).clone();
            }
        }
        RatMatrix { n, entries }
    }

    /// Exact determinant by Gaussian elimination with rational pivots.
    pub fn det(&self) -> BigRational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r * n + col].is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => return BigRational::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in (col + 1)..n {
                let factor = &a[r * n + col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * &a[col * n + j];
                    a[r * n + j] = &a[r * n + j] - delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = RatMatrix::identity(n).entries;
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or_else(|| Error::Domain("singular matrix".into()))?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pivot = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] /= &pivot;
                inv[col * n + j] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let da = &factor * &a[col * n + j];
                    let di = &factor * &inv[col * n + j];
                    a[r * n + j] = &a[r * n + j] - da;
                    inv[r * n + j] = &inv[r * n + j] - di;
                }
            }
        }
        RatMatrix::new(n, inv)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.to_f64().unwrap_or(f64::INFINITY)).collect()
    }

    /// Exact integer entries, if the matrix has them.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| if e.is_integer() { Some(e.to_integer()) } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { n: self.n, entries })
    }
}

/// Exact monic characteristic polynomial over the rationals, ascending
/// coefficients.
pub fn char_poly_rational(m: &RatMatrix) -> Vec<BigRational> {
    let n = m.n;
    let mut aux = RatMatrix::identity(n);
    let mut coeffs_desc = vec![BigRational::one()];
    for k in 1..=n {
        let am = m.mul(&aux).expect("dimensions match");
        let trace: BigRational = (0..n).map(|i| am.entry(i, i).clone()).sum();
        let c = -trace / BigRational::from(BigInt::from(k));
        let mut next = am;
        for i in 0..n {
            next.entries[i * n + i] += &c;
        }
        coeffs_desc.push(c);
        aux = next;
    }
    coeffs_desc.reverse();
    coeffs_desc
}

/// Characteristic polynomial of a rational matrix, required to be integral.
pub fn char_poly_int_checked(m: &RatMatrix) -> Result<IntPolynomial> {
    let coeffs = char_poly_rational(m);
    let ints = coeffs
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralCharPoly { coefficient: c.to_string() })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntPolynomial::new(ints)
}

// ---------------------------------------------------------------------------
// adjoint representation
// ---------------------------------------------------------------------------

/// Matrix of `X -> g X g^{-1}` on the traceless `n x n` matrices, size
/// `n^2 - 1`, exact rationals. Requires `det(g) = 1`.
///
/// The basis is fixed: first the off-diagonal units `E_ij` in row-major
/// order over pairs `(i, j)` with `i != j`, then the diagonal differences
/// `H_k = E_kk - E_{k+1,k+1}` for `k = 0..n-2`.
pub fn adjoint_matrix(g: &RatMatrix) -> Result<RatMatrix> {
    if !g.det().is_one() {
        return Err(Error::NotUnimodular { got: g.det().to_string() });
    }
    let n = g.n;
    let m = n * n - 1;
    let g_inv = g.inverse()?;
    let off_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    // image of basis element `col`, expressed in the same basis
    let mut out = vec![BigRational::zero(); m * m];
    let write_column = |col: usize, image: &RatMatrix, out: &mut Vec<BigRational>| {
        for (row, &(i, j)) in off_pairs.iter().enumerate() {
            out[row * m + col] = image.entry(i, j).clone();
        }
        let mut partial = BigRational::zero();
        for k in 0..(n - 1) {
            partial += image.entry(k, k);
            out[(off_pairs.len() + k) * m + col] = partial.clone();
        }
    };

    for (col, &(i, j)) in off_pairs.iter().enumerate() {
        let mut b = vec![BigRational::zero(); n * n];
        b[i * n + j] = BigRational::one();
        let b = RatMatrix::new(n, b)?;
        let image = g.mul(&b)?.mul(&g_inv)?;
        write_column(col, &image, &mut out);
    }
    for k in 0..(n - 1) {
        let mut b = vec![BigRational::zero(); n * n];
        b[k * n + k] = BigRational::one();
        b[(k + 1) * n + (k + 1)] = -BigRational::one();
        let b = RatMatrix::new(n, b)?;
        let image = g.mul(&b)?.mul(&g_inv)?;
        write_column(off_pairs.len() + k, &image, &mut out);
    }
    RatMatrix::new(m, out)
}

// ---------------------------------------------------------------------------
// real symmetric matrices and the Jacobi eigensolver
// ---------------------------------------------------------------------------

/// Real symmetric matrix; symmetry is exact as stored.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl RealSymMatrix {
    /// Rejects input whose transpose differs in any entry.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<RealSymMatrix> {
        if n == 0 {
            return Err(Error::Empty("zero-dimensional matrix"));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: entries.len(), right: n * n });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let delta = (entries[i * n + j] - entries[j * n + i]).abs();
                if delta != 0.0 {
                    return Err(Error::NotSymmetric { row: i, col: j, delta });
                }
            }
        }
        Ok(RealSymMatrix { n, entries })
    }

    /// Builds from arbitrary square data by exact averaging of the two
    /// triangles.
    pub fn symmetrized(n: usize, entries: &[f64]) -> Result<RealSymMatrix> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: entries.len(), right: n * n });
        }
        let mut sym = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                sym[i * n + j] = 0.5 * (entries[i * n + j] + entries[j * n + i]);
            }
        }
        RealSymMatrix::new(n, sym)
    }

    pub fn identity(n: usize) -> RealSymMatrix {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        RealSymMatrix { n, entries }
    }

    pub fn diagonal(diag: &[f64]) -> RealSymMatrix {
        let n = diag.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = diag[i];
        }
        RealSymMatrix { n, entries }
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

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e * e).sum::<f64>().sqrt()
    }
}

/// Eigenvalues and an orthonormal eigenbasis of a real symmetric matrix by
/// cyclic Jacobi rotations. Convergence when the off-diagonal Frobenius norm
/// drops below `tol * max(1, ||A||_F)`; hard cap of `100 n^2` sweeps.
pub fn sym_eigen(m: &RealSymMatrix, tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let n = m.n;
    let mut a = m.entries.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.frobenius_norm().max(1.0);
    let threshold = tol * scale;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };
    let max_sweeps = 100 * n * n;
    let mut residual = off(&a);
    let mut sweeps = 0;
    while residual >= threshold && sweeps < max_sweeps {
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        residual = off(&a);
        sweeps += 1;
    }
    if residual >= threshold {
        return Err(Error::EigenDivergence { residual, sweeps });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + new_col] = v[row * n + old_col];
        }
    }
    Ok((eigenvalues, vectors))
}

/// Eigenvalues only, sorted descending.
pub fn sym_eigenvalues(m: &RealSymMatrix, tol: f64) -> Result<Vec<f64>> {
    sym_eigen(m, tol).map(|(values, _)| values)
}

/// `f(m) = V diag(f(lambda)) V^t` for SPD `m`; rejects any eigenvalue
/// `<= tol`.
fn spd_map(m: &RealSymMatrix, tol: f64, f: impl Fn(f64) -> f64) -> Result<RealSymMatrix> {
    let n = m.n;
    let (values, vectors) = sym_eigen(m, tol.min(1e-12))?;
    if let Some(&bad) = values.iter().find(|&&lambda| lambda <= tol) {
        return Err(Error::NotPositiveDefinite { eigenvalue: bad, tol });
    }
    let mapped: Vec<f64> = values.iter().map(|&lambda| f(lambda)).collect();
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let mut s = 0.0;
            for k in 0..n {
                s += vectors[i * n + k] * mapped[k] * vectors[j * n + k];
            }
            out[i * n + j] = s;
            out[j * n + i] = s;
        }
    }
    RealSymMatrix::new(n, out)
}

/// Symmetric positive definite square root.
pub fn spd_sqrt(m: &RealSymMatrix, tol: f64) -> Result<RealSymMatrix> {
    if m == &RealSymMatrix::identity(m.n) {
        return Ok(m.clone());
    }
    spd_map(m, tol, f64::sqrt)
}

/// Symmetric positive definite inverse square root.
pub fn spd_inv_sqrt(m: &RealSymMatrix, tol: f64) -> Result<RealSymMatrix> {
    spd_map(m, tol, |lambda| 1.0 / lambda.sqrt())
}

// dense f64 helpers used by the geometry layer

pub(crate) fn mat_mul_f64(n: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

pub(crate) fn transpose_f64(n: usize, a: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}
