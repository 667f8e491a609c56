//! Integral simplicial homology through Smith normal form: Betti numbers,
//! torsion coefficients, and the torsion bound formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::nerve::SimplicialComplex;

/// Dense integer matrix as a row-major grid (not necessarily square).
pub type IntGrid = Vec<Vec<BigInt>>;

/// Matrix of `boundary_k` with alternating-sign incidence over the sorted
/// simplex bases: rows are (k-1)-simplices, columns are k-simplices.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> Result<IntGrid> {
    if k == 0 {
        return Err(Error::Domain("boundary_matrix requires k >= 1".into()));
    }
    let dim = c.dimension().ok_or(Error::Empty("empty complex"))?;
    if k > dim {
        return Err(Error::Domain(format!("k = {k} exceeds complex dimension {dim}")));
    }
    let rows = c.simplices_of_dim(k - 1);
    let cols = c.simplices_of_dim(k);
    let row_index: std::collections::BTreeMap<&Vec<usize>, usize> =
        rows.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut m = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (j, simplex) in cols.iter().enumerate() {
        for drop in 0..simplex.len() {
            let face: Vec<usize> = simplex
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &v)| v)
                .collect();
            let i = row_index[&face];
            m[i][j] = if drop % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        }
    }
    Ok(m)
}

/// Smith normal form `U m V = D` with unimodular transforms and the
/// divisibility chain `d_1 | d_2 | ...`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub rows: usize,
    pub cols: usize,
    /// nonnegative diagonal entries, including zeros
    pub diagonal: Vec<BigInt>,
    pub u: IntGrid,
    pub v: IntGrid,
    pub rank: usize,
}

fn identity_grid(n: usize) -> IntGrid {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Exact Smith normal form. Pivots are chosen with minimal absolute value
/// (ties: lowest row, then column) to limit coefficient growth.
pub fn smith_normal_form(m: &IntGrid) -> Snf {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut u = identity_grid(rows);
    let mut v = identity_grid(cols);

    let mut t = 0usize;
    while t < rows.min(cols) {
        // pivot: minimal nonzero absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => a[i][j].abs() < a[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        a.swap(t, pi);
        u.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }

        loop {
            // clear column t with rounded quotients
            let mut dirty = false;
            for i in (t + 1)..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = rounded_div(&a[i][t], &a[t][t]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] = &a[i][j] - delta;
                    }
                    for j in 0..rows {
                        let delta = &q * &u[t][j];
                        u[i][j] = &u[i][j] - delta;
                    }
                }
                if !a[i][t].is_zero() {
                    // remainder smaller than the pivot: swap it up and restart
                    a.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in (t + 1)..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = rounded_div(&a[t][j], &a[t][t]);
                if !q.is_zero() {
                    for i in 0..rows {
                        let delta = &q * &a[i][t];
                        a[i][j] = &a[i][j] - delta;
                    }
                    for i in 0..cols {
                        let delta = &q * &v[i][t];
                        v[i][j] = &v[i][j] - delta;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // enforce divisibility: pivot must divide the trailing block
        let mut fixed = true;
        'scan: for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    // fold row i into row t and redo this pivot
                    for col in 0..cols {
                        let add = a[i][col].clone();
                        a[t][col] += add;
                    }
                    for col in 0..rows {
                        let add = u[i][col].clone();
                        u[t][col] += add;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }

        if a[t][t].is_negative() {
            for j in 0..cols {
                a[t][j] = -a[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }

    let rank = t;
    let diagonal: Vec<BigInt> = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    Snf { rows, cols, diagonal, u, v, rank }
}

fn rounded_div(num: &BigInt, den: &BigInt) -> BigInt {
    // quotient with remainder of minimal absolute value
    let (q, r) = num.div_rem(den);
    if &r.abs() * 2 > den.abs() {
        if (r.is_negative()) == (den.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// One homology group: free rank and torsion coefficients (> 1, in the
/// divisibility order of the Smith chain).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// `log |tors H_k|` as the sum of logs of the torsion coefficients.
    pub fn log_torsion(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.torsion.iter().map(|t| t.to_f64().unwrap_or(f64::INFINITY).ln()).sum()
    }
}

/// Integral homology in every degree `0..=dim`, by Smith normal forms of the
/// boundary matrices.
pub fn homology_groups(c: &SimplicialComplex) -> Result<Vec<HomologyGroup>> {
    let dim = c.dimension().ok_or(Error::Empty("empty complex"))?;
    let mut rank = vec![0usize; dim + 2];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); dim + 2];
    for k in 1..=dim {
        let snf = smith_normal_form(&boundary_matrix(c, k)?);
        rank[k] = snf.rank;
        torsion[k] = snf
            .diagonal
            .iter()
            .filter(|d| d.abs() > BigInt::one())
            .cloned()
            .collect();
    }
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let n_k = c.count_of_dim(k);
        let betti = n_k - rank[k] - rank[k + 1];
        out.push(HomologyGroup { betti, torsion: torsion[k + 1].clone() });
    }
    Ok(out)
}

const TORSION_DOMAIN_LOG3: f64 = std::f64::consts::E; // logloglog threshold e^{e^e}

/// Right-hand side of the torsion bound:
/// `C (loglog v / logloglog v)^{3d} v`, for `v` strictly above `e^{e^e}`.
pub fn torsion_bound_rhs(vol: f64, d: usize, c: f64) -> Result<f64> {
    if c <= 0.0 {
        return Err(Error::Domain("constant C must be positive".into()));
    }
    if d < 2 {
        return Err(Error::Domain("dimension must be >= 2".into()));
    }
    let threshold = TORSION_DOMAIN_LOG3.exp().exp();
    if !(vol > threshold) {
        return Err(Error::Domain(format!(
            "volume must exceed e^(e^e) = {threshold:.6}, got {vol}"
        )));
    }
    let ll = vol.ln().ln();
    let lll = ll.ln();
    Ok(c * (ll / lll).powi(3 * d as i32) * vol)
}

/// The 10-triangle minimal triangulation of the projective plane on 6
/// vertices; every edge lies in exactly two triangles.
pub fn projective_plane_complex() -> SimplicialComplex {
    SimplicialComplex::from_simplices(
        6,
        vec![
            vec![0, 1, 3],
            vec![0, 1, 4],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 4, 5],
            vec![1, 2, 4],
            vec![1, 2, 5],
            vec![1, 3, 5],
            vec![2, 3, 4],
            vec![3, 4, 5],
        ],
    )
    .expect("valid triangulation")
}

/// Boundary of the 3-simplex (a 2-sphere).
pub fn sphere_complex() -> SimplicialComplex {
    SimplicialComplex::from_simplices(
        4,
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
    .expect("valid complex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::{build_nerve, hexagon_cloud};

    fn grid(rows: &[&[i64]]) -> IntGrid {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn grid_mul(a: &IntGrid, b: &IntGrid) -> IntGrid {
        let rows = a.len();
        let inner = b.len();
        let cols = if inner == 0 { 0 } else { b[0].len() };
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn det(m: &IntGrid) -> BigInt {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: IntGrid = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn check_snf(m: &IntGrid) -> Snf {
        let snf = smith_normal_form(m);
        // U m V = diagonal embedding
        let umv = grid_mul(&grid_mul(&snf.u, m), &snf.v);
        for (i, row) in umv.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let expected = if i == j && i < snf.diagonal.len() {
                    snf.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(e, &expected, "entry ({i},{j})");
            }
        }
        // divisibility chain
        for w in snf.diagonal.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "chain broken: {:?}", snf.diagonal);
            } else {
                assert!(w[1].is_zero());
            }
        }
        // unimodular transforms
        assert!(det(&snf.u).abs().is_one());
        assert!(det(&snf.v).abs().is_one());
        snf
    }

    #[test]
    fn snf_identity_and_diag() {
        let snf = check_snf(&grid(&[&[1, 0], &[0, 1]]));
        assert_eq!(snf.diagonal, vec![BigInt::one(), BigInt::one()]);
        let snf = check_snf(&grid(&[&[2, 0], &[0, 3]]));
        assert_eq!(snf.diagonal, vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn snf_handles_zero_and_negatives() {
        let snf = check_snf(&grid(&[&[0, 0], &[0, 0]]));
        assert_eq!(snf.rank, 0);
        check_snf(&grid(&[&[-4, 6], &[2, -3]]));
        check_snf(&grid(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let nerve = build_nerve(&hexagon_cloud(), &(0..6).collect::<Vec<_>>(), 1.0, 3).unwrap();
        let d1 = boundary_matrix(&nerve, 1).unwrap();
        let d2 = boundary_matrix(&nerve, 2).unwrap();
        let prod = grid_mul(&d1, &d2);
        assert!(prod.iter().all(|row| row.iter().all(Zero::is_zero)));
    }

    #[test]
    fn single_edge_boundary() {
        let edge = SimplicialComplex::from_simplices(2, vec![vec![0, 1]]).unwrap();
        let d1 = boundary_matrix(&edge, 1).unwrap();
        assert_eq!(d1, grid(&[&[-1], &[1]]));
    }

    #[test]
    fn sphere_homology() {
        let h = homology_groups(&sphere_complex()).unwrap();
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![] });
        assert_eq!(h[2], HomologyGroup { betti: 1, torsion: vec![] });
    }

    #[test]
    fn projective_plane_torsion() {
        let c = projective_plane_complex();
        // closed surface sanity: every edge in exactly two triangles
        for e in c.simplices_of_dim(1) {
            let count = c
                .simplices_of_dim(2)
                .iter()
                .filter(|t| e.iter().all(|v| t.contains(v)))
                .count();
            assert_eq!(count, 2);
        }
        let h = homology_groups(&c).unwrap();
        assert_eq!(h[0], HomologyGroup { betti: 1, torsion: vec![] });
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![BigInt::from(2)] });
        assert_eq!(h[2], HomologyGroup { betti: 0, torsion: vec![] });
        assert!((h[1].log_torsion() - 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn hexagon_nerve_homology() {
        let nerve = build_nerve(&hexagon_cloud(), &(0..6).collect::<Vec<_>>(), 1.0, 3).unwrap();
        let h = homology_groups(&nerve).unwrap();
        assert_eq!(h[0].betti, 1);
        assert_eq!(h[1].betti, 1);
        assert_eq!(h[2].betti, 0);
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn euler_characteristic_matches_betti_sum() {
        for c in [sphere_complex(), projective_plane_complex()] {
            let h = homology_groups(&c).unwrap();
            let betti_sum: i64 = h
                .iter()
                .enumerate()
                .map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
                .sum();
            assert_eq!(c.euler_characteristic(), betti_sum);
        }
    }

    #[test]
    fn torsion_bound_domain_and_linearity() {
        let threshold = std::f64::consts::E.exp().exp();
        assert!(torsion_bound_rhs(threshold, 2, 1.0).is_err());
        let v = (std::f64::consts::E * 1.1).exp().exp();
        let a = torsion_bound_rhs(v, 2, 1.0).unwrap();
        assert!(a.is_finite() && a > 0.0);
        let b = torsion_bound_rhs(v, 2, 2.0).unwrap();
        assert!((b / a - 2.0).abs() < 1e-12);
    }
}
