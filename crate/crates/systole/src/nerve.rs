//! Greedy epsilon-nets on finite metric clouds, witness-Cech nerves of the
//! resulting ball covers, and the degree/vertex-count certificates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::symspace::{distance, SpdPoint};

/// A finite point cloud with one of four built-in metrics.
#[derive(Debug, Clone)]
pub enum MetricCloud {
    /// Points in `R^k` with the usual metric.
    Euclidean(Vec<Vec<f64>>),
    /// Angles on the unit circle; distance is arc length.
    Circle(Vec<f64>),
    /// Points in `[0,1)^k` with the quotient metric of the flat torus.
    FlatTorus(Vec<Vec<f64>>),
    /// Points of `P(n, R)` with the symmetric-space distance.
    Spd(Vec<SpdPoint>),
}

impl MetricCloud {
    pub fn len(&self) -> usize {
        match self {
            MetricCloud::Euclidean(p) => p.len(),
            MetricCloud::Circle(p) => p.len(),
            MetricCloud::FlatTorus(p) => p.len(),
            MetricCloud::Spd(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn metric_name(&self) -> &'static str {
        match self {
            MetricCloud::Euclidean(_) => "euclidean",
            MetricCloud::Circle(_) => "circle",
            MetricCloud::FlatTorus(_) => "flat-torus",
            MetricCloud::Spd(_) => "spd",
        }
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        match self {
            MetricCloud::Euclidean(p) => p[i]
                .iter()
                .zip(&p[j])
                .map(|(a, b)| (a - b).powi(2))
                .sum::<f64>()
                .sqrt(),
            MetricCloud::Circle(p) => {
                let tau = 2.0 * std::f64::consts::PI;
                let delta = (p[i] - p[j]).rem_euclid(tau);
                delta.min(tau - delta)
            }
            MetricCloud::FlatTorus(p) => p[i]
                .iter()
                .zip(&p[j])
                .map(|(a, b)| {
                    let delta = (a - b).rem_euclid(1.0);
                    delta.min(1.0 - delta).powi(2)
                })
                .sum::<f64>()
                .sqrt(),
            MetricCloud::Spd(p) => distance(&p[i], &p[j]).expect("same dimension"),
        }
    }
}

/// Relative slack applied to closed `>=`/`<=` distance comparisons so that
/// pairs at exactly the boundary distance (whose computed value can land a
/// few ulps on either side) are classified consistently.
pub const BOUNDARY_SLACK: f64 = 1e-12;

/// Maximal eps-discrete subset, scanned in input order: a point joins the
/// net iff its distance to every previously chosen point is `>= eps` (up to
/// [`BOUNDARY_SLACK`], so exact-boundary pairs count as separated).
pub fn greedy_net(cloud: &MetricCloud, eps: f64) -> Result<Vec<usize>> {
    if cloud.is_empty() {
        return Err(Error::Empty("greedy_net on an empty cloud"));
    }
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    let floor = eps * (1.0 - BOUNDARY_SLACK);
    let mut net: Vec<usize> = Vec::new();
    for i in 0..cloud.len() {
        if net.iter().all(|&c| cloud.dist(i, c) >= floor) {
            net.push(i);
        }
    }
    Ok(net)
}

/// Finite simplicial complex: strictly increasing vertex tuples, closed
/// under taking faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(vertex_count: usize) -> SimplicialComplex {
        SimplicialComplex { vertex_count, simplices: BTreeSet::new() }
    }

    /// Builds from a list of simplices, closing under faces. Vertex tuples
    /// must be strictly increasing and in range.
    pub fn from_simplices(
        vertex_count: usize,
        simplices: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<SimplicialComplex> {
        let mut complex = SimplicialComplex::new(vertex_count);
        for s in simplices {
            complex.insert_closed(s)?;
        }
        Ok(complex)
    }

    /// Inserts a simplex together with all of its faces.
    pub fn insert_closed(&mut self, simplex: Vec<usize>) -> Result<()> {
        if simplex.is_empty() {
            return Err(Error::Empty("empty simplex"));
        }
        if simplex.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!("vertex tuple not strictly increasing: {simplex:?}")));
        }
        if *simplex.last().unwrap() >= self.vertex_count {
            return Err(Error::Domain(format!(
                "vertex {} out of range (vertex_count {})",
                simplex.last().unwrap(),
                self.vertex_count
            )));
        }
        let k = simplex.len();
        for mask in 1u64..(1 << k) {
            let face: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| simplex[i]).collect();
            self.simplices.insert(face);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    /// Largest `k` with a k-simplex present; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// Sorted k-simplices.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<&Vec<usize>> {
        self.simplices.iter().filter(|s| s.len() == k + 1).collect()
    }

    pub fn count_of_dim(&self, k: usize) -> usize {
        self.simplices.iter().filter(|s| s.len() == k + 1).count()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if (s.len() - 1) % 2 == 0 { 1i64 } else { -1i64 })
            .sum()
    }

    /// Edge-neighbor count of each vertex; max over vertices.
    pub fn max_degree(&self) -> usize {
        let mut degree = vec![0usize; self.vertex_count];
        for s in &self.simplices {
            if s.len() == 2 {
                degree[s[0]] += 1;
                degree[s[1]] += 1;
            }
        }
        degree.into_iter().max().unwrap_or(0)
    }

    /// Re-validates downward closure from scratch.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices.iter().all(|s| {
            s.len() == 1
                || (0..s.len()).all(|drop| {
                    let face: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    self.simplices.contains(&face)
                })
        })
    }
}

/// Witness-Cech nerve of the cover by closed eps-balls around the net
/// centers: a k-simplex on centers `{c_0..c_k}` is included iff some cloud
/// point lies within `eps` of every `c_i`. Built level by level; a candidate
/// is only tested once all of its facets are present.
pub fn build_nerve(
    cloud: &MetricCloud,
    net: &[usize],
    eps: f64,
    max_dim: usize,
) -> Result<SimplicialComplex> {
    if max_dim < 1 {
        return Err(Error::Domain("max_dim must be >= 1".into()));
    }
    if net.iter().any(|&c| c >= cloud.len()) {
        return Err(Error::Domain("net index out of cloud range".into()));
    }
    // closed balls; the relative slack absorbs float rounding when a chord
    // lands exactly on the boundary (the hexagon example)
    let cutoff = eps * (1.0 + BOUNDARY_SLACK);
    // witness sets: for each cloud point, which centers cover it
    let covered: Vec<Vec<usize>> = (0..cloud.len())
        .map(|p| {
            (0..net.len())
                .filter(|&ci| cloud.dist(p, net[ci]) <= cutoff)
                .collect()
        })
        .collect();
    let witnessed = |candidate: &[usize]| {
        covered
            .iter()
            .any(|cover| candidate.iter().all(|v| cover.binary_search(v).is_ok()))
    };

    let mut complex = SimplicialComplex::new(net.len());
    let mut current: Vec<Vec<usize>> = (0..net.len())
        .map(|v| vec![v])
        .filter(|s| witnessed(s))
        .collect();
    for s in &current {
        complex.simplices.insert(s.clone());
    }
    for _dim in 1..=max_dim {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for s in &current {
            let last = *s.last().unwrap();
            for v in (last + 1)..net.len() {
                let mut candidate = s.clone();
                candidate.push(v);
                // all facets must already be simplices
                let facets_ok = (0..candidate.len() - 1).all(|drop| {
                    let face: Vec<usize> = candidate
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &w)| w)
                        .collect();
                    complex.simplices.contains(&face)
                });
                if facets_ok && witnessed(&candidate) {
                    next.push(candidate);
                }
            }
        }
        for s in &next {
            complex.simplices.insert(s.clone());
        }
        if next.is_empty() {
            break;
        }
        current = next;
    }
    Ok(complex)
}

pub fn max_degree(c: &SimplicialComplex) -> usize {
    c.max_degree()
}

/// Certificate that a complex is a (d, v)-complex, including the per-level
/// simplex-count bound `#k-simplices <= v C(d, k) / (k+1)`.
#[derive(Debug, Clone)]
pub struct DvCertificate {
    pub d_cap: usize,
    pub v_cap: usize,
    pub vertex_count: usize,
    pub vertex_ok: bool,
    pub max_degree: usize,
    pub degree_ok: bool,
    /// per dimension k: (count, bound numerator `v C(d,k)`, denominator `k+1`, ok)
    pub levels: Vec<(usize, usize, u128, u128, bool)>,
    pub pass: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn dv_certificate(c: &SimplicialComplex, d_cap: usize, v_cap: usize) -> DvCertificate {
    let vertex_count = c.vertex_count();
    let vertex_ok = vertex_count <= v_cap;
    let max_degree = c.max_degree();
    let degree_ok = max_degree <= d_cap;
    let mut levels = Vec::new();
    let mut levels_ok = true;
    if let Some(dim) = c.dimension() {
        for k in 0..=dim {
            let count = c.count_of_dim(k);
            let numerator = v_cap as u128 * binomial(d_cap, k);
            let denominator = (k + 1) as u128;
            // count <= v C(d,k)/(k+1), compared exactly
            let ok = count as u128 * denominator <= numerator;
            levels_ok &= ok;
            levels.push((k, count, numerator, denominator, ok));
        }
    }
    DvCertificate {
        d_cap,
        v_cap,
        vertex_count,
        vertex_ok,
        max_degree,
        degree_ok,
        levels,
        pass: vertex_ok && degree_ok && levels_ok,
    }
}

/// Six points at 60-degree spacing on the unit circle in the plane (chord
/// metric); the worked nerve example.
pub fn hexagon_cloud() -> MetricCloud {
    MetricCloud::Euclidean(
        (0..6)
            .map(|k| {
                let theta = std::f64::consts::PI * k as f64 / 3.0;
                vec![theta.cos(), theta.sin()]
            })
            .collect(),
    )
}
