//! `systole` — command-line surface over the library.
//!
//! All output is deterministic structured text (`key = value` lines). Input
//! files use the same conventions everywhere: `#` starts a comment,
//! coefficient arrays are ascending, matrices are row-major with one row per
//! line, and blocks are separated by blank lines. On malformed input the
//! process exits nonzero with a one-line diagnostic and writes no output
//! file.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use systole::bounds::{
    complexity_certificate, degree_ub, phi, systole_degree_lb, systole_volume_lb, BoundParams,
};
use systole::error::{Error, Result};
use systole::format::Report;
use systole::homology::{homology_groups, torsion_bound_rhs};
use systole::linalg::{adjoint_matrix, char_poly_int_checked, RatMatrix, RealSymMatrix};
use systole::nerve::{build_nerve, dv_certificate, greedy_net, MetricCloud, SimplicialComplex};
use systole::polynomials::{
    dobrowolski_scan, is_cyclotomic_product, mahler_paths, IntPolynomial,
};
use systole::symspace::{
    bound_char_poly, distance, element_mahler, normalize, systole_lower_bound,
    translation_lower_bound, GroupElement, SpdPoint,
};
use systole::volumes::{
    euclidean_ball_volume, hyperbolic_ball_volume, lemma_constant, VolumeQuery,
};

#[derive(Parser)]
#[command(
    name = "systole",
    about = "Systole and homotopy-complexity bounds: Mahler measures, symmetric-space \
             displacement, ball volumes, nerve complexes, integral homology",
    version
)]
struct Cli {
    /// Also write the report to this file (created only on success).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for any randomized input generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mahler measure M(f) = prod |a_i| over roots with |a_i| > 1, computed
    /// by two independent algorithms (root finding and Graeffe squaring)
    /// which must agree.
    Mahler {
        /// Coefficients in descending order, e.g. "1,-1,-1" for x^2 - x - 1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
        /// File with ascending integer coefficients.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Exact decision: are all roots of f roots of unity (f a product of
    /// cyclotomics)? Equivalent to M(f) = 1 for monic f, decided without
    /// floating point.
    Cyclotomic {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Exhaustive check of the lower bound log M(f) >= c (loglog d / log d)^3
    /// over non-cyclotomic monic polynomials of bounded degree and height.
    DobrowolskiScan {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        max_height: i64,
    },
    /// Characteristic polynomial of a square rational matrix (exact), or of
    /// its adjoint action X -> g X g^-1 on traceless matrices.
    Charpoly {
        #[arg(long)]
        file: PathBuf,
        /// Use the adjoint representation (dimension n^2 - 1).
        #[arg(long)]
        adjoint: bool,
    },
    /// Distance d(x, y) = sqrt(sum log^2 a_i) on P(n,R), the a_i being the
    /// eigenvalues of x^{-1/2} y x^{-1/2}. Input: two symmetric positive
    /// definite matrices (normalized to determinant 1 automatically).
    Distance {
        #[arg(long)]
        file: PathBuf,
    },
    /// Lower bound d(x, gx) >= 2 log M(g) / m for every x in P(n,R), where
    /// M(g) is the Mahler measure of the characteristic polynomial and m the
    /// dimension of the representation (n direct, n^2 - 1 adjoint).
    TranslationBound {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        adjoint: bool,
    },
    /// Systole lower bound: min over the given group elements with M(g) > 1
    /// of the translation bound; infinite when every element has M = 1.
    SystoleLb {
        /// File with determinant-1 rational matrices separated by blank lines.
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        adjoint: bool,
    },
    /// Volumes of the radius-r ball in Euclidean and hyperbolic d-space:
    /// pi^{d/2} r^d / Gamma(d/2+1) and vol(S^{d-1}) int_0^r sinh^{d-1}.
    BallVolume {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// The covering-lemma degree constant D(d) =
    /// vol_H(B(1.25)) / vol_E(B(0.25)).
    LemmaConstant {
        #[arg(long)]
        dim: usize,
    },
    /// Maximal eps-discrete subset of a point cloud, greedily in input order.
    Net {
        /// Cloud file: `metric = ...` header then one point per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Instead of a file: this many seeded random points on a flat torus.
        #[arg(long)]
        random_torus: Option<usize>,
        /// Torus dimension for --random-torus.
        #[arg(long, default_value_t = 2)]
        torus_dim: usize,
        #[arg(long)]
        eps: f64,
    },
    /// Nerve of the cover by closed eps-balls around a greedy net: a simplex
    /// per subfamily of balls meeting a common cloud point, with Betti
    /// numbers and the (d,v)-complex certificate.
    Nerve {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        random_torus: Option<usize>,
        #[arg(long, default_value_t = 2)]
        torus_dim: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Degree cap d of the certificate (default: observed max degree).
        #[arg(long)]
        d_cap: Option<usize>,
        /// Vertex cap v of the certificate (default: net size).
        #[arg(long)]
        v_cap: Option<usize>,
    },
    /// Integral simplicial homology (Betti numbers and torsion) via Smith
    /// normal forms of the boundary matrices.
    Homology {
        /// Complex file: `vertices = n` header, then one simplex per line as
        /// strictly increasing vertex indices; faces are added automatically.
        #[arg(long)]
        file: PathBuf,
    },
    /// Covering certificate: with systole >= s a manifold of volume V admits
    /// a cover by at most floor(V / vol_E(B(s/4))) balls, nerve degree at
    /// most floor(vol_H(B(1.25 s)) / vol_E(B(0.25 s))), s = min(systole, 1).
    Certificate {
        #[arg(long)]
        vol: f64,
        #[arg(long)]
        systole: f64,
        #[arg(long)]
        dim: usize,
    },
    /// The headline bound formulas: the slowly growing factor
    /// phi(v) = (loglog v / logloglog v)^{3d}, the systole lower bounds in
    /// volume and in degree of definition, and the degree-from-covolume
    /// bound, with all constants taken from --params (default 1).
    Bounds {
        /// Volume, for phi, the systole-volume bound, and the torsion bound.
        #[arg(long)]
        vol: Option<f64>,
        /// Degree of definition s >= 3, for c' (loglog s / log s)^3.
        #[arg(long)]
        degree: Option<usize>,
        /// Covolume > 1, for the bound s <= c3 log(covol).
        #[arg(long)]
        covol: Option<f64>,
        /// Constants file with lines like `C1 = 2.0`; keys C, C1, c_prime,
        /// c_tilde, c3, alpha, d.
        #[arg(long)]
        params: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command, cli.seed) {
        Ok(report) => {
            let text = report.render();
            print!("{text}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: failed to write {}: {e}", path.display());
                    std::process::exit(1);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(command: &Command, seed: u64) -> Result<Report> {
    match command {
        Command::Mahler { coeffs, file } => cmd_mahler(load_poly(coeffs, file)?),
        Command::Cyclotomic { coeffs, file } => cmd_cyclotomic(load_poly(coeffs, file)?),
        Command::DobrowolskiScan { max_degree, max_height } => cmd_scan(*max_degree, *max_height),
        Command::Charpoly { file, adjoint } => cmd_charpoly(file, *adjoint),
        Command::Distance { file } => cmd_distance(file),
        Command::TranslationBound { file, adjoint } => cmd_translation_bound(file, *adjoint),
        Command::SystoleLb { file, adjoint } => cmd_systole_lb(file, *adjoint),
        Command::BallVolume { dim, radius, tol } => cmd_ball_volume(*dim, *radius, *tol),
        Command::LemmaConstant { dim } => cmd_lemma_constant(*dim),
        Command::Net { file, random_torus, torus_dim, eps } => {
            let cloud = load_cloud(file, *random_torus, *torus_dim, seed)?;
            cmd_net(&cloud, *eps)
        }
        Command::Nerve { file, random_torus, torus_dim, eps, max_dim, d_cap, v_cap } => {
            let cloud = load_cloud(file, *random_torus, *torus_dim, seed)?;
            cmd_nerve(&cloud, *eps, *max_dim, *d_cap, *v_cap)
        }
        Command::Homology { file } => cmd_homology(file),
        Command::Certificate { vol, systole, dim } => cmd_certificate(*vol, *systole, *dim),
        Command::Bounds { vol, degree, covol, params } => {
            cmd_bounds(*vol, *degree, *covol, params.as_deref())
        }
    }
}

// ---------------------------------------------------------------- input files

fn read_lines(path: &std::path::Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .collect())
}

fn load_poly(coeffs: &Option<Vec<i64>>, file: &Option<PathBuf>) -> Result<IntPolynomial> {
    match (coeffs, file) {
        (Some(c), None) => {
            // CLI convenience flag: descending order, as polynomials are
            // usually written; reversed to the ascending storage order.
            let ascending: Vec<i64> = c.iter().rev().copied().collect();
            IntPolynomial::from_i64(&ascending)
        }
        (None, Some(path)) => {
            let tokens: Vec<BigInt> = read_lines(path)?
                .iter()
                .flat_map(|l| l.split([' ', '\t', ',']))
                .filter(|t| !t.is_empty())
                .map(|t| {
                    BigInt::from_str(t)
                        .map_err(|_| Error::Parse(format!("bad integer coefficient {t:?}")))
                })
                .collect::<Result<_>>()?;
            IntPolynomial::new(tokens)
        }
        _ => Err(Error::Parse("provide exactly one of --coeffs or --file".into())),
    }
}

fn parse_rational(token: &str) -> Result<BigRational> {
    let make = |s: &str| {
        BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad rational token {token:?}")))
    };
    match token.split_once('/') {
        Some((num, den)) => {
            let den = make(den)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {token:?}")));
            }
            Ok(BigRational::new(make(num)?, den))
        }
        None => Ok(BigRational::from(make(token)?)),
    }
}

/// Blank-line-separated blocks of whitespace-separated tokens.
fn blocks(lines: &[String]) -> Vec<Vec<Vec<String>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<String>> = Vec::new();
    for line in lines {
        if line.is_empty() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        } else {
            current.push(line.split_whitespace().map(str::to_string).collect());
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

fn rat_matrix_from_rows(rows: &[Vec<String>]) -> Result<RatMatrix> {
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::Parse(format!(
                "matrix must be square: {n} rows but a row of {} entries",
                row.len()
            )));
        }
        for token in row {
            entries.push(parse_rational(token)?);
        }
    }
    RatMatrix::new(n, entries)
}

fn sym_matrix_from_rows(rows: &[Vec<String>]) -> Result<RealSymMatrix> {
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::Parse(format!(
                "matrix must be square: {n} rows but a row of {} entries",
                row.len()
            )));
        }
        for token in row {
            entries.push(
                f64::from_str(token)
                    .map_err(|_| Error::Parse(format!("bad number {token:?}")))?,
            );
        }
    }
    RealSymMatrix::new(n, entries)
}

fn load_rat_matrices(path: &std::path::Path) -> Result<Vec<RatMatrix>> {
    let lines = read_lines(path)?;
    let blocks = blocks(&lines);
    if blocks.is_empty() {
        return Err(Error::Empty("matrix file"));
    }
    blocks.iter().map(|b| rat_matrix_from_rows(b)).collect()
}

fn load_cloud(
    file: &Option<PathBuf>,
    random_torus: Option<usize>,
    torus_dim: usize,
    seed: u64,
) -> Result<MetricCloud> {
    match (file, random_torus) {
        (Some(path), None) => parse_cloud_file(path),
        (None, Some(n)) => {
            if n == 0 || torus_dim == 0 {
                return Err(Error::Domain("random torus cloud needs n >= 1, dim >= 1".into()));
            }
            use rand::Rng;
            let mut rng = systole::rng::seeded_rng(seed);
            Ok(MetricCloud::FlatTorus(
                (0..n).map(|_| (0..torus_dim).map(|_| rng.gen::<f64>()).collect()).collect(),
            ))
        }
        _ => Err(Error::Parse("provide exactly one of --file or --random-torus".into())),
    }
}

fn parse_cloud_file(path: &std::path::Path) -> Result<MetricCloud> {
    let lines = read_lines(path)?;
    let mut iter = lines.iter().filter(|l| !l.is_empty());
    let header = iter.next().ok_or(Error::Empty("cloud file"))?;
    let metric = header
        .strip_prefix("metric")
        .map(|r| r.trim_start_matches([' ', '=']).trim())
        .ok_or_else(|| Error::Parse("cloud file must start with `metric = ...`".into()))?;
    let header_at = lines.iter().position(|l| !l.is_empty()).unwrap();
    let body = &lines[header_at + 1..];
    let parse_rows = |rows: &[String]| -> Result<Vec<Vec<f64>>> {
        rows.iter()
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        f64::from_str(t).map_err(|_| Error::Parse(format!("bad number {t:?}")))
                    })
                    .collect()
            })
            .collect()
    };
    match metric {
        "euclidean" => Ok(MetricCloud::Euclidean(parse_rows(body)?)),
        "circle" => {
            let rows = parse_rows(body)?;
            let angles = rows
                .into_iter()
                .map(|r| match r.as_slice() {
                    [theta] => Ok(*theta),
                    _ => Err(Error::Parse("circle points are single angles".into())),
                })
                .collect::<Result<_>>()?;
            Ok(MetricCloud::Circle(angles))
        }
        "flat-torus" => {
            let rows = parse_rows(body)?;
            if rows.iter().flatten().any(|&x| !(0.0..1.0).contains(&x)) {
                return Err(Error::Domain("flat-torus coordinates must lie in [0,1)".into()));
            }
            Ok(MetricCloud::FlatTorus(rows))
        }
        "spd" => {
            let points = blocks(body)
                .iter()
                .map(|b| normalize(&sym_matrix_from_rows(b)?))
                .collect::<Result<Vec<SpdPoint>>>()?;
            Ok(MetricCloud::Spd(points))
        }
        other => Err(Error::Parse(format!(
            "unknown metric {other:?} (expected euclidean, circle, flat-torus, or spd)"
        ))),
    }
}

fn load_complex(path: &std::path::Path) -> Result<SimplicialComplex> {
    let lines = read_lines(path)?;
    let mut iter = lines.iter().filter(|l| !l.is_empty());
    let header = iter.next().ok_or(Error::Empty("complex file"))?;
    let vertex_count: usize = header
        .strip_prefix("vertices")
        .map(|r| r.trim_start_matches([' ', '=']).trim())
        .ok_or_else(|| Error::Parse("complex file must start with `vertices = n`".into()))?
        .parse()
        .map_err(|_| Error::Parse("bad vertex count".into()))?;
    let simplices: Vec<Vec<usize>> = iter
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex index {t:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    SimplicialComplex::from_simplices(vertex_count, simplices)
}

fn load_params(path: Option<&std::path::Path>) -> Result<BoundParams> {
    let mut p = BoundParams::default();
    let Some(path) = path else { return Ok(p) };
    for line in read_lines(path)? {
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected `key = value`, got {line:?}")))?;
        let key = key.trim();
        let value = value.trim();
        if key == "d" {
            p.d = value.parse().map_err(|_| Error::Parse(format!("bad dimension {value:?}")))?;
            continue;
        }
        let number: f64 =
            value.parse().map_err(|_| Error::Parse(format!("bad constant {value:?}")))?;
        match key {
            "C" => p.c = number,
            "C1" => p.c1 = number,
            "c_prime" => p.c_prime = number,
            "c_tilde" => p.c_tilde = number,
            "c3" => p.c3 = number,
            "alpha" => p.alpha = number,
            other => return Err(Error::Parse(format!("unknown constant {other:?}"))),
        }
    }
    p.validate()?;
    Ok(p)
}

// ---------------------------------------------------------------- subcommands

fn poly_fields(r: &mut Report, f: &IntPolynomial) {
    r.field("polynomial", f);
    r.integers("coeffs_ascending", f.coeffs());
    r.field("degree", f.degree());
}

fn cmd_mahler(f: IntPolynomial) -> Result<Report> {
    let (root_path, graeffe_path) = mahler_paths(&f)?;
    let mut r = Report::new();
    poly_fields(&mut r, &f);
    r.float("mahler_root_path", root_path);
    r.float("mahler_graeffe_path", graeffe_path);
    r.float("mahler", root_path);
    r.float("log_mahler", root_path.ln());
    Ok(r)
}

fn cmd_cyclotomic(f: IntPolynomial) -> Result<Report> {
    let answer = is_cyclotomic_product(&f)?;
    let mut r = Report::new();
    poly_fields(&mut r, &f);
    r.field("cyclotomic_product", answer);
    Ok(r)
}

fn cmd_scan(max_degree: usize, max_height: i64) -> Result<Report> {
    let report = dobrowolski_scan(max_degree, max_height)?;
    let mut r = Report::new();
    r.field("max_degree", report.max_degree);
    r.field("max_height", report.max_height);
    r.field("scanned", report.scanned);
    r.field("cyclotomic_skipped", report.cyclotomic);
    r.float("min_ratio", report.min_ratio);
    r.field("witness", &report.witness);
    r.integers("witness_coeffs_ascending", report.witness.coeffs());
    r.float("witness_log_mahler", report.witness_log_mahler);
    r.field("partial", report.partial);
    Ok(r)
}

fn cmd_charpoly(path: &std::path::Path, adjoint: bool) -> Result<Report> {
    let matrices = load_rat_matrices(path)?;
    let [m] = matrices.as_slice() else {
        return Err(Error::Parse("charpoly expects exactly one matrix".into()));
    };
    let mut r = Report::new();
    r.field("n", m.dim());
    r.field("representation", if adjoint { "adjoint" } else { "direct" });
    let target = if adjoint { adjoint_matrix(m)? } else { m.clone() };
    r.field("representation_dim", target.dim());
    let f = char_poly_int_checked(&target)?;
    r.field("char_poly", &f);
    r.integers("coeffs_ascending", f.coeffs());
    Ok(r)
}

fn load_two_spd(path: &std::path::Path) -> Result<(SpdPoint, SpdPoint)> {
    let lines = read_lines(path)?;
    let blocks = blocks(&lines);
    let [a, b] = blocks.as_slice() else {
        return Err(Error::Parse(
            "expected exactly two matrices separated by a blank line".into(),
        ));
    };
    Ok((normalize(&sym_matrix_from_rows(a)?)?, normalize(&sym_matrix_from_rows(b)?)?))
}

fn cmd_distance(path: &std::path::Path) -> Result<Report> {
    let (x, y) = load_two_spd(path)?;
    let mut r = Report::new();
    r.field("n", x.dim());
    r.float("distance", distance(&x, &y)?);
    Ok(r)
}

fn cmd_translation_bound(path: &std::path::Path, adjoint: bool) -> Result<Report> {
    let matrices = load_rat_matrices(path)?;
    let [m] = matrices.as_slice() else {
        return Err(Error::Parse("translation-bound expects exactly one matrix".into()));
    };
    let g = GroupElement::new(m.clone())?;
    let (f, rep_dim) = bound_char_poly(&g, adjoint)?;
    let mut r = Report::new();
    r.field("n", g.dim());
    r.field("representation", if adjoint { "adjoint" } else { "direct" });
    r.field("representation_dim", rep_dim);
    r.field("char_poly", &f);
    r.float("mahler", element_mahler(&g, adjoint)?);
    r.float("translation_lower_bound", translation_lower_bound(&g, adjoint)?);
    Ok(r)
}

fn cmd_systole_lb(path: &std::path::Path, adjoint: bool) -> Result<Report> {
    let matrices = load_rat_matrices(path)?;
    let elements = matrices
        .into_iter()
        .map(GroupElement::new)
        .collect::<Result<Vec<_>>>()?;
    let mut r = Report::new();
    r.field("elements", elements.len());
    r.field("representation", if adjoint { "adjoint" } else { "direct" });
    let mahlers: Vec<f64> =
        elements.iter().map(|g| element_mahler(g, adjoint)).collect::<Result<_>>()?;
    let bounds: Vec<f64> =
        elements.iter().map(|g| translation_lower_bound(g, adjoint)).collect::<Result<_>>()?;
    r.floats("mahler_per_element", &mahlers);
    r.floats("bound_per_element", &bounds);
    r.float("systole_lower_bound", systole_lower_bound(&elements, adjoint)?);
    Ok(r)
}

fn cmd_ball_volume(dim: usize, radius: f64, tol: f64) -> Result<Report> {
    let q = VolumeQuery::new(dim, radius)?;
    let e = euclidean_ball_volume(q);
    let h = hyperbolic_ball_volume(q, tol)?;
    let mut r = Report::new();
    r.field("d", dim);
    r.float("r", radius);
    r.float("euclidean", e);
    r.float("hyperbolic", h);
    r.float("ratio_hyperbolic_over_euclidean", h / e);
    Ok(r)
}

fn cmd_lemma_constant(dim: usize) -> Result<Report> {
    let mut r = Report::new();
    r.field("d", dim);
    r.float("hyperbolic_ball_1_25", hyperbolic_ball_volume(VolumeQuery::new(dim, 1.25)?, 1e-10)?);
    r.float("euclidean_ball_0_25", euclidean_ball_volume(VolumeQuery::new(dim, 0.25)?));
    r.float("lemma_constant", lemma_constant(dim)?);
    Ok(r)
}

fn cmd_net(cloud: &MetricCloud, eps: f64) -> Result<Report> {
    let net = greedy_net(cloud, eps)?;
    let mut r = Report::new();
    r.field("metric", cloud.metric_name());
    r.field("points", cloud.len());
    r.float("eps", eps);
    r.field("net_size", net.len());
    r.integers("net_indices", &net);
    Ok(r)
}

fn cmd_nerve(
    cloud: &MetricCloud,
    eps: f64,
    max_dim: usize,
    d_cap: Option<usize>,
    v_cap: Option<usize>,
) -> Result<Report> {
    let net = greedy_net(cloud, eps)?;
    let complex = build_nerve(cloud, &net, eps, max_dim)?;
    let mut r = Report::new();
    r.field("metric", cloud.metric_name());
    r.field("points", cloud.len());
    r.float("eps", eps);
    r.field("net_size", net.len());
    r.integers("net_indices", &net);
    let dim = complex.dimension().map(|d| d as i64).unwrap_or(-1);
    r.field("nerve_dim", dim);
    let counts: Vec<usize> =
        (0..=dim.max(0) as usize).map(|k| complex.count_of_dim(k)).collect();
    r.integers("simplex_counts", &counts);
    r.field("euler_characteristic", complex.euler_characteristic());
    r.field("max_degree", complex.max_degree());
    let homology = homology_groups(&complex)?;
    let betti: Vec<usize> = homology.iter().map(|h| h.betti).collect();
    r.integers("betti", &betti);
    let cert = dv_certificate(&complex, d_cap.unwrap_or(complex.max_degree()), v_cap.unwrap_or(net.len()));
    r.field("certificate_d_cap", cert.d_cap);
    r.field("certificate_v_cap", cert.v_cap);
    r.field("certificate_pass", cert.pass);
    Ok(r)
}

fn cmd_homology(path: &std::path::Path) -> Result<Report> {
    let complex = load_complex(path)?;
    let homology = homology_groups(&complex)?;
    let mut r = Report::new();
    r.field("vertices", complex.vertex_count());
    r.field("dim", complex.dimension().map(|d| d as i64).unwrap_or(-1));
    r.field("euler_characteristic", complex.euler_characteristic());
    let betti: Vec<usize> = homology.iter().map(|h| h.betti).collect();
    r.integers("betti", &betti);
    for (k, h) in homology.iter().enumerate() {
        r.integers(&format!("torsion_h{k}"), &h.torsion);
    }
    Ok(r)
}

fn cmd_certificate(vol: f64, systole: f64, dim: usize) -> Result<Report> {
    let cert = complexity_certificate(vol, systole, dim)?;
    let s = systole.min(1.0);
    let mut r = Report::new();
    r.float("vol", vol);
    r.float("systole", systole);
    r.field("d", dim);
    r.float("scale", s);
    r.float("euclidean_quarter_ball", euclidean_ball_volume(VolumeQuery::new(dim, s / 4.0)?));
    r.float(
        "hyperbolic_cover_ball",
        hyperbolic_ball_volume(VolumeQuery::new(dim, 1.25 * s)?, 1e-10)?,
    );
    r.field("max_vertices", cert.max_vertices);
    r.field("max_degree", cert.max_degree);
    Ok(r)
}

fn cmd_bounds(
    vol: Option<f64>,
    degree: Option<usize>,
    covol: Option<f64>,
    params: Option<&std::path::Path>,
) -> Result<Report> {
    let p = load_params(params)?;
    let mut r = Report::new();
    r.float("C", p.c);
    r.float("C1", p.c1);
    r.float("c_prime", p.c_prime);
    r.float("c_tilde", p.c_tilde);
    r.float("c3", p.c3);
    r.float("alpha", p.alpha);
    r.field("d", p.d);
    if vol.is_none() && degree.is_none() && covol.is_none() {
        return Err(Error::Parse("provide at least one of --vol, --degree, --covol".into()));
    }
    if let Some(v) = vol {
        r.float("vol", v);
        r.float("phi", phi(v, p.d)?);
        r.float("systole_volume_lb", systole_volume_lb(v, &p)?);
        // strict domain vol > e^(e^e), one notch tighter than the formulas
        // above; report rather than fail when only this bound is undefined
        match torsion_bound_rhs(v, p.d, p.alpha) {
            Ok(bound) => r.float("torsion_homology_log_bound", bound),
            Err(_) => r.field("torsion_homology_log_bound", "undefined (requires vol > e^(e^e))"),
        };
    }
    if let Some(s) = degree {
        r.field("degree_of_definition", s);
        r.float("systole_degree_lb", systole_degree_lb(s, &p)?);
    }
    if let Some(c) = covol {
        r.float("covol", c);
        r.float("degree_ub", degree_ub(c, &p)?);
    }
    Ok(r)
}
