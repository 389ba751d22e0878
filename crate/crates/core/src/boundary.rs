//! Sampled boundary of `W(S(a))` from top eigenvectors of `Re(e^{i theta} A)`.
//!
//! The support point in direction `theta` is `u* A u` for a unit top
//! eigenvector `u`. It maximizes `Re(e^{i theta} p)` over `W(A)`. Points are
//! computed for `m` directions in one period `[0, 2 pi / n)` and rotated by
//! the `n`-th roots of unity.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, normalize, solve, CMatrix};
use crate::spectra::{numerical_radius, real_part_matrix, shift_matrix};
use crate::weights::WeightVector;

pub const MIN_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    /// Boundary samples ordered by supporting direction.
    pub points: Vec<Complex64>,
    /// Supporting direction `theta` of each point, in `[0, 2 pi)`.
    pub directions: Vec<f64>,
    /// `n` for positive weights; `None` for a disk.
    pub symmetry_order: Option<usize>,
    /// Radius of the disk, if `W(A)` is one.
    pub radius: Option<f64>,
}

impl BoundaryCurve {
    pub fn is_disk(&self) -> bool {
        self.radius.is_some()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < MIN_POINTS {
        return Err(Error::invalid("points", format!("{m} is below the minimum of {MIN_POINTS}")));
    }
    Ok(())
}

/// `m` directions per period, offset by half a step so that none lands on
/// `cos(n theta) = -1`.
fn period_directions(n: usize, m: usize) -> Vec<f64> {
    let step = TAU / (n as f64 * m as f64);
    (0..m).map(|k| (k as f64 + 0.5) * step).collect()
}

/// One step of inverse iteration, shifted just above the top eigenvalue.
fn polish(h: &CMatrix, lambda: f64, u: &[Complex64]) -> Vec<Complex64> {
    let n = h.dim();
    let shift = lambda + 1e-10 * (1.0 + lambda.abs());
    let mut m = h.clone();
    for i in 0..n {
        m[(i, i)] -= Complex64::new(shift, 0.0);
    }
    let mut x = solve(&m, u);
    if x.iter().any(|c| !c.is_finite()) {
        return u.to_vec();
    }
    normalize(&mut x);
    x
}

/// Support points of `A` in direction `theta`. Two points when the top
/// eigenvalue is double: the ends of the flat edge.
fn support_points(a: &CMatrix, weights: &WeightVector, theta: f64, gap_tol: f64) -> Vec<Complex64> {
    let h = real_part_matrix(weights, theta);
    let eig = hermitian_eigen(&h);
    if eig.values.len() > 1 && eig.values[0] - eig.values[1] < gap_tol {
        let (u1, u2) = (&eig.vectors[0], &eig.vectors[1]);
        // Im(e^{i theta} A) compressed to span{u1, u2}.
        let e = Complex64::from_polar(1.0, theta);
        let im = a.scale(e).add(&a.adjoint().scale(-e.conj())).scale(Complex64::new(0.0, -0.5));
        let iu1 = im.mul_vec(u1);
        let iu2 = im.mul_vec(u2);
        let dot = |x: &[Complex64], y: &[Complex64]| x.iter().zip(y).map(|(p, q)| p.conj() * q).sum::<Complex64>();
        let (p, q, r) = (dot(u1, &iu1).re, dot(u1, &iu2), dot(u2, &iu2).re);
        let sub = CMatrix::from_rows(vec![vec![Complex64::new(p, 0.0), q], vec![q.conj(), Complex64::new(r, 0.0)]]);
        let small = hermitian_eigen(&sub);
        let lift = |c: &[Complex64]| -> Vec<Complex64> { u1.iter().zip(u2).map(|(x, y)| x * c[0] + y * c[1]).collect() };
        // Maximal Im(e^{i theta} p) first: it comes earlier as theta grows.
        return small.vectors.iter().map(|c| a.quadratic_form(&lift(c))).collect();
    }
    let u = polish(&h, eig.values[0], &eig.vectors[0]);
    vec![a.quadratic_form(&u)]
}

/// Samples `W(S(a))`; a disk of radius `r(S(a))` when a weight is zero.
pub fn sample_boundary(a: &WeightVector, m: usize) -> Result<BoundaryCurve> {
    check_m(m)?;
    let n = a.len();
    if a.has_zero() {
        let r = numerical_radius(a);
        let directions: Vec<f64> = (0..m).map(|k| TAU * k as f64 / m as f64).collect();
        let points = directions.iter().map(|&th| Complex64::from_polar(r, -th)).collect();
        return Ok(BoundaryCurve {
            points,
            directions,
            symmetry_order: None,
            radius: Some(r),
        });
    }
    let s = shift_matrix(a);
    let gap_tol = 1e-8 * s.frobenius_norm();
    let base: Vec<(f64, Vec<Complex64>)> = period_directions(n, m)
        .into_par_iter()
        .map(|th| (th, support_points(&s, a, th, gap_tol)))
        .collect();
    let mut rows: Vec<(f64, usize, Complex64)> = Vec::with_capacity(n * m);
    for j in 0..n {
        // e^{i phi} p supports direction theta - phi.
        let phi = TAU * j as f64 / n as f64;
        let rot = Complex64::from_polar(1.0, phi);
        for (th, pts) in &base {
            for (k, p) in pts.iter().enumerate() {
                rows.push(((th - phi).rem_euclid(TAU), k, p * rot));
            }
        }
    }
    rows.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    Ok(BoundaryCurve {
        directions: rows.iter().map(|r| r.0).collect(),
        points: rows.iter().map(|r| r.2).collect(),
        symmetry_order: Some(n),
        radius: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportFormat {
    Csv,
    Json,
}

/// CSV (`theta,re,im`, preceded by `# disk,<r>` for a disk) or JSON. Floats
/// use the shortest representation that parses back to the same value.
pub fn export_curve(curve: &BoundaryCurve, format: ExportFormat) -> Result<Vec<u8>> {
    if curve.is_empty() {
        return Err(Error::invalid("curve", "has no points"));
    }
    match format {
        ExportFormat::Json => {
            serde_json::to_vec(curve).map_err(|e| Error::invalid("curve", format!("cannot serialize: {e}")))
        }
        ExportFormat::Csv => {
            let mut s = String::new();
            if let Some(r) = curve.radius {
                let _ = writeln!(s, "# disk,{r:?}");
            }
            s.push_str("theta,re,im\n");
            for (th, p) in curve.directions.iter().zip(&curve.points) {
                let _ = writeln!(s, "{th:?},{:?},{:?}", p.re, p.im);
            }
            Ok(s.into_bytes())
        }
    }
}

/// Inverse of the CSV export. The symmetry order is not stored in CSV and
/// must be supplied.
pub fn parse_curve_csv(text: &str, symmetry_order: Option<usize>) -> Result<BoundaryCurve> {
    let mut radius = None;
    let mut points = Vec::new();
    let mut directions = Vec::new();
    let bad = |line: &str| Error::invalid("csv", format!("cannot parse line `{line}`"));
    for line in text.lines() {
        if let Some(r) = line.strip_prefix("# disk,") {
            radius = Some(r.trim().parse::<f64>().map_err(|_| bad(line))?);
            continue;
        }
        if line == "theta,re,im" || line.is_empty() {
            continue;
        }
        let f: Vec<f64> = line
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(line))?;
        if f.len() != 3 {
            return Err(bad(line));
        }
        directions.push(f[0]);
        points.push(Complex64::new(f[1], f[2]));
    }
    Ok(BoundaryCurve {
        points,
        directions,
        symmetry_order: if radius.is_some() { None } else { symmetry_order },
        radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn disk_case() {
        let c = sample_boundary(&w(&[1.0, 0.0]), 16).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.points.iter().all(|p| (p.norm() - 0.5).abs() < 1e-12));
        let csv = String::from_utf8(export_curve(&c, ExportFormat::Csv).unwrap()).unwrap();
        assert!(csv.starts_with("# disk,0.5\ntheta,re,im\n"));
        assert_eq!(csv.lines().count(), 18);
        assert!(sample_boundary(&w(&[1.0, 1.0]), 7).is_err());
    }

    #[test]
    fn square_row_count() {
        let c = sample_boundary(&w(&[1.0; 4]), 8).unwrap();
        assert_eq!(c.len(), 32);
        assert!(c.directions.windows(2).all(|d| d[0] <= d[1]));
    }

    #[test]
    fn triangle_vertices() {
        let c = sample_boundary(&w(&[1.0; 3]), 64).unwrap();
        for k in 0..3 {
            let v = Complex64::from_polar(1.0, TAU * k as f64 / 3.0);
            let d = c.points.iter().map(|p| (p - v).norm()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-6, "vertex {k}: {d}");
        }
    }

    #[test]
    fn flat_edge_endpoints() {
        // theta = pi/3 is a double top eigenvalue for the unweighted 3-cycle.
        let a = w(&[1.0; 3]);
        let pts = support_points(&shift_matrix(&a), &a, std::f64::consts::PI / 3.0, 1e-8);
        assert_eq!(pts.len(), 2);
        let mut got: Vec<Complex64> = pts;
        got.sort_by(|x, y| x.im.total_cmp(&y.im));
        let v1 = Complex64::from_polar(1.0, -TAU / 3.0);
        assert!((got[0] - v1).norm() < 1e-9, "{got:?}");
        assert!((got[1] - Complex64::new(1.0, 0.0)).norm() < 1e-9, "{got:?}");
    }

    #[test]
    fn rotation_closure() {
        let c = sample_boundary(&w(&[1.0, 2.0, 3.0, 4.0]), 32).unwrap();
        let rot = Complex64::new(0.0, 1.0);
        for p in &c.points {
            let q = p * rot;
            let d = c.points.iter().map(|x| (x - q).norm()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-8);
        }
    }

    #[test]
    fn round_trips() {
        let c = sample_boundary(&w(&[1.0, 2.0, 1.5]), 8).unwrap();
        let json = export_curve(&c, ExportFormat::Json).unwrap();
        let back: BoundaryCurve = serde_json::from_slice(&json).unwrap();
        assert_eq!(back, c);
        let csv = String::from_utf8(export_curve(&c, ExportFormat::Csv).unwrap()).unwrap();
        assert_eq!(parse_curve_csv(&csv, Some(3)).unwrap(), c);
        let empty = BoundaryCurve {
            points: vec![],
            directions: vec![],
            symmetry_order: Some(3),
            radius: None,
        };
        assert!(export_curve(&empty, ExportFormat::Csv).is_err());
    }
}
