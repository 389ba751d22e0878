//! The `theta`-independent part of `det(zI - 2 Re(e^{i theta} S(a)))`.
//!
//! For every `theta` the determinant equals `f(z) - 2 alpha cos(n theta)` with
//! `alpha = a_1 ... a_n`. Here `f` is the charpoly of the path with edges
//! `a_1..a_{n-1}` minus `a_n^2` times the charpoly of the path with edges
//! `a_2..a_{n-2}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, CMatrix};
use crate::weights::WeightVector;
use num_complex::Complex64;

/// Monic `f` (coefficients in descending powers) together with `alpha`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharPolyFamily {
    pub n: usize,
    /// `[1, c_{n-1}, ..., c_0]`.
    #[serde(rename = "f")]
    pub f_coeffs: Vec<f64>,
    pub alpha: f64,
}

impl CharPolyFamily {
    /// Coefficient of `z^k` in `f`.
    pub fn coefficient(&self, k: usize) -> f64 {
        self.f_coeffs[self.n - k]
    }

    /// Descending coefficients of `f(z) - 2 alpha t`.
    pub fn at(&self, t: f64) -> Vec<f64> {
        let mut c = self.f_coeffs.clone();
        c[self.n] -= 2.0 * self.alpha * t;
        c
    }

    /// `f(z) - 2 alpha t`.
    pub fn eval(&self, z: f64, t: f64) -> f64 {
        horner(&self.f_coeffs, z) - 2.0 * self.alpha * t
    }

    /// Largest coefficient gap between two families, relative to the larger
    /// coefficient magnitude. `alpha` counts as a coefficient.
    pub fn max_relative_difference(&self, other: &Self) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        let scale = self
            .f_coeffs
            .iter()
            .chain(other.f_coeffs.iter())
            .chain([&self.alpha, &other.alpha])
            .fold(1.0_f64, |m, c| m.max(c.abs()));
        self.f_coeffs
            .iter()
            .zip(&other.f_coeffs)
            .map(|(x, y)| (x - y).abs())
            .chain(std::iter::once((self.alpha - other.alpha).abs()))
            .fold(0.0, f64::max)
            / scale
    }
}

/// Horner evaluation of descending coefficients.
pub fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc.mul_add(z, c))
}

/// Ascending coefficients of the charpoly of the path on `vertices` vertices
/// whose squared edge weights are `sq_edges` (length `vertices - 1`).
fn path_charpoly(sq_edges: &[f64], vertices: usize) -> Vec<f64> {
    let mut prev = vec![1.0];
    if vertices == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 1.0];
    for k in 2..=vertices {
        let e = sq_edges[k - 2];
        let mut next = vec![0.0; k + 1];
        for i in 1..=k {
            next[i] = cur[i - 1];
        }
        for (i, p) in prev.iter().enumerate() {
            next[i] = (-e).mul_add(*p, next[i]);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn build_family(a: &WeightVector) -> CharPolyFamily {
    let n = a.len();
    let sq = a.squares();
    let p = path_charpoly(&sq[..n - 1], n);
    let q = if n >= 3 {
        path_charpoly(&sq[1..n - 2], n - 2)
    } else {
        vec![1.0]
    };
    let mut f = p;
    for (i, c) in q.iter().enumerate() {
        f[i] = (-sq[n - 1]).mul_add(*c, f[i]);
    }
    f.reverse();
    CharPolyFamily {
        n,
        f_coeffs: f,
        alpha: a.product(),
    }
}

/// Nonnegative eigenvalues `alpha_j` of the Hermitian matrix `i(A - A^T)`.
///
/// For `n = 2k` the spectrum is `±alpha_1, ..., ±alpha_k`; for `n = 2k + 1`
/// it additionally contains `0`, which is not listed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImagSpectrum {
    pub alphas: Vec<f64>,
    pub n: usize,
}

impl ImagSpectrum {
    /// `prod (z^2 - alpha_j^2)`, times `z` for odd `n`, in descending powers.
    pub fn product_polynomial(&self) -> Vec<f64> {
        let mut poly = vec![1.0];
        for &al in &self.alphas {
            let mut next = vec![0.0; poly.len() + 2];
            for (i, &c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + 2] -= c * al * al;
            }
            poly = next;
        }
        if self.n % 2 == 1 {
            poly.push(0.0);
        }
        poly
    }
}

/// Dense matrix `i(A - A^T)` for `A = S(a)`.
pub(crate) fn imag_part_matrix(a: &WeightVector) -> CMatrix {
    let n = a.len();
    let w = a.weights();
    let mut m = CMatrix::zeros(n);
    for j in 0..n {
        let k = (j + 1) % n;
        m[(j, k)] += Complex64::new(0.0, w[j]);
        m[(k, j)] -= Complex64::new(0.0, w[j]);
    }
    m
}

pub fn imag_part_spectrum(a: &WeightVector) -> ImagSpectrum {
    let n = a.len();
    let eig = hermitian_eigen(&imag_part_matrix(a));
    let mut vals = eig.values;
    vals.sort_by(|x, y| y.total_cmp(x));
    let alphas = vals[..n / 2].iter().map(|v| v.max(0.0)).collect();
    ImagSpectrum { alphas, n }
}

/// Validates that `t` is a usable parameter `cos(n theta)`.
pub(crate) fn check_t(t: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::invalid("t", format!("{t} is outside [-1, 1]")));
    }
    Ok(())
}
