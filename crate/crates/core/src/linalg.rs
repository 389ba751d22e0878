//! Small dense complex matrices: cyclic Jacobi for Hermitian eigenproblems and
//! a pivoted solver used by inverse iteration. O(n^3), intended for n ≲ 20.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix rows must have length {n}");
        Self {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `v^* M v`.
    pub fn quadratic_form(&self, v: &[Complex64]) -> Complex64 {
        let mv = self.mul_vec(v);
        v.iter().zip(&mv).map(|(x, y)| x.conj() * y).sum()
    }

    fn off_diagonal_sq(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)].norm_sqr();
                }
            }
        }
        s
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigenpairs of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is a unit eigenvector for `values[k]`.
    pub vectors: Vec<Vec<Complex64>>,
}

/// Cyclic Jacobi on a Hermitian matrix. Each rotation first removes the phase
/// of the pivot with a diagonal unitary, then applies a real plane rotation.
pub fn hermitian_eigen(h: &CMatrix) -> HermitianEigen {
    let n = h.dim();
    let mut a = h.clone();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = (1e-17 * scale).powi(2);

    for _sweep in 0..100 {
        if a.off_diagonal_sq() <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a[(p, q)];
                let mag = g.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // Diagonal unitary making a[(p,q)] real and positive.
                let u = g.conj() / mag;
                for k in 0..n {
                    a[(k, q)] *= u;
                    a[(q, k)] *= u.conj();
                    v[(k, q)] *= u;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * s;
                    a[(k, q)] = akp * s + akq * c;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * s;
                    a[(q, k)] = apk * s + aqk * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * s;
                    v[(k, q)] = vkp * s + vkq * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    HermitianEigen {
        values: order.iter().map(|&i| a[(i, i)].re).collect(),
        vectors: order
            .iter()
            .map(|&i| (0..n).map(|k| v[(k, i)]).collect())
            .collect(),
    }
}

/// Solves `m x = b` by Gaussian elimination with partial pivoting. Exactly
/// singular pivots are nudged, which is what inverse iteration wants.
pub fn solve(m: &CMatrix, b: &[Complex64]) -> Vec<Complex64> {
    let n = m.dim();
    let mut a = m.clone();
    let mut x = b.to_vec();
    let tiny = 1e-300_f64.max(f64::EPSILON * m.frobenius_norm() * 1e-3);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            .unwrap_or(col);
        if piv != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(piv, k)];
                a[(piv, k)] = tmp;
            }
            x.swap(col, piv);
        }
        if a[(col, col)].norm() < tiny {
            a[(col, col)] = Complex64::new(tiny, 0.0);
        }
        let d = a[(col, col)];
        for r in (col + 1)..n {
            let f = a[(r, col)] / d;
            if f == ZERO {
                continue;
            }
            for k in col..n {
                let ack = a[(col, k)];
                a[(r, k)] -= f * ack;
            }
            let xc = x[col];
            x[r] -= f * xc;
        }
    }
    for col in (0..n).rev() {
        let s: Complex64 = ((col + 1)..n).map(|k| a[(col, k)] * x[k]).sum();
        x[col] = (x[col] - s) / a[(col, col)];
    }
    x
}

pub fn normalize(v: &mut [Complex64]) {
    let nrm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if nrm > 0.0 {
        v.iter_mut().for_each(|x| *x /= nrm);
    }
}
