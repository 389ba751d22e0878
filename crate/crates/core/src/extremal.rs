//! Weight vectors that are extremal for the top eigenvalue or the numerical
//! radius, and the double smallest eigenvalue construction for odd cycles.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::charpoly::build_family;
use crate::error::{Error, Result};
use crate::inclusion::{chebyshev_grid, InclusionVerdict, Method, VerdictKind};
use crate::linalg::{hermitian_eigen, CMatrix};
use crate::spectra::{family_root, numerical_radius, real_part_matrix};
use crate::trials;
use crate::weights::WeightVector;

const GRID: usize = 513;

/// `lambda_1(Re(e^{i theta} C))` for the unweighted cyclic shift `C`, as a
/// function of `t = cos(n theta)`.
fn polygon_support(n: usize, t: f64) -> f64 {
    (t.clamp(-1.0, 1.0).acos() / n as f64).cos()
}

/// Checks that the regular polygon with vertices at the `n`-th roots of unity
/// lies in `W(S(a))` for weights with product 1.
pub fn regular_ngon_check(a: &WeightVector) -> Result<InclusionVerdict> {
    let n = a.len();
    if a.has_zero() {
        return Err(Error::Precondition(format!("{a} has a zero weight")));
    }
    let p = a.product();
    if (p - 1.0).abs() > 1e-10 {
        return Err(Error::Precondition(format!("product of weights of {a} is {p}, not 1")));
    }
    let fam = build_family(a);
    let margin = |t: f64| 0.5 * family_root(&fam, t, None) - polygon_support(n, t);
    let ts = chebyshev_grid(GRID);
    let vals: Vec<f64> = ts.iter().map(|&t| margin(t)).collect();
    let (mut best, mut best_val) = (0, f64::INFINITY);
    for (i, &v) in vals.iter().enumerate() {
        if v < best_val {
            best = i;
            best_val = v;
        }
    }
    // Golden-section refinement between the neighbours of the grid minimum.
    let (mut lo, mut hi) = (ts[(best + 1).min(ts.len() - 1)], ts[best.saturating_sub(1)]);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..60 {
        let x1 = hi - g * (hi - lo);
        let x2 = lo + g * (hi - lo);
        if margin(x1) < margin(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    let t_star = 0.5 * (lo + hi);
    let (t_min, m) = if margin(t_star) < best_val {
        (t_star, margin(t_star))
    } else {
        (ts[best], best_val)
    };
    let tol = 1e-9 * (1.0 + 0.5 * family_root(&fam, 1.0, None));
    let kind = if !m.is_finite() {
        VerdictKind::Indeterminate
    } else if m >= -tol {
        VerdictKind::Included
    } else {
        VerdictKind::NotIncluded
    };
    Ok(InclusionVerdict {
        kind,
        margin: m,
        witness_t: (kind == VerdictKind::NotIncluded).then_some(t_min),
        witness_theta: None,
        tolerance: tol,
        method: Method::Grid,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub weights: WeightVector,
    /// Closed-form optimum: `lambda_1(A + A^T)` for paths, `r(A)` otherwise.
    pub objective: f64,
    /// The same quantity recomputed from `weights`.
    pub computed: f64,
    pub eigvec: Option<Vec<f64>>,
    /// `|(A + A^T) v - objective v|` for `eigvec`.
    pub residual: Option<f64>,
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::invalid("n", format!("{n} is below the minimum of 3")));
    }
    Ok(())
}

/// `lambda_1(A + A^T)` for `A = S(a)` with `a_n = 0`.
pub fn path_top_eigenvalue(a: &WeightVector) -> f64 {
    family_root(&build_family(a), 0.0, None)
}

/// Path weights with product 1 minimizing `lambda_1(A + A^T)`.
pub fn min_path_weights(n: usize) -> Result<ExtremalReport> {
    check_n(n)?;
    let m = (n - 1) as f64;
    let end = 2f64.powf((n as f64 - 3.0) / (2.0 * m));
    let mid = 2f64.powf(-1.0 / m);
    let mut w = vec![mid; n];
    w[0] = end;
    w[n - 2] = end;
    w[n - 1] = 0.0;
    let weights = WeightVector::new(w)?;
    let objective = 2f64.powf((n as f64 - 2.0) / m);
    let mut v = vec![1.0 / m.sqrt(); n];
    v[0] = 1.0 / (2.0 * m).sqrt();
    v[n - 1] = v[0];
    let h = real_part_matrix(&weights, 0.0).scale(Complex64::new(2.0, 0.0));
    let vc: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let residual = h
        .mul_vec(&vc)
        .iter()
        .zip(&vc)
        .map(|(hv, x)| (hv - x * objective).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok(ExtremalReport {
        computed: path_top_eigenvalue(&weights),
        weights,
        objective,
        eigvec: Some(v),
        residual: Some(residual),
    })
}

/// Smallest `lambda_1(A + A^T)` over `trials` random product-1 perturbations
/// of the optimal path weights, each factor within `exp(±spread)`.
pub fn path_perturbation_sweep(n: usize, trials: usize, spread: f64, seed: u64) -> Result<f64> {
    let opt = min_path_weights(n)?;
    let base = &opt.weights.weights()[..n - 1];
    let mut rng = trials::rng(seed);
    let mut best = f64::INFINITY;
    for _ in 0..trials {
        let logs: Vec<f64> = (0..n - 1).map(|_| rng.random_range(-spread..spread)).collect();
        let mean = logs.iter().sum::<f64>() / logs.len() as f64;
        let mut w: Vec<f64> = base.iter().zip(&logs).map(|(b, l)| b * (l - mean).exp()).collect();
        w.push(0.0);
        best = best.min(path_top_eigenvalue(&WeightVector::new(w)?));
    }
    Ok(best)
}

/// Unit-Frobenius weights with a zero minimizing the numerical radius.
/// For odd `n` the last nonzero pair is `(cos theta, sin theta)`.
pub fn min_frobenius_zero_product(n: usize) -> Result<ExtremalReport> {
    min_frobenius_zero_product_with(n, std::f64::consts::FRAC_PI_4)
}

pub fn min_frobenius_zero_product_with(n: usize, theta: f64) -> Result<ExtremalReport> {
    check_n(n)?;
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::invalid("theta", format!("{theta} is outside [0, pi/2]")));
    }
    let mut w = vec![0.0; n];
    let (gamma, objective) = if n % 2 == 0 {
        let g = (2.0 / n as f64).sqrt();
        for x in w.iter_mut().step_by(2) {
            *x = g;
        }
        (g, 1.0 / (2.0 * n as f64).sqrt())
    } else {
        let k = (n / 2) as f64;
        let g = (1.0 / k).sqrt();
        for x in w[..n - 3].iter_mut().step_by(2) {
            *x = g;
        }
        w[n - 3] = g * theta.cos();
        w[n - 2] = g * theta.sin();
        (g, 1.0 / (4.0 * k).sqrt())
    };
    debug_assert!(gamma > 0.0);
    let weights = WeightVector::new(w)?;
    Ok(ExtremalReport {
        computed: numerical_radius(&weights),
        weights,
        objective,
        eigvec: None,
        residual: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoubleEigenResult {
    /// `(a_1, ..., a_{n-2}, hat a_{n-1}, hat a_n)`.
    pub weights: WeightVector,
    pub hat_a_nm1: f64,
    pub hat_a_n: f64,
    /// Smallest eigenvalue of the path part; doubled in the result.
    pub mu: f64,
    pub x0: f64,
    /// `v_1 v_{n-1}` for the path eigenvector; always negative.
    pub end_product: f64,
    /// Gap between the two smallest eigenvalues of `hat A + hat A^T`.
    pub gap: f64,
}

fn real_sym(n: usize, entries: impl IntoIterator<Item = (usize, usize, f64)>) -> CMatrix {
    let mut m = CMatrix::zeros(n);
    for (i, j, v) in entries {
        m[(i, j)] += Complex64::new(v, 0.0);
        if i != j {
            m[(j, i)] += Complex64::new(v, 0.0);
        }
    }
    m
}

/// Given path weights `a_1..a_{n-2}` (all positive, `n` odd), finds
/// `hat a_{n-1}, hat a_n > 0` such that the smallest eigenvalue of
/// `hat A + hat A^T` is double.
pub fn find_double_eigenvalue(a: &[f64]) -> Result<DoubleEigenResult> {
    let n = a.len() + 2;
    if n % 2 == 0 {
        return Err(Error::UnsupportedParity(n));
    }
    if let Some(x) = a.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        return Err(Error::invalid("weights", format!("{x} is not a positive number")));
    }
    let m = n - 1;
    let b_mat = real_sym(m, a.iter().enumerate().map(|(j, &w)| (j, j + 1, w)));
    let eig = hermitian_eigen(&b_mat);
    let mu = eig.values[m - 1];
    let v: Vec<f64> = eig.vectors[m - 1].iter().map(|c| c.re).collect();
    let (v1, vl) = (v[0], v[m - 1]);
    let scale = 2.0 * (1.0 + a.iter().fold(0.0_f64, |s, x| s.max(*x))) * 4.0;
    // M(x) with (v, 0) deflated; its smallest eigenvalue crosses mu at x0.
    let h = |x: f64| -> f64 {
        let mut mm = real_sym(
            n,
            a.iter()
                .enumerate()
                .map(|(j, &w)| (j, j + 1, w))
                .chain([(0, n - 1, x * vl.abs()), (m - 1, n - 1, x * v1.abs())]),
        );
        for i in 0..m {
            for j in 0..m {
                mm[(i, j)] += Complex64::new(scale * v[i] * v[j], 0.0);
            }
        }
        *hermitian_eigen(&mm).values.last().expect("nonempty spectrum") - mu
    };
    let mut hi = 1.0;
    while h(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::Precondition("no crossing found for the bisection".into()));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    let x0 = 0.5 * (lo + hi);
    let hat_a_nm1 = x0 * v1.abs();
    let hat_a_n = x0 * vl.abs();
    let mut w = a.to_vec();
    w.push(hat_a_nm1);
    w.push(hat_a_n);
    let weights = WeightVector::new(w)?;
    let vals = hermitian_eigen(&real_part_matrix(&weights, 0.0)).values;
    let gap = 2.0 * (vals[n - 2] - vals[n - 1]);
    Ok(DoubleEigenResult {
        weights,
        hat_a_nm1,
        hat_a_n,
        mu,
        x0,
        end_product: v1 * vl,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ngon_examples() {
        let v = regular_ngon_check(&w(&[1.0; 5])).unwrap();
        assert!(v.is_included() && v.margin.abs() < 1e-9);
        let v = regular_ngon_check(&w(&[2.0, 0.5, 1.0])).unwrap();
        assert!(v.is_included() && v.margin > 1e-6);
        assert!(matches!(regular_ngon_check(&w(&[2.0; 3])), Err(Error::Precondition(_))));
    }

    #[test]
    fn path_examples() {
        let r = min_path_weights(3).unwrap();
        assert_eq!(r.weights.weights(), &[1.0, 1.0, 0.0]);
        assert!((r.objective - 2f64.sqrt()).abs() < 1e-15);
        let r = min_path_weights(4).unwrap();
        assert!((r.objective - 1.5874010519681994).abs() < 1e-12);
        for n in 3..=8 {
            let r = min_path_weights(n).unwrap();
            assert!((r.computed - r.objective).abs() < 1e-10);
            assert!(r.residual.unwrap() < 1e-9);
            assert!((r.weights.weights()[..n - 1].iter().product::<f64>() - 1.0).abs() < 1e-12);
        }
        assert!(path_perturbation_sweep(5, 50, 0.2, 1).unwrap() > min_path_weights(5).unwrap().objective);
        assert!(min_path_weights(2).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let r = min_frobenius_zero_product(4).unwrap();
        assert!((r.objective - 0.3535533905932738).abs() < 1e-15);
        for th in [0.0, 0.3, 1.0, std::f64::consts::FRAC_PI_2] {
            let r = min_frobenius_zero_product_with(5, th).unwrap();
            assert!((r.computed - 0.3535533905932738).abs() < 1e-10);
            assert!((r.weights.sum_squares() - 1.0).abs() < 1e-12);
        }
        let r = min_frobenius_zero_product(3).unwrap();
        assert!((r.computed - 0.5).abs() < 1e-10);
        for n in 3..=9 {
            let r = min_frobenius_zero_product(n).unwrap();
            assert!((r.computed - r.objective).abs() < 1e-10, "n={n}: {} vs {}", r.computed, r.objective);
        }
    }

    #[test]
    fn double_eigenvalue_examples() {
        let r = find_double_eigenvalue(&[1.0]).unwrap();
        assert!((r.x0 - 2f64.sqrt()).abs() < 1e-10);
        assert!((r.mu + 1.0).abs() < 1e-12);
        assert!((r.hat_a_nm1 - 1.0).abs() < 1e-10 && (r.hat_a_n - 1.0).abs() < 1e-10);
        let r = find_double_eigenvalue(&[1.0, 1.0, 1.0]).unwrap();
        assert!(r.gap.abs() < 1e-9 && r.end_product < 0.0);
        let oracle = crate::spectra::dense_oracle(&r.weights, 0.0);
        assert!((oracle[3] - oracle[4]).abs() < 1e-9);
        assert!(matches!(find_double_eigenvalue(&[1.0, 1.0]), Err(Error::UnsupportedParity(4))));
        assert!(find_double_eigenvalue(&[1.0, 0.0, 1.0]).is_err());
    }
}
