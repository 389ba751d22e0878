//! Top eigenvalue of `2 Re(e^{i theta} S(a))` through the polynomial family,
//! the numerical radius, and a dense Jacobi oracle for cross-checking.
//!
//! Every polynomial `f - 2 alpha t` with `t in [-1, 1]` is the characteristic
//! polynomial of a Hermitian matrix, so all its roots are real. Newton's method
//! started above the largest root then decreases monotonically onto it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::charpoly::{build_family, check_t, CharPolyFamily};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, CMatrix, HermitianEigen};
use crate::weights::{PhaseReduction, WeightVector};

/// `p(z)`, `p'(z)` and a running bound on the rounding error of `p(z)`.
fn eval_with_bound(c: &[f64], z: f64) -> (f64, f64, f64) {
    let az = z.abs();
    let mut p = 0.0_f64;
    let mut dp = 0.0_f64;
    let mut bound = 0.0;
    for &ci in c {
        dp = dp.mul_add(z, p);
        p = p.mul_add(z, ci);
        bound = bound * az + ci.abs();
    }
    (p, dp, bound * 4.0 * c.len() as f64 * f64::EPSILON)
}

fn derivative(c: &[f64]) -> Vec<f64> {
    let d = c.len() - 1;
    c[..d]
        .iter()
        .enumerate()
        .map(|(i, &ci)| ci * (d - i) as f64)
        .collect()
}

/// Upper bound on the moduli of all roots of a monic polynomial: the smaller
/// of the Cauchy and Fujiwara bounds.
pub fn root_bound(c: &[f64]) -> f64 {
    let d = c.len() - 1;
    let cauchy = 1.0 + c[1..].iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let fujiwara = 2.0
        * (1..=d)
            .map(|k| {
                let ck = if k == d { c[k].abs() / 2.0 } else { c[k].abs() };
                ck.powf(1.0 / k as f64)
            })
            .fold(0.0_f64, f64::max);
    cauchy.min(fujiwara)
}

/// Greatest real root of a real polynomial given by descending coefficients.
///
/// Exact to rounding for real-rooted polynomials, including multiple top
/// roots. For other polynomials a descending sign scan isolates the top
/// sign change.
pub fn largest_root(coeffs: &[f64]) -> Result<f64> {
    let lead = coeffs.first().copied().unwrap_or(0.0);
    if coeffs.len() < 2 || lead == 0.0 || coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::invalid(
            "polynomial",
            "need degree >= 1, a nonzero leading coefficient and finite coefficients",
        ));
    }
    let c: Vec<f64> = coeffs.iter().map(|x| x / lead).collect();
    let bound = root_bound(&c);
    let start = bound * (1.0 + 1e-12) + f64::MIN_POSITIVE;
    largest_root_from(&c, start, bound)
}

/// Largest root of monic `c`, given `start` at or above it.
pub(crate) fn largest_root_from(c: &[f64], start: f64, bound: f64) -> Result<f64> {
    if c.len() == 2 {
        return Ok(-c[1]);
    }
    let mut z = start;
    let mut last_step = f64::INFINITY;
    let mut slow = false;
    for _ in 0..500 {
        let (p, dp, noise) = eval_with_bound(c, z);
        if p.abs() <= noise {
            break;
        }
        if p < 0.0 || dp <= 0.0 {
            return scan_down(c, z, bound);
        }
        let step = p / dp;
        let next = z - step;
        let (pn, _, noise_n) = eval_with_bound(c, next);
        if pn < -noise_n {
            z = bisect(c, next, z);
            break;
        }
        slow = step > 0.3 * last_step;
        last_step = step;
        if step <= 4.0 * f64::EPSILON * z.abs().max(1e-300) {
            z = next;
            break;
        }
        z = next;
    }
    if slow || eval_with_bound(c, z).0.abs() <= eval_with_bound(c, z).2 {
        z = refine_multiple(c, z, bound);
    }
    Ok(z)
}

/// A multiple top root is a root of `p'`, where it is well conditioned. Newton
/// only reaches a root of multiplicity `k` to about `eps^(1/k)`, hence the
/// loose distance check; `p(w)` at noise level is the real acceptance test.
fn refine_multiple(c: &[f64], z: f64, bound: f64) -> f64 {
    if c.len() <= 2 {
        return z;
    }
    let d = derivative(c);
    let lead = d[0];
    let dm: Vec<f64> = d.iter().map(|x| x / lead).collect();
    let (dpz, _, _) = eval_with_bound(&dm, z);
    if dpz < 0.0 {
        return z;
    }
    let Ok(w) = largest_root_from(&dm, z, bound) else {
        return z;
    };
    let (pw, _, noise) = eval_with_bound(c, w);
    let scale = 1.0 + z.abs();
    if pw.abs() <= 8.0 * noise && (z - w).abs() <= 1e-3 * scale {
        w
    } else {
        z
    }
}

/// Bisection on a sign change `p(lo) <= 0 < p(hi)`.
fn bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if eval_with_bound(c, mid).0 > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Descending scan for the top sign change, for polynomials that are not
/// real-rooted. Misses roots of even multiplicity below `from`.
fn scan_down(c: &[f64], from: f64, bound: f64) -> Result<f64> {
    let steps = 4096;
    let h = (from + bound) / steps as f64;
    let mut hi = from;
    let mut p_hi = eval_with_bound(c, hi).0;
    if p_hi <= 0.0 {
        // `from` is already past a root; walk back up to find it.
        let mut lo = from;
        let mut up = from + h;
        while eval_with_bound(c, up).0 <= 0.0 {
            lo = up;
            up += h;
            if up > bound * 2.0 + 1.0 {
                return Err(Error::NoRealRoot { bound });
            }
        }
        return Ok(bisect(c, lo, up));
    }
    for _ in 0..steps {
        let lo = hi - h;
        let p_lo = eval_with_bound(c, lo).0;
        if p_lo <= 0.0 {
            return Ok(bisect(c, lo, hi));
        }
        hi = lo;
        p_hi = p_lo;
    }
    let _ = p_hi;
    Err(Error::NoRealRoot { bound })
}

/// Largest root of `f - 2 alpha t`, optionally starting from a known upper bound.
pub fn family_root(family: &CharPolyFamily, t: f64, upper: Option<f64>) -> f64 {
    let c = family.at(t);
    let bound = root_bound(&c);
    let start = match upper {
        Some(u) if u.is_finite() && u < bound => u,
        _ => bound * (1.0 + 1e-12) + f64::MIN_POSITIVE,
    };
    // Real-rootedness of the family makes the Newton descent well defined.
    largest_root_from(&c, start, bound).unwrap_or(start)
}

/// `lambda_1(2 Re(e^{i theta} S(a)))` at `cos(n theta) = t`.
pub fn support_max(a: &WeightVector, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(family_root(&build_family(a), t, None))
}

/// Top eigenvalue of `2 Re(e^{i theta} A)` for a reduced complex-weight matrix
/// `A = e^{i phase} S(magnitudes)` up to unitary similarity.
pub fn support_at_theta(family: &CharPolyFamily, phase: f64, theta: f64) -> f64 {
    let t = (family.n as f64 * (theta + phase)).cos().clamp(-1.0, 1.0);
    family_root(family, t, None)
}

/// `r(S(a)) = max |W(S(a))|`, attained where `cos(n theta) = 1`.
pub fn numerical_radius(a: &WeightVector) -> f64 {
    family_root(&build_family(a), 1.0, None) / 2.0
}

/// Samples of the top root `z(t)` of `f - 2 alpha t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportProfile {
    pub family: CharPolyFamily,
    /// `(t, z(t))` in the order the `t` values were given.
    pub samples: Vec<(f64, f64)>,
}

/// `z(t)` for each `t`. Values are solved in descending `t` so that each root
/// bounds the next one from above.
pub fn support_curve(family: &CharPolyFamily, ts: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..ts.len()).collect();
    order.sort_by(|&i, &j| ts[j].total_cmp(&ts[i]));
    let mut out = vec![0.0; ts.len()];
    let mut upper: Option<f64> = None;
    for i in order {
        let z = family_root(family, ts[i], upper.map(|u| u * (1.0 + 1e-15) + 1e-300));
        out[i] = z;
        upper = Some(z);
    }
    out
}

pub fn support_profile(a: &WeightVector, ts: &[f64]) -> Result<SupportProfile> {
    for &t in ts {
        check_t(t)?;
    }
    let family = build_family(a);
    let z = support_curve(&family, ts);
    Ok(SupportProfile {
        samples: ts.iter().copied().zip(z).collect(),
        family,
    })
}

/// `2 Re(e^{i theta} S(a))` conjugated by `diag(1, e^{-i theta}, ..., e^{-i(n-1) theta})`:
/// the path entries become `a_j` and the corner becomes `a_n e^{i n theta}`.
pub fn transformed_matrix(a: &WeightVector, theta: f64) -> CMatrix {
    let n = a.len();
    let w = a.weights();
    let mut m = CMatrix::zeros(n);
    for j in 0..n - 1 {
        m[(j, j + 1)] += Complex64::new(w[j], 0.0);
        m[(j + 1, j)] += Complex64::new(w[j], 0.0);
    }
    let corner = Complex64::from_polar(w[n - 1], n as f64 * theta);
    m[(n - 1, 0)] += corner;
    m[(0, n - 1)] += corner.conj();
    m
}

/// `Re(e^{i theta} S(a)) = (e^{i theta} S + e^{-i theta} S^T) / 2`.
pub fn real_part_matrix(a: &WeightVector, theta: f64) -> CMatrix {
    let n = a.len();
    let w = a.weights();
    let e = Complex64::from_polar(0.5, theta);
    let mut m = CMatrix::zeros(n);
    for j in 0..n {
        let k = (j + 1) % n;
        m[(j, k)] += e * w[j];
        m[(k, j)] += e.conj() * w[j];
    }
    m
}

/// The matrix `S(a)` itself.
pub fn shift_matrix(a: &WeightVector) -> CMatrix {
    let n = a.len();
    let mut m = CMatrix::zeros(n);
    for (j, &w) in a.weights().iter().enumerate() {
        m[(j, (j + 1) % n)] += Complex64::new(w, 0.0);
    }
    m
}

/// Full spectrum of `2 Re(e^{i theta} S(a))`, descending, by Jacobi rotations.
pub fn dense_oracle(a: &WeightVector, theta: f64) -> Vec<f64> {
    hermitian_eigen(&transformed_matrix(a, theta)).values
}

/// Eigenpairs of `Re(e^{i theta} S(a))` in the original basis.
pub fn real_part_eigen(a: &WeightVector, theta: f64) -> HermitianEigen {
    hermitian_eigen(&real_part_matrix(a, theta))
}

/// Support of a reduced complex-weight matrix, via the dense oracle.
pub fn dense_support(red: &PhaseReduction, theta: f64) -> f64 {
    dense_oracle(&red.magnitudes, theta + red.phase)[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn largest_root_examples() {
        assert!((largest_root(&[1.0, 0.0, -4.0, 0.0, 0.0]).unwrap() - 2.0).abs() < 1e-12);
        let r = largest_root(&[1.0, 0.0, -58.0, 0.0, 905.0, 0.0, -3120.0]).unwrap();
        assert!((r - 5.849305739643407).abs() < 1e-12);
        let r = largest_root(&[1.0, 0.0, -58.0, 0.0, 865.0, 0.0, -1560.0]).unwrap();
        assert!((r - 5.806772546760608).abs() < 1e-12);
    }

    #[test]
    fn double_top_root_is_resolved() {
        // (z - 1)^2 (z + 2), the unit 3-cycle at t = -1.
        let r = largest_root(&[1.0, 0.0, -3.0, 2.0]).unwrap();
        assert!((r - 1.0).abs() < 1e-12, "{r}");
        // (z^2 - 2)^2, the unit 4-cycle at t = -1.
        let r = largest_root(&[1.0, 0.0, -4.0, 0.0, 4.0]).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12, "{r}");
    }

    #[test]
    fn non_real_rooted_input_uses_scan() {
        // (z^2 + 1)(z - 3)
        let r = largest_root(&[1.0, -3.0, 1.0, -3.0]).unwrap();
        assert!((r - 3.0).abs() < 1e-12);
        assert!(matches!(largest_root(&[1.0, 0.0, 1.0]), Err(Error::NoRealRoot { .. })));
        assert!(largest_root(&[0.0, 1.0]).is_err());
    }

    #[test]
    fn support_examples() {
        assert!((support_max(&w(&[1.0, 1.0, 1.0]), 1.0).unwrap() - 2.0).abs() < 1e-12);
        let ce = WeightVector::from_squares(vec![8.0, 3.0, 30.0, 0.0, 13.0, 4.0]).unwrap();
        for t in [-1.0, 0.0, 0.3, 1.0] {
            assert!((support_max(&ce, t).unwrap() - 5.849305739643407).abs() < 1e-12);
        }
        assert!((support_max(&w(&[1.0, 0.0]), -0.4).unwrap() - 1.0).abs() < 1e-12);
        assert!(support_max(&w(&[1.0, 1.0]), 1.1).is_err());
    }

    #[test]
    fn radius_examples() {
        assert!((numerical_radius(&w(&[1.0, 0.0])) - 0.5).abs() < 1e-12);
        assert!((numerical_radius(&w(&[1.0, 1.0, 1.0])) - 1.0).abs() < 1e-12);
        let ce = WeightVector::from_squares(vec![8.0, 3.0, 30.0, 0.0, 13.0, 4.0]).unwrap();
        assert!((numerical_radius(&ce) - 2.92465).abs() < 3e-4);
    }

    #[test]
    fn oracle_examples() {
        let e = dense_oracle(&w(&[1.0; 4]), 0.0);
        for (x, y) in e.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        let e = dense_oracle(&w(&[1.0, 1.0, 0.0]), 0.0);
        let r = 2f64.sqrt();
        for (x, y) in e.iter().zip([r, 0.0, -r]) {
            assert!((x - y).abs() < 1e-12);
        }
        let ce = WeightVector::from_squares(vec![8.0, 3.0, 30.0, 0.0, 13.0, 4.0]).unwrap();
        assert!((dense_oracle(&ce, 0.7)[0] - 5.849305739643407).abs() < 1e-11);
    }

    #[test]
    fn profile_is_monotone_and_warm_start_matches_cold() {
        let a = w(&[0.7, 1.3, 2.0, 0.4, 1.1]);
        let ts: Vec<f64> = (0..=40).map(|k| -1.0 + k as f64 / 20.0).collect();
        let p = support_profile(&a, &ts).unwrap();
        for win in p.samples.windows(2) {
            assert!(win[1].1 >= win[0].1 - 1e-12);
        }
        for &(t, z) in &p.samples {
            assert!((z - support_max(&a, t).unwrap()).abs() < 1e-12);
        }
    }
}
