//! Deciding `W(B) ⊆ W(A)` by comparing support functions.
//!
//! `W(B) ⊆ W(A)` iff `lambda_1(Re(e^{i theta} B)) <= lambda_1(Re(e^{i theta} A))`
//! for every `theta`. For two real-weight matrices of the same size both sides
//! depend on `theta` only through `t = cos(n theta)`, so the test runs over
//! `t in [-1, 1]`. Margins are in units of `lambda_1(Re(.))`, half the top
//! root of the family polynomial.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::charpoly::{build_family, horner, CharPolyFamily};
use crate::error::{Error, Result};
use crate::spectra::{family_root, support_at_theta, support_curve};
use crate::weights::{PhaseReduction, WeightVector};

pub const DEFAULT_GRID: usize = 257;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Included,
    NotIncluded,
    Indeterminate,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed form when one applies and is decisive, otherwise the grid.
    Auto,
    Grid,
    Closed,
    /// Sign of `g/beta - f/alpha` on `[z_{-1}, z_1]`.
    Poly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionVerdict {
    pub kind: VerdictKind,
    /// Smallest observed `lambda_1(Re(e^{i theta} A)) - lambda_1(Re(e^{i theta} B))`.
    pub margin: f64,
    /// A `t = cos(n theta)` where `B` sticks out of `A`; set iff `NotIncluded`
    /// and the comparison ran in the `t` parametrization.
    pub witness_t: Option<f64>,
    /// Same for comparisons run over `theta` directly.
    pub witness_theta: Option<f64>,
    pub tolerance: f64,
    pub method: Method,
}

impl InclusionVerdict {
    pub fn is_included(&self) -> bool {
        self.kind == VerdictKind::Included
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionOptions {
    pub grid_size: usize,
    /// Absolute tolerance on margins; `None` means `1e-9 (1 + max support)`.
    pub tol: Option<f64>,
    /// Rounds of local grid refinement around the smallest margin.
    pub refine_rounds: usize,
}

impl Default for InclusionOptions {
    fn default() -> Self {
        Self {
            grid_size: DEFAULT_GRID,
            tol: None,
            refine_rounds: 6,
        }
    }
}

impl InclusionOptions {
    pub fn with_grid(grid_size: usize) -> Self {
        Self {
            grid_size,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.grid_size < 3 {
            return Err(Error::invalid(
                "grid size",
                format!("{} is below the minimum of 3", self.grid_size),
            ));
        }
        if let Some(t) = self.tol {
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::invalid("tolerance", format!("{t} is not a finite nonnegative number")));
            }
        }
        Ok(())
    }

    fn tolerance(&self, max_support: f64) -> f64 {
        self.tol.unwrap_or(1e-9 * (1.0 + max_support))
    }
}

/// Chebyshev–Lobatto points `cos(pi k / (m - 1))`, from `1` down to `-1`.
pub fn chebyshev_grid(m: usize) -> Vec<f64> {
    let m = m.max(2);
    (0..m)
        .map(|k| {
            if k == 0 {
                1.0
            } else if k == m - 1 {
                -1.0
            } else {
                (PI * k as f64 / (m - 1) as f64).cos()
            }
        })
        .collect()
}

fn classify(margin: f64, tol: f64, witness: Option<f64>, by_theta: bool, method: Method) -> InclusionVerdict {
    let kind = if !margin.is_finite() {
        VerdictKind::Indeterminate
    } else if margin >= -tol {
        VerdictKind::Included
    } else {
        VerdictKind::NotIncluded
    };
    let witness = if kind == VerdictKind::NotIncluded { witness } else { None };
    InclusionVerdict {
        kind,
        margin,
        witness_t: if by_theta { None } else { witness },
        witness_theta: if by_theta { witness } else { None },
        tolerance: tol,
        method,
    }
}

/// Smallest value of `h` near the grid point `best` of `xs`, by repeated
/// uniform subdivision of the bracketing interval.
fn refine_min(xs: &[f64], best: usize, mut best_val: f64, rounds: usize, h: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut best_x = xs[best];
    let lo_i = best.saturating_sub(1);
    let hi_i = (best + 1).min(xs.len() - 1);
    let (mut lo, mut hi) = (xs[lo_i].min(xs[hi_i]), xs[lo_i].max(xs[hi_i]));
    const SPLIT: usize = 16;
    for _ in 0..rounds {
        let step = (hi - lo) / SPLIT as f64;
        if step <= 0.0 {
            break;
        }
        for k in 1..SPLIT {
            let x = lo + step * k as f64;
            let v = h(x);
            if v < best_val {
                best_val = v;
                best_x = x;
            }
        }
        lo = (best_x - step).max(lo);
        hi = (best_x + step).min(hi);
    }
    (best_x, best_val)
}

/// Margin profile of two families over a shared `t` grid with precomputed
/// top roots `za`, `zb`; refines around the minimum. Returns `(t*, margin)`.
pub(crate) fn profile_margin(
    fa: &CharPolyFamily,
    fb: &CharPolyFamily,
    ts: &[f64],
    za: &[f64],
    zb: &[f64],
    rounds: usize,
) -> (f64, f64) {
    let (best, best_val) = za
        .iter()
        .zip(zb)
        .map(|(a, b)| 0.5 * (a - b))
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap_or((0, f64::NAN));
    if fa.alpha == 0.0 && fb.alpha == 0.0 {
        return (ts[best], best_val);
    }
    refine_min(ts, best, best_val, rounds, |t| {
        0.5 * (family_root(fa, t, None) - family_root(fb, t, None))
    })
}

/// Support-function test of `W(B) ⊆ W(A)` on a `t` grid (same `n`, real
/// weights) or on a `theta` grid otherwise.
pub fn includes_general(a: &WeightVector, b: &WeightVector, grid_size: usize) -> Result<InclusionVerdict> {
    includes_general_with(a, b, &InclusionOptions::with_grid(grid_size))
}

pub fn includes_general_with(a: &WeightVector, b: &WeightVector, opts: &InclusionOptions) -> Result<InclusionVerdict> {
    if a.len() != b.len() {
        return includes_reduced(&PhaseReduction::real(a.clone()), &PhaseReduction::real(b.clone()), opts);
    }
    opts.validate()?;
    let fa = build_family(a);
    let fb = build_family(b);
    let ts = chebyshev_grid(opts.grid_size);
    let za = support_curve(&fa, &ts);
    let zb = support_curve(&fb, &ts);
    let max_support = 0.5 * za[0].max(zb[0]);
    let (t_star, margin) = profile_margin(&fa, &fb, &ts, &za, &zb, opts.refine_rounds);
    Ok(classify(margin, opts.tolerance(max_support), Some(t_star), false, Method::Grid))
}

/// Support test over `theta in [0, 2 pi)` for matrices given up to a phase.
/// Uses `max(n_A, n_B) * grid_size` directions.
pub fn includes_reduced(a: &PhaseReduction, b: &PhaseReduction, opts: &InclusionOptions) -> Result<InclusionVerdict> {
    opts.validate()?;
    let fa = build_family(&a.magnitudes);
    let fb = build_family(&b.magnitudes);
    let m = a.magnitudes.len().max(b.magnitudes.len()) * opts.grid_size;
    let thetas: Vec<f64> = (0..m).map(|k| TAU * k as f64 / m as f64).collect();
    let h = |th: f64| 0.5 * (support_at_theta(&fa, a.phase, th) - support_at_theta(&fb, b.phase, th));
    let vals: Vec<f64> = thetas.iter().map(|&th| h(th)).collect();
    let (best, best_val) = vals
        .iter()
        .copied()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap_or((0, f64::NAN));
    let (th_star, margin) = refine_min(&thetas, best, best_val, opts.refine_rounds, h);
    let max_support = 0.5 * family_root(&fa, 1.0, None).max(family_root(&fb, 1.0, None));
    Ok(classify(margin, opts.tolerance(max_support), Some(th_star), true, Method::Grid))
}

fn relative_eq(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * (1.0 + x.abs().max(y.abs()))
}

/// Top root at `t = -1` and `t = 1` for both sides; margin is the smaller
/// endpoint gap, witness the endpoint where it occurs.
fn endpoint_margin(fa: &CharPolyFamily, fb: &CharPolyFamily) -> (f64, f64, f64) {
    let gap = |t: f64| 0.5 * (family_root(fa, t, None) - family_root(fb, t, None));
    let (lo, hi) = (gap(-1.0), gap(1.0));
    let scale = 0.5 * family_root(fa, 1.0, None).max(family_root(fb, 1.0, None));
    if lo <= hi {
        (lo, -1.0, scale)
    } else {
        (hi, 1.0, scale)
    }
}

/// Closed-form comparisons for `n <= 6`.
///
/// - `n = 2`: coaxial ellipses, compare `a_1 + a_2` and `|a_1 - a_2|`.
/// - `n = 3`: the gap changes sign at most once in `z`, so `t = ±1` decide.
/// - `n = 4, 5, 6`: need equal `sum a_j^2` and equal `prod a_j`. Then
///   `f_B - f_A` is `c z^k + d` and the lower coefficients decide; for `n = 6`
///   with both nonzero the cubic certificate in `x = z^2` is tried.
///
/// Returns `Indeterminate` when the preconditions fail or no certificate applies.
pub fn includes_closed_form(a: &WeightVector, b: &WeightVector) -> Result<InclusionVerdict> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::invalid(
            "weights",
            format!("closed forms compare equal sizes, got {} and {}", n, b.len()),
        ));
    }
    if !(2..=6).contains(&n) {
        return Err(Error::UnsupportedSize(n));
    }
    let fa = build_family(a);
    let fb = build_family(b);
    let (end_margin, end_t, scale) = endpoint_margin(&fa, &fb);
    let tol = InclusionOptions::default().tolerance(scale);
    let decided = |included: bool| InclusionVerdict {
        kind: if included { VerdictKind::Included } else { VerdictKind::NotIncluded },
        margin: end_margin,
        witness_t: (!included).then_some(end_t),
        witness_theta: None,
        tolerance: tol,
        method: Method::Closed,
    };
    let indeterminate = InclusionVerdict {
        kind: VerdictKind::Indeterminate,
        margin: end_margin,
        witness_t: None,
        witness_theta: None,
        tolerance: tol,
        method: Method::Closed,
    };

    match n {
        2 => {
            let (x, y) = (a.weights(), b.weights());
            let major = (x[0] + x[1]) - (y[0] + y[1]);
            let minor = (x[0] - x[1]).abs() - (y[0] - y[1]).abs();
            let margin = 0.5 * major.min(minor);
            let witness = if major <= minor { 1.0 } else { -1.0 };
            Ok(classify(margin, tol, Some(witness), false, Method::Closed))
        }
        3 => Ok(classify(end_margin, tol, Some(end_t), false, Method::Closed)),
        _ => {
            let same = relative_eq(a.sum_squares(), b.sum_squares(), 1e-10)
                && relative_eq(fa.alpha, fb.alpha, 1e-10);
            if !same {
                return Ok(indeterminate);
            }
            let coef_tol = 1e-12 * (1.0 + a.sum_squares()).powi(n as i32 / 2);
            // f_B - f_A = dc * z^{n-4} + d0 with dc the z^{n-4} gap.
            let dc = fb.coefficient(n - 4) - fa.coefficient(n - 4);
            let d0 = if n == 6 { fb.coefficient(0) - fa.coefficient(0) } else { 0.0 };
            let dc = if dc.abs() <= coef_tol { 0.0 } else { dc };
            let d0 = if d0.abs() <= coef_tol { 0.0 } else { d0 };
            if n == 4 {
                return Ok(decided(dc >= 0.0));
            }
            if d0 == 0.0 {
                return Ok(decided(dc >= 0.0));
            }
            if dc == 0.0 {
                return Ok(decided(d0 > 0.0));
            }
            // n = 6, x = z^2: F(x) = x^3 - e1 x^2 + e2 x - e3, e3 = -f(0) + 2 alpha t.
            let ca = CubicTriple {
                e1: a.sum_squares(),
                e2: fa.coefficient(2),
                e3: -fa.coefficient(0),
            };
            let cb = CubicTriple {
                e1: a.sum_squares(),
                e2: fb.coefficient(2),
                e3: -fb.coefficient(0),
            };
            if dc > 0.0 {
                match compare_cubic(&ca, &cb)? {
                    CubicComparison::FirstRootSmallerIsD => Ok(decided(true)),
                    CubicComparison::Inconclusive => Ok(indeterminate),
                }
            } else {
                match compare_cubic(&cb, &ca)? {
                    CubicComparison::FirstRootSmallerIsD => Ok(decided(false)),
                    CubicComparison::Inconclusive => Ok(indeterminate),
                }
            }
        }
    }
}

/// The polynomial criterion for positive weights: if the top root of
/// `g + 2 beta` is at most `z_{-1}`, then `W(B) ⊆ W(A)` iff
/// `g(z)/beta >= f(z)/alpha` on `[z_{-1}, z_1]`. Falls back to the grid when
/// the hypothesis fails or a product vanishes.
pub fn includes_polynomial(a: &WeightVector, b: &WeightVector, opts: &InclusionOptions) -> Result<InclusionVerdict> {
    opts.validate()?;
    if a.len() != b.len() {
        return includes_general_with(a, b, opts);
    }
    let fa = build_family(a);
    let fb = build_family(b);
    if fa.alpha <= 0.0 || fb.alpha <= 0.0 {
        return includes_general_with(a, b, opts);
    }
    let z_lo = family_root(&fa, -1.0, None);
    let z_hi = family_root(&fa, 1.0, None);
    let zb_lo = family_root(&fb, -1.0, None);
    let scale = 0.5 * z_hi.max(family_root(&fb, 1.0, None));
    let tol = opts.tolerance(scale);
    if zb_lo > z_lo + 2.0 * tol {
        return includes_general_with(a, b, opts);
    }
    let h = |z: f64| horner(&fb.f_coeffs, z) / fb.alpha - horner(&fa.f_coeffs, z) / fa.alpha;
    let m = opts.grid_size;
    let zs: Vec<f64> = (0..m)
        .map(|k| z_lo + (z_hi - z_lo) * (1.0 - (PI * k as f64 / (m - 1) as f64).cos()) / 2.0)
        .collect();
    let vals: Vec<f64> = zs.iter().map(|&z| h(z)).collect();
    let (best, best_val) = vals
        .iter()
        .copied()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap_or((0, f64::NAN));
    let (z_star, h_min) = refine_min(&zs, best, best_val, opts.refine_rounds, h);
    // Convert to a support margin at the matching t.
    let t_star = (horner(&fa.f_coeffs, z_star) / (2.0 * fa.alpha)).clamp(-1.0, 1.0);
    let margin = 0.5 * (family_root(&fa, t_star, None) - family_root(&fb, t_star, None));
    let h_scale = 1e-9 * (1.0 + vals.iter().fold(0.0_f64, |s, v| s.max(v.abs())));
    let kind = if h_min >= -h_scale {
        VerdictKind::Included
    } else {
        VerdictKind::NotIncluded
    };
    Ok(InclusionVerdict {
        kind,
        margin,
        witness_t: (kind == VerdictKind::NotIncluded).then_some(t_star),
        witness_theta: None,
        tolerance: tol,
        method: Method::Poly,
    })
}

/// Dispatch on [`Method`].
pub fn includes(a: &WeightVector, b: &WeightVector, method: Method, opts: &InclusionOptions) -> Result<InclusionVerdict> {
    match method {
        Method::Grid => includes_general_with(a, b, opts),
        Method::Closed => includes_closed_form(a, b),
        Method::Poly => includes_polynomial(a, b, opts),
        Method::Auto => {
            opts.validate()?;
            if a.len() == b.len() && (2..=6).contains(&a.len()) {
                let v = includes_closed_form(a, b)?;
                if v.kind != VerdictKind::Indeterminate {
                    return Ok(v);
                }
            }
            includes_general_with(a, b, opts)
        }
    }
}

/// Elementary symmetric values of a positive triple `c_1 >= c_2 >= c_3`, the
/// roots of `x^3 - e1 x^2 + e2 x - e3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicTriple {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

impl CubicTriple {
    pub fn from_roots(c1: f64, c2: f64, c3: f64) -> Self {
        Self {
            e1: c1 + c2 + c3,
            e2: c1 * c2 + c1 * c3 + c2 * c3,
            e3: c1 * c2 * c3,
        }
    }

    /// Largest critical point of the cubic; the largest root is at least this.
    pub fn critical_point(&self) -> f64 {
        (self.e1 + (self.e1 * self.e1 - 3.0 * self.e2).max(0.0).sqrt()) / 3.0
    }

    /// Largest root.
    pub fn largest_root(&self) -> f64 {
        let c = [1.0, -self.e1, self.e2, -self.e3];
        crate::spectra::largest_root(&c).unwrap_or(f64::NAN)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubicComparison {
    /// The largest root of `d` is below the largest root of `c`.
    FirstRootSmallerIsD,
    Inconclusive,
}

/// With equal sums and `c.e2 < d.e2`, the cubics cross once, at
/// `x0 = (d.e3 - c.e3)/(d.e2 - c.e2)`; `d_1 < c_1` once `x0 < c_1`, which is
/// certified by `x0` at most `e1/3` or the largest critical point of `c`.
pub fn compare_cubic(c: &CubicTriple, d: &CubicTriple) -> Result<CubicComparison> {
    compare_cubic_with_bound(c, d, None)
}

/// As [`compare_cubic`], additionally accepting `x0 < c1_lower` for a known
/// lower bound on `c_1`.
pub fn compare_cubic_with_bound(c: &CubicTriple, d: &CubicTriple, c1_lower: Option<f64>) -> Result<CubicComparison> {
    if !relative_eq(c.e1, d.e1, 1e-10) {
        return Err(Error::Precondition(format!(
            "cubic comparison needs equal root sums, got {} and {}",
            c.e1, d.e1
        )));
    }
    if !(c.e2 < d.e2) {
        return Ok(CubicComparison::Inconclusive);
    }
    let x0 = if c.e3 == d.e3 { 0.0 } else { (d.e3 - c.e3) / (d.e2 - c.e2) };
    let certified = x0 <= c.e1 / 3.0
        || x0 < c.critical_point()
        || c1_lower.is_some_and(|lb| x0 < lb);
    Ok(if certified {
        CubicComparison::FirstRootSmallerIsD
    } else {
        CubicComparison::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reflexive() {
        let a = w(&[1.0; 4]);
        let v = includes_general(&a, &a, 257).unwrap();
        assert_eq!(v.kind, VerdictKind::Included);
        assert_eq!(v.margin, 0.0);
    }

    #[test]
    fn counterexample_pair() {
        let a = WeightVector::from_squares(vec![4.0, 3.0, 30.0, 0.0, 13.0, 8.0]).unwrap();
        let b = WeightVector::from_squares(vec![8.0, 3.0, 30.0, 0.0, 13.0, 4.0]).unwrap();
        let v = includes_general(&a, &b, 257).unwrap();
        assert_eq!(v.kind, VerdictKind::NotIncluded);
        assert!((v.margin + (5.849305739643407 - 5.806772546760608) / 2.0).abs() < 1e-12);
        assert!(v.witness_t.is_some());
    }

    #[test]
    fn two_by_two() {
        let v = includes_general(&w(&[3.0, 1.0]), &w(&[2.0, 2.0]), 257).unwrap();
        assert_eq!(v.kind, VerdictKind::Included);
        let c = includes_closed_form(&w(&[3.0, 1.0]), &w(&[2.0, 2.0])).unwrap();
        assert_eq!(c.kind, VerdictKind::Included);
        let c = includes_closed_form(&w(&[2.0, 2.0]), &w(&[3.0, 1.0])).unwrap();
        assert_eq!(c.kind, VerdictKind::NotIncluded);
    }

    #[test]
    fn closed_form_n4_example() {
        let a = w(&[1.0, 2.0, 4.0, 3.0]);
        let b = w(&[1.0, 3.0, 2.0, 4.0]);
        assert_eq!(includes_closed_form(&a, &b).unwrap().kind, VerdictKind::Included);
        assert_eq!(includes_closed_form(&b, &a).unwrap().kind, VerdictKind::NotIncluded);
    }

    #[test]
    fn n3_permutations_are_equal() {
        let a = w(&[2.0, 1.0, 1.0]);
        let b = w(&[1.0, 2.0, 1.0]);
        assert_eq!(includes_closed_form(&a, &b).unwrap().kind, VerdictKind::Included);
        assert_eq!(includes_closed_form(&b, &a).unwrap().kind, VerdictKind::Included);
    }

    #[test]
    fn unsupported_size_and_bad_grid() {
        assert!(matches!(
            includes_closed_form(&w(&[1.0; 7]), &w(&[1.0; 7])),
            Err(Error::UnsupportedSize(7))
        ));
        assert!(includes_general(&w(&[1.0; 3]), &w(&[1.0; 3]), 2).is_err());
    }

    #[test]
    fn cubic_examples() {
        let c = CubicTriple::from_roots(4.0, 2.0, 1.0);
        let d = CubicTriple::from_roots(3.0, 3.0, 1.0);
        assert_eq!((c.e1, c.e2, c.e3), (7.0, 14.0, 8.0));
        assert_eq!((d.e1, d.e2, d.e3), (7.0, 15.0, 9.0));
        assert_eq!(compare_cubic(&c, &d).unwrap(), CubicComparison::FirstRootSmallerIsD);
        assert_eq!(compare_cubic(&c, &c).unwrap(), CubicComparison::Inconclusive);
        let e = CubicTriple { e1: 8.0, ..c };
        assert!(matches!(compare_cubic(&c, &e), Err(Error::Precondition(_))));
    }

    #[test]
    fn cubic_equal_products() {
        // Roots (6, 1, 1) and (4, 2, 2): sums 8, products 6 vs 16; rescale e3.
        let c = CubicTriple { e1: 8.0, e2: 13.0, e3: 6.0 };
        let d = CubicTriple { e1: 8.0, e2: 16.0, e3: 6.0 };
        assert_eq!(compare_cubic(&c, &d).unwrap(), CubicComparison::FirstRootSmallerIsD);
        assert!(d.largest_root() < c.largest_root());
    }

    #[test]
    fn polynomial_criterion_agrees_with_grid() {
        let a = w(&[1.0, 3.0, 5.0, 4.0, 2.0]);
        let b = w(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let opts = InclusionOptions::default();
        let p = includes_polynomial(&a, &b, &opts).unwrap();
        let g = includes_general_with(&a, &b, &opts).unwrap();
        assert_eq!(p.kind, g.kind);
        let p = includes_polynomial(&b, &a, &opts).unwrap();
        let g = includes_general_with(&b, &a, &opts).unwrap();
        assert_eq!(p.kind, g.kind);
    }

    #[test]
    fn phase_and_size_mismatch_use_theta_grid() {
        let a = PhaseReduction::real(w(&[1.0, 1.0, 1.0]));
        let b = PhaseReduction {
            magnitudes: w(&[1.0, 1.0, 1.0]),
            phase: PI / 3.0,
        };
        // Rotating the triangle by pi/3 flips it: neither contains the other.
        let v = includes_reduced(&a, &b, &InclusionOptions::default()).unwrap();
        assert_eq!(v.kind, VerdictKind::NotIncluded);
        assert!(v.witness_theta.is_some());
        // The unit disk (radius 1/2 for S(1,0)) sits inside the unit triangle.
        let v = includes_general(&w(&[1.0, 1.0, 1.0]), &w(&[1.0, 0.0]), 64).unwrap();
        assert_eq!(v.kind, VerdictKind::Included);
    }
}
