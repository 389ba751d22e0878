//! Weight vectors of cyclic shift matrices `S(a_1, ..., a_n)`, the reduction of
//! complex weights to nonnegative ones, dihedral canonical forms of weight
//! arrangements, and the `r`-parametrization of ascending weights.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonnegative weights `a_1..a_n` of the cyclic shift matrix with `a_j` at
/// position `(j, j+1)` and `a_n` at `(n, 1)`.
///
/// Squared weights are kept alongside the weights. When the vector is built
/// from squares (`sq:` input) those are stored exactly, which keeps integer
/// squared inputs exact through the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector {
    a: Vec<f64>,
    sq: Vec<f64>,
}

impl WeightVector {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        check_entries("weights", &a)?;
        let sq = a.iter().map(|x| x * x).collect();
        Ok(Self { a, sq })
    }

    /// Builds the vector from squared weights `a_j^2`.
    pub fn from_squares(sq: Vec<f64>) -> Result<Self> {
        check_entries("squared weights", &sq)?;
        let a = sq.iter().map(|s| s.sqrt()).collect();
        Ok(Self { a, sq })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    /// Always false: a weight vector has at least two entries.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weights(&self) -> &[f64] {
        &self.a
    }

    pub fn squares(&self) -> &[f64] {
        &self.sq
    }

    /// `alpha = a_1 a_2 ... a_n`.
    pub fn product(&self) -> f64 {
        self.a.iter().product()
    }

    pub fn sum_squares(&self) -> f64 {
        self.sq.iter().sum()
    }

    pub fn sum_fourth_powers(&self) -> f64 {
        self.sq.iter().map(|s| s * s).sum()
    }

    /// Euclidean norm of the weights, i.e. the Frobenius norm of `S(a)`.
    pub fn norm(&self) -> f64 {
        self.sum_squares().sqrt()
    }

    pub fn max_weight(&self) -> f64 {
        self.a.iter().copied().fold(0.0, f64::max)
    }

    /// True when some weight vanishes, in which case `W(S(a))` is a disk.
    pub fn has_zero(&self) -> bool {
        self.a.iter().any(|&x| x == 0.0)
    }

    pub fn is_ascending(&self) -> bool {
        self.a.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strictly_ascending(&self) -> bool {
        self.a.windows(2).all(|w| w[0] < w[1])
    }

    /// The arrangement `S(a_{p_1}, ..., a_{p_n})` for a 1-based index list `p`.
    pub fn arrange(&self, perm: &[usize]) -> Result<Self> {
        validate_permutation(perm, self.len())?;
        Ok(self.arrange_unchecked(perm))
    }

    pub(crate) fn arrange_unchecked(&self, perm: &[usize]) -> Self {
        Self {
            a: perm.iter().map(|&p| self.a[p - 1]).collect(),
            sq: perm.iter().map(|&p| self.sq[p - 1]).collect(),
        }
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::invalid("scale", format!("{c} is not a finite nonnegative number")));
        }
        Ok(Self {
            a: self.a.iter().map(|x| c * x).collect(),
            sq: self.sq.iter().map(|s| c * c * s).collect(),
        })
    }

    /// Rotation `S(a_{k+1}, ..., a_n, a_1, ..., a_k)`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.a.rotate_left(k % self.len());
        out.sq.rotate_left(k % self.len());
        out
    }

    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.a.reverse();
        out.sq.reverse();
        out
    }

    /// Sorted copy, ascending.
    pub fn sorted(&self) -> Self {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&i, &j| self.a[i].total_cmp(&self.a[j]));
        Self {
            a: idx.iter().map(|&i| self.a[i]).collect(),
            sq: idx.iter().map(|&i| self.sq[i]).collect(),
        }
    }
}

fn check_entries(what: &'static str, v: &[f64]) -> Result<()> {
    if v.len() < 2 {
        return Err(Error::invalid(what, format!("need at least 2 entries, got {}", v.len())));
    }
    if let Some((j, x)) = v.iter().enumerate().find(|(_, x)| !(x.is_finite() && **x >= 0.0)) {
        return Err(Error::invalid(
            what,
            format!("entry {} is {x}; entries must be finite and nonnegative", j + 1),
        ));
    }
    Ok(())
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(a: Vec<f64>) -> Result<Self> {
        Self::new(a)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.a
    }
}

/// Parses `"1,2,3.5"` as weights or `"sq:0,3,4,8"` as squared weights.
impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (squared, body) = match s.trim().strip_prefix("sq:") {
            Some(rest) => (true, rest),
            None => (false, s.trim()),
        };
        let values = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::invalid("weights", format!("cannot parse {:?} as a number", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if squared {
            Self::from_squares(values)
        } else {
            Self::new(values)
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "S({})", parts.join(", "))
    }
}

/// `S(w) = e^{i phase} U S(magnitudes) U^*` for a diagonal unitary `U`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseReduction {
    pub magnitudes: WeightVector,
    /// In `[0, 2pi/n)`; zero in the disk case.
    pub phase: f64,
}

impl PhaseReduction {
    /// A nonnegative weight vector with no rotation.
    pub fn real(magnitudes: WeightVector) -> Self {
        Self { magnitudes, phase: 0.0 }
    }
}

/// Splits complex weights into magnitudes and the rotation `t` with
/// `W(S(w)) = e^{it} W(S(|w|))`.
///
/// `e^{int}` equals the phase of the product of the weights; the branch is
/// fixed by `t ∈ [0, 2pi/n)`. If any weight is zero the range is a disk and the
/// phase is reported as 0.
pub fn normalize_complex(w: &[Complex64]) -> Result<PhaseReduction> {
    let magnitudes = WeightVector::new(w.iter().map(|z| z.norm()).collect())?;
    if magnitudes.has_zero() {
        return Ok(PhaseReduction { magnitudes, phase: 0.0 });
    }
    let n = w.len() as f64;
    let total_arg = w.iter().map(|z| z.arg()).sum::<f64>().rem_euclid(TAU);
    let mut phase = total_arg / n;
    // rem_euclid may return TAU itself for tiny negative inputs.
    if phase >= TAU / n {
        phase = 0.0;
    }
    Ok(PhaseReduction { magnitudes, phase })
}

/// Rejects anything that is not a bijection on `1..=n`.
pub fn validate_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::invalid(
            "permutation",
            format!("expected {n} indices, got {}", perm.len()),
        ));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n {
            return Err(Error::invalid("permutation", format!("index {p} outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::invalid("permutation", format!("index {p} repeated")));
        }
    }
    Ok(())
}

/// Canonical representative of an arrangement under rotations and reversal:
/// the lexicographically least of the `2n` images. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DihedralClass {
    rep: Vec<usize>,
}

impl DihedralClass {
    pub fn rep(&self) -> &[usize] {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.len()
    }

    /// Builds a class from a representative already known to be canonical.
    pub(crate) fn from_canonical(rep: Vec<usize>) -> Self {
        debug_assert_eq!(canonical_form(&rep), rep);
        Self { rep }
    }

    /// Number of distinct arrangements in the orbit; divides `2n`.
    pub fn orbit_size(&self) -> usize {
        let mut images = dihedral_images(&self.rep);
        images.sort();
        images.dedup();
        images.len()
    }
}

impl fmt::Display for DihedralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rep.iter().map(|p| format!("a{p}")).collect();
        write!(f, "S({})", parts.join(","))
    }
}

fn dihedral_images(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut out = Vec::with_capacity(2 * n);
    let mut rev = perm.to_vec();
    rev.reverse();
    for base in [perm, rev.as_slice()] {
        for k in 0..n {
            let mut img = base.to_vec();
            img.rotate_left(k);
            out.push(img);
        }
    }
    out
}

fn canonical_form(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut best: Option<Vec<usize>> = None;
    let mut rev = perm.to_vec();
    rev.reverse();
    for base in [perm, rev.as_slice()] {
        for k in 0..n {
            let better = match &best {
                None => true,
                Some(b) => (0..n).map(|i| base[(i + k) % n]).lt(b.iter().copied()),
            };
            if better {
                best = Some((0..n).map(|i| base[(i + k) % n]).collect());
            }
        }
    }
    best.unwrap_or_default()
}

/// Lexicographic minimum over the rotations and reversals of `perm`.
pub fn canonical_dihedral(perm: &[usize]) -> Result<DihedralClass> {
    validate_permutation(perm, perm.len())?;
    Ok(DihedralClass {
        rep: canonical_form(perm),
    })
}

/// Increments `r_1 = a_1^2`, `r_j = a_j^2 - a_{j-1}^2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RDecomposition {
    pub r: Vec<f64>,
}

impl RDecomposition {
    /// Rebuilds the weights `a_j = sqrt(r_1 + ... + r_j)`.
    pub fn to_weights(&self) -> Result<WeightVector> {
        from_r(&self.r)
    }
}

pub fn r_decomposition(a: &WeightVector) -> RDecomposition {
    let sq = a.squares();
    let r = std::iter::once(sq[0])
        .chain(sq.windows(2).map(|w| w[1] - w[0]))
        .collect();
    RDecomposition { r }
}

/// Inverse of [`r_decomposition`]; every partial sum must be nonnegative.
pub fn from_r(r: &[f64]) -> Result<WeightVector> {
    let mut acc = 0.0;
    let mut sq = Vec::with_capacity(r.len());
    for (j, &x) in r.iter().enumerate() {
        acc += x;
        if !(acc.is_finite() && acc >= 0.0) {
            return Err(Error::invalid(
                "r-decomposition",
                format!("partial sum r_1 + ... + r_{} = {acc} is negative", j + 1),
            ));
        }
        sq.push(acc);
    }
    WeightVector::from_squares(sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn phase_of_single_imaginary_weight() {
        let red = normalize_complex(&[c(0.0, 1.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(red.magnitudes.weights(), &[1.0, 1.0, 1.0, 1.0]);
        assert!((red.phase - PI / 8.0).abs() < 1e-15);
    }

    #[test]
    fn real_weights_have_zero_phase() {
        let red = normalize_complex(&[c(2.0, 0.0), c(3.0, 0.0), c(5.0, 0.0)]).unwrap();
        assert_eq!(red.magnitudes.weights(), &[2.0, 3.0, 5.0]);
        assert_eq!(red.phase, 0.0);
    }

    #[test]
    fn zero_weight_means_disk_and_no_phase() {
        let red = normalize_complex(&[c(0.0, 1.0), c(0.0, 0.0), c(7.0, 0.0)]).unwrap();
        assert_eq!(red.magnitudes.weights(), &[1.0, 0.0, 7.0]);
        assert_eq!(red.phase, 0.0);
    }

    #[test]
    fn negative_real_product_gives_pi_over_n() {
        let red = normalize_complex(&[c(-1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((red.phase - PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_dihedral(&[4, 2, 1, 3, 5, 6]).unwrap();
        assert_eq!(c, canonical_dihedral(&[1, 3, 5, 6, 4, 2]).unwrap());
        assert_eq!(c.rep(), &[1, 2, 4, 6, 5, 3]);
        assert_eq!(canonical_dihedral(&[1, 2, 3, 4]).unwrap().rep(), &[1, 2, 3, 4]);
        assert_eq!(canonical_dihedral(&[5, 4, 3, 2, 1]).unwrap().rep(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn canonical_matches_brute_orbit_minimum() {
        let p = [4, 2, 1, 3, 5, 6];
        let brute = dihedral_images(&p).into_iter().min().unwrap();
        assert_eq!(canonical_dihedral(&p).unwrap().rep(), brute.as_slice());
    }

    #[test]
    fn malformed_permutations_rejected() {
        assert!(canonical_dihedral(&[1, 2, 2]).is_err());
        assert!(canonical_dihedral(&[0, 1, 2]).is_err());
        assert!(canonical_dihedral(&[1, 2, 4]).is_err());
    }

    #[test]
    fn r_decomposition_examples() {
        let a = WeightVector::from_squares(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(r_decomposition(&a).r, vec![1.0; 6]);

        let a = WeightVector::from_squares(vec![0.0, 3.0, 4.0, 8.0, 13.0, 30.0]).unwrap();
        assert_eq!(r_decomposition(&a).r, vec![0.0, 3.0, 1.0, 4.0, 5.0, 17.0]);

        assert!(from_r(&[1.0, -2.0, 1.0]).is_err());
    }

    #[test]
    fn parse_plain_and_squared() {
        let w: WeightVector = "3, 1".parse().unwrap();
        assert_eq!(w.weights(), &[3.0, 1.0]);
        let w: WeightVector = "sq:0,3,4,8,13,30".parse().unwrap();
        assert_eq!(w.squares(), &[0.0, 3.0, 4.0, 8.0, 13.0, 30.0]);
        assert!("1,x".parse::<WeightVector>().is_err());
        assert!("1".parse::<WeightVector>().is_err());
        assert!("1,-1".parse::<WeightVector>().is_err());
    }

    #[test]
    fn product_positive_iff_no_zero() {
        let w = WeightVector::new(vec![1.0, 0.0, 2.0]).unwrap();
        assert_eq!(w.product(), 0.0);
        assert!(w.has_zero());
        let w = WeightVector::new(vec![1.0, 0.5, 2.0]).unwrap();
        assert!(w.product() > 0.0);
    }
}
