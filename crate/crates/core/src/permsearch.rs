//! Weight arrangements up to rotation and reversal: enumeration, cyclic sums,
//! the ten families of the 6-cycle, and searches for arrangements whose
//! numerical range contains (or is contained in) every other one.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::{build_family, CharPolyFamily};
use crate::error::{Error, Result};
use crate::inclusion::{chebyshev_grid, includes_closed_form, profile_margin, InclusionOptions, VerdictKind};
use crate::spectra::{family_root, support_curve};
use crate::weights::{canonical_dihedral, r_decomposition, DihedralClass, WeightVector};

pub const MAX_ENUMERATION_N: usize = 10;

/// Arrangement labels `S(1)..S(12)` for five weights, as index lists.
pub const N5_LABELS: [[usize; 5]; 12] = [
    [3, 5, 4, 2, 1],
    [3, 5, 4, 1, 2],
    [2, 5, 4, 1, 3],
    [2, 5, 4, 3, 1],
    [2, 5, 3, 4, 1],
    [2, 5, 3, 1, 4],
    [1, 5, 4, 3, 2],
    [1, 5, 4, 2, 3],
    [1, 5, 3, 4, 2],
    [1, 5, 3, 2, 4],
    [1, 5, 2, 4, 3],
    [1, 5, 2, 3, 4],
];

/// Arrangement labels `S(1)..S(60)` for six weights, as index lists.
pub const N6_LABELS: [[usize; 6]; 60] = [
    [1, 2, 3, 4, 5, 6],
    [1, 2, 4, 3, 5, 6],
    [1, 3, 2, 4, 5, 6],
    [1, 3, 4, 2, 5, 6],
    [1, 4, 2, 3, 5, 6],
    [1, 4, 3, 2, 5, 6],
    [2, 1, 3, 4, 5, 6],
    [2, 1, 4, 3, 5, 6],
    [2, 3, 1, 4, 5, 6],
    [2, 3, 4, 1, 5, 6],
    [2, 4, 1, 3, 5, 6],
    [2, 4, 3, 1, 5, 6],
    [3, 1, 2, 4, 5, 6],
    [3, 1, 4, 2, 5, 6],
    [3, 2, 1, 4, 5, 6],
    [3, 2, 4, 1, 5, 6],
    [3, 4, 1, 2, 5, 6],
    [3, 4, 2, 1, 5, 6],
    [4, 1, 2, 3, 5, 6],
    [4, 1, 3, 2, 5, 6],
    [4, 2, 1, 3, 5, 6],
    [4, 2, 3, 1, 5, 6],
    [4, 3, 1, 2, 5, 6],
    [4, 3, 2, 1, 5, 6],
    [1, 2, 3, 5, 4, 6],
    [1, 2, 5, 3, 4, 6],
    [1, 3, 2, 5, 4, 6],
    [1, 3, 5, 2, 4, 6],
    [1, 5, 2, 3, 4, 6],
    [1, 5, 3, 2, 4, 6],
    [2, 1, 3, 5, 4, 6],
    [2, 1, 5, 3, 4, 6],
    [2, 3, 1, 5, 4, 6],
    [2, 3, 5, 1, 4, 6],
    [2, 5, 1, 3, 4, 6],
    [2, 5, 3, 1, 4, 6],
    [3, 1, 2, 5, 4, 6],
    [3, 1, 5, 2, 4, 6],
    [3, 2, 1, 5, 4, 6],
    [3, 2, 5, 1, 4, 6],
    [3, 5, 1, 2, 4, 6],
    [3, 5, 2, 1, 4, 6],
    [3, 5, 4, 1, 2, 6],
    [2, 1, 5, 4, 3, 6],
    [2, 4, 1, 5, 3, 6],
    [2, 4, 5, 1, 3, 6],
    [2, 5, 1, 4, 3, 6],
    [2, 5, 4, 1, 3, 6],
    [1, 3, 4, 5, 2, 6],
    [1, 3, 5, 4, 2, 6],
    [1, 4, 3, 5, 2, 6],
    [1, 4, 5, 3, 2, 6],
    [1, 5, 3, 4, 2, 6],
    [1, 5, 4, 3, 2, 6],
    [1, 2, 4, 5, 3, 6],
    [1, 2, 5, 4, 3, 6],
    [1, 4, 2, 5, 3, 6],
    [1, 4, 5, 2, 3, 6],
    [1, 5, 2, 4, 3, 6],
    [1, 5, 4, 2, 3, 6],
];

/// The ten families of the 6-cycle: label, the 3-set of weight indices on the
/// alternate positions containing index 6, and the family head (the member
/// with the largest cyclic sum for ascending weights).
pub const N6_FAMILIES: [(&str, [usize; 3], usize); 10] = [
    ("I", [2, 3, 6], 21),
    ("II", [4, 5, 6], 45),
    ("III", [2, 4, 6], 15),
    ("IV", [3, 4, 6], 9),
    ("V", [1, 4, 6], 13),
    ("VI", [1, 3, 6], 19),
    ("VII", [1, 2, 6], 20),
    ("VIII", [2, 5, 6], 39),
    ("IX", [3, 5, 6], 33),
    ("X", [1, 5, 6], 37),
];

fn label_index(n: usize) -> Option<&'static HashMap<DihedralClass, usize>> {
    static N5: OnceLock<HashMap<DihedralClass, usize>> = OnceLock::new();
    static N6: OnceLock<HashMap<DihedralClass, usize>> = OnceLock::new();
    fn build(rows: &[&[usize]]) -> HashMap<DihedralClass, usize> {
        rows.iter()
            .enumerate()
            .map(|(i, p)| (canonical_dihedral(p).expect("table rows are permutations"), i + 1))
            .collect()
    }
    match n {
        5 => Some(N5.get_or_init(|| build(&N5_LABELS.iter().map(|r| r.as_slice()).collect::<Vec<_>>()))),
        6 => Some(N6.get_or_init(|| build(&N6_LABELS.iter().map(|r| r.as_slice()).collect::<Vec<_>>()))),
        _ => None,
    }
}

/// Label `j` of `S(j)` in the numbered lists for five and six weights.
pub fn class_label(class: &DihedralClass) -> Option<usize> {
    label_index(class.n())?.get(class).copied()
}

/// The class carrying label `j` for `n` in {5, 6}.
pub fn labeled_class(n: usize, j: usize) -> Option<DihedralClass> {
    let row: &[usize] = match n {
        5 => N5_LABELS.get(j.checked_sub(1)?)?,
        6 => N6_LABELS.get(j.checked_sub(1)?)?,
        _ => return None,
    };
    canonical_dihedral(row).ok()
}

/// Family of a 6-cycle arrangement, keyed by which weights share parity of
/// position with weight 6.
pub fn family_of(class: &DihedralClass) -> Option<&'static str> {
    if class.n() != 6 {
        return None;
    }
    let rep = class.rep();
    let pos6 = rep.iter().position(|&p| p == 6)?;
    let mut key: Vec<usize> = rep
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 2 == pos6 % 2)
        .map(|(_, &p)| p)
        .collect();
    key.sort_unstable();
    N6_FAMILIES.iter().find(|f| f.1.as_slice() == key).map(|f| f.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub label: String,
    pub key: [usize; 3],
    pub head: usize,
    pub members: Vec<DihedralClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassTable {
    pub n: usize,
    pub classes: Vec<DihedralClass>,
    /// Only for `n = 6`.
    pub families: Option<Vec<FamilyInfo>>,
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("a larger element exists right of i");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Canonical representatives in lexicographic order: `1` first, then every
/// ordering of `2..=n` whose second entry is below its last.
fn canonical_reps(n: usize) -> Vec<DihedralClass> {
    if n == 2 {
        return vec![DihedralClass::from_canonical(vec![1, 2])];
    }
    let mut rest: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    loop {
        if rest[0] < rest[n - 2] {
            let mut rep = Vec::with_capacity(n);
            rep.push(1);
            rep.extend_from_slice(&rest);
            out.push(DihedralClass::from_canonical(rep));
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn check_enum_n(n: usize) -> Result<()> {
    if !(3..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::invalid(
            "n",
            format!("{n} is outside the enumerable range 3..={MAX_ENUMERATION_N}"),
        ));
    }
    Ok(())
}

pub fn enumerate_classes(n: usize) -> Result<ClassTable> {
    check_enum_n(n)?;
    let classes = canonical_reps(n);
    let families = (n == 6).then(|| {
        N6_FAMILIES
            .iter()
            .map(|&(label, key, head)| FamilyInfo {
                label: label.to_string(),
                key,
                head,
                members: classes.iter().filter(|c| family_of(c) == Some(label)).cloned().collect(),
            })
            .collect()
    });
    Ok(ClassTable { n, classes, families })
}

/// Reduces all `n!` orderings through [`canonical_dihedral`] in parallel.
/// Same output as [`enumerate_classes`]; used to cross-check it.
pub fn enumerate_classes_brute(n: usize) -> Result<Vec<DihedralClass>> {
    check_enum_n(n)?;
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let mut classes: Vec<DihedralClass> = perms
        .par_iter()
        .map(|p| canonical_dihedral(p).expect("generated permutations are valid"))
        .collect();
    classes.par_sort_unstable();
    classes.dedup();
    Ok(classes)
}

fn check_class(a: &WeightVector, class: &DihedralClass) -> Result<()> {
    if class.n() != a.len() {
        return Err(Error::invalid(
            "class",
            format!("{} has {} indices but there are {} weights", class, class.n(), a.len()),
        ));
    }
    Ok(())
}

/// `sum_i a_{s(i)}^2 a_{s(i+1)}^2` around the cycle.
pub fn cyclic_sum(a: &WeightVector, class: &DihedralClass) -> Result<f64> {
    check_class(a, class)?;
    Ok(cyclic_sum_of(a.squares(), class.rep()))
}

fn cyclic_sum_of(sq: &[f64], perm: &[usize]) -> f64 {
    let n = perm.len();
    (0..n).map(|i| sq[perm[i] - 1] * sq[perm[(i + 1) % n] - 1]).sum()
}

/// `prod_{odd i} a_{s(i)}^2 + prod_{even i} a_{s(i)}^2` for even `n`.
pub fn alternating_products(a: &WeightVector, class: &DihedralClass) -> Result<f64> {
    check_class(a, class)?;
    Ok(alternating_products_of(a.squares(), class.rep()))
}

fn alternating_products_of(sq: &[f64], perm: &[usize]) -> f64 {
    let odd: f64 = perm.iter().step_by(2).map(|&p| sq[p - 1]).product();
    let even: f64 = perm.iter().skip(1).step_by(2).map(|&p| sq[p - 1]).product();
    odd + even
}

/// `S(a_{s(1)}, ..., a_{s(n)})` for a class representative `s`.
pub fn arrangement(a: &WeightVector, class: &DihedralClass) -> Result<WeightVector> {
    a.arrange(class.rep())
}

/// Odd indices ascending, then even indices descending: `(1, 3, 5, ..., 6, 4, 2)`.
pub fn conjectured_max_pattern(n: usize) -> Vec<usize> {
    let odd = (1..n + 1).step_by(2);
    let even = (2..n + 1).step_by(2).rev();
    odd.chain(even).collect()
}

// ---------------------------------------------------------------------------
// Extremal search

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Grid,
    /// Closed-form inclusion checks, for `3 <= n <= 6`.
    Certified,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ExtremeOutcome {
    Found {
        class: DihedralClass,
        /// Other classes with the same support profile within tolerance.
        ties: Vec<DihedralClass>,
        /// Smallest gap to a non-tied class; `0` when every class is tied.
        margin: f64,
    },
    NoTotalOptimum {
        /// Classes attaining the envelope at some grid point.
        frontier: Vec<DihedralClass>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremeReport {
    pub n: usize,
    pub direction: Direction,
    pub method: SearchMethod,
    pub outcome: ExtremeOutcome,
    pub classes_checked: usize,
    pub grid_size: usize,
    pub tolerance: f64,
    /// Pairs the closed forms could not decide, settled on the grid instead.
    pub grid_fallback: Vec<DihedralClass>,
}

impl ExtremeReport {
    pub fn found(&self) -> Option<&DihedralClass> {
        match &self.outcome {
            ExtremeOutcome::Found { class, .. } => Some(class),
            ExtremeOutcome::NoTotalOptimum { .. } => None,
        }
    }
}

fn check_search_weights(a: &WeightVector) -> Result<()> {
    if !a.is_ascending() {
        return Err(Error::invalid("weights", format!("{a} must be sorted ascending")));
    }
    if a.has_zero() {
        return Err(Error::invalid("weights", format!("{a} must be strictly positive")));
    }
    Ok(())
}

fn classes_for(n: usize) -> Result<Vec<DihedralClass>> {
    if n == 2 {
        return Ok(canonical_reps(2));
    }
    Ok(enumerate_classes(n)?.classes)
}

struct ClassCurves<'a> {
    a: &'a WeightVector,
    ts: Vec<f64>,
}

impl ClassCurves<'_> {
    fn family(&self, c: &DihedralClass) -> CharPolyFamily {
        build_family(&self.a.arrange_unchecked(c.rep()))
    }

    fn curve(&self, c: &DihedralClass) -> Vec<f64> {
        support_curve(&self.family(c), &self.ts)
    }
}

pub fn find_extreme(a: &WeightVector, direction: Direction, method: SearchMethod) -> Result<ExtremeReport> {
    find_extreme_with(a, direction, method, &InclusionOptions::default())
}

pub fn find_extreme_with(
    a: &WeightVector,
    direction: Direction,
    method: SearchMethod,
    opts: &InclusionOptions,
) -> Result<ExtremeReport> {
    check_search_weights(a)?;
    match method {
        SearchMethod::Grid => find_extreme_grid(a, direction, opts),
        SearchMethod::Certified => find_extreme_certified(a, direction, opts),
    }
}

fn find_extreme_grid(a: &WeightVector, direction: Direction, opts: &InclusionOptions) -> Result<ExtremeReport> {
    if opts.grid_size < 3 {
        return Err(Error::invalid("grid size", format!("{} is below the minimum of 3", opts.grid_size)));
    }
    let n = a.len();
    let classes = classes_for(n)?;
    let cc = ClassCurves {
        a,
        ts: chebyshev_grid(opts.grid_size),
    };
    let sign = match direction {
        Direction::Max => 1.0,
        Direction::Min => -1.0,
    };
    let m = cc.ts.len();
    // Pass 1: pointwise envelope of sign * z.
    let envelope = classes
        .par_iter()
        .map(|c| cc.curve(c).into_iter().map(|z| sign * z).collect::<Vec<_>>())
        .reduce(
            || vec![f64::NEG_INFINITY; m],
            |mut x, y| {
                x.iter_mut().zip(&y).for_each(|(u, v)| *u = u.max(*v));
                x
            },
        );
    let scale = 0.5 * envelope.iter().fold(0.0_f64, |s, v| s.max(v.abs()));
    let tol = opts.tol.unwrap_or(1e-9 * (1.0 + scale));
    // Pass 2: which classes reach the envelope everywhere / somewhere.
    let status: Vec<(bool, bool)> = classes
        .par_iter()
        .map(|c| {
            let z = cc.curve(c);
            let gaps = z.iter().zip(&envelope).map(|(zi, e)| 0.5 * (e - sign * zi));
            let (mut all, mut any) = (true, false);
            for g in gaps {
                let on = g <= tol;
                all &= on;
                any |= on;
            }
            (all, any)
        })
        .collect();
    let winners: Vec<usize> = (0..classes.len()).filter(|&i| status[i].0).collect();
    let outcome = if let Some(&first) = winners.first() {
        let wc = cc.curve(&classes[first]);
        // Pass 3: gap to the best non-tied class.
        let margin = classes
            .par_iter()
            .enumerate()
            .filter(|(i, _)| !winners.contains(i))
            .map(|(_, c)| {
                cc.curve(c)
                    .iter()
                    .zip(&wc)
                    .map(|(z, w)| 0.5 * sign * (w - z))
                    .fold(f64::INFINITY, f64::min)
            })
            .reduce(|| f64::INFINITY, f64::min);
        ExtremeOutcome::Found {
            class: classes[first].clone(),
            ties: winners[1..].iter().map(|&i| classes[i].clone()).collect(),
            margin: if margin.is_finite() { margin } else { 0.0 },
        }
    } else {
        ExtremeOutcome::NoTotalOptimum {
            frontier: (0..classes.len()).filter(|&i| status[i].1).map(|i| classes[i].clone()).collect(),
        }
    };
    Ok(ExtremeReport {
        n,
        direction,
        method: SearchMethod::Grid,
        outcome,
        classes_checked: classes.len(),
        grid_size: opts.grid_size,
        tolerance: tol,
        grid_fallback: Vec::new(),
    })
}

/// Ranks classes by the `z^{n-4}` coefficient of `f` (the cyclic-sum
/// comparator) and confirms the top candidate with closed-form inclusions.
fn find_extreme_certified(a: &WeightVector, direction: Direction, opts: &InclusionOptions) -> Result<ExtremeReport> {
    let n = a.len();
    if !(3..=6).contains(&n) {
        return Err(Error::UnsupportedSize(n));
    }
    let classes = classes_for(n)?;
    let families: Vec<CharPolyFamily> = classes.iter().map(|c| build_family(&a.arrange_unchecked(c.rep()))).collect();
    let key = |f: &CharPolyFamily| if n >= 4 { f.coefficient(n - 4) } else { 0.0 };
    let pick = (0..classes.len())
        .min_by(|&i, &j| {
            let (ki, kj) = (key(&families[i]), key(&families[j]));
            match direction {
                Direction::Max => ki.total_cmp(&kj),
                Direction::Min => kj.total_cmp(&ki),
            }
        })
        .unwrap_or(0);
    let cand = a.arrange_unchecked(classes[pick].rep());
    let mut fallback = Vec::new();
    let mut ties = Vec::new();
    let mut margin = f64::INFINITY;
    let mut tol: f64 = 0.0;
    for (i, c) in classes.iter().enumerate() {
        if i == pick {
            continue;
        }
        let other = a.arrange_unchecked(c.rep());
        let (outer, inner) = match direction {
            Direction::Max => (&cand, &other),
            Direction::Min => (&other, &cand),
        };
        let mut v = includes_closed_form(outer, inner)?;
        if v.kind == VerdictKind::Indeterminate {
            fallback.push(c.clone());
            v = crate::inclusion::includes_general_with(outer, inner, opts)?;
        }
        tol = tol.max(v.tolerance);
        match v.kind {
            VerdictKind::Included => {
                if families[i].max_relative_difference(&families[pick]) <= 1e-12 {
                    ties.push(c.clone());
                } else {
                    margin = margin.min(v.margin);
                }
            }
            _ => return find_extreme_grid(a, direction, opts),
        }
    }
    Ok(ExtremeReport {
        n,
        direction,
        method: SearchMethod::Certified,
        outcome: ExtremeOutcome::Found {
            class: classes[pick].clone(),
            ties,
            margin: if margin.is_finite() { margin } else { 0.0 },
        },
        classes_checked: classes.len(),
        grid_size: opts.grid_size,
        tolerance: tol,
        grid_fallback: fallback,
    })
}

// ---------------------------------------------------------------------------
// Conjectured maximizer

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub weights: WeightVector,
    pub pattern: DihedralClass,
    pub pass: bool,
    /// Smallest margin of the pattern over any other class.
    pub worst_margin: f64,
    pub worst_class: DihedralClass,
    /// `t` where the worst margin occurs.
    pub worst_t: f64,
    pub classes_checked: usize,
    pub failures: Vec<DihedralClass>,
    pub tolerance: f64,
}

/// Checks that the arrangement `(1, 3, 5, ..., 6, 4, 2)` of the sorted weights
/// has a numerical range containing that of every other arrangement.
pub fn verify_conjecture1(a: &WeightVector) -> Result<ConjectureReport> {
    verify_conjecture1_with(a, &InclusionOptions::default())
}

pub fn verify_conjecture1_with(a: &WeightVector, opts: &InclusionOptions) -> Result<ConjectureReport> {
    if opts.grid_size < 3 {
        return Err(Error::invalid("grid size", format!("{} is below the minimum of 3", opts.grid_size)));
    }
    let a = a.sorted();
    let n = a.len();
    let classes = classes_for(n)?;
    let pattern = canonical_dihedral(&conjectured_max_pattern(n))?;
    let cc = ClassCurves {
        a: &a,
        ts: chebyshev_grid(opts.grid_size),
    };
    let fp = cc.family(&pattern);
    let zp = support_curve(&fp, &cc.ts);
    let tol = opts.tol.unwrap_or(1e-9 * (1.0 + 0.5 * zp[0]));
    let results: Vec<(f64, f64)> = classes
        .par_iter()
        .map(|c| {
            if *c == pattern {
                return (f64::INFINITY, 1.0);
            }
            let fc = cc.family(c);
            let zc = support_curve(&fc, &cc.ts);
            let (t, m) = profile_margin(&fp, &fc, &cc.ts, &zp, &zc, opts.refine_rounds);
            (m, t)
        })
        .collect();
    let mut worst = (0.0, 1.0, pattern.clone());
    let mut first = true;
    for (c, &(m, t)) in classes.iter().zip(&results) {
        if m.is_finite() && (first || m < worst.0) {
            worst = (m, t, c.clone());
            first = false;
        }
    }
    let failures: Vec<DihedralClass> = classes
        .iter()
        .zip(&results)
        .filter(|(_, (m, _))| *m < -tol || m.is_nan())
        .map(|(c, _)| c.clone())
        .collect();
    Ok(ConjectureReport {
        n,
        pass: failures.is_empty(),
        weights: a.clone(),
        pattern,
        worst_margin: worst.0,
        worst_class: worst.2,
        worst_t: worst.1,
        classes_checked: classes.len(),
        failures,
        tolerance: tol,
    })
}

// ---------------------------------------------------------------------------
// Cyclic-sum identities for six weights

/// Increments indexed `r[1]..r[6]`; `r[0]` is unused.
pub type R6 = [f64; 7];

fn s(r: &R6, i: usize, j: usize) -> f64 {
    r[i..=j].iter().sum()
}

/// `S(hi) - S(lo)` as a polynomial in the increments.
#[derive(Clone, Copy)]
pub struct Relation {
    pub hi: usize,
    pub lo: usize,
    pub formula: &'static str,
    pub eval: fn(&R6) -> f64,
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({}) - S({}) = {}", self.hi, self.lo, self.formula)
    }
}

macro_rules! rel {
    ($hi:expr, $lo:expr, $text:expr, |$r:ident| $body:expr) => {
        Relation {
            hi: $hi,
            lo: $lo,
            formula: $text,
            eval: |$r: &R6| $body,
        }
    };
}

/// Within-family differences for the ten families followed by the four
/// chains between family heads.
pub const N6_RELATIONS: [Relation; 61] = [
    rel!(21, 2, "(r2+r3+r4)(r4+r5+r6)", |r| s(r, 2, 4) * s(r, 4, 6)),
    rel!(21, 4, "r3(r2+r3+r4+r5) + (r2+r3+r4)(r4+r5+r6)", |r| r[3] * s(r, 2, 5) + s(r, 2, 4) * s(r, 4, 6)),
    rel!(21, 23, "r3r5", |r| r[3] * r[5]),
    rel!(21, 26, "r5(r3+r4+r5+r6) + (r2+r3+r4)(r4+r5+r6)", |r| r[5] * s(r, 3, 6) + s(r, 2, 4) * s(r, 4, 6)),
    rel!(21, 28, "(r2+r3+r4+r5)(r3+r4+r5+r6)", |r| s(r, 2, 5) * s(r, 3, 6)),
    rel!(45, 47, "r3r5", |r| r[3] * r[5]),
    rel!(45, 51, "r3r5 + (r2+r3)r6", |r| r[3] * r[5] + s(r, 2, 3) * r[6]),
    rel!(45, 53, "(r2+r3)(r5+r6)", |r| s(r, 2, 3) * s(r, 5, 6)),
    rel!(45, 57, "r2r6", |r| r[2] * r[6]),
    rel!(45, 59, "(r2+r3)r5 + r2r6", |r| s(r, 2, 3) * r[5] + r[2] * r[6]),
    rel!(15, 1, "(r2+r3)(r5+r6)", |r| s(r, 2, 3) * s(r, 5, 6)),
    rel!(15, 6, "(r2+r3)(r5+r6) + (r3+r4)(r2+r3+r4+r5)", |r| s(r, 2, 3) * s(r, 5, 6) + s(r, 3, 4) * s(r, 2, 5)),
    rel!(15, 17, "(r3+r4)(r4+r5)", |r| s(r, 3, 4) * s(r, 4, 5)),
    rel!(15, 56, "(r3+r4)(r4+r5) + (r2+r3+r4+r5)(r5+r6)", |r| s(r, 3, 4) * s(r, 4, 5) + s(r, 2, 5) * s(r, 5, 6)),
    rel!(15, 58, "(r2+r3+r4+r5)(r3+r4+r5+r6)", |r| s(r, 2, 5) * s(r, 3, 6)),
    rel!(9, 3, "r2(r5+r6)", |r| r[2] * s(r, 5, 6)),
    rel!(9, 5, "r2(r5+r6) + r4(r2+r3+r4+r5)", |r| r[2] * s(r, 5, 6) + r[4] * s(r, 2, 5)),
    rel!(9, 11, "r4(r3+r4+r5)", |r| r[4] * s(r, 3, 5)),
    rel!(9, 50, "r4(r3+r4+r5) + (r5+r6)(r2+r3+r4+r5)", |r| r[4] * s(r, 3, 5) + s(r, 5, 6) * s(r, 2, 5)),
    rel!(9, 52, "(r4+r5+r6)(r2+r3+r4+r5)", |r| s(r, 4, 6) * s(r, 2, 5)),
    rel!(13, 7, "r3(r5+r6)", |r| r[3] * s(r, 5, 6)),
    rel!(13, 12, "r3(r5+r6) + (r2+r3+r4)(r3+r4+r5)", |r| r[3] * s(r, 5, 6) + s(r, 2, 4) * s(r, 3, 5)),
    rel!(13, 18, "(r4+r5)(r2+r3+r4)", |r| s(r, 4, 5) * s(r, 2, 4)),
    rel!(13, 44, "(r4+r5)(r2+r3+r4) + (r5+r6)(r3+r4+r5)", |r| s(r, 4, 5) * s(r, 2, 4) + s(r, 5, 6) * s(r, 3, 5)),
    rel!(13, 46, "(r3+r4+r5)(r2+r3+r4+r5+r6)", |r| s(r, 3, 5) * s(r, 2, 6)),
    rel!(19, 8, "(r3+r4)(r4+r5+r6)", |r| s(r, 3, 4) * s(r, 4, 6)),
    rel!(19, 10, "(r2+r3)(r3+r4+r5) + (r3+r4)(r4+r5+r6)", |r| s(r, 2, 3) * s(r, 3, 5) + s(r, 3, 4) * s(r, 4, 6)),
    rel!(19, 24, "r5(r2+r3)", |r| r[5] * s(r, 2, 3)),
    rel!(19, 32, "r5(r2+r3) + (r3+r4+r5)(r4+r5+r6)", |r| r[5] * s(r, 2, 3) + s(r, 3, 5) * s(r, 4, 6)),
    rel!(19, 34, "(r3+r4+r5)(r2+r3+r4+r5+r6)", |r| s(r, 3, 5) * s(r, 2, 6)),
    rel!(20, 14, "r4(r3+r4+r5+r6)", |r| r[4] * s(r, 3, 6)),
    rel!(20, 16, "r2(r4+r5) + r4(r3+r4+r5+r6)", |r| r[2] * s(r, 4, 5) + r[4] * s(r, 3, 6)),
    rel!(20, 22, "r2r5", |r| r[2] * r[5]),
    rel!(20, 38, "r4(r3+r4+r5+r6) + r5(r2+r3+r4+r5+r6)", |r| r[4] * s(r, 3, 6) + r[5] * s(r, 2, 6)),
    rel!(20, 40, "(r4+r5)(r2+r3+r4+r5+r6)", |r| s(r, 4, 5) * s(r, 2, 6)),
    rel!(39, 25, "r6(r2+r3)", |r| r[6] * s(r, 2, 3)),
    rel!(39, 30, "r6(r2+r3) + (r2+r3+r4)(r3+r4+r5)", |r| r[6] * s(r, 2, 3) + s(r, 2, 4) * s(r, 3, 5)),
    rel!(39, 41, "r4(r3+r4+r5)", |r| r[4] * s(r, 3, 5)),
    rel!(39, 55, "r4(r3+r4+r5) + r6(r2+r3+r4)", |r| r[4] * s(r, 3, 5) + r[6] * s(r, 2, 4)),
    rel!(39, 60, "(r2+r3+r4)(r3+r4+r5+r6)", |r| s(r, 2, 4) * s(r, 3, 6)),
    rel!(33, 27, "r2r6", |r| r[2] * r[6]),
    rel!(33, 29, "r2(r4+r5+r6) + (r3+r4)(r4+r5)", |r| r[2] * s(r, 4, 6) + s(r, 3, 4) * s(r, 4, 5)),
    rel!(33, 35, "(r3+r4)(r4+r5)", |r| s(r, 3, 4) * s(r, 4, 5)),
    rel!(33, 49, "(r3+r4)(r4+r5) + r6(r2+r3+r4)", |r| s(r, 3, 4) * s(r, 4, 5) + r[6] * s(r, 2, 4)),
    rel!(33, 54, "(r2+r3+r4)(r4+r5+r6)", |r| s(r, 2, 4) * s(r, 4, 6)),
    rel!(37, 31, "r3r6", |r| r[3] * r[6]),
    rel!(37, 36, "r3r6 + (r3+r4)(r2+r3+r4+r5)", |r| r[3] * r[6] + s(r, 3, 4) * s(r, 2, 5)),
    rel!(37, 42, "r4(r2+r3+r4+r5)", |r| r[4] * s(r, 2, 5)),
    rel!(37, 43, "r3r6 + r4(r2+r3+r4+r5+r6)", |r| r[3] * r[6] + r[4] * s(r, 2, 6)),
    rel!(37, 48, "(r3+r4)(r2+r3+r4+r5+r6)", |r| s(r, 3, 4) * s(r, 2, 6)),
    // (a) 45 <= 33 <= 37 <= 13 <= 21
    rel!(33, 45, "r4(r2+2r3+2r4+2r5+r6)", |r| r[4] * (r[2] + 2.0 * r[3] + 2.0 * r[4] + 2.0 * r[5] + r[6])),
    rel!(37, 33, "r2(r4+r5) + r3(r2+r3+r4+r5+r6)", |r| r[2] * s(r, 4, 5) + r[3] * s(r, 2, 6)),
    rel!(13, 37, "r5(r3+r4+r5+r6)", |r| r[5] * s(r, 3, 6)),
    rel!(21, 13, "r4r6", |r| r[4] * r[6]),
    // (b) 33 <= 20 <= 19 <= 21
    rel!(20, 33, "r5(r2+r3+r4+r5) + r6(r3+r4+r5)", |r| r[5] * s(r, 2, 5) + r[6] * s(r, 3, 5)),
    rel!(19, 20, "r3(r2+r3+r4+r5)", |r| r[3] * s(r, 2, 5)),
    rel!(21, 19, "r2r4", |r| r[2] * r[4]),
    // (c) 33 <= 39 <= 19
    rel!(39, 33, "r3(r2+r3+r4+r5+r6)", |r| r[3] * s(r, 2, 6)),
    rel!(19, 39, "r4r6 + r5(r2+r3+r4+r5+r6)", |r| r[4] * r[6] + r[5] * s(r, 2, 6)),
    // (d) 9 <= 15 <= 13
    rel!(15, 9, "r3(r2+r3+r4+r5+r6)", |r| r[3] * s(r, 2, 6)),
    rel!(13, 15, "r2r4", |r| r[2] * r[4]),
];

/// Differences of cyclic sums between the five-weight arrangements.
pub const N5_RELATIONS: [Relation; 14] = [
    rel!(1, 2, "r2r4", |r| r[2] * r[4]),
    rel!(2, 3, "r3(r2+r3+r4+r5)", |r| r[3] * s(r, 2, 5)),
    rel!(3, 8, "r2r5", |r| r[2] * r[5]),
    rel!(8, 10, "r4(r2+r3+r4+r5)", |r| r[4] * s(r, 2, 5)),
    rel!(10, 12, "r3r5", |r| r[3] * r[5]),
    rel!(5, 6, "r3(r2+r3+r4)", |r| r[3] * s(r, 2, 4)),
    rel!(1, 4, "r3r5", |r| r[3] * r[5]),
    rel!(4, 7, "r2(r4+r5)", |r| r[2] * s(r, 4, 5)),
    rel!(7, 8, "r3(r2+r3+r4)", |r| r[3] * s(r, 2, 4)),
    rel!(4, 5, "r4(r2+r3+r4+r5)", |r| r[4] * s(r, 2, 5)),
    rel!(5, 9, "r2r5", |r| r[2] * r[5]),
    rel!(9, 11, "r3(r2+r3+r4+r5)", |r| r[3] * s(r, 2, 5)),
    rel!(11, 12, "r2r4", |r| r[2] * r[4]),
    rel!(6, 10, "r2(r4+r5)", |r| r[2] * s(r, 4, 5)),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub hi: usize,
    pub lo: usize,
    pub formula: String,
    /// `S(hi) - S(lo)` from the weights.
    pub difference: f64,
    /// The formula evaluated at the increments.
    pub formula_value: f64,
    pub relative_error: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassSums {
    pub label: usize,
    pub class: DihedralClass,
    pub family: Option<String>,
    pub cyclic_sum: f64,
    pub product_term: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclicSumReport {
    pub per_class: Vec<ClassSums>,
    /// Edges `S(hi) >= S(lo)` with their difference formulas.
    pub relations: Vec<RelationCheck>,
    pub max_relative_error: f64,
    pub all_hold: bool,
}

fn to_r6(r: &[f64]) -> R6 {
    let mut out = [0.0; 7];
    out[1..=r.len().min(6)].copy_from_slice(&r[..r.len().min(6)]);
    out
}

/// Checks every relation against cyclic sums of the labeled arrangements of
/// the squared weights `sq` (ascending) with increments `r`.
pub fn check_relations(sq: &[f64], r: &[f64], rel_tol: f64) -> Vec<RelationCheck> {
    let n = sq.len();
    let (labels, relations): (&[&[usize]], &[Relation]) = match n {
        5 => (&N5_ROWS, &N5_RELATIONS),
        6 => (&N6_ROWS, &N6_RELATIONS),
        _ => return Vec::new(),
    };
    let cyc: Vec<f64> = labels.iter().map(|p| cyclic_sum_of(sq, p)).collect();
    let scale = cyc.iter().fold(1.0_f64, |m, c| m.max(c.abs()));
    let r6 = to_r6(r);
    relations
        .iter()
        .map(|rel| {
            let difference = cyc[rel.hi - 1] - cyc[rel.lo - 1];
            let formula_value = (rel.eval)(&r6);
            let relative_error = (difference - formula_value).abs() / scale;
            RelationCheck {
                hi: rel.hi,
                lo: rel.lo,
                formula: rel.formula.to_string(),
                difference,
                formula_value,
                relative_error,
                holds: relative_error <= rel_tol,
            }
        })
        .collect()
}

const N5_ROWS: [&[usize]; 12] = {
    let mut out: [&[usize]; 12] = [&[]; 12];
    let mut i = 0;
    while i < 12 {
        out[i] = &N5_LABELS[i];
        i += 1;
    }
    out
};

const N6_ROWS: [&[usize]; 60] = {
    let mut out: [&[usize]; 60] = [&[]; 60];
    let mut i = 0;
    while i < 60 {
        out[i] = &N6_LABELS[i];
        i += 1;
    }
    out
};

/// `X(j)` in closed form for the nine family heads other than 21.
pub fn x_closed_form(j: usize, r: &R6) -> Option<f64> {
    let v = match j {
        13 => (r[1] * r[4] - r[2] * s(r, 1, 3)) / r[4],
        33 => {
            (r[1] * r[2] + r[2] * r[2] + r[1] * r[3] + 2.0 * r[2] * r[3] + r[3] * r[3] + r[2] * r[4] + r[3] * r[4]
                + s(r, 1, 3) * s(r, 5, 6))
                / (r[2] + r[3] + r[5] + r[6])
        }
        37 => s(r, 5, 6) / (r[4] * r[6] + r[5] * s(r, 3, 6)) * (r[1] * s(r, 4, 5) - r[2] * s(r, 1, 3)),
        39 => {
            s(r, 4, 5) / (r[4] * (r[2] + r[6]) + r[5] * s(r, 2, 6))
                * (r[1] * r[2] + r[2] * r[2] + r[2] * r[3] + r[2] * r[4] + r[1] * r[5] + r[2] * r[5] + r[1] * r[6]
                    + r[2] * r[6])
        }
        45 => {
            (r[1] * r[3] + r[2] * r[3] + r[3] * r[3] + 2.0 * r[1] * r[4] + 2.0 * r[2] * r[4] + 2.0 * r[3] * r[4]
                + r[4] * r[4]
                + r[1] * r[5]
                + r[2] * r[5]
                + r[3] * r[5]
                + r[4] * r[5])
                / (r[3] + 2.0 * r[4] + r[5])
        }
        19 => {
            (r[1] * r[4] + r[2] * r[4] + r[3] * r[4] + r[4] * r[4] + r[4] * r[5] - r[1] * r[6] - r[2] * r[6]
                - r[3] * r[6])
                / r[4]
        }
        15 => (r[1] * r[6] + r[2] * s(r, 1, 6)) / (r[2] + r[6]),
        20 => {
            s(r, 2, 3) / (r[2] * r[4] + r[3] * s(r, 2, 5))
                * (r[1] * r[3] + r[2] * r[3] + r[3] * r[3] + r[1] * r[4] + r[2] * r[4] + 2.0 * r[3] * r[4]
                    + r[4] * r[4]
                    + r[3] * r[5]
                    + r[4] * r[5]
                    - r[1] * r[6]
                    - r[2] * r[6])
        }
        9 => {
            s(r, 3, 4) / (r[4] * (r[2] + r[6]) + r[3] * s(r, 2, 6))
                * (r[1] * (r[2] + r[3] + r[6]) + r[2] * (r[2] + 2.0 * r[3]) + r[3] * r[3] + s(r, 2, 3) * s(r, 4, 6))
        }
        _ => return None,
    };
    v.is_finite().then_some(v)
}

pub const N6_HEADS: [usize; 9] = [9, 13, 15, 19, 20, 33, 37, 39, 45];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeadBound {
    pub label: usize,
    /// `S(21) - S(j)`, difference of cyclic sums.
    pub alpha: f64,
    /// Difference of alternating products, `P(21) - P(j)`.
    pub beta: f64,
    /// `-beta/alpha`; absent when `alpha = 0`.
    pub x: Option<f64>,
    pub x_closed_form: Option<f64>,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntersectionBound {
    pub heads: Vec<HeadBound>,
    /// `sum a_j^2 / 3`.
    pub x0: f64,
    pub r5: f64,
    /// `x0 + r5/3`.
    pub bound: f64,
    /// `(t, lambda_1(2 Re(e^{i theta} S(21)))^2)` at `t = -1, 0, 1`.
    pub top_root_squared: Vec<(f64, f64)>,
    pub bound_below_top_root: bool,
    pub closed_forms_agree: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyAnalysis {
    pub weights: WeightVector,
    pub r: Vec<f64>,
    pub sums: CyclicSumReport,
    pub bound: IntersectionBound,
}

/// Cyclic sums of all sixty arrangements, every difference identity between
/// them, and the intersection bound for the nine family heads.
pub fn family_analysis_n6(a: &WeightVector) -> Result<FamilyAnalysis> {
    if a.len() != 6 {
        return Err(Error::invalid("weights", format!("need 6 weights, got {}", a.len())));
    }
    if !a.is_ascending() {
        return Err(Error::invalid("weights", format!("{a} must be sorted ascending")));
    }
    let sq = a.squares();
    let r = r_decomposition(a).r;
    let r6 = to_r6(&r);
    let rel_tol = 1e-12;

    let per_class = N6_LABELS
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let class = canonical_dihedral(p).expect("table rows are permutations");
            ClassSums {
                label: i + 1,
                family: family_of(&class).map(str::to_string),
                class,
                cyclic_sum: cyclic_sum_of(sq, p),
                product_term: alternating_products_of(sq, p),
            }
        })
        .collect::<Vec<_>>();
    let relations = check_relations(sq, &r, rel_tol);
    let max_relative_error = relations.iter().fold(0.0_f64, |m, c| m.max(c.relative_error));
    let all_hold = relations.iter().all(|c| c.holds);

    let c21 = &per_class[20];
    let x0 = a.sum_squares() / 3.0;
    let bound = x0 + r6[5] / 3.0;
    let scale = 1.0 + bound.abs();
    let mut closed_forms_agree = true;
    let heads: Vec<HeadBound> = N6_HEADS
        .iter()
        .map(|&j| {
            let cj = &per_class[j - 1];
            let alpha = c21.cyclic_sum - cj.cyclic_sum;
            let beta = c21.product_term - cj.product_term;
            let gap_scale = 1e-12 * c21.cyclic_sum.abs().max(c21.product_term.abs()).max(1.0);
            let x = (alpha.abs() > gap_scale).then(|| -beta / alpha);
            let xc = x_closed_form(j, &r6);
            if let (Some(x), Some(xc)) = (x, xc) {
                if (x - xc).abs() > 1e-8 * (1.0 + x.abs()) {
                    closed_forms_agree = false;
                }
            }
            // With alpha = 0, G_j = beta and the bound is vacuous iff beta >= 0.
            let within_bound = match x {
                Some(x) => x <= bound + 1e-12 * scale,
                None => beta >= -gap_scale,
            };
            HeadBound {
                label: j,
                alpha,
                beta,
                x,
                x_closed_form: xc,
                within_bound,
            }
        })
        .collect();
    let f21 = build_family(&a.arrange_unchecked(&N6_LABELS[20]));
    let top_root_squared: Vec<(f64, f64)> = [-1.0, 0.0, 1.0]
        .iter()
        .map(|&t| {
            let z = family_root(&f21, t, None);
            (t, z * z)
        })
        .collect();
    let bound_below_top_root = top_root_squared.iter().all(|&(_, z2)| bound < z2);
    let pass = heads.iter().all(|h| h.within_bound) && bound_below_top_root && all_hold && closed_forms_agree;
    Ok(FamilyAnalysis {
        weights: a.clone(),
        r,
        sums: CyclicSumReport {
            per_class,
            relations,
            max_relative_error,
            all_hold,
        },
        bound: IntersectionBound {
            heads,
            x0,
            r5: r6[5],
            bound,
            top_root_squared,
            bound_below_top_root,
            closed_forms_agree,
            pass,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[f64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(3).unwrap().classes.len(), 1);
        assert_eq!(enumerate_classes(5).unwrap().classes.len(), 12);
        let t6 = enumerate_classes(6).unwrap();
        assert_eq!(t6.classes.len(), 60);
        let fams = t6.families.unwrap();
        assert_eq!(fams.len(), 10);
        assert!(fams.iter().all(|f| f.members.len() == 6));
        assert!(enumerate_classes(2).is_err());
        assert!(enumerate_classes(11).is_err());
    }

    #[test]
    fn generated_matches_brute_force() {
        for n in 3..=7 {
            assert_eq!(enumerate_classes(n).unwrap().classes, enumerate_classes_brute(n).unwrap());
        }
    }

    #[test]
    fn label_tables_cover_all_classes() {
        let t5 = enumerate_classes(5).unwrap();
        assert!(t5.classes.iter().all(|c| class_label(c).is_some()));
        let t6 = enumerate_classes(6).unwrap();
        let mut labels: Vec<usize> = t6.classes.iter().map(|c| class_label(c).unwrap()).collect();
        labels.sort_unstable();
        assert_eq!(labels, (1..=60).collect::<Vec<_>>());
        assert_eq!(labeled_class(6, 21).unwrap(), canonical_dihedral(&[1, 3, 5, 6, 4, 2]).unwrap());
        assert_eq!(labeled_class(5, 1).unwrap(), canonical_dihedral(&[1, 3, 5, 4, 2]).unwrap());
        assert_eq!(labeled_class(5, 12).unwrap(), canonical_dihedral(&[5, 1, 4, 3, 2]).unwrap());
    }

    #[test]
    fn families_match_relation_lists() {
        for rel in &N6_RELATIONS[..50] {
            let hi = labeled_class(6, rel.hi).unwrap();
            let lo = labeled_class(6, rel.lo).unwrap();
            assert_eq!(family_of(&hi), family_of(&lo), "{rel:?}");
        }
        for (label, _, head) in N6_FAMILIES {
            assert_eq!(family_of(&labeled_class(6, head).unwrap()), Some(label));
        }
    }

    #[test]
    fn cyclic_sum_examples() {
        let a = WeightVector::from_squares(vec![1.0, 4.0, 9.0, 16.0, 25.0, 36.0]).unwrap();
        let id = canonical_dihedral(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(cyclic_sum(&a, &id).unwrap(), 1520.0);
        let u = crate::weights::from_r(&[1.0; 6]).unwrap();
        let d = cyclic_sum(&u, &labeled_class(6, 21).unwrap()).unwrap()
            - cyclic_sum(&u, &labeled_class(6, 2).unwrap()).unwrap();
        assert_eq!(d, 9.0);
    }

    #[test]
    fn unit_increment_analysis() {
        let u = crate::weights::from_r(&[1.0; 6]).unwrap();
        let fa = family_analysis_n6(&u).unwrap();
        assert!(fa.sums.all_hold);
        let h13 = fa.bound.heads.iter().find(|h| h.label == 13).unwrap();
        assert!((h13.x.unwrap() + 2.0).abs() < 1e-12);
        assert_eq!(fa.bound.x0, 7.0);
        assert!(fa.bound.pass);
        let rel = fa.sums.relations.iter().find(|c| c.hi == 21 && c.lo == 13).unwrap();
        assert_eq!(rel.difference, 1.0);
    }

    #[test]
    fn degenerate_equal_pair_still_passes() {
        let a = crate::weights::from_r(&[1.0, 0.0, 1.0, 2.0, 1.0, 3.0]).unwrap();
        let fa = family_analysis_n6(&a).unwrap();
        assert!(fa.sums.all_hold);
        assert!(fa.bound.pass);
    }

    #[test]
    fn n5_relations_hold() {
        let a = w(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let r = r_decomposition(&a).r;
        assert!(check_relations(a.squares(), &r, 1e-12).iter().all(|c| c.holds));
    }

    #[test]
    fn extreme_examples() {
        let a = w(&[1.0, 2.0, 3.0, 4.0]);
        let rep = find_extreme(&a, Direction::Max, SearchMethod::Grid).unwrap();
        assert_eq!(rep.found().unwrap(), &canonical_dihedral(&[1, 3, 4, 2]).unwrap());

        let a = w(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let rep = find_extreme(&a, Direction::Min, SearchMethod::Grid).unwrap();
        assert_eq!(rep.found().unwrap(), &canonical_dihedral(&[5, 1, 4, 3, 2]).unwrap());
        let rep = find_extreme(&a, Direction::Min, SearchMethod::Certified).unwrap();
        assert_eq!(rep.found().unwrap(), &canonical_dihedral(&[5, 1, 4, 3, 2]).unwrap());

        let a = w(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let rep = find_extreme(&a, Direction::Max, SearchMethod::Grid).unwrap();
        assert_eq!(rep.found().unwrap(), &canonical_dihedral(&[1, 3, 5, 6, 4, 2]).unwrap());
        let rep = find_extreme(&a, Direction::Max, SearchMethod::Certified).unwrap();
        assert_eq!(rep.found().unwrap(), &canonical_dihedral(&[1, 3, 5, 6, 4, 2]).unwrap());

        assert!(find_extreme(&w(&[2.0, 1.0, 3.0]), Direction::Max, SearchMethod::Grid).is_err());
    }

    #[test]
    fn conjecture_trivial_cases() {
        let rep = verify_conjecture1(&w(&[1.5; 6])).unwrap();
        assert!(rep.pass);
        assert!(rep.worst_margin.abs() < 1e-12);
        let rep = verify_conjecture1(&w(&[1.0, 2.0])).unwrap();
        assert!(rep.pass);
        let rep = verify_conjecture1(&w(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0])).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(conjectured_max_pattern(7), vec![1, 3, 5, 7, 6, 4, 2]);
    }
}
