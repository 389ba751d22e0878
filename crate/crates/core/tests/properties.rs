use approx::assert_relative_eq;
use cyclerange::boundary::sample_boundary;
use cyclerange::extremal::{find_double_eigenvalue, path_top_eigenvalue};
use cyclerange::inclusion::{chebyshev_grid, includes_general};
use cyclerange::permsearch::enumerate_classes;
use cyclerange::spectra::{real_part_eigen, support_at_theta, support_curve};
use cyclerange::*;
use proptest::prelude::*;

fn weights(n: std::ops::RangeInclusive<usize>, lo: f64, hi: f64) -> impl Strategy<Value = WeightVector> {
    n.prop_flat_map(move |n| prop::collection::vec(lo..hi, n)).prop_map(|v| WeightVector::new(v).unwrap())
}

fn product_one(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = WeightVector> {
    n.prop_flat_map(|n| prop::collection::vec(-1.0f64..1.0, n)).prop_map(|logs| {
        let mean = logs.iter().sum::<f64>() / logs.len() as f64;
        WeightVector::new(logs.iter().map(|l| (l - mean).exp()).collect()).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn family_is_dihedral_invariant(a in weights(2..=9, 0.0, 3.0), k in 0usize..9) {
        let f = build_family(&a);
        prop_assert!(f.max_relative_difference(&build_family(&a.rotated(k))) < 1e-12);
        prop_assert!(f.max_relative_difference(&build_family(&a.reversed())) < 1e-12);
    }

    #[test]
    fn parity_of_family(a in weights(2..=10, 0.0, 3.0)) {
        let f = build_family(&a);
        let n = f.n;
        let scale = 1.0 + a.sum_squares().powi(n as i32 / 2);
        for k in (0..n).filter(|k| (n - k) % 2 == 1) {
            prop_assert!(f.coefficient(k).abs() <= 1e-12 * scale);
        }
        prop_assert_eq!(f.coefficient(n - 2), -a.sum_squares());
    }

    #[test]
    fn six_weight_pair_identity(a in weights(6..=6, 0.0, 3.0)) {
        let f = build_family(&a);
        let id = canonical_dihedral(&[1, 2, 3, 4, 5, 6]).unwrap();
        let lhs = 2.0 * (f.coefficient(2) + cyclic_sum(&a, &id).unwrap());
        let rhs = a.sum_squares().powi(2) - a.sum_fourth_powers();
        assert_relative_eq!(lhs, rhs, epsilon = 1e-12 * (1.0 + rhs.abs()), max_relative = 1e-12);
    }

    #[test]
    fn support_scales_linearly(a in weights(2..=9, 0.0, 3.0), c in 0.1f64..10.0, t in -1.0f64..1.0) {
        let z = support_max(&a, t).unwrap();
        let zc = support_max(&a.scaled(c).unwrap(), t).unwrap();
        prop_assert!((zc - c * z).abs() <= 1e-9 * (1.0 + c * z.abs()));
    }

    #[test]
    fn polynomial_matches_dense(a in weights(2..=12, 0.0, 3.0), theta in 0.0f64..std::f64::consts::TAU) {
        let poly = support_at_theta(&build_family(&a), 0.0, theta);
        let dense = dense_oracle(&a, theta)[0];
        prop_assert!((poly - dense).abs() <= 1e-8 * (1.0 + a.sum_squares()));
    }

    #[test]
    fn support_nondecreasing_in_t(a in weights(2..=9, 0.0, 3.0)) {
        let ts = chebyshev_grid(65);
        let z = support_curve(&build_family(&a), &ts);
        let tol = 1e-10 * (1.0 + z[0]);
        prop_assert!(z.windows(2).all(|w| w[1] <= w[0] + tol));
    }

    #[test]
    fn inclusion_is_reflexive(a in weights(2..=8, 0.0, 3.0)) {
        prop_assert!(includes_general(&a, &a, 65).unwrap().is_included());
    }

    #[test]
    fn ngon_inside_product_one(a in product_one(3..=8)) {
        prop_assert!(regular_ngon_check(&a).unwrap().margin >= -1e-9);
    }

    #[test]
    fn path_bound(a in product_one(2..=7)) {
        let n = a.len() + 1;
        let mut w = a.weights().to_vec();
        w.push(0.0);
        let lam = path_top_eigenvalue(&WeightVector::new(w).unwrap());
        prop_assert!(lam >= 2f64.powf((n as f64 - 2.0) / (n as f64 - 1.0)) - 1e-9);
    }

    #[test]
    fn frobenius_bound(v in (3usize..=9).prop_flat_map(|n| (prop::collection::vec(0.0f64..1.0, n), 0..n))) {
        let (mut w, zero) = v;
        w[zero] = 0.0;
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-6);
        let a = WeightVector::new(w.iter().map(|x| x / norm).collect()).unwrap();
        let best = min_frobenius_zero_product(a.len()).unwrap().objective;
        prop_assert!(numerical_radius(&a) >= best - 1e-9);
    }

    #[test]
    fn cyclic_sum_is_class_invariant(p in permutation(6), k in 0usize..6, a in weights(6..=6, 0.1, 3.0)) {
        let c = canonical_dihedral(&p).unwrap();
        let rotated: Vec<usize> = (0..6).map(|i| p[(i + k) % 6]).collect();
        let reversed: Vec<usize> = rotated.iter().rev().copied().collect();
        prop_assert_eq!(&canonical_dihedral(&rotated).unwrap(), &c);
        prop_assert_eq!(&canonical_dihedral(&reversed).unwrap(), &c);
        let s = cyclic_sum(&a, &c).unwrap();
        let direct: f64 = (0..6).map(|i| a.squares()[p[i] - 1] * a.squares()[p[(i + 1) % 6] - 1]).sum();
        prop_assert!((s - direct).abs() <= 1e-12 * s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_agrees_with_grid(a in weights(4..=6, 0.2, 3.0), p in (4usize..=6).prop_flat_map(permutation)) {
        prop_assume!(p.len() == a.len());
        let b = a.arrange(&p).unwrap();
        let closed = includes_closed_form(&a, &b).unwrap();
        prop_assume!(closed.kind != VerdictKind::Indeterminate);
        let grid = includes_general(&a, &b, 257).unwrap();
        // Near-ties may fall either side of the tolerance.
        if grid.margin.abs() > 1e-7 {
            prop_assert_eq!(closed.kind, grid.kind);
        }
    }

    #[test]
    fn inclusion_is_transitive(a in weights(5..=5, 0.2, 3.0), p in permutation(5), q in permutation(5)) {
        let b = a.arrange(&p).unwrap();
        let c = a.arrange(&q).unwrap();
        let ab = includes_general(&a, &b, 129).unwrap();
        let bc = includes_general(&b, &c, 129).unwrap();
        if ab.is_included() && bc.is_included() {
            let ac = includes_general(&a, &c, 129).unwrap();
            prop_assert!(ac.margin >= -2.0 * ac.tolerance);
        }
    }

    #[test]
    fn four_weight_endpoints_suffice(a in weights(4..=4, 0.0, 3.0), b in weights(4..=4, 0.0, 3.0)) {
        let za = [support_max(&a, -1.0).unwrap(), support_max(&a, 1.0).unwrap()];
        let zb = [support_max(&b, -1.0).unwrap(), support_max(&b, 1.0).unwrap()];
        let endpoint_margin = (za[0] - zb[0]).min(za[1] - zb[1]) / 2.0;
        prop_assume!(endpoint_margin.abs() > 1e-7);
        let grid = includes_general(&a, &b, 257).unwrap();
        prop_assert_eq!(grid.is_included(), endpoint_margin > 0.0);
        prop_assert!(grid.margin <= endpoint_margin + 1e-12 * (1.0 + za[1]));
    }

    #[test]
    fn boundary_touches_every_support_line(a in weights(3..=6, 0.2, 2.0), phis in prop::collection::vec(0.0f64..std::f64::consts::TAU, 64)) {
        let curve = sample_boundary(&a, 96).unwrap();
        for phi in phis {
            let e = num_complex::Complex64::from_polar(1.0, phi);
            let lam = real_part_eigen(&a, phi).values[0];
            let best = curve.points.iter().map(|p| (e * p).re).fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(best <= lam + 1e-7);
            prop_assert!(best >= lam - 1e-3);
        }
    }

    #[test]
    fn boundary_scales(a in weights(3..=6, 0.2, 2.0), c in 0.2f64..5.0) {
        let p = sample_boundary(&a, 16).unwrap();
        let q = sample_boundary(&a.scaled(c).unwrap(), 16).unwrap();
        prop_assert_eq!(p.len(), q.len());
        for (x, y) in p.points.iter().zip(&q.points) {
            prop_assert!((x * c - y).norm() <= 1e-10 * c * (1.0 + x.norm()));
        }
    }

    #[test]
    fn double_eigenvalue_construction(a in (1usize..=4).prop_flat_map(|k| prop::collection::vec(0.2f64..3.0, 2 * k - 1))) {
        let r = find_double_eigenvalue(&a).unwrap();
        prop_assert!(r.end_product < 0.0);
        prop_assert!(r.gap.abs() < 1e-9);
        prop_assert!(r.hat_a_n > 0.0 && r.hat_a_nm1 > 0.0);
    }
}

#[test]
fn parallel_enumeration_matches_serial() {
    use cyclerange::permsearch::enumerate_classes_brute;
    for n in 3..=8 {
        let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = serial.install(|| enumerate_classes_brute(n).unwrap());
        assert_eq!(one, enumerate_classes_brute(n).unwrap());
        assert_eq!(one, enumerate_classes(n).unwrap().classes);
    }
}
