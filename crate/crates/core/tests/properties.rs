mod common;

use ehrhart::count::{
    count_points, height_profile, interior_shift_check, lattice_points, CountConfig, IntBox,
};
use ehrhart::generate::{GeneratorConfig, InstanceGenerator};
use ehrhart::quasi::{self, binomial, evaluate_qp, interleave, negative_binomial_reflect};
use ehrhart::rational::{int, Rational, RationalPoint};
use ehrhart::verify::{check_palindrome, check_theorem, full_report, VerifyConfig};
use ehrhart::{Polytope, ResidueDeltaTable};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Solve a square rational system by Gaussian elimination; `None` if singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Membership in the convex hull of `vertices` by a barycentric certificate
/// on some simplex of vertices (Carathéodory).
fn in_hull(vertices: &[RationalPoint], x: &[Rational]) -> bool {
    let n = x.len();
    let mut idx: Vec<usize> = (0..=n).collect();
    let total = vertices.len();
    if total < n + 1 {
        return false;
    }
    loop {
        // rows: coordinates, plus the affine row of ones
        let mut a = vec![vec![Rational::zero(); n + 1]; n + 1];
        let mut b = vec![Rational::zero(); n + 1];
        for (col, &vi) in idx.iter().enumerate() {
            for row in 0..n {
                a[row][col] = vertices[vi][row].clone();
            }
            a[n][col] = int(1);
        }
        b[..n].clone_from_slice(x);
        b[n] = int(1);
        if let Some(lambda) = solve(a, b) {
            if lambda.iter().all(|l| !l.is_negative()) {
                return true;
            }
        }
        // next combination
        let mut i = n + 1;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < total - (n + 1 - i) {
                idx[i] += 1;
                for j in i + 1..=n {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn generated(seed: u64, dim: usize, dual: bool) -> Polytope {
    let mut g = if dual {
        InstanceGenerator::new(common::dual_config(seed, dim))
    } else {
        InstanceGenerator::new(common::control_config(seed, dim))
    };
    if dual {
        g.dual_of_lattice().unwrap()
    } else {
        g.rational_control().unwrap()
    }
}

fn small_cfg() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(small_cfg())]

    #[test]
    fn dual_is_an_involution(seed in any::<u64>(), dim in 1usize..=3, dual in any::<bool>()) {
        let p = generated(seed, dim, dual);
        prop_assert_eq!(p.dual().unwrap().dual().unwrap(), p);
    }

    #[test]
    fn facets_and_vertices_agree(seed in any::<u64>(), dim in 1usize..=2) {
        let p = generated(seed, dim, false);
        let radius = p.vertices().iter().map(|v| v.max_abs()).max().unwrap().ceil().to_integer();
        let radius: i64 = radius.try_into().unwrap();
        for x in IntBox::cube(dim, radius + 1).points() {
            let x: Vec<Rational> = x.into_iter().map(int).collect();
            let by_facets = p.contains(&RationalPoint::new(x.clone()), false).unwrap();
            prop_assert_eq!(by_facets, in_hull(p.vertices(), &x));
        }
    }

    #[test]
    fn vertices_are_extreme(seed in any::<u64>(), dim in 1usize..=3) {
        let p = generated(seed, dim, false);
        for (i, v) in p.vertices().iter().enumerate() {
            let others: Vec<RationalPoint> = p.vertices().iter().enumerate()
                .filter(|(j, _)| *j != i).map(|(_, w)| w.clone()).collect();
            prop_assert!(!in_hull(&others, v.coords()));
            prop_assert!(p.facets().iter().all(|h| h.contains(v, false)));
        }
        prop_assert!(p.origin_is_interior());
        for h in p.facets() {
            let tight: Vec<_> = p.vertices().iter().filter(|v| h.is_tight(v)).collect();
            prop_assert!(tight.len() >= dim);
        }
    }

    #[test]
    fn denominator_and_lattice_flags(seed in any::<u64>(), dim in 1usize..=3, dual in any::<bool>()) {
        let p = generated(seed, dim, dual);
        let k = p.denominator();
        prop_assert_eq!(k.to_usize() == Some(1), p.is_lattice());
        prop_assert!(p.dilate(k.to_usize().unwrap() as u64).unwrap().is_lattice());
        prop_assert_eq!(p.dual().unwrap().is_lattice(), p.dual_is_lattice().unwrap());
    }

    #[test]
    fn counts_are_monotone(seed in any::<u64>(), dim in 1usize..=3) {
        let p = generated(seed, dim, false);
        let cfg = CountConfig::default();
        let mut previous = BigUint::zero();
        for m in 0..6 {
            let closed = count_points(&p, m, false, &cfg).unwrap();
            let strict = count_points(&p, m, true, &cfg).unwrap();
            prop_assert!(strict <= closed);
            prop_assert!(closed >= previous);
            previous = closed;
        }
    }

    #[test]
    fn interval_products(bounds in prop::collection::vec((1i64..4, 1i64..4, 1i64..4, 1i64..4), 1..=3), m in 0u64..5) {
        // box with corners -a/b and c/d per axis
        let dim = bounds.len();
        let mut vertices = Vec::new();
        for mask in 0..(1u32 << dim) {
            let coords = bounds.iter().enumerate().map(|(axis, &(a, b, c, d))| {
                if mask >> axis & 1 == 0 { Rational::new((-a).into(), b.into()) }
                else { Rational::new(c.into(), d.into()) }
            }).collect();
            vertices.push(RationalPoint::new(coords));
        }
        let p = Polytope::from_vertices(vertices).unwrap();
        let m_i = m as i64;
        let expected: i64 = bounds.iter().map(|&(a, b, c, d)| {
            let lo = -((m_i * a).div_euclid(b));
            let hi = (m_i * c).div_euclid(d);
            hi - lo + 1
        }).product();
        prop_assert_eq!(count_points(&p, m, false, &CountConfig::default()).unwrap(), BigUint::from(expected as u64));
    }

    #[test]
    fn interior_shift_and_integer_heights(seed in any::<u64>(), dim in 1usize..=3) {
        let p = generated(seed, dim, true);
        let cfg = CountConfig::default();
        for m in 1..=6 {
            prop_assert!(interior_shift_check(&p, m, &cfg).unwrap());
        }
        let region = IntBox::cube(dim, 2);
        for h in p.unit_facets().unwrap() {
            prop_assert!(h.has_integral_normal());
            prop_assert!(height_profile(&h, &region).is_ok());
        }
        // the lattice-point sets themselves, m = 3
        let interior = lattice_points(&p, 3, true, &cfg).unwrap();
        let shifted = lattice_points(&p, 2, false, &cfg).unwrap();
        prop_assert_eq!(interior, shifted);
    }

    #[test]
    fn fit_extrapolates(seed in any::<u64>(), dim in 1usize..=3, dual in any::<bool>()) {
        let p = generated(seed, dim, dual);
        let cfg = CountConfig::default();
        let qp = quasi::fit_qp(&p, &cfg).unwrap();
        let top = 3 * qp.k() * (qp.n() + 1);
        // every m in range for small k; a stride otherwise to bound runtime
        let step = (top / 40).max(1);
        for m in (0..=top).step_by(step) {
            let fresh = BigInt::from(count_points(&p, m as u64, false, &cfg).unwrap());
            prop_assert_eq!(evaluate_qp(&qp, m as i64), fresh);
        }
        prop_assert_eq!(quasi::delta_vector(&qp), quasi::delta_vector_series(&p, &cfg).unwrap());
    }

    #[test]
    fn reflection(x in -60i64..60, n in 0u32..9) {
        let r = negative_binomial_reflect(&BigInt::from(x), n);
        prop_assert_eq!(binomial(&BigInt::from(x), n), binomial(&r.top, n) * r.sign);
    }

    #[test]
    fn symmetry_formulations_agree(n in 0usize..4, k in 1usize..5, seed in any::<u64>(), symmetric in any::<bool>()) {
        let mut rng = ehrhart::generate::SplitMix64::new(seed);
        let mut rows: Vec<Vec<BigInt>> = (0..=n)
            .map(|_| (0..k).map(|_| BigInt::from(rng.range(-3, 3))).collect())
            .collect();
        if symmetric {
            for i in 0..=n {
                for r in 0..k {
                    rows[n - i][k - r - 1] = rows[i][r].clone();
                }
            }
        }
        let t = ResidueDeltaTable::new(rows);
        prop_assert_eq!(check_theorem(&t).passed, check_palindrome(&interleave(&t)).passed);
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), dim in 1usize..=3) {
        let cfg = GeneratorConfig::new(seed, dim).with_coordinate_bound(1);
        let mut a = InstanceGenerator::new(cfg.clone());
        let mut b = InstanceGenerator::new(cfg);
        for _ in 0..3 {
            prop_assert_eq!(a.dual_of_lattice().unwrap(), b.dual_of_lattice().unwrap());
        }
    }

    #[test]
    fn lattice_dual_reports_are_clean(seed in any::<u64>(), dim in 1usize..=3) {
        let p = generated(seed, dim, true);
        let report = full_report("generated", &p, &VerifyConfig::default()).unwrap();
        prop_assert!(report.all_passed(), "{}", report);
        prop_assert!(!report.fatal);
    }

    #[test]
    fn control_reports_never_fatal(seed in any::<u64>(), dim in 1usize..=3) {
        let p = generated(seed, dim, false);
        let report = full_report("control", &p, &VerifyConfig::default()).unwrap();
        prop_assert!(!report.fatal, "{}", report);
        prop_assert_eq!(report.passed("reciprocity"), Some(true));
    }
}

#[test]
fn catalog_duals_lattice_check() {
    for (name, p) in ehrhart::catalog::catalog() {
        assert_eq!(p.dual().unwrap().is_lattice(), p.dual_is_lattice().unwrap(), "{name}");
    }
}
