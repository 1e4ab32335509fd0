mod common;

use common::divisor;
use kummer_core::agcode::{best_floor_pair, evaluation_matrix, DEFAULT_BUDGET};
use kummer_core::{
    applicable_bounds, brute_force_distance, build_cl, build_comega, designed_distance,
    BoundMethod, Error, EvaluationSet, GapBox, KummerCurve, LinearCode, Matrix, PlaceTuple,
    RationalPlace,
};
use proptest::prelude::*;

/// Minimum weight over all `q^k - 1` nonzero codewords, no shortcuts.
fn naive_distance(code: &LinearCode) -> usize {
    let g = code.generator();
    let f = g.field();
    let (k, n, q) = (code.k(), code.n(), f.order() as usize);
    let mut best = n;
    for idx in 1..q.pow(k as u32) {
        let mut word = vec![0u32; n];
        let mut rest = idx;
        for r in 0..k {
            let c = (rest % q) as u32;
            rest /= q;
            for (w, &v) in word.iter_mut().zip(g.row(r)) {
                *w = f.add(*w, f.mul(c, v));
            }
        }
        best = best.min(word.iter().filter(|&&v| v != 0).count());
    }
    best
}

fn hermitian_divisors() -> Vec<kummer_core::Divisor> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                out.push(divisor(&[a, b], c));
            }
        }
    }
    out
}

#[test]
fn hermitian_gf4_parameters() {
    let curve = common::hermitian_gf4();
    assert_eq!(curve.genus(), 1);
    assert_eq!(curve.enumerate_places().len(), 9);
    let g = divisor(&[0, 0], 3);
    let d = EvaluationSet::complement_of_support(&curve, &g);
    assert_eq!(d.len(), 8);
    let cl = build_cl(&curve, &g, &d).unwrap();
    assert_eq!((cl.n(), cl.k()), (8, 3));
    let comega = build_comega(&curve, &g, &d).unwrap();
    assert_eq!(comega.k(), 5);
    assert_eq!(
        brute_force_distance(&cl, DEFAULT_BUDGET).unwrap(),
        Some(naive_distance(&cl))
    );
}

#[test]
fn duality_and_dimension_laws() {
    let curve = common::hermitian_gf4();
    let genus = curve.genus();
    for g in hermitian_divisors() {
        let d = EvaluationSet::complement_of_support(&curve, &g);
        let n = d.len() as i64;
        let deg = g.degree();
        let cl = build_cl(&curve, &g, &d).unwrap();
        let co = build_comega(&curve, &g, &d).unwrap();
        assert_eq!(cl.k() + co.k(), d.len());
        if co.k() > 0 && cl.k() > 0 {
            assert!(cl
                .generator()
                .mul(&co.generator().transpose())
                .unwrap()
                .is_zero());
        }
        if deg < n {
            assert_eq!(cl.k(), curve.dimension(&g).unwrap());
        }
        if 2 * genus - 2 < deg && deg < n {
            assert_eq!(co.k() as i64, n + genus - 1 - deg, "{g}");
            assert_eq!(cl.k() as i64, deg + 1 - genus);
        }
    }
}

#[test]
fn bounds_hold_and_singleton_holds() {
    // Every C_Omega on the GF(4) curve with 0 < deg G < n, against exhaustive distances.
    let curve = common::hermitian_gf4();
    let mut checked = 0;
    for g in hermitian_divisors() {
        let d = EvaluationSet::complement_of_support(&curve, &g);
        let deg = g.degree();
        if !(0 < deg && deg < d.len() as i64) {
            continue;
        }
        let co = build_comega(&curve, &g, &d).unwrap();
        let cl = build_cl(&curve, &g, &d).unwrap();
        for code in [&co, &cl] {
            let Some(dist) = brute_force_distance(code, DEFAULT_BUDGET).unwrap() else {
                continue;
            };
            assert_eq!(dist, naive_distance(code));
            assert!(dist + code.k() <= code.n() + 1, "Singleton {g}");
            for b in code.bounds() {
                assert!(dist as i64 >= b.value, "{g}: {b} but d = {dist}");
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn distance_is_invariant_under_place_order() {
    let curve = common::hermitian_gf4();
    let g = divisor(&[1, 0], 2);
    let d = EvaluationSet::complement_of_support(&curve, &g);
    let mut rev = d.places().to_vec();
    rev.reverse();
    let rev = EvaluationSet::new(&curve, &g, rev).unwrap();
    type Build =
        fn(&KummerCurve, &kummer_core::Divisor, &EvaluationSet) -> kummer_core::Result<LinearCode>;
    let builders: [Build; 2] = [build_cl, build_comega];
    for build in builders {
        let a = build(&curve, &g, &d).unwrap();
        let b = build(&curve, &g, &rev).unwrap();
        assert_eq!(a.k(), b.k());
        assert_eq!(
            brute_force_distance(&a, DEFAULT_BUDGET).unwrap(),
            brute_force_distance(&b, DEFAULT_BUDGET).unwrap()
        );
    }
}

#[test]
fn evaluation_sets_are_validated() {
    let curve = common::hermitian_gf4();
    let g = divisor(&[1, 0], 2);
    assert_eq!(
        EvaluationSet::new(&curve, &g, vec![RationalPlace::Ramified(1)]).unwrap_err(),
        Error::PlaceInSupport("P1".into())
    );
    assert_eq!(
        EvaluationSet::new(
            &curve,
            &divisor(&[1, 0], 0),
            vec![RationalPlace::Infinity, RationalPlace::Infinity]
        )
        .unwrap_err(),
        Error::DuplicatePlace("Pinf".into())
    );
    assert!(EvaluationSet::new(&curve, &g, vec![RationalPlace::Affine { x: 0, y: 1 }]).is_err());
    let d = EvaluationSet::complement_of_support(&curve, &g);
    assert!(!d.places().contains(&RationalPlace::Ramified(1)));
    assert!(!d.places().contains(&RationalPlace::Infinity));
}

#[test]
fn designed_distance_rejects_mismatched_inputs() {
    let curve = common::example2();
    let sh = curve.shape();
    let places = PlaceTuple::first(sh, 2, false).unwrap();
    let b = GapBox::new(sh, places, vec![13, 1], vec![1, 0]).unwrap();
    let g = divisor(&[26, 1, 0, 0, 0], 0);
    assert_eq!(
        designed_distance(&curve, &g, &BoundMethod::PureGapBox(b.clone()))
            .unwrap()
            .value,
        12
    );
    assert!(matches!(
        designed_distance(
            &curve,
            &divisor(&[25, 1, 0, 0, 0], 0),
            &BoundMethod::PureGapBox(b)
        ),
        Err(Error::InconsistentDivisor(_))
    ));
    assert!(matches!(
        designed_distance(
            &curve,
            &g,
            &BoundMethod::FloorPair(divisor(&[-1, 0, 0, 0, 0], 0))
        ),
        Err(Error::InconsistentDivisor(_))
    ));
}

#[test]
fn budget_is_enforced() {
    let curve = common::example2();
    let g = divisor(&[26, 1, 0, 0, 0], 0);
    let d = EvaluationSet::complement_of_support(&curve, &g);
    let code = build_cl(&curve, &g, &d).unwrap();
    assert!(matches!(
        brute_force_distance(&code, 1 << 20),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn example2_code_uses_infinity() {
    let curve = common::example2();
    let g = divisor(&[26, 1, 0, 0, 0], 0);
    let d = EvaluationSet::complement_of_support(&curve, &g);
    assert_eq!(d.len(), 124);
    assert!(d.places().contains(&RationalPlace::Infinity));
    let code = build_comega(&curve, &g, &d).unwrap();
    assert_eq!((code.n(), code.k()), (124, 106));
    assert!(code.bounds().iter().any(|b| b.value == 12));
    assert_eq!(evaluation_matrix(&curve, &g, &d).unwrap().rank(), 18);
}

#[test]
fn example4_code() {
    let curve = common::example4();
    let g = divisor(&[28, 1, 0, 0], 8);
    let d = EvaluationSet::complement_of_support(&curve, &g);
    assert_eq!(d.len(), 254);
    let code = build_comega(&curve, &g, &d).unwrap();
    assert_eq!((code.n(), code.k()), (254, 228));
    assert_eq!(
        best_floor_pair(&curve, &g).unwrap(),
        Some(divisor(&[14, 1, 0, 0], 4))
    );
    let values: Vec<i64> = applicable_bounds(&curve, &g)
        .unwrap()
        .iter()
        .map(|b| b.value)
        .collect();
    assert!(values.contains(&16), "{values:?}");
    let export = code.export();
    let mut lines = export.lines();
    assert_eq!(lines.next(), Some("254 228 64"));
    assert_eq!(lines.count(), 228);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn quartic_codes_satisfy_dimension_law(a in 0i64..6, b in 0i64..6, c in 0i64..6, t in 0i64..8) {
        let curve: KummerCurve = common::quartic_gf9();
        let g = divisor(&[a, b, c], t);
        let d = EvaluationSet::complement_of_support(&curve, &g);
        let (n, deg, genus) = (d.len() as i64, g.degree(), curve.genus());
        let co = build_comega(&curve, &g, &d).unwrap();
        let cl = build_cl(&curve, &g, &d).unwrap();
        prop_assert_eq!(co.k() + cl.k(), d.len());
        if 2 * genus - 2 < deg && deg < n {
            prop_assert_eq!(co.k() as i64, n + genus - 1 - deg);
        }
        if cl.k() > 0 && co.k() > 0 {
            let product: Matrix = cl.generator().mul(&co.generator().transpose()).unwrap();
            prop_assert!(product.is_zero());
        }
    }
}
