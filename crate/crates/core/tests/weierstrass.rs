mod common;

use std::collections::BTreeSet;

use common::{divisor, shape};
use kummer_core::agcode::floor_via_theta_basis;
use kummer_core::{CurveShape, Divisor, Error, GapBox, OnePoint, PlaceTuple};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Semigroup membership from dimensions: `l(G) != l(G - Q_k)` for every `k`.
fn member_by_dimension(sh: &CurveShape, places: &PlaceTuple, coords: &[i64]) -> bool {
    if coords.iter().any(|&c| c < 0) {
        return false;
    }
    let g = places.divisor(sh.r(), coords).unwrap();
    let base = sh.dimension(&g).unwrap();
    places
        .places()
        .iter()
        .all(|q| sh.dimension(&g.shifted(q, -1).unwrap()).unwrap() != base)
}

/// Pure gap from dimensions: `l(G) = l(G - Q_1 - ... - Q_l)`.
fn pure_gap_by_dimension(sh: &CurveShape, places: &PlaceTuple, coords: &[i64]) -> bool {
    let g = places.divisor(sh.r(), coords).unwrap();
    let mut lower = g.clone();
    for q in places.places() {
        lower = lower.shifted(&q, -1).unwrap();
    }
    sh.dimension(&g).unwrap() == sh.dimension(&lower).unwrap()
}

fn tuples(sh: &CurveShape) -> Vec<PlaceTuple> {
    let r = sh.r();
    let mut out = Vec::new();
    for l in 1..=r.min(3) {
        out.push(PlaceTuple::first(sh, l, false).unwrap());
        out.push(PlaceTuple::first(sh, l, true).unwrap());
    }
    out.push(PlaceTuple::new(sh, vec![], true).unwrap());
    if r >= 2 {
        out.push(PlaceTuple::new(sh, vec![r], true).unwrap());
    }
    out
}

#[test]
fn closed_forms_agree_with_dimension_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (m, r) in [(3, 2), (6, 5), (4, 3), (5, 2)] {
        let sh = shape(m, r);
        let hi = 2 * sh.genus() + m;
        for places in tuples(&sh) {
            for _ in 0..300 {
                let coords: Vec<i64> = (0..places.len()).map(|_| rng.gen_range(0..=hi)).collect();
                assert_eq!(
                    sh.semigroup_member(&places, &coords).unwrap(),
                    member_by_dimension(&sh, &places, &coords),
                    "member {m} {r} {places:?} {coords:?}"
                );
                let positive: Vec<i64> = coords.iter().map(|&c| c.max(1)).collect();
                assert_eq!(
                    sh.pure_gap(&places, &positive).unwrap(),
                    pure_gap_by_dimension(&sh, &places, &positive),
                    "pure {m} {r} {places:?} {positive:?}"
                );
            }
        }
    }
}

#[test]
fn one_point_gap_sequences() {
    for (m, r) in [(3, 2), (5, 9), (6, 5), (9, 4), (4, 3), (7, 3)] {
        let sh = shape(m, r);
        let g = sh.genus();
        let limit = 2 * g + 1;
        for (which, places) in [
            (OnePoint::P1, PlaceTuple::first(&sh, 1, false).unwrap()),
            (
                OnePoint::Infinity,
                PlaceTuple::new(&sh, vec![], true).unwrap(),
            ),
        ] {
            let gaps = sh.one_point_gaps(which, limit);
            assert_eq!(gaps.len() as i64, g, "{m} {r} {which:?}");
            let by_membership: Vec<i64> = (1..=limit)
                .filter(|&n| !sh.semigroup_member(&places, &[n]).unwrap())
                .collect();
            assert_eq!(gaps, by_membership, "{m} {r} {which:?}");
            let by_dimension: Vec<i64> = (1..=limit)
                .filter(|&n| !member_by_dimension(&sh, &places, &[n]))
                .collect();
            assert_eq!(gaps, by_dimension);
            // One-point pure gaps are exactly the gaps.
            let pure: Vec<i64> = (1..=limit)
                .filter(|&n| sh.pure_gap(&places, &[n]).unwrap())
                .collect();
            assert_eq!(gaps, pure);
        }
    }
}

#[test]
fn semigroup_is_symmetric_under_relabelling() {
    let sh = shape(6, 5);
    let a = PlaceTuple::new(&sh, vec![1, 2], false).unwrap();
    let b = PlaceTuple::new(&sh, vec![4, 3], false).unwrap();
    for x in 0..25 {
        for y in 0..25 {
            assert_eq!(
                sh.semigroup_member(&a, &[x, y]).unwrap(),
                sh.semigroup_member(&b, &[x, y]).unwrap()
            );
            assert_eq!(
                sh.semigroup_member(&a, &[x, y]).unwrap(),
                sh.semigroup_member(&a, &[y, x]).unwrap()
            );
        }
    }
}

#[test]
fn example1_pure_gap_set() {
    let curve = common::example1();
    let sh = curve.shape();
    assert_eq!(sh.genus(), 16);
    let places = PlaceTuple::first(sh, 1, true).unwrap();
    assert!(sh.pure_gap(&places, &[26, 1]).unwrap());
    assert!(!sh.pure_gap(&places, &[27, 1]).unwrap());
    let plotted: BTreeSet<(i64, i64)> = include_str!("data/ex1_pure_gaps.csv")
        .lines()
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    assert_eq!(plotted.len(), 94);
    let mut computed = BTreeSet::new();
    for s in 1..=40 {
        for t in 1..=40 {
            if sh.pure_gap(&places, &[s, t]).unwrap() {
                computed.insert((s, t));
            }
        }
    }
    assert_eq!(computed, plotted);
}

#[test]
fn example2_pure_gaps_and_box() {
    let sh = *common::example2().shape();
    let places = PlaceTuple::first(&sh, 2, false).unwrap();
    assert!(sh.pure_gap(&places, &[13, 1]).unwrap());
    assert!(sh.pure_gap(&places, &[14, 1]).unwrap());
    let b = GapBox::new(&sh, places.clone(), vec![13, 1], vec![1, 0]).unwrap();
    assert_eq!(b.induced_divisor(5), divisor(&[26, 1, 0, 0, 0], 0));
    assert_eq!(b.gain(), 3);
    let found = sh.box_search(&places, 19).unwrap();
    let hit = found
        .iter()
        .find(|c| c.gap_box.base() == [13, 1] && c.gap_box.widths() == [1, 0])
        .expect("box 13..14 x 1 is maximal");
    assert_eq!(hit.designed_distance, 12);
    assert_eq!(hit.divisor, divisor(&[26, 1, 0, 0, 0], 0));
    // Ranking is by gain, then degree.
    for w in found.windows(2) {
        assert!((w[0].gain, -w[0].divisor.degree()) >= (w[1].gain, -w[1].divisor.degree()));
    }
}

#[test]
fn example1_box_search_contains_single_point_box() {
    let sh = *common::example1().shape();
    let places = PlaceTuple::first(&sh, 1, true).unwrap();
    let found = sh.box_search(&places, 31).unwrap();
    let hit = found
        .iter()
        .find(|c| c.gap_box.base() == [26, 1] && c.gap_box.widths() == [0, 0])
        .expect("{(26,1)} is a maximal box");
    assert_eq!(hit.designed_distance, 24);
    assert_eq!(hit.divisor, divisor(&[51, 0, 0, 0, 0, 0, 0, 0, 0], 1));
    // Every candidate is a genuine box of pure gaps.
    for c in &found {
        GapBox::new(
            &sh,
            places.clone(),
            c.gap_box.base().to_vec(),
            c.gap_box.widths().to_vec(),
        )
        .unwrap();
    }
}

#[test]
fn three_point_box_on_the_6_5_shape() {
    // Five of the six points of {8..9} x {1} x {1..3} are pure gaps at
    // (P1, P2, Pinf); (9, 1, 3) is not, by both criteria.
    let sh = shape(6, 5);
    assert_eq!(sh.genus(), 10);
    let places = PlaceTuple::first(&sh, 2, true).unwrap();
    for i in 8..=9 {
        for k in 1..=3 {
            let p = [i, 1, k];
            let want = (i, k) != (9, 3);
            assert_eq!(sh.pure_gap(&places, &p).unwrap(), want, "{p:?}");
            assert_eq!(pure_gap_by_dimension(&sh, &places, &p), want, "{p:?}");
        }
    }
    assert!(matches!(
        GapBox::new(&sh, places.clone(), vec![8, 1, 1], vec![1, 0, 2]),
        Err(Error::InvalidGapBox(_))
    ));
    GapBox::new(&sh, places, vec![8, 1, 1], vec![0, 0, 2]).unwrap();
}

#[test]
fn input_validation() {
    let sh = shape(3, 2);
    let places = PlaceTuple::first(&sh, 1, true).unwrap();
    assert_eq!(
        sh.pure_gap(&places, &[0, 1]),
        Err(Error::NonPositiveCoordinate)
    );
    assert_eq!(
        sh.pure_gap(&places, &[1]),
        Err(Error::BadArity {
            expected: 2,
            got: 1
        })
    );
    assert_eq!(sh.semigroup_member(&places, &[-1, 5]), Ok(false));
    assert_eq!(
        PlaceTuple::new(&sh, vec![], false).unwrap_err(),
        Error::EmptyPlaceTuple
    );
    assert!(PlaceTuple::new(&sh, vec![3], false).is_err());
    assert!(PlaceTuple::new(&sh, vec![1, 1], false).is_err());
    assert!(matches!(
        sh.box_search(&places, 5000),
        Err(Error::SearchTooLarge(_))
    ));
}

#[test]
fn example4_floor() {
    let curve = common::example4();
    let h = divisor(&[14, 1, 0, 0], 4);
    let floor = curve.shape().floor_divisor(&h).unwrap();
    assert_eq!(floor, divisor(&[14, 0, 0, 0], 4));
    assert_eq!(floor_via_theta_basis(&curve, &h).unwrap(), floor);
    assert_eq!(&h + &floor, divisor(&[28, 1, 0, 0], 8));
}

#[test]
fn floor_of_empty_space_is_an_error() {
    let sh = shape(3, 2);
    assert_eq!(
        sh.floor_divisor(&divisor(&[-1, 0], 0)),
        Err(Error::EmptyRiemannRochSpace)
    );
}

fn shape_and_effective() -> impl Strategy<Value = (usize, Divisor)> {
    let curves = [(3i64, 2usize), (6, 5), (9, 4), (4, 3)];
    (0..curves.len()).prop_flat_map(move |k| {
        let r = curves[k].1;
        (proptest::collection::vec(-3i64..=12, r), -3i64..=12)
            .prop_map(move |(s, t)| (k, Divisor::new(s, t)))
    })
}

fn curve_for(k: usize) -> kummer_core::KummerCurve {
    match k {
        0 => common::hermitian_gf4(),
        1 => common::example2(),
        2 => common::example4(),
        _ => common::quartic_gf9(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn floor_properties((k, h) in shape_and_effective()) {
        let curve = curve_for(k);
        let sh = curve.shape();
        let dim = sh.dimension(&h).unwrap();
        prop_assume!(dim > 0);
        let floor = sh.floor_divisor(&h).unwrap();
        prop_assert_eq!(&floor_via_theta_basis(&curve, &h).unwrap(), &floor);
        prop_assert!(floor.le(&h));
        prop_assert_eq!(sh.dimension(&floor).unwrap(), dim);
        prop_assert_eq!(&sh.floor_divisor(&floor).unwrap(), &floor);
        // Minimality: removing any point of the floor loses a function.
        for place in floor.support() {
            let smaller = floor.shifted(&place, -1).unwrap();
            prop_assert!(sh.dimension(&smaller).unwrap() < dim);
        }
    }

    #[test]
    fn pure_gaps_induce_lower_dimensional_codes(s in 1i64..20, t in 1i64..20) {
        // Each pure gap (s, t) at (P1, Pinf) has l(sP1 + tPinf) = l((s-1)P1 + (t-1)Pinf).
        let sh = shape(5, 9);
        let places = PlaceTuple::first(&sh, 1, true).unwrap();
        if sh.pure_gap(&places, &[s, t]).unwrap() {
            let g = places.divisor(9, &[s, t]).unwrap();
            let lower = places.divisor(9, &[s - 1, t - 1]).unwrap();
            prop_assert_eq!(sh.dimension(&g).unwrap(), sh.dimension(&lower).unwrap());
        }
    }
}
