mod common;

use common::{brute_hull, doubled_signed_sums, scaled};
use proptest::prelude::*;
use tilecheck::exact::{int, Rat, Vec3};
use tilecheck::polytope::Location;
use tilecheck::zonotope::{normalize_generators, zonotope_from_generators};

fn vecs(g: &[[i64; 3]]) -> Vec<Vec3> {
    g.iter().map(|&c| Vec3::from_ints(c)).collect()
}

fn det(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn cross_is_zero(a: [i64; 3], b: [i64; 3]) -> bool {
    a[1] * b[2] == a[2] * b[1] && a[2] * b[0] == a[0] * b[2] && a[0] * b[1] == a[1] * b[0]
}

/// No zero vector, no parallel pair, no coplanar triple.
fn general_position(g: &[[i64; 3]]) -> bool {
    let n = g.len();
    (0..n).all(|i| g[i] != [0, 0, 0])
        && (0..n).all(|i| (i + 1..n).all(|j| !cross_is_zero(g[i], g[j])))
        && (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| det(g[i], g[j], g[k]) != 0)))
}

/// Build output against the hull of signed half-sums.
fn assert_matches_hull(g: &[[i64; 3]]) {
    let p = zonotope_from_generators(&vecs(g)).unwrap();
    let hull = brute_hull(&doubled_signed_sums(g));
    let built: std::collections::BTreeSet<_> = p.vertices().iter().map(|v| scaled(v, 2)).collect();
    assert_eq!(built, hull.vertices, "vertex sets differ for {g:?}");
    assert_eq!(p.facet_signature().1, hull.facet_sizes, "facet sizes differ for {g:?}");
}

const CANONICAL: [&[[i64; 3]]; 7] = [
    &[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]],
    &[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]],
    &[[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1], [0, 0, 1]],
    &[[1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]],
    &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0], [0, 0, 1]],
    &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0], [2, 1, 0], [0, 0, 1]],
];

#[test]
fn canonical_solids_match_hull_oracle() {
    for g in CANONICAL {
        assert_matches_hull(g);
    }
}

#[test]
fn documented_counts_match_hull_oracle() {
    let rd = brute_hull(&doubled_signed_sums(CANONICAL[2]));
    assert_eq!((rd.vertices.len(), rd.facet_sizes.len()), (14, 12));
    let to = brute_hull(&doubled_signed_sums(CANONICAL[4]));
    assert_eq!((to.vertices.len(), to.facet_sizes.len()), (24, 14));
    let ed = brute_hull(&doubled_signed_sums(CANONICAL[3]));
    assert_eq!(ed.facet_sizes, vec![6, 6, 6, 6, 4, 4, 4, 4, 4, 4, 4, 4]);
}

fn generators(max: usize) -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec(prop::array::uniform3(-5i64..=5), 3..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_formula_and_symmetry(g in generators(6)) {
        let Ok(p) = zonotope_from_generators(&vecs(&g)) else { return Ok(()) };
        prop_assert_eq!(p.euler_characteristic(), 2);
        prop_assert!(p.is_centrally_symmetric());
        prop_assert!(p.facets_centrally_symmetric());
        prop_assert_eq!(p.volume().unwrap(), p.generators().unwrap().triple_det_volume());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_sets_match_hull_oracle(g in generators(6)) {
        prop_assume!(normalize_generators(&vecs(&g)).is_ok());
        assert_matches_hull(&g);
    }

    #[test]
    fn general_position_counts(g in generators(5)) {
        prop_assume!(general_position(&g));
        let m = g.len();
        let p = zonotope_from_generators(&vecs(&g)).unwrap();
        prop_assert_eq!(p.facets().len(), m * (m - 1));
        prop_assert_eq!(p.vertices().len(), 2 * (1 + (m - 1) + (m - 1) * (m - 2) / 2));
        let hull = brute_hull(&doubled_signed_sums(&g));
        prop_assert_eq!(hull.vertices.len(), p.vertices().len());
        prop_assert_eq!(hull.facet_sizes.len(), p.facets().len());
    }

    #[test]
    fn volume_is_translation_invariant(
        g in generators(5),
        t in prop::array::uniform3((-20i64..=20, 1i64..=9)),
    ) {
        let Ok(p) = zonotope_from_generators(&vecs(&g)) else { return Ok(()) };
        let t = Vec3::new(
            Rat::new(t[0].0.into(), t[0].1.into()),
            Rat::new(t[1].0.into(), t[1].1.into()),
            Rat::new(t[2].0.into(), t[2].1.into()),
        );
        let q = p.translated(&t).unwrap();
        prop_assert_eq!(q.volume().unwrap(), p.volume().unwrap());
        prop_assert_eq!(q.locate_point(&t), Location::Interior);
    }

    #[test]
    fn location_labels_are_consistent(
        g in generators(5),
        x in prop::array::uniform3(-12i64..=12),
    ) {
        let Ok(p) = zonotope_from_generators(&vecs(&g)) else { return Ok(()) };
        let q = Vec3::new(Rat::new(x[0].into(), 4.into()), Rat::new(x[1].into(), 4.into()), Rat::new(x[2].into(), 4.into()));
        let values: Vec<Rat> = p.facets().iter().map(|f| f.halfspace.value(&q)).collect();
        let zero = int(0);
        let expected = if values.iter().any(|v| *v > zero) {
            Location::Outside
        } else if values.contains(&zero) {
            Location::Boundary
        } else {
            Location::Interior
        };
        prop_assert_eq!(p.locate_point(&q), expected);
    }
}
