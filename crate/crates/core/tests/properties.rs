mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;
use isolat_core::boundary::{
    directional_boundary, edge_boundary, line_classes, split_sides, staged_push_increments,
    vertex_boundary,
};
use isolat_core::exact::{exact_table, SearchConfig};
use isolat_core::hull::hull_volume;
use isolat_core::lattice::{
    canonical_form, components, minkowski_sum, push_sequence, push_word, translate,
};
use isolat_core::zonotope::{ehrhart, lattice_points, recurrence_check, z0};
use isolat_core::{
    build_zonotope, validate_generators, GeneratorSet, LatticeVector, PointSet, PushWord, Real,
};

fn generator_set() -> impl Strategy<Value = GeneratorSet> {
    let fixed = prop_oneof![
        Just(l1(1)),
        Just(l1(2)),
        Just(l1(3)),
        Just(linf(2)),
        Just(triangular()),
        Just(asymmetric()),
    ];
    let random_planar = prop::collection::vec(prop::array::uniform2(-2i64..=2), 2..=5)
        .prop_filter_map("must generate Z^2", |v| validate_generators(2, &v).ok());
    prop_oneof![fixed, random_planar]
}

fn point_set(dim: usize, max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, dim), 0..=max)
        .prop_map(move |pts| PointSet::from_points(dim, pts).unwrap())
}

fn case() -> impl Strategy<Value = (GeneratorSet, PointSet)> {
    generator_set().prop_flat_map(|u| {
        let d = u.dim();
        (Just(u), point_set(d, 25))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vertex_edge_sandwich((u, s) in case()) {
        let b = edge_boundary(&s, &u).unwrap();
        prop_assert!(b.vertex <= b.total);
        prop_assert!(b.total <= u.len() as u64 * b.vertex);
        prop_assert_eq!(b.vertex, vertex_boundary(&s, &u).unwrap());
    }

    #[test]
    fn vertex_boundary_is_sumset_growth((u, s) in case()) {
        let mut step = PointSet::origin(u.dim());
        for g in &u {
            step.insert(g.clone()).unwrap();
        }
        let grown = minkowski_sum(&s, &step).unwrap();
        prop_assert_eq!(vertex_boundary(&s, &u).unwrap(), (grown.len() - s.len()) as u64);
    }

    #[test]
    fn split_identity((u, s) in case(), mask in any::<u64>(), j in any::<prop::sample::Index>()) {
        let sorted = s.sorted();
        let (mut t, mut tp) = (PointSet::empty(u.dim()), PointSet::empty(u.dim()));
        for (i, p) in sorted.into_iter().enumerate() {
            if mask >> (i % 64) & 1 == 1 { t.insert(p).unwrap(); } else { tp.insert(p).unwrap(); }
        }
        let (lhs, rhs) = split_sides(&t, &tp, j.index(u.len()), &u).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn telescoping((u, s) in case()) {
        let staged: u64 = staged_push_increments(&s, &u).unwrap().iter().sum();
        let direct = minkowski_sum(&s, &z0(&u).unwrap()).unwrap().len() - s.len();
        prop_assert_eq!(staged, direct as u64);
    }

    #[test]
    fn push_order_does_not_matter(
        (u, s) in case(),
        counts in prop::collection::vec(0u64..=2, 13),
        seed in any::<u64>(),
    ) {
        let word = PushWord(counts[..u.len()].to_vec());
        let mut seq: Vec<usize> = word.counts().iter().enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize)).collect();
        // deterministic shuffle from the seed
        let n = seq.len();
        for i in (1..n).rev() {
            let j = (seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64) >> 33) as usize % (i + 1);
            seq.swap(i, j);
        }
        prop_assert_eq!(push_word(&s, &word, &u).unwrap(), push_sequence(&s, &seq, &u).unwrap());
    }

    #[test]
    fn translation_invariance((u, s) in case(), shift in prop::collection::vec(-20i64..=20, 3)) {
        let v = LatticeVector::new(shift[..u.dim()].to_vec());
        let moved = translate(&s, &v).unwrap();
        prop_assert_eq!(edge_boundary(&s, &u).unwrap(), edge_boundary(&moved, &u).unwrap());
        if !s.is_empty() {
            prop_assert_eq!(canonical_form(&s).unwrap(), canonical_form(&moved).unwrap());
        }
    }

    #[test]
    fn component_additivity((u, s) in case()) {
        let comps = components(&s, &u).unwrap();
        let sum: u64 = comps.iter().map(|c| edge_boundary(c, &u).unwrap().total).sum();
        prop_assert_eq!(sum, edge_boundary(&s, &u).unwrap().total);
        prop_assert_eq!(comps.iter().map(PointSet::len).sum::<usize>(), s.len());
    }

    #[test]
    fn lines_bound_directional_boundary((u, s) in case()) {
        for i in 0..u.len() {
            prop_assert!(directional_boundary(&s, i, &u).unwrap() >= line_classes(&s, i, &u).unwrap());
        }
    }

    #[test]
    fn supersets_of_the_unit_dilate_do_not_beat_it((u, s) in case()) {
        let z = build_zonotope(&u).unwrap();
        let unit = lattice_points(&z, 1).unwrap();
        let big = unit.union(&s).unwrap();
        prop_assert!(edge_boundary(&big, &u).unwrap().total >= edge_boundary(&unit, &u).unwrap().total);
    }

    #[test]
    fn pointset_json_round_trip(s in point_set(2, 20)) {
        let json = serde_json::to_string(&s).unwrap();
        if let Ok(back) = serde_json::from_str::<PointSet>(&json) {
            prop_assert_eq!(&back, &s);
        } else {
            prop_assert!(s.is_empty());
        }
        let again = serde_json::to_string(&PointSet::from_points(2, s.sorted().into_iter().rev()).unwrap()).unwrap();
        prop_assert_eq!(json, again);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planar_hulls_match_shoelace(pts in prop::collection::vec((-8i64..=8, -8i64..=8), 1..12)) {
        let twice = shoelace_double_area(&pts);
        let vs: Vec<LatticeVector> = pts.iter().map(|&(x, y)| LatticeVector::from([x, y])).collect();
        match hull_volume(&vs) {
            Ok(v) => prop_assert_eq!(v * rat(2), rat(twice)),
            Err(_) => prop_assert_eq!(twice, 0),
        }
    }

    #[test]
    fn dilates_grow_by_unit_pushes(u in generator_set()) {
        for t in 1..=2 {
            prop_assert!(recurrence_check(&u, t).unwrap());
        }
        let z = build_zonotope(&u).unwrap();
        let poly = ehrhart(&z).unwrap();
        prop_assert_eq!(poly.leading(), z.volume());
        let d = u.dim() as u64;
        prop_assert_eq!(
            poly.evaluate(d + 1),
            BigRational::from_integer(BigInt::from(lattice_points(&z, d + 1).unwrap().len()))
        );
    }

    #[test]
    fn exact_tables_are_monotone_and_subadditive(u in generator_set()) {
        prop_assume!(u.dim() <= 2);
        let table = exact_table(&u, 5, &SearchConfig::default()).unwrap();
        prop_assert!(table.violations(&u).unwrap().is_empty());
    }

    #[test]
    fn roots_of_exact_powers(p in 1i64..500, q in 1i64..50, d in 1u32..=3) {
        let x = BigRational::new(p.into(), q.into());
        let power = num_traits::pow(x.clone(), d as usize);
        prop_assert_eq!(Real::root_of_rational(&power, d), Real::from_rational(&x));
    }
}
