use std::f64::consts::PI;

use proptest::prelude::*;

use ideal_polyhedra::analysis::{distinct_volumes, glue_along_face, reversed_matching};
use ideal_polyhedra::enumeration::{
    antiprism, check_validity, edge_twist, twist_candidates, twisted_antiprism,
};
use ideal_polyhedra::planar::{
    canonical_code, encode_planar_code, parse_planar_code, trace_faces, PlanarGraph,
    PLANAR_CODE_HEADER,
};
use ideal_polyhedra::solids;
use ideal_polyhedra::volume::{antiprism_volume, ideal_volume, lobachevsky};

fn fixtures() -> Vec<PlanarGraph> {
    vec![
        antiprism(3).unwrap(),
        antiprism(4).unwrap(),
        antiprism(7).unwrap(),
        twisted_antiprism(4).unwrap(),
        twisted_antiprism(6).unwrap(),
        solids::rhombicuboctahedron(),
        solids::pseudo_rhombicuboctahedron(),
    ]
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A graph with every rotation list cyclically shifted by `shifts`.
fn shift_rotations(g: &PlanarGraph, shifts: &[usize]) -> PlanarGraph {
    let mut h = g.clone();
    for (v, &k) in shifts.iter().enumerate().take(g.vertex_count()) {
        h = h.rotate_list(v, k);
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lobachevsky_is_odd(x in -10.0f64..10.0) {
        let a = lobachevsky(x).unwrap();
        let b = lobachevsky(-x).unwrap();
        prop_assert!((a + b).abs() < 1e-14);
    }

    #[test]
    fn lobachevsky_has_period_pi(x in -10.0f64..10.0, k in -3i32..=3) {
        let a = lobachevsky(x).unwrap();
        let b = lobachevsky(x + k as f64 * PI).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn lobachevsky_derivative(x in 0.05f64..(PI - 0.05)) {
        let h = 1e-5;
        let d = (lobachevsky(x + h).unwrap() - lobachevsky(x - h).unwrap()) / (2.0 * h);
        let expected = -(2.0 * x.sin()).ln();
        prop_assert!((d - expected).abs() < 1e-8, "{d} vs {expected}");
    }

    #[test]
    fn lobachevsky_doubling(x in 0.01f64..3.0) {
        // L(2x) = 2 L(x) + 2 L(x + pi/2)
        let lhs = lobachevsky(2.0 * x).unwrap();
        let rhs = 2.0 * lobachevsky(x).unwrap() + 2.0 * lobachevsky(x + PI / 2.0).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn code_invariant_under_relabelling(idx in 0usize..7, seed in any::<u64>()) {
        let g = &fixtures()[idx];
        let n = g.vertex_count();
        let perm = {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            p
        };
        let shifts: Vec<usize> = (0..n).map(|i| (seed as usize >> (i % 32)) % 4).collect();
        let h = shift_rotations(&g.relabel(&perm).unwrap(), &shifts);
        prop_assert_eq!(canonical_code(g), canonical_code(&h));
        prop_assert_eq!(canonical_code(g), canonical_code(&h.mirror()));
    }

    #[test]
    fn planar_code_round_trip(idx in 0usize..7, perm in permutation(24)) {
        let g = &fixtures()[idx];
        let n = g.vertex_count();
        let perm: Vec<usize> = {
            // restrict the shuffled 0..24 to the labels below n, keeping order
            perm.into_iter().filter(|&x| x < n).collect()
        };
        let h = g.relabel(&perm).unwrap();
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend(encode_planar_code(&h).unwrap());
        bytes.extend(encode_planar_code(g).unwrap());
        let back = parse_planar_code(&bytes).unwrap();
        prop_assert_eq!(back.len(), 2);
        prop_assert_eq!(&back[0], &h);
        let mut again = PLANAR_CODE_HEADER.to_vec();
        for b in &back {
            again.extend(encode_planar_code(b).unwrap());
        }
        prop_assert_eq!(again, bytes);
    }

    #[test]
    fn twist_sequences_keep_euler_invariants(n in 3usize..7, choices in prop::collection::vec(any::<prop::sample::Index>(), 0..6)) {
        let mut g = antiprism(n).unwrap();
        for choice in choices {
            let fs = trace_faces(&g);
            let candidates = twist_candidates(&fs);
            if candidates.is_empty() {
                break;
            }
            g = edge_twist(&g, choice.get(&candidates)).unwrap();
            let fs = trace_faces(&g);
            let (v, e, f) = (g.vertex_count(), g.edge_count(), fs.face_count());
            prop_assert!(g.is_four_valent());
            prop_assert_eq!(v + f, e + 2);
            prop_assert_eq!(2 * e, 4 * v);
            prop_assert_eq!(f, v + 2);
            prop_assert!(fs.face_vector().satisfies_triangle_identity());
            // faces partition the darts
            prop_assert_eq!(fs.faces().iter().map(Vec::len).sum::<usize>(), 2 * e);
        }
    }

    #[test]
    fn gluing_antiprisms_along_triangles(n in 3usize..8, m in 3usize..8, offset in 0usize..3) {
        let a = antiprism(n).unwrap();
        let b = antiprism(m).unwrap();
        let fa = trace_faces(&a);
        let fb = trace_faces(&b);
        let ta = (0..fa.face_count()).find(|&f| fa.face(f).len() == 3).unwrap();
        let tb = (0..fb.face_count()).find(|&f| fb.face(f).len() == 3).unwrap();
        let g = glue_along_face(&a, ta, &b, tb, &reversed_matching(fa.face(ta), fb.face(tb), offset)).unwrap();
        let fs = trace_faces(&g);
        prop_assert!(g.is_four_valent());
        prop_assert_eq!(g.vertex_count(), 2 * n + 2 * m - 3);
        prop_assert_eq!(fs.face_count(), (2 * n + 2) + (2 * m + 2) - 5);
        prop_assert_eq!(g.vertex_count() + fs.face_count(), g.edge_count() + 2);
        prop_assert!(check_validity(&g).is_valid);
        let sum = antiprism_volume(n).unwrap() + antiprism_volume(m).unwrap();
        prop_assert!((ideal_volume(&g).unwrap() - sum).abs() < 1e-8);
    }

    #[test]
    fn distinct_volumes_are_sorted_and_separated(values in prop::collection::vec(0.0f64..20.0, 0..50)) {
        let d = distinct_volumes(values.iter().copied());
        prop_assert!(d.windows(2).all(|w| w[1] - w[0] > 1e-6));
        for v in &values {
            prop_assert!(d.iter().any(|x| *x <= *v && v - x <= 1e-6));
        }
        // adding a value keeps every old value represented
        let mut more = values.clone();
        more.push(10.5);
        let d2 = distinct_volumes(more);
        prop_assert!(d.iter().all(|x| d2.contains(x) || d2.iter().any(|y| (x - y).abs() <= 1e-6)));
    }
}
