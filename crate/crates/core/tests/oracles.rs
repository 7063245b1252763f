//! Checks against independent computations: numerical quadrature for the
//! Lobachevsky function and a direct isomorphism test for canonical codes.

use std::f64::consts::PI;

use ideal_polyhedra::enumeration::{antiprism, enumerate, twisted_antiprism};
use ideal_polyhedra::planar::{canonical_code, dual, PlanarGraph};
use ideal_polyhedra::solids;
use ideal_polyhedra::volume::lobachevsky;

/// `-int_0^x log|2 sin t| dt` by tanh-sinh quadrature, which absorbs the
/// logarithmic singularity at 0.
fn lobachevsky_quadrature(x: f64) -> f64 {
    let h = 1.0 / 64.0;
    let mut sum = 0.0;
    for k in -256..=256 {
        let u = k as f64 * h;
        let s = PI / 2.0 * u.sinh();
        // abscissa as a fraction of x, computed without cancellation near 0
        let frac = 1.0 / (1.0 + (-2.0 * s).exp());
        let t = x * frac;
        if t <= 0.0 || t >= x {
            continue;
        }
        let weight = x * (PI / 2.0) * u.cosh() / (2.0 * s.cosh() * s.cosh());
        sum += weight * (2.0 * t.sin()).abs().ln();
    }
    -sum * h
}

#[test]
fn quadrature_agrees_at_special_angles() {
    for x in [PI / 6.0, PI / 3.0, PI / 4.0] {
        let q = lobachevsky_quadrature(x);
        let s = lobachevsky(x).unwrap();
        assert!((q - s).abs() < 1e-13, "x = {x}: quadrature {q}, series {s}");
    }
    // known closed relation L(pi/3) = (2/3) L(pi/6)
    let l6 = lobachevsky_quadrature(PI / 6.0);
    let l3 = lobachevsky_quadrature(PI / 3.0);
    assert!((l3 - 2.0 / 3.0 * l6).abs() < 1e-13);
    assert!((l6 - 0.5074708032049159).abs() < 1e-13);
}

#[test]
fn quadrature_agrees_on_a_sweep() {
    for i in 1..100 {
        let x = PI * i as f64 / 100.0;
        let q = lobachevsky_quadrature(x);
        let s = lobachevsky(x).unwrap();
        assert!((q - s).abs() < 1e-12, "x = {x}: quadrature {q}, series {s}");
    }
}

/// Whether some bijection carries the rotation system of `a` onto that of
/// `b`, allowing reflection. Fixing the image of one dart forces the rest.
fn isomorphic(a: &PlanarGraph, b: &PlanarGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    for reflect in [false, true] {
        let b = if reflect { b.mirror() } else { b.clone() };
        for w in 0..n {
            for slot in 0..b.degree(w) {
                if extends(a, &b, (0, 0), (w, slot)) {
                    return true;
                }
            }
        }
    }
    false
}

fn extends(
    a: &PlanarGraph,
    b: &PlanarGraph,
    start_a: (usize, usize),
    start_b: (usize, usize),
) -> bool {
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // (vertex in a, slot offset into a, vertex in b, slot offset into b)
    let mut stack = vec![(start_a.0, start_a.1, start_b.0, start_b.1)];
    map[start_a.0] = start_b.0;
    used[start_b.0] = true;
    while let Some((va, sa, vb, sb)) = stack.pop() {
        let (na, nb) = (a.neighbors(va), b.neighbors(vb));
        if na.len() != nb.len() {
            return false;
        }
        let d = na.len();
        for t in 0..d {
            let x = na[(sa + t) % d];
            let y = nb[(sb + t) % d];
            if map[x] == usize::MAX {
                if used[y] {
                    return false;
                }
                map[x] = y;
                used[y] = true;
                let px = a.position(x, va).unwrap();
                let Some(py) = b.position(y, vb) else {
                    return false;
                };
                stack.push((x, px, y, py));
            } else if map[x] != y {
                return false;
            }
        }
    }
    true
}

#[test]
fn codes_agree_with_direct_isomorphism_on_census() {
    let mut graphs = Vec::new();
    enumerate(15, |_, g| graphs.push(g.clone())).unwrap();
    // add a relabelled and a mirrored copy of each
    let mut all: Vec<PlanarGraph> = Vec::new();
    for g in &graphs {
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        let perm = if is_permutation(&perm) {
            perm
        } else {
            (0..n).rev().collect()
        };
        all.push(g.clone());
        all.push(g.relabel(&perm).unwrap());
        all.push(g.mirror());
    }
    let codes: Vec<_> = all.iter().map(canonical_code).collect();
    for i in 0..all.len() {
        for j in i..all.len() {
            assert_eq!(
                codes[i] == codes[j],
                isomorphic(&all[i], &all[j]),
                "graphs {i} and {j} disagree"
            );
        }
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
}

#[test]
fn mirror_image_shares_a_code() {
    let g = solids::pseudo_rhombicuboctahedron();
    assert!(isomorphic(&g, &g.mirror()));
    assert_eq!(canonical_code(&g), canonical_code(&g.mirror()));
    assert!(!isomorphic(&g, &solids::rhombicuboctahedron()));
}

#[test]
fn dual_of_dual_is_the_original() {
    for g in [
        antiprism(5).unwrap(),
        twisted_antiprism(6).unwrap(),
        solids::rhombicuboctahedron(),
    ] {
        let d = dual(&g).unwrap();
        assert!(d.rotation().iter().all(|r| r.len() >= 3));
        let dd = dual(&d).unwrap();
        assert!(isomorphic(&g, &dd));
        assert_eq!(canonical_code(&g), canonical_code(&dd));
    }
}
