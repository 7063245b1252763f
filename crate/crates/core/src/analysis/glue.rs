//! Gluing two right-angled polyhedra along congruent faces.
//!
//! The dihedral angles along the glued face add up to pi, so its edges
//! disappear and the faces on either side merge. Every vertex of the glued
//! face keeps its two outer neighbours from each side.

use crate::error::{Error, Result};
use crate::planar::{trace_faces, PlanarGraph};

/// Matching that sends `c1[i]` to `c2[(offset - i) mod k]`: the cycles are
/// traversed in opposite directions, as two outward-oriented faces must be.
pub fn reversed_matching(c1: &[usize], c2: &[usize], offset: usize) -> Vec<(usize, usize)> {
    let k = c1.len();
    (0..k)
        .map(|i| (c1[i], c2[(offset + k - i % k) % k]))
        .collect()
}

/// Glues face `f1` of `g1` to face `f2` of `g2`. `matching` pairs every
/// vertex of `f1` with a vertex of `f2` and must reverse the cyclic order.
///
/// Vertices of `g1` keep their labels; the unmatched vertices of `g2`
/// follow in increasing order.
pub fn glue_along_face(
    g1: &PlanarGraph,
    f1: usize,
    g2: &PlanarGraph,
    f2: usize,
    matching: &[(usize, usize)],
) -> Result<PlanarGraph> {
    if !g1.is_four_valent() || !g2.is_four_valent() {
        return Err(Error::Precondition("gluing needs 4-valent graphs".into()));
    }
    let fs1 = trace_faces(g1);
    let fs2 = trace_faces(g2);
    if f1 >= fs1.face_count() || f2 >= fs2.face_count() {
        return Err(Error::Precondition(format!(
            "face index {f1} or {f2} out of range"
        )));
    }
    let c1 = fs1.face(f1);
    let c2 = fs2.face(f2);
    let k = c1.len();
    if c2.len() != k {
        return Err(Error::Precondition(format!(
            "faces have different lengths {k} and {}",
            c2.len()
        )));
    }
    if matching.len() != k {
        return Err(Error::Precondition(format!(
            "matching has {} pairs, face has {k}",
            matching.len()
        )));
    }

    // partner[i]: position in c2 of the vertex matched with c1[i]
    let mut partner = vec![usize::MAX; k];
    let mut used = vec![false; k];
    for &(a, b) in matching {
        let i = c1.iter().position(|&x| x == a);
        let j = c2.iter().position(|&x| x == b);
        let (Some(i), Some(j)) = (i, j) else {
            return Err(Error::Precondition(format!(
                "pair ({a}, {b}) is not on the glued faces"
            )));
        };
        if partner[i] != usize::MAX || used[j] {
            return Err(Error::Precondition("matching is not a bijection".into()));
        }
        partner[i] = j;
        used[j] = true;
    }
    for i in 0..k {
        if partner[(i + 1) % k] != (partner[i] + k - 1) % k {
            return Err(Error::Precondition(
                "matching must reverse the cyclic order of the faces".into(),
            ));
        }
    }

    let n1 = g1.vertex_count();
    let mut label2 = vec![usize::MAX; g2.vertex_count()];
    for i in 0..k {
        label2[c2[partner[i]]] = c1[i];
    }
    let mut next = n1;
    for slot in label2.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }

    let mut rotation: Vec<Vec<usize>> = g1.rotation().to_vec();
    rotation.resize(next, Vec::new());
    for v in 0..g2.vertex_count() {
        if c2.contains(&v) {
            continue;
        }
        rotation[label2[v]] = g2.neighbors(v).iter().map(|&w| label2[w]).collect();
    }
    for i in 0..k {
        let s = c1[i];
        let prev = c1[(i + k - 1) % k];
        let after = c1[(i + 1) % k];
        let t = c2[partner[i]];
        // the outer part of each rotation, between the two face neighbours
        let outer1 = arc(g1.neighbors(s), after, prev);
        let outer2 = arc(
            g2.neighbors(t),
            c2[partner[(i + k - 1) % k]],
            c2[partner[(i + 1) % k]],
        );
        let mut list = outer1;
        list.extend(outer2.into_iter().map(|w| label2[w]));
        rotation[s] = list;
    }

    let glued = PlanarGraph::new(rotation).map_err(|e| match e {
        Error::Structure(reason) => {
            Error::Precondition(format!("glued graph is not a polyhedron: {reason}"))
        }
        e => e,
    })?;
    debug_assert_eq!(
        trace_faces(&glued).face_count(),
        fs1.face_count() + fs2.face_count() - 2 - k
    );
    Ok(glued)
}

/// Rotation entries strictly after `from` and strictly before `to`.
fn arc(rotation: &[usize], from: usize, to: usize) -> Vec<usize> {
    let d = rotation.len();
    let start = rotation
        .iter()
        .position(|&x| x == from)
        .expect("face neighbour");
    (1..d)
        .map(|t| rotation[(start + t) % d])
        .take_while(|&x| x != to)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{antiprism, check_validity, twisted_antiprism};
    use crate::planar::canonical_code;
    use crate::volume::{antiprism_volume, ideal_volume};

    fn glue_first(
        g1: &PlanarGraph,
        g2: &PlanarGraph,
        len: usize,
        offset: usize,
    ) -> Result<PlanarGraph> {
        let fs1 = trace_faces(g1);
        let fs2 = trace_faces(g2);
        let f1 = (0..fs1.face_count())
            .find(|&f| fs1.face(f).len() == len)
            .unwrap();
        let f2 = (0..fs2.face_count())
            .find(|&f| fs2.face(f).len() == len)
            .unwrap();
        let m = reversed_matching(fs1.face(f1), fs2.face(f2), offset);
        glue_along_face(g1, f1, g2, f2, &m)
    }

    #[test]
    fn antiprisms_five_and_three_give_twisted_six() {
        let target = canonical_code(&twisted_antiprism(6).unwrap());
        for offset in 0..3 {
            let g = glue_first(&antiprism(5).unwrap(), &antiprism(3).unwrap(), 3, offset).unwrap();
            assert_eq!(g.vertex_count(), 10 + 6 - 3);
            assert_eq!(trace_faces(&g).face_count(), 12 + 8 - 2 - 3);
            assert_eq!(canonical_code(&g), target);
        }
    }

    #[test]
    fn two_a4_along_square_double_the_volume() {
        let a4 = antiprism(4).unwrap();
        let g = glue_first(&a4, &a4.mirror(), 4, 0).unwrap();
        assert!(g.is_four_valent());
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 16 + 16 - 8);
        assert_eq!(trace_faces(&g).face_count(), 14);
        // the merged side faces meet only at vertices, so no belt appears
        assert!(check_validity(&g).is_valid);
        let v = ideal_volume(&g).unwrap();
        assert!((v - 2.0 * antiprism_volume(4).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_matchings() {
        let a5 = antiprism(5).unwrap();
        let a3 = antiprism(3).unwrap();
        let fs5 = trace_faces(&a5);
        let fs3 = trace_faces(&a3);
        let tri5 = (0..fs5.face_count())
            .find(|&f| fs5.face(f).len() == 3)
            .unwrap();
        let tri3 = 0;
        let c1 = fs5.face(tri5);
        let c2 = fs3.face(tri3);
        // same orientation instead of reversed
        let same: Vec<_> = (0..3).map(|i| (c1[i], c2[i])).collect();
        assert!(matches!(
            glue_along_face(&a5, tri5, &a3, tri3, &same),
            Err(Error::Precondition(_))
        ));
        let square = (0..fs5.face_count())
            .find(|&f| fs5.face(f).len() == 5)
            .unwrap();
        let m = reversed_matching(c1, c2, 0);
        assert!(matches!(
            glue_along_face(&a5, square, &a3, tri3, &m),
            Err(Error::Precondition(_))
        ));
    }
}
