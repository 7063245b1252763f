//! Polyhedra whose triangular faces are pairwise vertex-disjoint.

use super::glue::glue_along_face;
use crate::error::{Error, Result};
use crate::planar::{trace_faces, FaceStructure, PlanarGraph};

/// True iff no two triangular faces share a vertex.
pub fn is_itr(g: &PlanarGraph) -> bool {
    is_itr_with(g, &trace_faces(g))
}

pub fn is_itr_with(g: &PlanarGraph, fs: &FaceStructure) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    for f in fs.faces().iter().filter(|f| f.len() == 3) {
        for &v in f {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
    }
    true
}

/// Smallest face count an isolated-triangle polyhedron with `p3` triangles
/// can have: each triangle meets three quadrilaterals or longer faces, and
/// those are all distinct.
pub fn itr_face_bound(p3: usize) -> Result<usize> {
    if p3 < 8 {
        return Err(Error::Domain(format!(
            "a polyhedron has at least 8 triangles, got {p3}"
        )));
    }
    Ok(3 * p3 + 2)
}

/// Glues `g` to its mirror image along triangle `t`. The result has
/// `2 p3 - 2` triangles, all still isolated.
pub fn itr_double(g: &PlanarGraph, t: usize) -> Result<PlanarGraph> {
    let fs = trace_faces(g);
    if !is_itr_with(g, &fs) {
        return Err(Error::Precondition(
            "doubling needs isolated triangles".into(),
        ));
    }
    if t >= fs.face_count() || fs.face(t).len() != 3 {
        return Err(Error::Precondition(format!("face {t} is not a triangle")));
    }
    let mirror = g.mirror();
    let mfs = trace_faces(&mirror);
    let mut cycle = fs.face(t).to_vec();
    cycle.sort_unstable();
    let mt = (0..mfs.face_count())
        .find(|&f| {
            let mut c = mfs.face(f).to_vec();
            c.sort_unstable();
            c == cycle
        })
        .expect("mirror has the same faces");
    let identity: Vec<(usize, usize)> = fs.face(t).iter().map(|&v| (v, v)).collect();
    glue_along_face(g, t, &mirror, mt, &identity)
}

/// Search restriction for isolated-triangle polyhedra with at most
/// `max_faces` faces. An edge-twist adds one face and removes at most two
/// triangles, so a graph with `F` faces and `p3` triangles can only lead to
/// one if `max_faces >= 3 max(8, p3 - 2 (max_faces - F)) + 2`.
pub fn itr_reachable(max_faces: usize) -> impl Fn(&PlanarGraph, &FaceStructure) -> bool + Sync {
    move |_g, fs| {
        let faces = fs.face_count();
        let p3 = fs.faces().iter().filter(|f| f.len() == 3).count();
        let steps = max_faces.saturating_sub(faces);
        let least = p3.saturating_sub(2 * steps).max(8);
        max_faces >= 3 * least + 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{antiprism, check_validity};
    use crate::solids;

    fn triangles(g: &PlanarGraph) -> usize {
        trace_faces(g).face_vector().get(3)
    }

    #[test]
    fn small_examples() {
        assert!(!is_itr(&antiprism(3).unwrap()));
        assert!(!is_itr(&antiprism(9).unwrap()));
        assert!(is_itr(&solids::rhombicuboctahedron()));
        assert!(is_itr(&solids::pseudo_rhombicuboctahedron()));
    }

    #[test]
    fn face_bound() {
        assert_eq!(itr_face_bound(8).unwrap(), 26);
        assert_eq!(itr_face_bound(9).unwrap(), 29);
        assert_eq!(itr_face_bound(14).unwrap(), 44);
        assert!(itr_face_bound(7).is_err());
    }

    #[test]
    fn doubling_twice() {
        let g = solids::rhombicuboctahedron();
        let fs = trace_faces(&g);
        let t = (0..fs.face_count())
            .find(|&f| fs.face(f).len() == 3)
            .unwrap();
        let d = itr_double(&g, t).unwrap();
        assert_eq!(trace_faces(&d).face_count(), 47);
        assert_eq!(triangles(&d), 14);
        assert!(is_itr(&d));
        assert!(check_validity(&d).is_valid);

        let dfs = trace_faces(&d);
        let t2 = (0..dfs.face_count())
            .find(|&f| dfs.face(f).len() == 3)
            .unwrap();
        let dd = itr_double(&d, t2).unwrap();
        assert_eq!(triangles(&dd), 26);
        assert!(is_itr(&dd));
        assert!(check_validity(&dd).is_valid);
    }

    #[test]
    fn doubling_rejects_non_itr() {
        assert!(matches!(
            itr_double(&antiprism(3).unwrap(), 0),
            Err(Error::Precondition(_))
        ));
        let g = solids::rhombicuboctahedron();
        let fs = trace_faces(&g);
        let square = (0..fs.face_count())
            .find(|&f| fs.face(f).len() == 4)
            .unwrap();
        assert!(matches!(
            itr_double(&g, square),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pruning_rejects_everything_below_26() {
        let keep = itr_reachable(25);
        let g = antiprism(3).unwrap();
        assert!(!keep(&g, &trace_faces(&g)));
        let keep = itr_reachable(26);
        assert!(keep(&g, &trace_faces(&g)));
    }
}
