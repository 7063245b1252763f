//! Ideal triangulations by coning from an apex vertex.
//!
//! Every face not containing the apex is fan-triangulated from its lowest
//! index vertex and each triangle is coned to the apex. Placing the apex at
//! infinity in the upper half-space model, a tetrahedron `(apex, x0, x1, x2)`
//! has the dihedral angle of the Euclidean triangle corner at `x_s` both on
//! the vertical edge `apex - x_s` and on the opposite edge `x_{s+1} - x_{s+2}`.
//! One angle variable per tetrahedron corner therefore covers an opposite
//! pair of tetrahedron edges.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::enumeration::check_validity_with;
use crate::error::{Error, Result};
use crate::planar::{trace_faces, FaceStructure, PlanarGraph};

/// Role of a triangulation edge in the polyhedron, fixing the required sum
/// of tetrahedron angles around it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// An edge of the polyhedron: the dihedral angle pi/2.
    Polyhedron,
    /// A diagonal inside a face: the tetrahedra are coplanar there, pi.
    Diagonal,
    /// An edge through the interior: a full turn, 2*pi.
    Interior,
}

impl EdgeKind {
    pub fn target(self) -> f64 {
        match self {
            EdgeKind::Polyhedron => FRAC_PI_2,
            EdgeKind::Diagonal => PI,
            EdgeKind::Interior => TAU,
        }
    }
}

/// All tetrahedron edges sharing one pair of endpoints. `members` lists
/// `(tetrahedron, corner)` angle variables incident to the edge.
#[derive(Clone, Debug)]
pub struct EdgeClass {
    pub endpoints: (usize, usize),
    pub kind: EdgeKind,
    pub members: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct IdealTriangulation {
    apex: usize,
    /// `[x0, x1, x2]`: the base triangle; the fourth vertex is the apex.
    tetrahedra: Vec<[usize; 3]>,
    classes: Vec<EdgeClass>,
}

impl IdealTriangulation {
    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn tetrahedra(&self) -> &[[usize; 3]] {
        &self.tetrahedra
    }

    pub fn tetrahedron_count(&self) -> usize {
        self.tetrahedra.len()
    }

    pub fn edge_classes(&self) -> &[EdgeClass] {
        &self.classes
    }

    /// Number of angle variables, three per tetrahedron.
    pub fn angle_count(&self) -> usize {
        3 * self.tetrahedra.len()
    }
}

/// The apex with the largest total length of incident faces (fewest
/// tetrahedra), ties to the lowest index.
pub fn default_apex(g: &PlanarGraph, fs: &FaceStructure) -> usize {
    apex_order(g, fs)[0]
}

/// All vertices, best apex first.
pub fn apex_order(g: &PlanarGraph, fs: &FaceStructure) -> Vec<usize> {
    let weight = |v: usize| -> usize { fs.faces_at(v).map(|f| fs.face(f).len()).sum() };
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(weight(v)), v));
    order
}

pub fn triangulate(g: &PlanarGraph) -> Result<IdealTriangulation> {
    let fs = trace_faces(g);
    let report = check_validity_with(g, &fs);
    if let Some(w) = report.failure_witness {
        return Err(Error::Precondition(format!("graph is not realizable: {w}")));
    }
    Ok(cone_from(g, &fs, default_apex(g, &fs)))
}

pub fn triangulate_with_apex(g: &PlanarGraph, apex: usize) -> Result<IdealTriangulation> {
    if apex >= g.vertex_count() {
        return Err(Error::Domain(format!("apex {apex} out of range")));
    }
    let fs = trace_faces(g);
    let report = check_validity_with(g, &fs);
    if let Some(w) = report.failure_witness {
        return Err(Error::Precondition(format!("graph is not realizable: {w}")));
    }
    Ok(cone_from(g, &fs, apex))
}

pub(crate) fn cone_from(g: &PlanarGraph, fs: &FaceStructure, apex: usize) -> IdealTriangulation {
    let n = g.vertex_count();
    let mut on_apex_face = vec![false; n];
    let apex_faces: Vec<usize> = fs.faces_at(apex).collect();
    for &f in &apex_faces {
        for &v in fs.face(f) {
            on_apex_face[v] = true;
        }
    }

    let mut tetrahedra = Vec::new();
    for (f, cycle) in fs.faces().iter().enumerate() {
        if apex_faces.contains(&f) {
            continue;
        }
        let k = cycle.len();
        let start = (0..k).min_by_key(|&i| cycle[i]).expect("non-empty face");
        let x0 = cycle[start];
        for i in 1..k - 1 {
            tetrahedra.push([x0, cycle[(start + i) % k], cycle[(start + i + 1) % k]]);
        }
    }

    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut classes: Vec<EdgeClass> = Vec::new();
    let mut add = |a: usize, b: usize, kind: EdgeKind, member: (usize, usize)| {
        let key = (a.min(b), a.max(b));
        let id = *index.entry(key).or_insert_with(|| {
            classes.push(EdgeClass {
                endpoints: key,
                kind,
                members: Vec::new(),
            });
            classes.len() - 1
        });
        classes[id].members.push(member);
    };
    for (t, tri) in tetrahedra.iter().enumerate() {
        for s in 0..3 {
            let x = tri[s];
            let vertical = if g.has_edge(apex, x) {
                EdgeKind::Polyhedron
            } else if on_apex_face[x] {
                EdgeKind::Diagonal
            } else {
                EdgeKind::Interior
            };
            add(apex, x, vertical, (t, s));
            let (y, z) = (tri[(s + 1) % 3], tri[(s + 2) % 3]);
            let base = if g.has_edge(y, z) {
                EdgeKind::Polyhedron
            } else {
                EdgeKind::Diagonal
            };
            add(y, z, base, (t, s));
        }
    }
    IdealTriangulation {
        apex,
        tetrahedra,
        classes,
    }
}
