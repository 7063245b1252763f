//! Realizability as an ideal right-angled polyhedron.
//!
//! With every dihedral angle equal to pi/2 all dual weights are pi/2. Dual
//! faces then have weight 2*pi exactly when they are quadrilaterals, which
//! holds for every 4-valent graph, and a non-facial dual cycle of length `k`
//! has weight `k*pi/2`. The dual of a spherical 4-valent graph is bipartite,
//! so the only cycles that can violate the strict inequality are non-facial
//! 4-cycles.

use std::fmt;

use crate::planar::{trace_faces, FaceStructure, PlanarGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidityWitness {
    NotFourValent {
        vertex: usize,
        degree: usize,
    },
    NotThreeConnected {
        separator: Vec<usize>,
    },
    /// Four faces, cyclically adjacent, that do not meet at a common vertex.
    NonFacialDualCycle {
        faces: [usize; 4],
    },
}

impl fmt::Display for ValidityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidityWitness::NotFourValent { vertex, degree } => {
                write!(f, "not 4-valent: vertex {vertex} has degree {degree}")
            }
            ValidityWitness::NotThreeConnected { separator } => {
                write!(f, "not 3-connected: separating set {separator:?}")
            }
            ValidityWitness::NonFacialDualCycle { faces } => {
                write!(f, "non-facial 4-cycle in dual through faces {faces:?}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub is_valid: bool,
    pub failure_witness: Option<ValidityWitness>,
}

impl ValidityReport {
    fn valid() -> Self {
        ValidityReport {
            is_valid: true,
            failure_witness: None,
        }
    }

    fn invalid(w: ValidityWitness) -> Self {
        ValidityReport {
            is_valid: false,
            failure_witness: Some(w),
        }
    }
}

pub fn check_validity(g: &PlanarGraph) -> ValidityReport {
    check_validity_with(g, &trace_faces(g))
}

pub fn check_validity_with(g: &PlanarGraph, fs: &FaceStructure) -> ValidityReport {
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) != 4) {
        return ValidityReport::invalid(ValidityWitness::NotFourValent {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(separator) = find_separator(g) {
        return ValidityReport::invalid(ValidityWitness::NotThreeConnected { separator });
    }
    if let Some(faces) = non_facial_dual_four_cycle(g, fs) {
        return ValidityReport::invalid(ValidityWitness::NonFacialDualCycle { faces });
    }
    ValidityReport::valid()
}

/// A vertex set of size at most two whose removal disconnects `g`.
fn find_separator(g: &PlanarGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 4 {
        return Some((0..n.saturating_sub(1)).collect());
    }
    for u in 0..n {
        if !g.is_connected_without(&[u]) {
            return Some(vec![u]);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.is_connected_without(&[u, v]) {
                return Some(vec![u, v]);
            }
        }
    }
    None
}

/// Searches all dual 4-cycles `x - y1 - z - y2` (found via pairs `x, z` at
/// distance two) and returns one that is not the face around a vertex.
fn non_facial_dual_four_cycle(g: &PlanarGraph, fs: &FaceStructure) -> Option<[usize; 4]> {
    let nf = fs.face_count();
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (f, cycle) in fs.faces().iter().enumerate() {
        let k = cycle.len();
        for i in 0..k {
            let (u, w) = (cycle[i], cycle[(i + 1) % k]);
            let back = fs.face_of(g, w, u).expect("symmetric rotation");
            if !adjacent[f].contains(&back) {
                adjacent[f].push(back);
            }
        }
    }
    // Dual faces: around each vertex, faces in cyclic order; opposite pairs
    // (f0, f2) with (f1, f3) and vice versa.
    let mut facial = std::collections::HashSet::new();
    for v in 0..g.vertex_count() {
        let around: Vec<usize> = fs.faces_at(v).collect();
        let key =
            |a: usize, b: usize, c: usize, d: usize| ((a.min(b), a.max(b)), (c.min(d), c.max(d)));
        facial.insert(key(around[0], around[2], around[1], around[3]));
        facial.insert(key(around[1], around[3], around[0], around[2]));
    }
    for x in 0..nf {
        for &y1 in &adjacent[x] {
            for &z in &adjacent[y1] {
                if z <= x {
                    continue;
                }
                for &y2 in &adjacent[z] {
                    if y2 <= y1 || !adjacent[x].contains(&y2) {
                        continue;
                    }
                    if !facial.contains(&((x, z), (y1, y2))) {
                        return Some([x, y1, z, y2]);
                    }
                }
            }
        }
    }
    None
}
