use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::planar::{trace_faces, FaceStructure, PlanarGraph};

/// Two vertex-disjoint edges on the boundary of one face.
///
/// Both edges are stored in the traversal direction of `face`, so the face
/// reads `e1.0 -> e1.1 -> ... -> e2.0 -> e2.1 -> ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgePair {
    pub e1: (usize, usize),
    pub e2: (usize, usize),
    pub face: usize,
}

impl EdgePair {
    /// Locates the face carrying both edges and orients them along it.
    pub fn find(
        g: &PlanarGraph,
        fs: &FaceStructure,
        e1: (usize, usize),
        e2: (usize, usize),
    ) -> Result<Self> {
        let endpoints = [e1.0, e1.1, e2.0, e2.1];
        for i in 0..4 {
            for j in i + 1..4 {
                if endpoints[i] == endpoints[j] {
                    return Err(Error::Precondition(format!(
                        "edges {e1:?} and {e2:?} do not have four distinct endpoints"
                    )));
                }
            }
        }
        let oriented = |(u, v): (usize, usize)| -> Result<[((usize, usize), usize); 2]> {
            match (fs.face_of(g, u, v), fs.face_of(g, v, u)) {
                (Some(f), Some(b)) => Ok([((u, v), f), ((v, u), b)]),
                _ => Err(Error::Precondition(format!("({u}, {v}) is not an edge"))),
            }
        };
        for (d1, f1) in oriented(e1)? {
            for (d2, f2) in oriented(e2)? {
                if f1 == f2 {
                    return Ok(EdgePair {
                        e1: d1,
                        e2: d2,
                        face: f1,
                    });
                }
            }
        }
        Err(Error::Precondition(format!(
            "edges {e1:?} and {e2:?} do not lie on a common face"
        )))
    }
}

/// All edge pairs eligible for an edge-twist: unordered pairs of disjoint
/// edges on each face. Triangles contribute none.
pub fn twist_candidates(fs: &FaceStructure) -> Vec<EdgePair> {
    let mut out = Vec::new();
    for (f, cycle) in fs.faces().iter().enumerate() {
        let k = cycle.len();
        if k < 4 {
            continue;
        }
        for i in 0..k {
            for j in i + 2..k {
                if (j + 1) % k == i {
                    continue;
                }
                out.push(EdgePair {
                    e1: (cycle[i], cycle[(i + 1) % k]),
                    e2: (cycle[j], cycle[(j + 1) % k]),
                    face: f,
                });
            }
        }
    }
    out
}

/// Removes the two edges of `pair` and joins a new vertex to their four
/// endpoints inside the face. `V`, `E`, `F` grow by 1, 2, 1.
pub fn edge_twist(g: &PlanarGraph, pair: &EdgePair) -> Result<PlanarGraph> {
    let fs = trace_faces(g);
    let checked = EdgePair::find(g, &fs, pair.e1, pair.e2)?;
    if checked.face != pair.face || checked.e1 != pair.e1 || checked.e2 != pair.e2 {
        return Err(Error::Precondition(format!(
            "edge pair {:?}/{:?} is not oriented along face {}",
            pair.e1, pair.e2, pair.face
        )));
    }
    Ok(twist_unchecked(g, pair))
}

/// Convenience form taking unordered edges.
pub fn edge_twist_edges(
    g: &PlanarGraph,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<PlanarGraph> {
    let fs = trace_faces(g);
    let pair = EdgePair::find(g, &fs, e1, e2)?;
    Ok(twist_unchecked(g, &pair))
}

pub(crate) fn twist_unchecked(g: &PlanarGraph, pair: &EdgePair) -> PlanarGraph {
    let (a, b) = pair.e1;
    let (c, d) = pair.e2;
    let v = g.vertex_count();
    let mut rotation = g.rotation().to_vec();
    let mut replace = |x: usize, old: usize| {
        let slot = rotation[x]
            .iter()
            .position(|&y| y == old)
            .expect("edge present");
        rotation[x][slot] = v;
    };
    replace(a, b);
    replace(b, a);
    replace(c, d);
    replace(d, c);
    // succ_v(a) = d and succ_v(c) = b close up the two new faces inside the old one
    rotation.push(vec![a, d, c, b]);
    PlanarGraph::from_rotation_unchecked(rotation)
}

/// The `n`-antiprism: two `n`-gons joined by a band of `2n` triangles.
///
/// Vertices `0..n` form the first `n`-gon, `n..2n` the second.
pub fn antiprism(n: usize) -> Result<PlanarGraph> {
    if n < 3 {
        return Err(Error::Domain(format!("antiprism needs n >= 3, got {n}")));
    }
    let mut points = Vec::with_capacity(2 * n);
    for i in 0..n {
        let t = TAU * i as f64 / n as f64;
        points.push([t.cos(), t.sin()]);
    }
    for i in 0..n {
        let t = TAU * (i as f64 + 0.5) / n as f64;
        points.push([3.0 * t.cos(), 3.0 * t.sin()]);
    }
    let mut edges = Vec::with_capacity(4 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        edges.push((i, j));
        edges.push((n + i, n + j));
        edges.push((i, n + i));
        edges.push((j, n + i));
    }
    PlanarGraph::from_drawing(&points, &edges)
}

/// The twisted antiprism: an edge-twist of `A(n)` on two edges of an
/// `n`-gon that are adjacent through a third edge.
pub fn twisted_antiprism(n: usize) -> Result<PlanarGraph> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "twisted antiprism needs n >= 4, got {n}"
        )));
    }
    let a = antiprism(n)?;
    edge_twist_edges(&a, (0, 1), (2, 3))
}
