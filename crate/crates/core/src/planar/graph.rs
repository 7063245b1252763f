//! Rotation-system representation of embedded spherical graphs.
//!
//! A [`PlanarGraph`] stores, for every vertex, the cyclic order of its
//! neighbours. Faces are traced with the rule "from the dart `u -> w`
//! continue with `w -> succ_w(u)`", where `succ_w(u)` is the neighbour
//! following `u` in the rotation list of `w`.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarGraph {
    rotation: Vec<Vec<usize>>,
}

impl PlanarGraph {
    /// Builds a graph from 0-based rotation lists, checking that it is simple,
    /// symmetric, connected and embedded in the sphere.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::Structure("graph has no vertices".into()));
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            if nbrs.is_empty() {
                return Err(Error::Structure(format!("vertex {v} is isolated")));
            }
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(Error::Structure(format!(
                        "vertex {v} has neighbour {w} out of range"
                    )));
                }
                if w == v {
                    return Err(Error::Structure(format!("loop at vertex {v}")));
                }
                if nbrs[..i].contains(&w) {
                    return Err(Error::Structure(format!(
                        "repeated neighbour {w} at vertex {v}"
                    )));
                }
                if !rotation[w].contains(&v) {
                    return Err(Error::Structure(format!(
                        "asymmetric adjacency: {w} is a neighbour of {v} but not vice versa"
                    )));
                }
            }
        }
        let g = PlanarGraph { rotation };
        if !g.is_connected_without(&[]) {
            return Err(Error::Structure("graph is disconnected".into()));
        }
        let faces = trace_faces(&g).face_count();
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces as i64;
        if chi != 2 {
            return Err(Error::Structure(format!(
                "embedding is not spherical: V - E + F = {chi}"
            )));
        }
        Ok(g)
    }

    /// Skips validation. Callers must guarantee every invariant of [`new`](Self::new).
    pub(crate) fn from_rotation_unchecked(rotation: Vec<Vec<usize>>) -> Self {
        PlanarGraph { rotation }
    }

    /// Builds the rotation system of a crossing-free straight-line drawing.
    pub fn from_drawing(points: &[[f64; 2]], edges: &[(usize, usize)]) -> Result<Self> {
        let adjacency = adjacency_lists(points.len(), edges)?;
        let rotation = adjacency
            .into_iter()
            .enumerate()
            .map(|(v, mut nbrs)| {
                let [px, py] = points[v];
                let angle = |w: &usize| {
                    let [qx, qy] = points[*w];
                    (qy - py).atan2(qx - px)
                };
                // clockwise
                nbrs.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
                nbrs
            })
            .collect();
        PlanarGraph::new(rotation)
    }

    /// Builds the rotation system of the 1-skeleton of a convex polyhedron.
    ///
    /// Neighbours are ordered around the direction from the vertex centroid
    /// to each vertex, which lies strictly inside the tangent cone of a
    /// convex body.
    pub fn from_convex_polyhedron(points: &[[f64; 3]], edges: &[(usize, usize)]) -> Result<Self> {
        let adjacency = adjacency_lists(points.len(), edges)?;
        let n = points.len() as f64;
        let centroid = points.iter().fold([0.0; 3], |acc, p| {
            [acc[0] + p[0] / n, acc[1] + p[1] / n, acc[2] + p[2] / n]
        });
        let rotation = adjacency
            .into_iter()
            .enumerate()
            .map(|(v, mut nbrs)| {
                let p = points[v];
                let normal = normalize(sub(p, centroid));
                let first = sub(points[nbrs[0]], p);
                let e1 = normalize(sub(first, scale(normal, dot(first, normal))));
                let e2 = cross(normal, e1);
                let angle = |w: &usize| {
                    let d = sub(points[*w], p);
                    dot(d, e2).atan2(dot(d, e1))
                };
                // clockwise when viewed from outside
                nbrs.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
                nbrs
            })
            .collect();
        PlanarGraph::new(rotation)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn into_rotation(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    pub fn is_four_valent(&self) -> bool {
        self.rotation.iter().all(|r| r.len() == 4)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Position of `u` in the rotation list of `w`.
    pub fn position(&self, w: usize, u: usize) -> Option<usize> {
        self.rotation[w].iter().position(|&x| x == u)
    }

    /// The neighbour following `u` in the rotation of `w`.
    pub fn succ(&self, w: usize, u: usize) -> usize {
        let r = &self.rotation[w];
        let i = self.position(w, u).expect("succ: not a neighbour");
        r[(i + 1) % r.len()]
    }

    /// Undirected edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rotation
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> Self {
        PlanarGraph {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Relabels vertices with `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::Domain("permutation length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("not a permutation".into()));
            }
        }
        let mut rotation = vec![Vec::new(); n];
        for (old, r) in self.rotation.iter().enumerate() {
            rotation[perm[old]] = r.iter().map(|&w| perm[w]).collect();
        }
        Ok(PlanarGraph { rotation })
    }

    /// Cyclically shifts the rotation list of `v` by `k` positions.
    pub fn rotate_list(&self, v: usize, k: usize) -> Self {
        let mut rotation = self.rotation.clone();
        let len = rotation[v].len();
        rotation[v].rotate_left(k % len);
        PlanarGraph { rotation }
    }

    /// Whether the graph stays connected after deleting `removed`.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !seen[v]) else {
            return true;
        };
        seen[start] = true;
        let mut reached = 1 + removed.len();
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertex_count(),
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().map(|&w| w + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        if json.rotation.len() != json.vertices {
            return Err(Error::Structure(format!(
                "declared {} vertices but {} rotation lists",
                json.vertices,
                json.rotation.len()
            )));
        }
        let rotation = json
            .rotation
            .iter()
            .enumerate()
            .map(|(v, r)| {
                r.iter()
                    .map(|&w| {
                        if w == 0 || w > json.vertices {
                            Err(Error::Structure(format!(
                                "vertex {} has neighbour index {w} outside 1..={}",
                                v + 1,
                                json.vertices
                            )))
                        } else {
                            Ok(w - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PlanarGraph::new(rotation)
    }
}

/// JSON interchange form: 1-based neighbour indices in rotation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub rotation: Vec<Vec<usize>>,
}

/// Count of `k`-gonal faces for each `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceVector(pub BTreeMap<usize, usize>);

impl FaceVector {
    pub fn get(&self, k: usize) -> usize {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn max_face_len(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    /// `p_3 = 8 + sum_{k >= 5} p_k (k - 4)`, the triangle count forced on
    /// every 4-valent spherical graph.
    pub fn satisfies_triangle_identity(&self) -> bool {
        let rhs: i64 = 8 + self
            .0
            .iter()
            .filter(|(&k, _)| k >= 5)
            .map(|(&k, &p)| p as i64 * (k as i64 - 4))
            .sum::<i64>();
        self.get(3) as i64 == rhs
    }
}

impl<const N: usize> From<[(usize, usize); N]> for FaceVector {
    fn from(pairs: [(usize, usize); N]) -> Self {
        let mut map = BTreeMap::new();
        for (k, p) in pairs {
            *map.entry(k).or_insert(0) += p;
        }
        FaceVector(map)
    }
}

/// Faces traced from a rotation system.
#[derive(Clone, Debug)]
pub struct FaceStructure {
    faces: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    dart_face: Vec<usize>,
}

impl FaceStructure {
    /// Vertex cycles in traversal order.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Face on the traversal side of the dart leaving `u` at rotation slot `slot`.
    pub fn dart_face(&self, u: usize, slot: usize) -> usize {
        self.dart_face[self.offsets[u] + slot]
    }

    /// Face containing the directed edge `u -> w`.
    pub fn face_of(&self, g: &PlanarGraph, u: usize, w: usize) -> Option<usize> {
        g.position(u, w).map(|slot| self.dart_face(u, slot))
    }

    /// Faces around `v`, in rotation order of the outgoing darts.
    pub fn faces_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.offsets[v];
        let end = self.offsets[v + 1];
        self.dart_face[start..end].iter().copied()
    }

    pub fn face_vector(&self) -> FaceVector {
        let mut map = BTreeMap::new();
        for f in &self.faces {
            *map.entry(f.len()).or_insert(0) += 1;
        }
        FaceVector(map)
    }

    /// The dual graph: one vertex per face, adjacent across every edge.
    pub fn dual(&self, g: &PlanarGraph) -> Result<PlanarGraph> {
        let rotation = self
            .faces
            .iter()
            .map(|cycle| {
                let k = cycle.len();
                (0..k)
                    .rev()
                    .map(|i| {
                        let (u, w) = (cycle[i], cycle[(i + 1) % k]);
                        let back = g.position(w, u).expect("symmetric rotation");
                        self.dart_face(w, back)
                    })
                    .collect()
            })
            .collect();
        PlanarGraph::new(rotation)
    }
}

/// Traces every face of the embedding. Each dart is used exactly once.
pub fn trace_faces(g: &PlanarGraph) -> FaceStructure {
    let rotation = g.rotation();
    let mut offsets = Vec::with_capacity(rotation.len() + 1);
    let mut total = 0;
    for r in rotation {
        offsets.push(total);
        total += r.len();
    }
    offsets.push(total);

    const UNSET: usize = usize::MAX;
    let mut dart_face = vec![UNSET; total];
    let mut faces = Vec::new();
    for u0 in 0..rotation.len() {
        for s0 in 0..rotation[u0].len() {
            if dart_face[offsets[u0] + s0] != UNSET {
                continue;
            }
            let f = faces.len();
            let mut cycle = Vec::new();
            let (mut u, mut s) = (u0, s0);
            while dart_face[offsets[u] + s] == UNSET {
                dart_face[offsets[u] + s] = f;
                cycle.push(u);
                let w = rotation[u][s];
                let back = g.position(w, u).expect("symmetric rotation");
                s = (back + 1) % rotation[w].len();
                u = w;
            }
            faces.push(cycle);
        }
    }
    FaceStructure {
        faces,
        offsets,
        dart_face,
    }
}

/// Face-size counts of a 4-valent spherical graph.
pub fn face_vector(g: &PlanarGraph) -> Result<FaceVector> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 4) {
        return Err(Error::Domain(format!(
            "face_vector needs a 4-valent graph; vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    Ok(trace_faces(g).face_vector())
}

/// The dual graph of `g`.
pub fn dual(g: &PlanarGraph) -> Result<PlanarGraph> {
    trace_faces(g).dual(g)
}

fn adjacency_lists(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::Structure(format!("edge ({u}, {v}) out of range")));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    Ok(adjacency)
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    scale(a, 1.0 / dot(a, a).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids;

    #[test]
    fn octahedron_faces() {
        let g = solids::octahedron();
        let fs = trace_faces(&g);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(fs.face_count(), 8);
        assert!(fs.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn cube_faces() {
        let g = solids::cube();
        let fs = trace_faces(&g);
        assert_eq!(fs.face_count(), 6);
        assert!(fs.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn each_dart_used_once() {
        let g = solids::rhombicuboctahedron();
        let fs = trace_faces(&g);
        let darts: usize = fs.faces().iter().map(Vec::len).sum();
        assert_eq!(darts, 2 * g.edge_count());
        for v in 0..g.vertex_count() {
            for (slot, &w) in g.neighbors(v).iter().enumerate() {
                let f = fs.dart_face(v, slot);
                let cycle = fs.face(f);
                let k = cycle.len();
                let i = cycle.iter().position(|&x| x == v).unwrap();
                assert_eq!(cycle[(i + 1) % k], w);
            }
        }
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlanarGraph::new(vec![vec![1, 2], vec![0, 2], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::Structure(_)), "{err}");
    }

    #[test]
    fn non_spherical_rotation_rejected() {
        // K4 with one rotation flipped embeds in the torus
        let ok = PlanarGraph::new(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ]);
        assert!(ok.is_ok());
        let err = PlanarGraph::new(vec![
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap_err();
        assert!(err.to_string().contains("spherical"), "{err}");
    }

    #[test]
    fn loops_and_repeats_rejected() {
        assert!(PlanarGraph::new(vec![vec![0]]).is_err());
        assert!(PlanarGraph::new(vec![vec![1, 1], vec![0, 0]]).is_err());
    }

    #[test]
    fn face_vector_requires_four_valence() {
        assert!(matches!(
            face_vector(&solids::cube()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dual_of_octahedron_is_cube() {
        let d = dual(&solids::octahedron()).unwrap();
        assert_eq!(d.vertex_count(), 8);
        assert!(trace_faces(&d).faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn json_round_trip() {
        let g = solids::octahedron();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(PlanarGraph::from_json(&back).unwrap(), g);
    }

    #[test]
    fn json_index_out_of_range() {
        let json = GraphJson {
            vertices: 2,
            rotation: vec![vec![2], vec![3]],
        };
        assert!(PlanarGraph::from_json(&json).is_err());
    }
}
