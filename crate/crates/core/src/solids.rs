//! Classical polyhedra built from vertex coordinates.
//!
//! Edges are recovered as vertex pairs at the polyhedron's edge length, and
//! the rotation system comes from the convex embedding.

use crate::planar::PlanarGraph;

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn from_points(points: &[[f64; 3]], edge_len: f64) -> PlanarGraph {
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2: f64 = (0..3).map(|k| (points[i][k] - points[j][k]).powi(2)).sum();
            if (d2 - edge_len * edge_len).abs() < 1e-9 {
                edges.push((i, j));
            }
        }
    }
    PlanarGraph::from_convex_polyhedron(points, &edges).expect("convex solid embeds in the sphere")
}

pub fn octahedron() -> PlanarGraph {
    let points = [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ];
    from_points(&points, SQRT2)
}

fn cube_points() -> Vec<[f64; 3]> {
    let mut points = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                points.push([x, y, z]);
            }
        }
    }
    points
}

pub fn cube() -> PlanarGraph {
    from_points(&cube_points(), 2.0)
}

/// A cube with square pyramids on the top and bottom faces. It is 4-valent,
/// but its four side squares form a belt, so it has no right-angled
/// realization.
pub fn elongated_square_bipyramid() -> PlanarGraph {
    let mut points = cube_points();
    let h = 1.0 + SQRT2;
    points.push([0.0, 0.0, h]);
    points.push([0.0, 0.0, -h]);
    from_points(&points, 2.0)
}

/// Vertex configuration 3.4.4.4: 8 vertex-disjoint triangles and 18 squares.
pub fn rhombicuboctahedron() -> PlanarGraph {
    let a = 1.0 + SQRT2;
    let mut points = Vec::new();
    for sx in [-1.0, 1.0] {
        for sy in [-1.0, 1.0] {
            for sz in [-1.0, 1.0] {
                points.push([sx, sy, sz * a]);
                points.push([sx, sy * a, sz]);
                points.push([sx * a, sy, sz]);
            }
        }
    }
    from_points(&points, 2.0)
}

/// The elongated square gyrobicupola: the rhombicuboctahedron with one
/// square cupola turned by 45 degrees. Same face counts, different
/// combinatorial type.
pub fn pseudo_rhombicuboctahedron() -> PlanarGraph {
    let a = 1.0 + SQRT2;
    let mut points = Vec::new();
    for sx in [-1.0, 1.0] {
        for sy in [-1.0, 1.0] {
            points.push([sx, sy, a]);
            for z in [-1.0, 1.0] {
                points.push([sx, sy * a, z]);
                points.push([sx * a, sy, z]);
            }
        }
    }
    for p in [[SQRT2, 0.0], [-SQRT2, 0.0], [0.0, SQRT2], [0.0, -SQRT2]] {
        points.push([p[0], p[1], -a]);
    }
    from_points(&points, 2.0)
}
