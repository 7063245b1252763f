//! Volume bounds in terms of the vertex count and face lengths.
//!
//! `v8` below is the volume of the regular ideal octahedron.

use crate::error::{Error, Result};
use crate::planar::{trace_faces, PlanarGraph};
use crate::volume::octahedron_volume;

/// Slack allowed when testing a computed volume against a bound.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Smallest vertex count at which the quadrilateral bound applies.
pub const QUAD_BOUND_MIN_SIZE: usize = 17;

/// `((N - 2) v8 / 4, (N - 4) v8 / 2)` for a polyhedron with `N` vertices.
pub fn atkinson_bounds(vertices: usize) -> Result<(f64, f64)> {
    if vertices < 6 {
        return Err(Error::Domain(format!(
            "no ideal right-angled polyhedron has {vertices} < 6 vertices"
        )));
    }
    let v8 = octahedron_volume();
    let n = vertices as f64;
    Ok(((n - 2.0) * v8 / 4.0, (n - 4.0) * v8 / 2.0))
}

/// `min (N - n1/2 - n2/2) v8 / 2` over pairs of distinct faces with at least
/// four sides each. `g` is assumed realizable; the octahedron is excluded.
pub fn improved_upper_bound(g: &PlanarGraph) -> Result<Option<f64>> {
    if is_octahedron(g) {
        return Err(Error::Domain(
            "the improved bound excludes the octahedron".into(),
        ));
    }
    let fs = trace_faces(g);
    let mut lengths: Vec<usize> = fs
        .faces()
        .iter()
        .map(Vec::len)
        .filter(|&k| k >= 4)
        .collect();
    if lengths.len() < 2 {
        return Ok(None);
    }
    // the two longest faces give the minimum
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let n = g.vertex_count() as f64;
    let sum = (lengths[0] + lengths[1]) as f64;
    Ok(Some((n - sum / 2.0) * octahedron_volume() / 2.0))
}

/// `(N - 5) v8 / 2` when every face is a triangle or a quadrilateral and
/// both the face count and the vertex count are at least 17. The bound is
/// strict.
pub fn quad_upper_bound(g: &PlanarGraph) -> Option<f64> {
    let fs = trace_faces(g);
    if fs.faces().iter().any(|f| f.len() > 4) {
        return None;
    }
    let n = g.vertex_count();
    if n < QUAD_BOUND_MIN_SIZE || fs.face_count() < QUAD_BOUND_MIN_SIZE {
        return None;
    }
    Some((n as f64 - 5.0) * octahedron_volume() / 2.0)
}

fn is_octahedron(g: &PlanarGraph) -> bool {
    g.vertex_count() == 6 && g.is_four_valent()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub vertex_count: usize,
    pub atkinson_lower: f64,
    pub atkinson_upper: f64,
    pub improved_upper: Option<f64>,
    pub quad_upper: Option<f64>,
}

impl BoundsReport {
    pub fn for_graph(g: &PlanarGraph) -> Result<Self> {
        let (lower, upper) = atkinson_bounds(g.vertex_count())?;
        let improved_upper = if is_octahedron(g) {
            None
        } else {
            improved_upper_bound(g)?
        };
        Ok(BoundsReport {
            vertex_count: g.vertex_count(),
            atkinson_lower: lower,
            atkinson_upper: upper,
            improved_upper,
            quad_upper: quad_upper_bound(g),
        })
    }

    /// Names of the bounds that `volume` violates.
    pub fn violations(&self, volume: f64) -> Vec<&'static str> {
        self.violations_within(volume, BOUND_TOLERANCE)
    }

    /// As [`violations`](Self::violations) with an explicit slack for the
    /// non-strict bounds, for volumes that were stored rounded.
    pub fn violations_within(&self, volume: f64, tolerance: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        if volume < self.atkinson_lower - tolerance {
            out.push("atkinson_lower");
        }
        if volume > self.atkinson_upper + tolerance {
            out.push("atkinson_upper");
        }
        if self.improved_upper.is_some_and(|b| volume > b + tolerance) {
            out.push("improved_upper");
        }
        if self.quad_upper.is_some_and(|b| volume >= b) {
            out.push("quad_upper");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{antiprism, twisted_antiprism};

    #[test]
    fn atkinson_values() {
        let v8 = octahedron_volume();
        let (lo, hi) = atkinson_bounds(6).unwrap();
        assert!((lo - v8).abs() < 1e-12 && (hi - v8).abs() < 1e-12);
        let (lo, hi) = atkinson_bounds(8).unwrap();
        assert!((lo - 5.495794).abs() < 1e-6);
        assert!((hi - 7.327725).abs() < 1e-6);
        assert!((atkinson_bounds(21).unwrap().0 - 17.403346).abs() < 1e-6);
        assert!(matches!(atkinson_bounds(5), Err(Error::Domain(_))));
    }

    #[test]
    fn improved_bound_examples() {
        let b = improved_upper_bound(&antiprism(5).unwrap())
            .unwrap()
            .unwrap();
        assert!((b - 9.159656).abs() < 1e-6);
        let b = improved_upper_bound(&antiprism(4).unwrap())
            .unwrap()
            .unwrap();
        assert!((b - atkinson_bounds(8).unwrap().1).abs() < 1e-12);
        assert!(matches!(
            improved_upper_bound(&antiprism(3).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn quad_bound_applicability() {
        assert_eq!(quad_upper_bound(&antiprism(5).unwrap()), None);
        // A(4)* has faces of length 3 and 4 only but is far too small
        assert_eq!(quad_upper_bound(&twisted_antiprism(4).unwrap()), None);
        let rh = crate::solids::rhombicuboctahedron();
        let b = quad_upper_bound(&rh).unwrap();
        assert!((b - 19.0 * octahedron_volume() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn octahedron_report_has_no_improved_bound() {
        let r = BoundsReport::for_graph(&antiprism(3).unwrap()).unwrap();
        assert_eq!(r.improved_upper, None);
        assert!(r.violations(octahedron_volume()).is_empty());
        assert_eq!(r.violations(3.0), vec!["atkinson_lower"]);
    }
}
