use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use super::itr::is_itr_with;
use crate::enumeration::{antiprism, twisted_antiprism, Enumerator};
use crate::error::{Error, Result};
use crate::planar::{canonical_code, trace_faces, write_planar_code, CanonicalCode, PlanarGraph};
use crate::volume::{ideal_volume_with, SolverOptions};

/// Significant digits used whenever a volume is written out.
pub const VOLUME_DIGITS: usize = 9;

/// Formats `v` with [`VOLUME_DIGITS`] significant digits in plain notation.
pub fn format_volume(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let int_digits = v.abs().log10().floor() as i64 + 1;
    let decimals = (VOLUME_DIGITS as i64 - int_digits).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Largest error introduced by [`format_volume`] at the magnitude of `v`.
pub fn volume_rounding(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return 0.0;
    }
    let int_digits = v.abs().log10().floor() as i32 + 1;
    0.5 * 10f64.powi(int_digits - VOLUME_DIGITS as i32)
}

fn serialize_volume<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(format_volume(*v).parse().expect("formatted float"))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_antiprism: bool,
    pub is_twisted_antiprism: bool,
    pub is_itr: bool,
}

impl Classification {
    /// `antiprism`, `twisted` or `other`.
    pub fn label(&self) -> &'static str {
        if self.is_antiprism {
            "antiprism"
        } else if self.is_twisted_antiprism {
            "twisted"
        } else {
            "other"
        }
    }
}

pub fn classify(g: &PlanarGraph) -> Classification {
    let fs = trace_faces(g);
    let faces = fs.face_count();
    let code = canonical_code(g);
    let matches = |h: Result<PlanarGraph>| h.is_ok_and(|h| canonical_code(&h) == code);
    Classification {
        is_antiprism: faces.is_multiple_of(2) && faces >= 8 && matches(antiprism((faces - 2) / 2)),
        is_twisted_antiprism: faces % 2 == 1
            && faces >= 11
            && matches(twisted_antiprism((faces - 3) / 2)),
        is_itr: is_itr_with(g, &fs),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(with = "code_hex")]
    pub code: CanonicalCode,
    pub faces: usize,
    pub vertices: usize,
    pub face_vector: BTreeMap<usize, usize>,
    #[serde(serialize_with = "serialize_volume")]
    pub volume: f64,
    #[serde(flatten)]
    pub flags: Classification,
}

mod code_hex {
    use super::CanonicalCode;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &CanonicalCode, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_hex())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CanonicalCode, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalCode::from_hex(&s).ok_or_else(|| D::Error::custom("invalid hex code"))
    }
}

impl CensusRecord {
    pub fn new(g: &PlanarGraph, opts: &SolverOptions) -> Result<Self> {
        let solution = ideal_volume_with(g, opts)?;
        let fs = trace_faces(g);
        Ok(CensusRecord {
            code: canonical_code(g),
            faces: fs.face_count(),
            vertices: g.vertex_count(),
            face_vector: fs.face_vector().0,
            volume: solution.volume,
            flags: classify(g),
        })
    }
}

/// Statistics of one face count.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelSummary {
    pub faces: usize,
    pub count: usize,
    pub distinct_volumes: usize,
    pub min_volume: f64,
    pub max_volume: f64,
    /// Class of a polyhedron of minimal volume at this level.
    pub minimizer: Classification,
}

/// Every polyhedron with at most `max_faces` faces, sorted by canonical code.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Census {
    pub max_faces: usize,
    pub records: Vec<CensusRecord>,
}

impl Census {
    /// Enumerates and computes volumes in parallel on the current rayon pool.
    pub fn build(max_faces: usize, opts: &SolverOptions, progress: bool) -> Result<Census> {
        let mut graphs = Vec::new();
        Enumerator::new(max_faces)
            .progress(progress)
            .run(|_, g| graphs.push(g.clone()))?;
        Census::from_graphs(max_faces, &graphs, opts)
    }

    /// Builds records for `graphs`, which should be the complete list of
    /// polyhedra with at most `max_faces` faces.
    pub fn from_graphs(
        max_faces: usize,
        graphs: &[PlanarGraph],
        opts: &SolverOptions,
    ) -> Result<Census> {
        let mut records = graphs
            .par_iter()
            .map(|g| {
                CensusRecord::new(g, opts).map_err(|e| match e {
                    e if e.is_retriable() => Error::Degenerate {
                        apex: usize::MAX,
                        reason: format!("{}: {e}", canonical_code(g)),
                    },
                    e => e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        records.sort_by(|a, b| a.code.cmp(&b.code));
        Ok(Census { max_faces, records })
    }

    pub fn write_json_lines<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reads records written by [`Census::write_json_lines`]. Without
    /// `max_faces`, completeness is assumed up to the largest face count
    /// present.
    pub fn read_json_lines<R: BufRead>(reader: R, max_faces: Option<usize>) -> Result<Census> {
        let mut records = Vec::new();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            records.push(serde_json::from_str::<CensusRecord>(&line)?);
        }
        records.sort_by(|a, b| a.code.cmp(&b.code));
        let max_faces =
            max_faces.unwrap_or_else(|| records.iter().map(|r| r.faces).max().unwrap_or(0));
        Ok(Census { max_faces, records })
    }

    /// Writes the canonical graphs in `planar_code`.
    pub fn write_planar_code<W: Write>(&self, w: W) -> Result<()> {
        let graphs = self
            .records
            .iter()
            .map(|r| r.code.to_graph())
            .collect::<Result<Vec<_>>>()?;
        write_planar_code(&graphs, w)
    }

    pub fn levels(&self) -> Vec<LevelSummary> {
        let mut by_faces: BTreeMap<usize, Vec<&CensusRecord>> = BTreeMap::new();
        for r in &self.records {
            by_faces.entry(r.faces).or_default().push(r);
        }
        by_faces
            .into_iter()
            .map(|(faces, rs)| {
                let argmin = rs
                    .iter()
                    .min_by(|a, b| a.volume.total_cmp(&b.volume))
                    .expect("non-empty level");
                LevelSummary {
                    faces,
                    count: rs.len(),
                    distinct_volumes: super::spectrum::distinct_volumes(
                        rs.iter().map(|r| r.volume),
                    )
                    .len(),
                    min_volume: argmin.volume,
                    max_volume: rs.iter().map(|r| r.volume).fold(f64::MIN, f64::max),
                    minimizer: argmin.flags,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::antiprism;

    #[test]
    fn volume_formatting() {
        assert_eq!(format_volume(3.663862376708876), "3.66386238");
        assert_eq!(format_volume(31.0930374), "31.0930374");
        assert_eq!(format_volume(123.4567891234), "123.456789");
        for v in [3.663862376708876, 31.09303738, 123.4567891234] {
            let stored: f64 = format_volume(v).parse().unwrap();
            assert!((stored - v).abs() <= volume_rounding(v));
        }
    }

    #[test]
    fn classification() {
        assert!(classify(&antiprism(7).unwrap()).is_antiprism);
        let t = classify(&twisted_antiprism(7).unwrap());
        assert!(t.is_twisted_antiprism && !t.is_antiprism);
        assert_eq!(t.label(), "twisted");
        assert!(classify(&crate::solids::rhombicuboctahedron()).is_itr);
    }

    #[test]
    fn json_round_trip() {
        let census = Census::build(12, &SolverOptions::default(), false).unwrap();
        assert_eq!(census.records.len(), 5);
        let mut buf = Vec::new();
        census.write_json_lines(&mut buf).unwrap();
        let back = Census::read_json_lines(&buf[..], None).unwrap();
        assert_eq!(back.max_faces, 12);
        assert_eq!(back.records.len(), 5);
        for (a, b) in census.records.iter().zip(&back.records) {
            assert_eq!(a.code, b.code);
            assert!((a.volume - b.volume).abs() < 1e-8);
        }
        let mut pc = Vec::new();
        census.write_planar_code(&mut pc).unwrap();
        assert_eq!(crate::planar::parse_planar_code(&pc).unwrap().len(), 5);
    }

    #[test]
    fn twelve_face_maximum_is_neither_class() {
        let census = Census::build(12, &SolverOptions::default(), false).unwrap();
        let max = census
            .records
            .iter()
            .filter(|r| r.faces == 12)
            .max_by(|a, b| a.volume.total_cmp(&b.volume))
            .unwrap();
        assert_eq!(max.flags.label(), "other");
        assert!((max.volume - 8.612415).abs() < 1e-6);
    }
}
