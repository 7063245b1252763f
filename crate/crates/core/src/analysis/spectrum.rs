use super::census::Census;
use crate::error::{Error, Result};
use crate::volume::octahedron_volume;

/// Volumes closer than this are reported as one value.
pub const VOLUME_RESOLUTION: f64 = 1e-6;

/// Sorted volumes with values within [`VOLUME_RESOLUTION`] of the previous
/// kept value dropped.
pub fn distinct_volumes<I: IntoIterator<Item = f64>>(volumes: I) -> Vec<f64> {
    let mut v: Vec<f64> = volumes.into_iter().collect();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(v.len());
    for x in v {
        if out.last().is_none_or(|&last| x - last > VOLUME_RESOLUTION) {
            out.push(x);
        }
    }
    out
}

/// Lower volume bound for any polyhedron with `faces` faces.
pub fn min_volume_for_faces(faces: usize) -> f64 {
    (faces as f64 - 4.0) * octahedron_volume() / 4.0
}

/// The largest cutoff below which a census complete up to `max_faces` faces
/// contains every volume: all larger polyhedra have at least this volume.
pub fn certified_cutoff(max_faces: usize) -> f64 {
    min_volume_for_faces(max_faces + 1)
}

/// Face counts above the census range that can still hold a volume below
/// `cutoff`. A polyhedron with `F` faces attains `(F - 4) v8 / 4` only for
/// the octahedron, so the bound is used strictly.
pub fn missing_face_counts(max_faces: usize, cutoff: f64) -> Vec<usize> {
    (max_faces + 1..)
        .take_while(|&f| min_volume_for_faces(f) < cutoff - VOLUME_RESOLUTION)
        .collect()
}

/// All distinct volumes up to `cutoff` (inclusive at the resolution).
/// Fails if larger polyhedra absent from the census could add values.
pub fn volume_spectrum(census: &Census, cutoff: f64) -> Result<Vec<f64>> {
    let missing = missing_face_counts(census.max_faces, cutoff);
    if !missing.is_empty() {
        return Err(Error::IncompleteCensus { cutoff, missing });
    }
    let mut values = distinct_volumes(census.records.iter().map(|r| r.volume));
    values.retain(|&v| v <= cutoff + VOLUME_RESOLUTION);
    Ok(values)
}
