//! Volume bounds, gluing, isolated-triangle polyhedra, census assembly and
//! the volume spectrum.

mod bounds;
mod census;
mod glue;
mod itr;
mod spectrum;

pub use bounds::{
    atkinson_bounds, improved_upper_bound, quad_upper_bound, BoundsReport, BOUND_TOLERANCE,
    QUAD_BOUND_MIN_SIZE,
};
pub use census::{
    classify, format_volume, volume_rounding, Census, CensusRecord, Classification, LevelSummary,
    VOLUME_DIGITS,
};
pub use glue::{glue_along_face, reversed_matching};
pub use itr::{is_itr, is_itr_with, itr_double, itr_face_bound, itr_reachable};
pub use spectrum::{
    certified_cutoff, distinct_volumes, min_volume_for_faces, missing_face_counts, volume_spectrum,
    VOLUME_RESOLUTION,
};
