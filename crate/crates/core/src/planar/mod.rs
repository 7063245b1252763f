//! Combinatorial polyhedra as planar rotation systems.

mod canonical;
mod graph;
mod io;

pub use canonical::{canonical_code, canonical_form, CanonicalCode};
pub use graph::{
    dual, face_vector, trace_faces, FaceStructure, FaceVector, GraphJson, PlanarGraph,
};
pub use io::{
    encode_planar_code, parse_planar_code, read_json_lines, read_planar_code, write_json_lines,
    write_planar_code, PLANAR_CODE_HEADER,
};
