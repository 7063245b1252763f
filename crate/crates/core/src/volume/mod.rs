//! Hyperbolic volumes of ideal right-angled polyhedra.

mod closed_form;
mod lobachevsky;
mod solver;
mod triangulation;

pub use closed_form::{
    antiprism_volume, milnor_tet_volume, octahedron_volume, twisted_antiprism_volume,
};
pub use lobachevsky::{lobachevsky, LobachevskyEvaluator};
pub use solver::{
    ideal_volume, ideal_volume_at_apex, ideal_volume_with, maximize_volume, AngleStructure,
    SolverOptions, VolumeSolution,
};
pub use triangulation::{
    apex_order, default_apex, triangulate, triangulate_with_apex, EdgeClass, EdgeKind,
    IdealTriangulation,
};
