//! Antiprisms, edge-twists, the realizability check and the census
//! enumeration built from them.

mod construct;
mod search;
mod validity;

pub use construct::{
    antiprism, edge_twist, edge_twist_edges, twist_candidates, twisted_antiprism, EdgePair,
};
pub use search::{enumerate, Enumerator, MIN_FACES};
pub use validity::{check_validity, check_validity_with, ValidityReport, ValidityWitness};
