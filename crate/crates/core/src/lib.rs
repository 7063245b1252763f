//! Combinatorics and volumes of ideal right-angled polyhedra in hyperbolic
//! 3-space.
//!
//! * [`planar`]: rotation systems, faces, duals, canonical codes, file formats.
//! * [`enumeration`]: antiprisms, edge-twists, realizability, census enumeration.
//! * [`volume`]: the Lobachevsky function, closed forms, and the angle-structure solver.
//! * [`analysis`]: volume bounds, gluing, isolated triangles, census and spectrum.

pub mod analysis;
pub mod enumeration;
pub mod error;
pub mod planar;
pub mod solids;
pub mod volume;

pub use error::{Error, Result};
