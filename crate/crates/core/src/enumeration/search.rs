//! Level-by-level closure of the antiprisms under edge-twists.
//!
//! Level `F` holds every valid polyhedron with `F` faces. Twisting a graph
//! adds exactly one face, so level `F + 1` is complete once level `F` has
//! been expanded. Children are deduplicated by canonical code in a
//! concurrent map; invalid children are remembered so they are checked once
//! and never expanded.

use std::collections::BTreeMap;

use dashmap::DashMap;
use rayon::prelude::*;

use super::construct::{antiprism, twist_candidates, twist_unchecked};
use super::validity::check_validity_with;
use crate::error::{Error, Result};
use crate::planar::{canonical_form, trace_faces, CanonicalCode, FaceStructure, PlanarGraph};

pub const MIN_FACES: usize = 8;

type KeepFn = dyn Fn(&PlanarGraph, &FaceStructure) -> bool + Sync;

pub struct Enumerator<'a> {
    max_faces: usize,
    level_limit: usize,
    progress: bool,
    seeds: Vec<PlanarGraph>,
    keep: Option<&'a KeepFn>,
}

impl<'a> Enumerator<'a> {
    pub fn new(max_faces: usize) -> Self {
        Enumerator {
            max_faces,
            level_limit: 5_000_000,
            progress: false,
            seeds: Vec::new(),
            keep: None,
        }
    }

    /// Maximum number of polyhedra held at one level before failing with
    /// [`Error::Overflow`].
    pub fn level_limit(mut self, limit: usize) -> Self {
        self.level_limit = limit;
        self
    }

    /// Print `level=<faces> found=<count>` to standard error per level.
    pub fn progress(mut self, on: bool) -> Self {
        self.progress = on;
        self
    }

    /// Extra starting graphs besides the antiprisms. Invalid seeds are ignored.
    pub fn seeds(mut self, seeds: Vec<PlanarGraph>) -> Self {
        self.seeds = seeds;
        self
    }

    /// Restricts the search: graphs rejected by `keep` are neither emitted
    /// nor expanded.
    pub fn keep(mut self, keep: &'a KeepFn) -> Self {
        self.keep = Some(keep);
        self
    }

    /// Runs the closure, handing every kept polyhedron to `sink` in
    /// canonical-code order within each level. Returns the count per face
    /// number for `8..=max_faces`.
    pub fn run<S>(&self, mut sink: S) -> Result<BTreeMap<usize, usize>>
    where
        S: FnMut(&CanonicalCode, &PlanarGraph),
    {
        if self.max_faces < MIN_FACES {
            return Err(Error::Domain(format!(
                "max_faces must be at least {MIN_FACES}, got {}",
                self.max_faces
            )));
        }
        let mut pending: BTreeMap<usize, Vec<PlanarGraph>> = BTreeMap::new();
        for n in 3.. {
            let faces = 2 * n + 2;
            if faces > self.max_faces {
                break;
            }
            pending.entry(faces).or_default().push(antiprism(n)?);
        }
        for seed in &self.seeds {
            let faces = trace_faces(seed).face_count();
            if faces <= self.max_faces {
                pending.entry(faces).or_default().push(seed.clone());
            }
        }

        let mut counts = BTreeMap::new();
        let mut level: BTreeMap<CanonicalCode, PlanarGraph> = BTreeMap::new();
        for faces in MIN_FACES..=self.max_faces {
            for g in pending.remove(&faces).unwrap_or_default() {
                let fs = trace_faces(&g);
                if !check_validity_with(&g, &fs).is_valid {
                    continue;
                }
                let (code, canon) = canonical_form(&g);
                level.entry(code).or_insert(canon);
            }
            if let Some(keep) = self.keep {
                level.retain(|_, g| keep(g, &trace_faces(g)));
            }
            if level.len() > self.level_limit {
                return Err(Error::Overflow {
                    faces,
                    reason: format!(
                        "{} polyhedra exceed the level limit {}",
                        level.len(),
                        self.level_limit
                    ),
                });
            }
            if self.progress {
                eprintln!("level={faces} found={}", level.len());
            }
            counts.insert(faces, level.len());
            for (code, g) in &level {
                sink(code, g);
            }
            if faces == self.max_faces {
                break;
            }
            level = self.expand(faces, &level)?;
        }
        Ok(counts)
    }

    fn expand(
        &self,
        faces: usize,
        level: &BTreeMap<CanonicalCode, PlanarGraph>,
    ) -> Result<BTreeMap<CanonicalCode, PlanarGraph>> {
        let seen: DashMap<CanonicalCode, Option<PlanarGraph>> = DashMap::new();
        let graphs: Vec<&PlanarGraph> = level.values().collect();
        graphs.par_iter().try_for_each(|g| {
            let fs = trace_faces(g);
            for pair in twist_candidates(&fs) {
                let child = twist_unchecked(g, &pair);
                let (code, canon) = canonical_form(&child);
                if seen.contains_key(&code) {
                    continue;
                }
                let valid = check_validity_with(&canon, &trace_faces(&canon)).is_valid;
                seen.entry(code).or_insert(valid.then_some(canon));
                if seen.len() > self.level_limit.saturating_mul(64) {
                    return Err(Error::Overflow {
                        faces: faces + 1,
                        reason: format!(
                            "dedup set exceeded {} entries",
                            self.level_limit.saturating_mul(64)
                        ),
                    });
                }
            }
            Ok(())
        })?;
        Ok(seen
            .into_iter()
            .filter_map(|(code, g)| g.map(|g| (code, g)))
            .collect())
    }
}

/// Enumerates every ideal right-angled polyhedron with at most `max_faces`
/// faces, one representative per combinatorial type.
pub fn enumerate<S>(max_faces: usize, sink: S) -> Result<BTreeMap<usize, usize>>
where
    S: FnMut(&CanonicalCode, &PlanarGraph),
{
    Enumerator::new(max_faces).run(sink)
}
