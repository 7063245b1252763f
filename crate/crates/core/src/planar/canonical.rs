//! Canonical codes for embedded spherical graphs, invariant under
//! relabelling and reflection.
//!
//! For every start dart and both orientations the graph is numbered in
//! breadth-first order, listing each vertex's neighbours starting from the
//! vertex it was discovered from. The lexicographically smallest listing wins.

use std::fmt;

use super::graph::PlanarGraph;
use crate::error::{Error, Result};

/// Byte string identifying a graph up to orientation-preserving or
/// orientation-reversing isomorphism.
///
/// Layout: vertex count, then for each vertex in canonical order the 1-based
/// canonical labels of its neighbours followed by `0`; every number is a
/// big-endian `u16`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(CanonicalCode)
    }

    /// Rebuilds the canonically labelled graph the code was read from.
    pub fn to_graph(&self) -> Result<PlanarGraph> {
        let bad = |offset: usize, reason: &str| Error::Format {
            offset,
            reason: reason.to_string(),
        };
        if !self.0.len().is_multiple_of(2) || self.0.len() < 2 {
            return Err(bad(
                0,
                "code length must be a positive even number of bytes",
            ));
        }
        let words: Vec<usize> = self
            .0
            .chunks(2)
            .map(|w| u16::from_be_bytes([w[0], w[1]]) as usize)
            .collect();
        let n = words[0];
        let mut rotation = vec![Vec::new(); n];
        let mut v = 0;
        for (i, &w) in words.iter().enumerate().skip(1) {
            if v >= n {
                return Err(bad(2 * i, "data after the last vertex"));
            }
            match w {
                0 => v += 1,
                w if w <= n => rotation[v].push(w - 1),
                _ => return Err(bad(2 * i, "label exceeds vertex count")),
            }
        }
        if v != n {
            return Err(bad(self.0.len(), "truncated code"));
        }
        PlanarGraph::new(rotation)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_code(g: &PlanarGraph) -> CanonicalCode {
    canonical_form(g).0
}

/// The canonical code together with the graph relabelled in canonical order.
/// Isomorphic inputs give identical graphs.
pub fn canonical_form(g: &PlanarGraph) -> (CanonicalCode, PlanarGraph) {
    let n = g.vertex_count();
    let mut search = Search::new(n);
    let mut best: Vec<u16> = Vec::new();
    let mut best_start = None;
    for forward in [true, false] {
        for v in 0..n {
            for slot in 0..g.degree(v) {
                if search.run(g, v, slot, forward, &best) {
                    std::mem::swap(&mut best, &mut search.code);
                    best_start = Some((v, slot, forward));
                }
            }
        }
    }
    let (v, slot, forward) = best_start.expect("graph has at least one dart");
    // Rebuild the winning numbering to recover the relabelled rotation.
    search.run(g, v, slot, forward, &[]);
    let rotation = search.lists.clone();

    let mut bytes = Vec::with_capacity(2 * (best.len() + 1));
    bytes.extend_from_slice(&(n as u16).to_be_bytes());
    for x in &best {
        bytes.extend_from_slice(&x.to_be_bytes());
    }
    (
        CanonicalCode(bytes),
        PlanarGraph::from_rotation_unchecked(rotation),
    )
}

struct Search {
    label: Vec<usize>,
    order: Vec<usize>,
    first: Vec<usize>,
    code: Vec<u16>,
    lists: Vec<Vec<usize>>,
}

const UNSEEN: usize = usize::MAX;

impl Search {
    fn new(n: usize) -> Self {
        Search {
            label: vec![UNSEEN; n],
            order: Vec::with_capacity(n),
            first: vec![0; n],
            code: Vec::new(),
            lists: vec![Vec::new(); n],
        }
    }

    /// Numbers the graph from the given start. Returns whether the code is
    /// strictly smaller than `best` (an empty `best` always loses). Abandons
    /// the numbering as soon as it compares greater.
    fn run(
        &mut self,
        g: &PlanarGraph,
        root: usize,
        slot: usize,
        forward: bool,
        best: &[u16],
    ) -> bool {
        self.label.fill(UNSEEN);
        self.order.clear();
        self.code.clear();
        self.label[root] = 0;
        self.order.push(root);
        self.first[root] = slot;
        let mut smaller = best.is_empty();
        let mut head = 0;
        while head < self.order.len() {
            let x = self.order[head];
            let nbrs = g.neighbors(x);
            let deg = nbrs.len();
            let list = &mut self.lists[head];
            list.clear();
            for t in 0..deg {
                let idx = if forward {
                    (self.first[x] + t) % deg
                } else {
                    (self.first[x] + deg - t) % deg
                };
                let y = nbrs[idx];
                if self.label[y] == UNSEEN {
                    self.label[y] = self.order.len();
                    self.first[y] = g.position(y, x).expect("symmetric rotation");
                    self.order.push(y);
                }
                list.push(self.label[y]);
                let value = (self.label[y] + 1) as u16;
                if !push_cmp(&mut self.code, value, best, &mut smaller) {
                    return false;
                }
            }
            if !push_cmp(&mut self.code, 0, best, &mut smaller) {
                return false;
            }
            head += 1;
        }
        smaller || self.code.len() < best.len()
    }
}

/// Appends `value`; returns false once the code is known to exceed `best`.
#[inline]
fn push_cmp(code: &mut Vec<u16>, value: u16, best: &[u16], smaller: &mut bool) -> bool {
    let i = code.len();
    code.push(value);
    if !*smaller {
        match best.get(i) {
            Some(&b) if value < b => *smaller = true,
            Some(&b) if value > b => return false,
            Some(_) => {}
            None => return false,
        }
    }
    true
}
