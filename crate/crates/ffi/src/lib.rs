//! C interface to `ideal-polyhedra`.
//!
//! Graphs and graph lists are opaque heap handles owned by the caller and
//! released with `ip_graph_free` / `ip_graph_list_free`. Every fallible
//! function returns an [`IpStatus`]; on failure `ip_last_error_message`
//! describes the most recent error on the calling thread. Output pointers
//! are written only on success, except that buffer-filling functions
//! report the required length with `BufferTooSmall`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ideal_polyhedra::enumeration::{antiprism, check_validity, enumerate, twisted_antiprism};
use ideal_polyhedra::planar::{canonical_code, parse_planar_code, trace_faces, PlanarGraph};
use ideal_polyhedra::volume::{
    antiprism_volume, ideal_volume_with, lobachevsky, twisted_antiprism_volume, SolverOptions,
};
use ideal_polyhedra::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IpStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Precondition = 3,
    Structure = 4,
    Format = 5,
    Overflow = 6,
    Solver = 7,
    IncompleteCensus = 8,
    Io = 9,
    BufferTooSmall = 10,
    OutOfRange = 11,
    Panic = 12,
}

/// An embedded polyhedral graph.
pub struct IpGraph(PlanarGraph);

/// An owned list of graphs.
pub struct IpGraphList(Vec<PlanarGraph>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> IpStatus {
    match err {
        Error::Structure(_) => IpStatus::Structure,
        Error::Domain(_) => IpStatus::Domain,
        Error::Precondition(_) => IpStatus::Precondition,
        Error::Format { .. } => IpStatus::Format,
        Error::Overflow { .. } => IpStatus::Overflow,
        Error::Infeasible { .. } | Error::Degenerate { .. } => IpStatus::Solver,
        Error::IncompleteCensus { .. } => IpStatus::IncompleteCensus,
        Error::Io(_) | Error::Json(_) => IpStatus::Io,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F>(f: F) -> IpStatus
where
    F: FnOnce() -> Result<(), (IpStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IpStatus::Panic
        }
    }
}

fn lib<T>(r: ideal_polyhedra::Result<T>) -> Result<T, (IpStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(name: &str) -> (IpStatus, String) {
    (IpStatus::NullPointer, format!("{name} is null"))
}

unsafe fn graph_ref<'a>(g: *const IpGraph) -> Result<&'a PlanarGraph, (IpStatus, String)> {
    // SAFETY: the caller passes a handle from this library or null.
    unsafe { g.as_ref() }
        .map(|g| &g.0)
        .ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (IpStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: non-null and supplied by the caller for writing.
    unsafe { out.write(value) };
    Ok(())
}

fn boxed(g: PlanarGraph) -> *mut IpGraph {
    Box::into_raw(Box::new(IpGraph(g)))
}

/// Copies the last error message on this thread into `buf` (NUL-terminated,
/// truncated to `cap`). Returns the full message length including the NUL.
///
/// # Safety
/// `buf` must be null or point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ip_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let bytes = e.borrow();
        let bytes = bytes.as_bytes_with_nul();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap);
            // SAFETY: `buf` holds at least `cap >= n` bytes.
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, n);
                *buf.add(n - 1) = 0;
            }
        }
        bytes.len()
    })
}

/// Builds a graph from 0-based rotation lists in compressed form: the
/// neighbours of vertex `v` are `neighbors[offsets[v] .. offsets[v + 1]]`
/// in cyclic order. `offsets` has `vertex_count + 1` entries.
///
/// # Safety
/// The arrays must have the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_from_rotation(
    vertex_count: usize,
    offsets: *const u32,
    neighbors: *const u32,
    out: *mut *mut IpGraph,
) -> IpStatus {
    guard(|| {
        if offsets.is_null() || (neighbors.is_null() && vertex_count > 0) {
            return Err(null("rotation array"));
        }
        // SAFETY: caller guarantees vertex_count + 1 offsets.
        let offsets = unsafe { std::slice::from_raw_parts(offsets, vertex_count + 1) };
        let total = offsets[vertex_count] as usize;
        if offsets.windows(2).any(|w| w[0] > w[1]) || offsets[0] != 0 {
            return Err((
                IpStatus::Structure,
                "offsets must start at 0 and not decrease".into(),
            ));
        }
        // SAFETY: caller guarantees offsets[vertex_count] neighbours.
        let neighbors = unsafe { std::slice::from_raw_parts(neighbors, total) };
        let rotation = (0..vertex_count)
            .map(|v| {
                neighbors[offsets[v] as usize..offsets[v + 1] as usize]
                    .iter()
                    .map(|&w| w as usize)
                    .collect()
            })
            .collect();
        let g = lib(PlanarGraph::new(rotation))?;
        unsafe { write(out, boxed(g)) }
    })
}

/// The `n`-antiprism, `n >= 3`.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_antiprism(n: usize, out: *mut *mut IpGraph) -> IpStatus {
    guard(|| {
        let g = lib(antiprism(n))?;
        unsafe { write(out, boxed(g)) }
    })
}

/// The twisted `n`-antiprism, `n >= 4`.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_twisted_antiprism(n: usize, out: *mut *mut IpGraph) -> IpStatus {
    guard(|| {
        let g = lib(twisted_antiprism(n))?;
        unsafe { write(out, boxed(g)) }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must be null or a live handle from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_free(g: *mut IpGraph) {
    if !g.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_vertex_count(g: *const IpGraph, out: *mut usize) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write(out, g.vertex_count()) }
    })
}

/// # Safety
/// `g` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_face_count(g: *const IpGraph, out: *mut usize) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write(out, trace_faces(g).face_count()) }
    })
}

/// Copies the rotation list of vertex `v` into `buf`. `len` receives the
/// degree; if it exceeds `cap`, nothing is copied and `BufferTooSmall` is
/// returned.
///
/// # Safety
/// `buf` must hold `cap` entries, `len` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_neighbors(
    g: *const IpGraph,
    v: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if v >= g.vertex_count() {
            return Err((IpStatus::OutOfRange, format!("vertex {v} out of range")));
        }
        let nbrs = g.neighbors(v);
        unsafe { write(len, nbrs.len()) }?;
        if nbrs.len() > cap {
            return Err((
                IpStatus::BufferTooSmall,
                format!("need {} entries", nbrs.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        for (i, &w) in nbrs.iter().enumerate() {
            // SAFETY: i < nbrs.len() <= cap.
            unsafe { *buf.add(i) = w as u32 };
        }
        Ok(())
    })
}

/// Whether the graph is realizable as an ideal right-angled polyhedron.
/// When it is not, `ip_last_error_message` describes the obstruction.
///
/// # Safety
/// `g` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_is_valid(g: *const IpGraph, out: *mut bool) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let report = check_validity(g);
        if let Some(w) = &report.failure_witness {
            set_error(w.to_string());
        }
        unsafe { write(out, report.is_valid) }
    })
}

/// Hyperbolic volume of the ideal right-angled realization.
///
/// # Safety
/// `g` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_volume(g: *const IpGraph, seed: u64, out: *mut f64) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let opts = SolverOptions {
            seed,
            ..SolverOptions::default()
        };
        let sol = lib(ideal_volume_with(g, &opts))?;
        unsafe { write(out, sol.volume) }
    })
}

/// Writes the canonical code bytes. `len` receives the code length; if it
/// exceeds `cap`, nothing is copied and `BufferTooSmall` is returned.
///
/// # Safety
/// `buf` must hold `cap` bytes, `len` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_canonical_code(
    g: *const IpGraph,
    buf: *mut u8,
    cap: usize,
    len: *mut usize,
) -> IpStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let code = canonical_code(g);
        let bytes = code.as_bytes();
        unsafe { write(len, bytes.len()) }?;
        if bytes.len() > cap {
            return Err((
                IpStatus::BufferTooSmall,
                format!("need {} bytes", bytes.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        // SAFETY: bytes.len() <= cap.
        unsafe { ptr::copy_nonoverlapping(bytes.as_ptr(), buf, bytes.len()) };
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_lobachevsky(theta: f64, out: *mut f64) -> IpStatus {
    guard(|| {
        let v = lib(lobachevsky(theta))?;
        unsafe { write(out, v) }
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_antiprism_volume(n: usize, out: *mut f64) -> IpStatus {
    guard(|| {
        let v = lib(antiprism_volume(n))?;
        unsafe { write(out, v) }
    })
}

/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_twisted_antiprism_volume(n: usize, out: *mut f64) -> IpStatus {
    guard(|| {
        let v = lib(twisted_antiprism_volume(n))?;
        unsafe { write(out, v) }
    })
}

/// Decodes a `planar_code` byte stream.
///
/// # Safety
/// `bytes` must hold `len` bytes, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_read_planar_code(
    bytes: *const u8,
    len: usize,
    out: *mut *mut IpGraphList,
) -> IpStatus {
    guard(|| {
        if bytes.is_null() {
            return Err(null("bytes"));
        }
        // SAFETY: caller guarantees len readable bytes.
        let data = unsafe { std::slice::from_raw_parts(bytes, len) };
        let graphs = lib(parse_planar_code(data))?;
        unsafe { write(out, Box::into_raw(Box::new(IpGraphList(graphs)))) }
    })
}

/// All polyhedra with at most `max_faces` faces, in canonical form.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_enumerate(max_faces: usize, out: *mut *mut IpGraphList) -> IpStatus {
    guard(|| {
        let mut graphs = Vec::new();
        lib(enumerate(max_faces, |_, g| graphs.push(g.clone())))?;
        unsafe { write(out, Box::into_raw(Box::new(IpGraphList(graphs)))) }
    })
}

/// # Safety
/// `list` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_list_len(list: *const IpGraphList, out: *mut usize) -> IpStatus {
    guard(|| {
        // SAFETY: handle from this library or null.
        let list = unsafe { list.as_ref() }.ok_or_else(|| null("list"))?;
        unsafe { write(out, list.0.len()) }
    })
}

/// Copies graph `index` into a new handle, which the caller frees.
///
/// # Safety
/// `list` must be a live handle, `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_list_get(
    list: *const IpGraphList,
    index: usize,
    out: *mut *mut IpGraph,
) -> IpStatus {
    guard(|| {
        // SAFETY: handle from this library or null.
        let list = unsafe { list.as_ref() }.ok_or_else(|| null("list"))?;
        let g = list.0.get(index).ok_or_else(|| {
            (
                IpStatus::OutOfRange,
                format!("index {index} of {}", list.0.len()),
            )
        })?;
        unsafe { write(out, boxed(g.clone())) }
    })
}

/// Releases a list. Null is ignored.
///
/// # Safety
/// `list` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ip_graph_list_free(list: *mut IpGraphList) {
    if !list.is_null() {
        // SAFETY: created by Box::into_raw in this library.
        drop(unsafe { Box::from_raw(list) });
    }
}
