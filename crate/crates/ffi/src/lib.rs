//! C ABI over `condiam-core`.
//!
//! Graphs cross the boundary as opaque `CondiamGraph` handles owned by the caller and released
//! with [`condiam_graph_free`]. Every fallible function returns a [`CondiamStatus`]; on failure
//! the message is available from [`condiam_last_error_message`] until the next failing call on
//! the same thread. Strings returned through `char **` outputs must be released with
//! [`condiam_string_free`]. Panics never unwind into C; they surface as `CONDIAM_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use condiam::families::{claimed_extremal, FamilyKind, FamilySpec};
use condiam::search::{verify_claim, Source, Status};
use condiam::{
    canonical_key, conditional_diameter, diameter, emit_graph6, parse_graph6, transmission,
    wiener, Error, Graph,
};

/// Opaque graph handle.
pub struct CondiamGraph {
    inner: Graph,
}

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondiamStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Disconnected = 4,
    Hypothesis = 5,
    Internal = 6,
}

/// Outcome of an extremal-claim audit.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondiamAuditStatus {
    MatchUnique = 0,
    Tie = 1,
    Mismatch = 2,
    EmptyClass = 3,
}

impl From<Status> for CondiamAuditStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::MatchUnique => Self::MatchUnique,
            Status::Tie => Self::Tie,
            Status::Mismatch => Self::Mismatch,
            Status::EmptyClass => Self::EmptyClass,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> CondiamStatus {
    match e {
        Error::Graph6(_) | Error::Ingest { .. } => CondiamStatus::Parse,
        Error::Disconnected | Error::WouldDisconnect => CondiamStatus::Disconnected,
        Error::Hypothesis(_) => CondiamStatus::Hypothesis,
        Error::Inconsistent(_) | Error::Io(_) => CondiamStatus::Internal,
        _ => CondiamStatus::InvalidArgument,
    }
}

struct Failure(CondiamStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CondiamStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CondiamStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CondiamStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            CondiamStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const CondiamGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(CondiamStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_graph(out: *mut *mut CondiamGraph, g: Graph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(CondiamGraph { inner: g })));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let s = CString::new(s).map_err(|_| Failure(CondiamStatus::Internal, "string holds NUL".into()))?;
    out.write(s.into_raw());
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Owned by the library.
#[no_mangle]
pub extern "C" fn condiam_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated graph6 record (optional `>>graph6<<` header and trailing newline).
///
/// # Safety
/// `text` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut CondiamGraph,
) -> CondiamStatus {
    guard(|| {
        let text = c_str(text, "text")?;
        write_graph(out, parse_graph6(text.as_bytes())?)
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2 * m` consecutive endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be NULL when `m == 0`).
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut CondiamGraph,
) -> CondiamStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        write_graph(out, g)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_free(g: *mut CondiamGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn condiam_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_order(g: *const CondiamGraph, out: *mut usize) -> CondiamStatus {
    guard(|| write(out, graph_ref(g)?.order(), "out"))
}

/// Number of edges.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_size(g: *const CondiamGraph, out: *mut usize) -> CondiamStatus {
    guard(|| write(out, graph_ref(g)?.size(), "out"))
}

/// Wiener index of a connected graph.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_wiener(g: *const CondiamGraph, out: *mut u64) -> CondiamStatus {
    guard(|| write(out, wiener(graph_ref(g)?)?, "out"))
}

/// Diameter of a connected graph.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_diameter(g: *const CondiamGraph, out: *mut u32) -> CondiamStatus {
    guard(|| write(out, diameter(graph_ref(g)?)?, "out"))
}

/// Sum of distances from `u` to every other vertex.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_transmission(
    g: *const CondiamGraph,
    u: usize,
    out: *mut u64,
) -> CondiamStatus {
    guard(|| write(out, transmission(graph_ref(g)?, u)?, "out"))
}

/// Conditional diameter `D(G;s)`. When `v1` and `v2` are both non-NULL they receive the
/// lexicographically least witness pair (`s` ids each) and `*has_witness` is set; no witness
/// exists when `n < 2s`.
///
/// # Safety
/// `g` must be NULL or a live handle; `value` must be writable; `v1`/`v2` must be NULL or
/// point to `s` writable values; `has_witness` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_conditional_diameter(
    g: *const CondiamGraph,
    s: usize,
    value: *mut u32,
    v1: *mut usize,
    v2: *mut usize,
    has_witness: *mut bool,
) -> CondiamStatus {
    guard(|| {
        let (d, witness) = conditional_diameter(graph_ref(g)?, s)?;
        write(value, d, "value")?;
        if !has_witness.is_null() {
            has_witness.write(witness.is_some());
        }
        if let (Some(w), false, false) = (&witness, v1.is_null(), v2.is_null()) {
            std::slice::from_raw_parts_mut(v1, s).copy_from_slice(&w.v1);
            std::slice::from_raw_parts_mut(v2, s).copy_from_slice(&w.v2);
        }
        Ok(())
    })
}

/// graph6 encoding without header or newline.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_graph_to_graph6(
    g: *const CondiamGraph,
    out: *mut *mut c_char,
) -> CondiamStatus {
    guard(|| write_string(out, emit_graph6(graph_ref(g)?)?))
}

/// Isomorphism-invariant key; equal keys mean isomorphic graphs.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_canonical_key(
    g: *const CondiamGraph,
    out: *mut *mut c_char,
) -> CondiamStatus {
    guard(|| write_string(out, canonical_key(graph_ref(g)?)))
}

/// Family member by name: `path`, `cycle`, `single`, `double` or `tail2`.
///
/// # Safety
/// `kind` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_family(
    kind: *const c_char,
    n: usize,
    i: usize,
    j: usize,
    out: *mut *mut CondiamGraph,
) -> CondiamStatus {
    guard(|| {
        let kind: FamilyKind = c_str(kind, "kind")?.parse()?;
        write_graph(out, FamilySpec { kind, n, i, j }.build()?)
    })
}

/// Graph claimed to maximise the Wiener index among trees with `D(G;s) = n - 2s + c`.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_claimed_extremal(
    c: i32,
    s: usize,
    n: usize,
    out: *mut *mut CondiamGraph,
) -> CondiamStatus {
    guard(|| write_graph(out, claimed_extremal(c, s, n)?))
}

/// Audits one `(c, s, n)` claim against every tree on `n` vertices. The certificate is written
/// as JSON to `*json` (may be NULL to skip) and its outcome to `*status`.
///
/// # Safety
/// `status` must be writable; `json` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn condiam_verify_claim_trees(
    c: i32,
    s: usize,
    n: usize,
    threads: usize,
    status: *mut CondiamAuditStatus,
    json: *mut *mut c_char,
) -> CondiamStatus {
    guard(|| {
        if status.is_null() {
            return Err(null("status"));
        }
        let graphs = Source::Trees.graphs(n, false)?;
        let cert = verify_claim(c, s, n, &graphs, &Source::Trees.describe(n), threads.max(1))?;
        status.write(cert.status.into());
        if !json.is_null() {
            write_string(json, cert.to_json())?;
        }
        Ok(())
    })
}
