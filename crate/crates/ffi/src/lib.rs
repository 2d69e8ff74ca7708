//! C ABI for edgesym.
//!
//! Graphs are opaque `EsGraph` handles created by `es_graph_from_*` and
//! released with `es_graph_free`. Every fallible call returns an `EsStatus`;
//! on failure `es_last_error` describes the most recent error on the calling
//! thread. Strings handed out by the library are freed with `es_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

use edgesym::identity::verify_ratio_identity;
use edgesym::{
    analyze, canonical_form, edge_set_orbit_size, er::er_prob_isomorphic, is_isomorphic,
    parse_graph6, EdgeSet, Error, Graph, Pair,
};

/// Opaque graph handle.
pub struct EsGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    InvalidEdgeSet = 5,
    Overflow = 6,
    CapExceeded = 7,
    Internal = 8,
}

/// Group orders and orbit sizes of one ratio-identity check.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EsRatioReport {
    pub aut_g: u64,
    pub ao_g: u64,
    pub aut_g_minus: u64,
    pub ao_g_minus: u64,
    pub holds: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Fail {
    status: EsStatus,
    message: String,
}

impl Fail {
    fn new(status: EsStatus, message: impl Into<String>) -> Fail {
        Fail {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match e {
            Error::MalformedGraph6(_) | Error::MalformedEdgeList(_) => EsStatus::ParseError,
            Error::SelfLoop(_) | Error::VertexOutOfRange { .. } | Error::DuplicateEdge(_) => {
                EsStatus::InvalidGraph
            }
            Error::NotASubset(_) | Error::EmptyEdgeSet | Error::DegreeMismatch { .. } => {
                EsStatus::InvalidEdgeSet
            }
            Error::CapExceeded { .. } => EsStatus::CapExceeded,
            _ => EsStatus::Internal,
        };
        Fail::new(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EsStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            EsStatus::Ok
        }
        Ok(Err(fail)) => {
            set_last_error(&fail.message);
            fail.status
        }
        Err(_) => {
            set_last_error("internal panic");
            EsStatus::Internal
        }
    }
}

fn null() -> Fail {
    Fail::new(EsStatus::NullPointer, "null pointer argument")
}

unsafe fn graph_ref<'a>(g: *const EsGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(null)
}

unsafe fn out_ref<'a, T>(out: *mut T) -> Result<&'a mut T, Fail> {
    out.as_mut().ok_or_else(null)
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail::new(EsStatus::Internal, "string contains NUL"))
}

/// Reads `count` pairs stored as `2 * count` consecutive vertex indices.
unsafe fn read_pairs(pairs: *const usize, count: usize) -> Result<Vec<Pair>, Fail> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if pairs.is_null() {
        return Err(null());
    }
    let flat = std::slice::from_raw_parts(pairs, 2 * count);
    flat.chunks_exact(2)
        .map(|p| Pair::new(p[0], p[1]).map_err(Fail::from))
        .collect()
}

unsafe fn read_edge_set(pairs: *const usize, count: usize) -> Result<EdgeSet, Fail> {
    let list = read_pairs(pairs, count)?;
    let set: EdgeSet = list.iter().copied().collect();
    if set.len() != list.len() {
        return Err(Fail::new(EsStatus::InvalidEdgeSet, "edge set lists a pair twice"));
    }
    Ok(set)
}

fn to_u64(x: &edgesym::BigUint) -> Result<u64, Fail> {
    u64::try_from(x).map_err(|_| Fail::new(EsStatus::Overflow, format!("{x} does not fit in 64 bits")))
}

/// Parses a graph6 string into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn es_graph_from_graph6(text: *const c_char, out: *mut *mut EsGraph) -> EsStatus {
    guard(|| {
        let out = out_ref(out)?;
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail::new(EsStatus::InvalidUtf8, "graph6 text is not UTF-8"))?;
        *out = Box::into_raw(Box::new(EsGraph(parse_graph6(s)?)));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored as
/// `2 * edge_count` vertex indices. A pair given twice is an error.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut EsGraph,
) -> EsStatus {
    guard(|| {
        let out = out_ref(out)?;
        let pairs = read_pairs(edges, edge_count)?;
        let g = Graph::new_strict(n, pairs.iter().map(|p| (p.lo(), p.hi())))?;
        *out = Box::into_raw(Box::new(EsGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn es_graph_free(g: *mut EsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn es_graph_vertex_count(g: *const EsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn es_graph_edge_count(g: *const EsGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.m())
}

/// # Safety
/// `g` must be a live handle and `out` valid. Free the result with
/// `es_string_free`.
#[no_mangle]
pub unsafe extern "C" fn es_graph_to_graph6(g: *const EsGraph, out: *mut *mut c_char) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        *out = into_c_string(g.to_graph6())?;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn es_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Order of the automorphism group as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn es_aut_order(g: *const EsGraph, out: *mut *mut c_char) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        *out = into_c_string(analyze(g).group.order()?.to_string())?;
        Ok(())
    })
}

/// Canonical certificate as lowercase hex. Equal strings for graphs with
/// the same vertex count mean isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn es_canonical_form(g: *const EsGraph, out: *mut *mut c_char) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        *out = into_c_string(canonical_form(g).to_hex())?;
        Ok(())
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn es_is_isomorphic(
    a: *const EsGraph,
    b: *const EsGraph,
    out: *mut bool,
) -> EsStatus {
    guard(|| {
        let (a, b, out) = (graph_ref(a)?, graph_ref(b)?, out_ref(out)?);
        *out = is_isomorphic(a, b);
        Ok(())
    })
}

/// Size of the orbit of a pair set under the graph's automorphism group.
///
/// # Safety
/// `pairs` must point to `2 * pair_count` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_edge_set_orbit_size(
    g: *const EsGraph,
    pairs: *const usize,
    pair_count: usize,
    out: *mut usize,
) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        let set = read_edge_set(pairs, pair_count)?;
        *out = edge_set_orbit_size(&analyze(g).group, &set)?;
        Ok(())
    })
}

/// Checks the symmetry ratio identity for deleting `pair_count` edges.
/// Returns `ES_STATUS_OVERFLOW` when a group order exceeds 64 bits; use
/// `es_verify_ratio_identity_json` for exact values.
///
/// # Safety
/// `pairs` must point to `2 * pair_count` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_verify_ratio_identity(
    g: *const EsGraph,
    pairs: *const usize,
    pair_count: usize,
    out: *mut EsRatioReport,
) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        let set = read_edge_set(pairs, pair_count)?;
        let r = verify_ratio_identity(g, &set)?;
        *out = EsRatioReport {
            aut_g: to_u64(&r.aut_g)?,
            ao_g: r.ao_g as u64,
            aut_g_minus: to_u64(&r.aut_g_minus)?,
            ao_g_minus: r.ao_g_minus as u64,
            holds: r.holds,
        };
        Ok(())
    })
}

/// Same check, reported as JSON with exact decimal strings.
///
/// # Safety
/// `pairs` must point to `2 * pair_count` values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_verify_ratio_identity_json(
    g: *const EsGraph,
    pairs: *const usize,
    pair_count: usize,
    out: *mut *mut c_char,
) -> EsStatus {
    guard(|| {
        let (g, out) = (graph_ref(g)?, out_ref(out)?);
        let set = read_edge_set(pairs, pair_count)?;
        let r = verify_ratio_identity(g, &set)?;
        let text = serde_json::to_string(&r).map_err(|e| Fail::new(EsStatus::Internal, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// Exact probability that a uniform graph with the same vertex and edge
/// counts is isomorphic to `g`, as a reduced fraction of decimal strings.
///
/// # Safety
/// `g` must be a live handle; `numerator` and `denominator` must be valid.
#[no_mangle]
pub unsafe extern "C" fn es_er_prob_isomorphic(
    g: *const EsGraph,
    numerator: *mut *mut c_char,
    denominator: *mut *mut c_char,
) -> EsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let (num_out, den_out) = (out_ref(numerator)?, out_ref(denominator)?);
        let p = er_prob_isomorphic(g);
        let num = into_c_string(p.numer().to_string())?;
        let den = match into_c_string(p.denom().to_string()) {
            Ok(d) => d,
            Err(e) => {
                es_string_free(num);
                return Err(e);
            }
        };
        *num_out = num;
        *den_out = den;
        Ok(())
    })
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call into the library on the same
/// thread.
#[no_mangle]
pub extern "C" fn es_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn es_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
