use std::ffi::{c_char, CStr, CString};
use std::ptr;

use edgesym_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { es_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(es_last_error()) }.to_str().unwrap().to_owned()
}

fn from_graph6(text: &str) -> *mut EsGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { es_graph_from_graph6(c.as_ptr(), &mut g) }, EsStatus::Ok);
    g
}

fn double_broom() -> *mut EsGraph {
    let edges: [usize; 12] = [0, 4, 1, 4, 4, 5, 5, 6, 6, 2, 6, 3];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { es_graph_from_edges(7, edges.as_ptr(), 6, &mut g) }, EsStatus::Ok);
    g
}

#[test]
fn graph_round_trip() {
    let g = double_broom();
    unsafe {
        assert_eq!(es_graph_vertex_count(g), 7);
        assert_eq!(es_graph_edge_count(g), 6);
        let mut s = ptr::null_mut();
        assert_eq!(es_graph_to_graph6(g, &mut s), EsStatus::Ok);
        assert_eq!(take_string(s), "F?oHg");
        es_graph_free(g);
    }
}

#[test]
fn automorphisms_and_canonical_forms() {
    let k4 = from_graph6("C~");
    let g = double_broom();
    let h = from_graph6("F?oHg");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(es_aut_order(k4, &mut s), EsStatus::Ok);
        assert_eq!(take_string(s), "24");
        assert_eq!(es_canonical_form(g, &mut s), EsStatus::Ok);
        let a = take_string(s);
        assert_eq!(es_canonical_form(h, &mut s), EsStatus::Ok);
        assert_eq!(take_string(s), a);
        let mut iso = false;
        assert_eq!(es_is_isomorphic(g, h, &mut iso), EsStatus::Ok);
        assert!(iso);
        assert_eq!(es_is_isomorphic(g, k4, &mut iso), EsStatus::Ok);
        assert!(!iso);
        for p in [k4, g, h] {
            es_graph_free(p);
        }
    }
}

#[test]
fn orbit_and_ratio_identity() {
    let g = double_broom();
    let removed: [usize; 4] = [0, 4, 4, 5];
    unsafe {
        let mut size = 0;
        assert_eq!(es_edge_set_orbit_size(g, removed.as_ptr(), 2, &mut size), EsStatus::Ok);
        assert_eq!(size, 4);

        let mut report = EsRatioReport::default();
        assert_eq!(es_verify_ratio_identity(g, removed.as_ptr(), 2, &mut report), EsStatus::Ok);
        assert_eq!(
            report,
            EsRatioReport {
                aut_g: 8,
                ao_g: 4,
                aut_g_minus: 12,
                ao_g_minus: 6,
                holds: true
            }
        );

        let mut s = ptr::null_mut();
        assert_eq!(es_verify_ratio_identity_json(g, removed.as_ptr(), 2, &mut s), EsStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(json["autGminus"], "12");
        assert_eq!(json["holds"], true);
        es_graph_free(g);
    }
}

#[test]
fn large_orders_overflow_the_fixed_width_report() {
    // deleting the only edge of a 22-vertex graph leaves 22! automorphisms
    let edges: [usize; 2] = [0, 1];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(es_graph_from_edges(22, edges.as_ptr(), 1, &mut g), EsStatus::Ok);
        let mut report = EsRatioReport::default();
        assert_eq!(es_verify_ratio_identity(g, edges.as_ptr(), 1, &mut report), EsStatus::Overflow);
        assert!(last_error().contains("64 bits"));
        let mut s = ptr::null_mut();
        assert_eq!(es_verify_ratio_identity_json(g, edges.as_ptr(), 1, &mut s), EsStatus::Ok);
        let json: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(json["autGminus"], "1124000727777607680000");
        es_graph_free(g);
    }
}

#[test]
fn er_probability() {
    let p4 = from_graph6("Ch");
    unsafe {
        let (mut num, mut den) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(es_er_prob_isomorphic(p4, &mut num, &mut den), EsStatus::Ok);
        assert_eq!(take_string(num), "3");
        assert_eq!(take_string(den), "5");
        es_graph_free(p4);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("!").unwrap();
        assert_eq!(es_graph_from_graph6(bad.as_ptr(), &mut g), EsStatus::ParseError);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(es_graph_from_graph6(ptr::null(), &mut g), EsStatus::NullPointer);
        let loops: [usize; 2] = [1, 1];
        assert_eq!(es_graph_from_edges(3, loops.as_ptr(), 1, &mut g), EsStatus::InvalidGraph);
        let dup: [usize; 4] = [0, 1, 1, 0];
        assert_eq!(es_graph_from_edges(3, dup.as_ptr(), 2, &mut g), EsStatus::InvalidGraph);
        let out_of_range: [usize; 2] = [0, 5];
        assert_eq!(es_graph_from_edges(3, out_of_range.as_ptr(), 1, &mut g), EsStatus::InvalidGraph);

        let k3 = from_graph6("Bw");
        assert!(last_error().is_empty());
        let mut report = EsRatioReport::default();
        assert_eq!(es_verify_ratio_identity(k3, ptr::null(), 0, &mut report), EsStatus::InvalidEdgeSet);
        let twice: [usize; 4] = [0, 1, 0, 1];
        assert_eq!(es_verify_ratio_identity(k3, twice.as_ptr(), 2, &mut report), EsStatus::InvalidEdgeSet);
        let mut size = 0;
        assert_eq!(es_edge_set_orbit_size(ptr::null(), ptr::null(), 0, &mut size), EsStatus::NullPointer);
        assert_eq!(es_graph_vertex_count(ptr::null()), 0);
        es_graph_free(k3);
        es_graph_free(ptr::null_mut());
        es_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/edgesym.h");
    for name in [
        "es_graph_from_graph6",
        "es_graph_from_edges",
        "es_graph_free",
        "es_graph_to_graph6",
        "es_aut_order",
        "es_canonical_form",
        "es_is_isomorphic",
        "es_edge_set_orbit_size",
        "es_verify_ratio_identity",
        "es_verify_ratio_identity_json",
        "es_er_prob_isomorphic",
        "es_last_error",
        "es_string_free",
        "typedef struct EsGraph EsGraph",
        "ES_STATUS_OVERFLOW",
    ] {
        assert!(header.contains(name), "{name}");
    }
    let version = unsafe { CStr::from_ptr(es_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}
