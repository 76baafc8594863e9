use std::ffi::{CStr, CString};
use std::ptr;

use condiam_ffi::*;

fn graph6(text: &str) -> *mut CondiamGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { condiam_graph_from_graph6(text.as_ptr(), &mut g) }, CondiamStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = condiam_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { condiam_string_free(p) };
    s
}

#[test]
fn invariants_of_a_triangle() {
    let g = graph6("Bw");
    let (mut n, mut m, mut w, mut d, mut t) = (0usize, 0usize, 0u64, 0u32, 0u64);
    unsafe {
        assert_eq!(condiam_graph_order(g, &mut n), CondiamStatus::Ok);
        assert_eq!(condiam_graph_size(g, &mut m), CondiamStatus::Ok);
        assert_eq!(condiam_wiener(g, &mut w), CondiamStatus::Ok);
        assert_eq!(condiam_diameter(g, &mut d), CondiamStatus::Ok);
        assert_eq!(condiam_transmission(g, 0, &mut t), CondiamStatus::Ok);
        condiam_graph_free(g);
    }
    assert_eq!((n, m, w, d), (3, 3, 3, 1));
    assert_eq!(t, 2);
}

#[test]
fn edges_round_trip_through_graph6() {
    let edges = [0usize, 1, 1, 2, 2, 3, 3, 4, 4, 5];
    let mut g = ptr::null_mut();
    let mut text = ptr::null_mut();
    let mut key_a = ptr::null_mut();
    unsafe {
        assert_eq!(condiam_graph_from_edges(6, edges.as_ptr(), 5, &mut g), CondiamStatus::Ok);
        assert_eq!(condiam_graph_to_graph6(g, &mut text), CondiamStatus::Ok);
        assert_eq!(condiam_canonical_key(g, &mut key_a), CondiamStatus::Ok);
        condiam_graph_free(g);
    }
    let text = take_string(text);
    let h = graph6(&text);
    let mut key_b = ptr::null_mut();
    unsafe {
        assert_eq!(condiam_canonical_key(h, &mut key_b), CondiamStatus::Ok);
        condiam_graph_free(h);
    }
    assert_eq!(take_string(key_a), take_string(key_b));
}

#[test]
fn conditional_diameter_with_witness() {
    let mut g = ptr::null_mut();
    let kind = CString::new("path").unwrap();
    unsafe { assert_eq!(condiam_family(kind.as_ptr(), 6, 0, 0, &mut g), CondiamStatus::Ok) };
    let (mut value, mut has) = (0u32, false);
    let (mut v1, mut v2) = ([9usize; 2], [9usize; 2]);
    unsafe {
        let status =
            condiam_conditional_diameter(g, 2, &mut value, v1.as_mut_ptr(), v2.as_mut_ptr(), &mut has);
        assert_eq!(status, CondiamStatus::Ok);
    }
    assert_eq!(value, 3);
    assert!(has);
    assert_eq!((v1, v2), ([0, 1], [4, 5]));

    // n < 2s: value 0 and no witness; buffers untouched
    unsafe {
        let status =
            condiam_conditional_diameter(g, 4, &mut value, v1.as_mut_ptr(), v2.as_mut_ptr(), &mut has);
        assert_eq!(status, CondiamStatus::Ok);
        condiam_graph_free(g);
    }
    assert_eq!(value, 0);
    assert!(!has);
}

#[test]
fn errors_set_codes_and_messages() {
    let mut g = ptr::null_mut();
    let bad = CString::new("B\x1f").unwrap();
    unsafe {
        assert_eq!(condiam_graph_from_graph6(bad.as_ptr(), &mut g), CondiamStatus::Parse);
    }
    assert!(g.is_null());
    assert!(last_error().contains("graph6"));

    unsafe {
        assert_eq!(condiam_graph_from_graph6(ptr::null(), &mut g), CondiamStatus::NullPointer);
        let mut w = 0u64;
        assert_eq!(condiam_wiener(ptr::null(), &mut w), CondiamStatus::NullPointer);
        let loops = [1usize, 1];
        assert_eq!(condiam_graph_from_edges(3, loops.as_ptr(), 1, &mut g), CondiamStatus::InvalidArgument);
        assert_eq!(condiam_graph_from_edges(3, ptr::null(), 1, &mut g), CondiamStatus::NullPointer);
    }

    let disconnected = graph6("B?");
    let mut w = 0u64;
    unsafe {
        assert_eq!(condiam_wiener(disconnected, &mut w), CondiamStatus::Disconnected);
        condiam_graph_free(disconnected);
    }
    assert!(last_error().contains("disconnected"));

    let kind = CString::new("hexagon").unwrap();
    unsafe {
        assert_eq!(condiam_family(kind.as_ptr(), 6, 0, 0, &mut g), CondiamStatus::InvalidArgument);
        assert_eq!(condiam_claimed_extremal(0, 2, 6, &mut g), CondiamStatus::Hypothesis);
    }
}

#[test]
fn claimed_extremal_handle() {
    let mut g = ptr::null_mut();
    let mut w = 0u64;
    unsafe {
        assert_eq!(condiam_claimed_extremal(0, 2, 7, &mut g), CondiamStatus::Ok);
        assert_eq!(condiam_wiener(g, &mut w), CondiamStatus::Ok);
        condiam_graph_free(g);
    }
    assert_eq!(w, 50);
}

#[test]
fn audit_outcomes() {
    let mut status = CondiamAuditStatus::EmptyClass;
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(condiam_verify_claim_trees(0, 1, 8, 1, &mut status, &mut json), CondiamStatus::Ok);
    }
    assert_eq!(status, CondiamAuditStatus::MatchUnique);
    assert!(take_string(json).contains("MATCH_UNIQUE"));

    unsafe {
        assert_eq!(condiam_verify_claim_trees(1, 2, 10, 2, &mut status, ptr::null_mut()), CondiamStatus::Ok);
    }
    assert_eq!(status, CondiamAuditStatus::Tie);
    unsafe {
        assert_eq!(condiam_verify_claim_trees(1, 2, 9, 1, &mut status, ptr::null_mut()), CondiamStatus::Ok);
    }
    assert_eq!(status, CondiamAuditStatus::Mismatch);
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/condiam.h")).unwrap();
    for name in [
        "condiam_graph_from_graph6",
        "condiam_conditional_diameter",
        "condiam_verify_claim_trees",
        "CONDIAM_STATUS_OK",
        "typedef struct CondiamGraph CondiamGraph",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
