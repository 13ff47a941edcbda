use std::ffi::{CStr, CString};
use std::ptr;

use lusztig_fock_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    // SAFETY: returned by the library and freed right after copying.
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { lf_string_free(s) };
    text
}

fn last_error() -> String {
    // SAFETY: the library returns a valid NUL-terminated string.
    unsafe { CStr::from_ptr(lf_last_error()) }.to_str().unwrap().to_string()
}

fn engine(e: u32, classical: bool) -> *mut LfEngine {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_new(e, classical, 0, &mut h) }, LfStatus::Ok);
    h
}

#[test]
fn decomposition_matrix_e4() {
    let h = engine(4, false);
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_decomposition_matrix(h, 4, false, &mut m) }, LfStatus::Ok);
    let dim = unsafe { lf_matrix_dim(m) };
    assert_eq!(dim, 5);
    let labels: Vec<String> = (0..dim)
        .map(|i| {
            let mut s = ptr::null_mut();
            assert_eq!(unsafe { lf_matrix_label(m, i, &mut s) }, LfStatus::Ok);
            take_string(s)
        })
        .collect();
    assert_eq!(labels, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    let block = [0, 1, 3, 4];
    let expected = [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]];
    for (i, &r) in block.iter().enumerate() {
        for (j, &c) in block.iter().enumerate() {
            let mut x = -1;
            assert_eq!(unsafe { lf_matrix_entry(m, r, c, &mut x) }, LfStatus::Ok);
            assert_eq!(x, expected[i][j], "entry ({}, {})", labels[r], labels[c]);
        }
    }
    let mut x = 0;
    assert_eq!(unsafe { lf_matrix_entry(m, 2, 2, &mut x) }, LfStatus::Ok);
    assert_eq!(x, 1);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { lf_matrix_to_json(m, &mut json) }, LfStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["entries"][3][1], 1);
    unsafe {
        lf_matrix_free(m);
        lf_engine_free(h);
    }
}

#[test]
fn inverse_matrix_is_inverse_up_to_conjugation() {
    let h = engine(2, false);
    let (mut d, mut e) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { lf_engine_decomposition_matrix(h, 5, false, &mut d) }, LfStatus::Ok);
    assert_eq!(unsafe { lf_engine_decomposition_matrix(h, 5, true, &mut e) }, LfStatus::Ok);
    let dim = unsafe { lf_matrix_dim(d) };
    let label = |m, i| {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { lf_matrix_label(m, i, &mut s) }, LfStatus::Ok);
        take_string(s)
    };
    let conj: Vec<usize> = (0..dim)
        .map(|i| {
            let lam: lusztig_fock::Partition = label(d, i).parse().unwrap();
            let c = lam.conjugate().to_string();
            (0..dim).find(|&j| label(d, j) == c).unwrap()
        })
        .collect();
    let at = |m, r, c| {
        let mut x = 0;
        assert_eq!(unsafe { lf_matrix_entry(m, r, c, &mut x) }, LfStatus::Ok);
        x
    };
    for r in 0..dim {
        for c in 0..dim {
            let s: i64 = (0..dim).map(|k| at(d, r, k) * at(e, conj[c], conj[k])).sum();
            assert_eq!(s, i64::from(r == c), "({r},{c})");
        }
    }
    unsafe {
        lf_matrix_free(d);
        lf_matrix_free(e);
        lf_engine_free(h);
    }
}

#[test]
fn canonical_and_quotient_json() {
    let h = engine(2, false);
    let lam = CString::new("1").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_canonical_json(h, lam.as_ptr(), false, &mut s) }, LfStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v, serde_json::json!({"1": "1"}));
    unsafe { lf_engine_free(h) };

    let lam = CString::new("3").unwrap();
    assert_eq!(unsafe { lf_core_quotient_json(lam.as_ptr(), 3, &mut s) }, LfStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["weight"], 1);
    assert_eq!(v["core"], serde_json::json!([]));
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_new(1, false, 0, &mut h) }, LfStatus::InvalidArgument);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { lf_engine_new(2, false, 0, ptr::null_mut()) }, LfStatus::NullPointer);

    assert_eq!(unsafe { lf_engine_new(2, true, 3, &mut h) }, LfStatus::Ok);
    assert!(last_error().is_empty());
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_decomposition_matrix(h, 4, false, &mut m) }, LfStatus::BoundExceeded);
    assert!(m.is_null());
    assert_eq!(unsafe { lf_engine_decomposition_matrix(ptr::null_mut(), 2, false, &mut m) }, LfStatus::NullPointer);

    let bad = CString::new("2,x").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lf_engine_canonical_json(h, bad.as_ptr(), false, &mut s) }, LfStatus::InvalidArgument);
    assert_eq!(unsafe { lf_core_quotient_json(ptr::null(), 2, &mut s) }, LfStatus::NullPointer);

    assert_eq!(unsafe { lf_engine_decomposition_matrix(h, 2, false, &mut m) }, LfStatus::Ok);
    let mut x = 0;
    assert_eq!(unsafe { lf_matrix_entry(m, 9, 0, &mut x) }, LfStatus::InvalidArgument);
    assert_eq!(unsafe { lf_matrix_dim(ptr::null()) }, 0);
    unsafe {
        lf_matrix_free(m);
        lf_engine_free(h);
        lf_matrix_free(ptr::null_mut());
        lf_engine_free(ptr::null_mut());
        lf_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/lusztig_fock.h")).unwrap();
    for name in [
        "lf_last_error",
        "lf_string_free",
        "lf_engine_new",
        "lf_engine_free",
        "lf_engine_decomposition_matrix",
        "lf_engine_canonical_json",
        "lf_core_quotient_json",
        "lf_matrix_free",
        "lf_matrix_dim",
        "lf_matrix_entry",
        "lf_matrix_label",
        "lf_matrix_to_json",
        "LF_STATUS_BOUND_EXCEEDED",
        "typedef struct LfEngine LfEngine",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
