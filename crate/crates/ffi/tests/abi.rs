use std::ffi::{c_char, CStr, CString};
use std::ptr;

use compound_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { compound_string_free(p) };
    s
}

fn last_error() -> String {
    let p = compound_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn matrix(kind: &str, n: usize, class: (usize, usize), order: CompoundOrder) -> *mut CompoundMatrix {
    let kind = CString::new(kind).unwrap();
    let mut m = ptr::null_mut();
    let status = unsafe { compound_matrix_new(kind.as_ptr(), n, class.0, class.1, order, &mut m) };
    assert_eq!(status, CompoundStatus::Ok);
    m
}

#[test]
fn a4_entries_match_the_printed_matrix() {
    let m = matrix("A", 4, (0, 0), CompoundOrder::Printed);
    let printed = [[1, 0, 1, 0, 1], [1, 1, -1, 0, 1], [0, 1, 1, 1, 0], [1, 0, 0, 1, -1], [1, 1, 0, -1, -1]];
    unsafe {
        assert_eq!((compound_matrix_rows(m), compound_matrix_cols(m)), (5, 5));
        for (i, row) in printed.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let mut v = 0i64;
                assert_eq!(compound_matrix_entry_i64(m, i, j, &mut v), CompoundStatus::Ok);
                assert_eq!(v, x);
            }
        }
        let mut s = ptr::null_mut();
        assert_eq!(compound_matrix_entry_string(m, 1, 2, &mut s), CompoundStatus::Ok);
        assert_eq!(take_string(s), "-1");
        assert_eq!(compound_matrix_determinant(m, &mut s), CompoundStatus::Ok);
        assert_eq!(take_string(s).trim_start_matches('-'), "16");

        let mut v = 0i64;
        assert_eq!(compound_matrix_entry_i64(m, 5, 0, &mut v), CompoundStatus::OutOfRange);
        assert!(last_error().contains("outside 5x5"));
        compound_matrix_free(m);
    }
}

#[test]
fn text_output_matches_the_library() {
    let m = matrix("AtA", 4, (0, 0), CompoundOrder::Canonical);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(compound_matrix_to_string(m, CompoundFormat::Json, &mut s), CompoundStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(doc["blocks"].as_array().unwrap().len(), 3);
        assert_eq!(compound_matrix_to_string(m, CompoundFormat::Csv, &mut s), CompoundStatus::Ok);
        assert_eq!(take_string(s).lines().count(), 5);
        compound_matrix_free(m);
    }

    let b = matrix("block", 4, (0, 2), CompoundOrder::Canonical);
    unsafe {
        assert_eq!(compound_matrix_to_string(b, CompoundFormat::Csv, &mut s), CompoundStatus::Ok);
        assert_eq!(take_string(s), "3,1\n1,3\n");
        compound_matrix_free(b);
    }
}

#[test]
fn bad_requests_report_status_and_message() {
    let kind = CString::new("block").unwrap();
    let mut m = ptr::null_mut();
    let status = unsafe { compound_matrix_new(kind.as_ptr(), 4, 1, 1, CompoundOrder::Canonical, &mut m) };
    assert_eq!(status, CompoundStatus::OutOfRange);
    assert!(m.is_null());
    assert!(last_error().contains("invalid block"));

    let bogus = CString::new("B").unwrap();
    let status = unsafe { compound_matrix_new(bogus.as_ptr(), 4, 0, 0, CompoundOrder::Canonical, &mut m) };
    assert_eq!(status, CompoundStatus::InvalidArgument);

    let status = unsafe { compound_matrix_new(ptr::null(), 4, 0, 0, CompoundOrder::Canonical, &mut m) };
    assert_eq!(status, CompoundStatus::NullPointer);

    unsafe {
        assert_eq!(compound_matrix_rows(ptr::null()), 0);
        compound_matrix_free(ptr::null_mut());
        compound_string_free(ptr::null_mut());
    }
}

#[test]
fn decompose_and_k_values() {
    let map = CString::new("habacus").unwrap();
    let lam = CString::new("11,10,5,3,2").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { compound_decompose(map.as_ptr(), lam.as_ptr(), &mut s) }, CompoundStatus::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(doc["shifted0"], serde_json::json!([5, 1]));
    assert!(compound_last_error().is_null());

    let not_strict = CString::new("2,2").unwrap();
    let status = unsafe { compound_decompose(map.as_ptr(), not_strict.as_ptr(), &mut s) };
    assert_eq!(status, CompoundStatus::InvalidPartition);

    let ks: Vec<u64> = (1..=8)
        .map(|n| {
            let mut k = 0;
            assert_eq!(unsafe { compound_k_value(n, &mut k) }, CompoundStatus::Ok);
            k
        })
        .collect();
    assert_eq!(ks, [0, 1, 1, 4, 5, 11, 15, 28]);
}

#[test]
fn verify_one_claim() {
    let claim = CString::new("thm-4.6").unwrap();
    let mut passed = false;
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { compound_verify(claim.as_ptr(), 6, &mut passed, &mut s) }, CompoundStatus::Ok);
    assert!(passed);
    let report: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(report["details"]["k"], 11);

    let unknown = CString::new("nope").unwrap();
    let status = unsafe { compound_verify(unknown.as_ptr(), 6, &mut passed, &mut s) };
    assert_eq!(status, CompoundStatus::InvalidArgument);
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/compound.h");
    for name in [
        "compound_last_error",
        "compound_matrix_new",
        "compound_matrix_free",
        "compound_matrix_rows",
        "compound_matrix_cols",
        "compound_matrix_entry_i64",
        "compound_matrix_entry_string",
        "compound_matrix_determinant",
        "compound_matrix_to_string",
        "compound_decompose",
        "compound_verify",
        "compound_k_value",
        "compound_string_free",
        "typedef struct CompoundMatrix CompoundMatrix",
        "COMPOUND_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
