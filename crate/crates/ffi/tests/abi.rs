//! Exercises the C ABI from Rust: handle lifecycle, status codes, and the
//! JSON report surfaces.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use antibch_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { antibch_string_free(p) };
    s
}

#[test]
fn tower_and_code_lifecycle() {
    unsafe {
        let mut tower: *mut AntibchTower = ptr::null_mut();
        assert_eq!(
            antibch_tower_new(3, 3, 2, &mut tower),
            AntibchStatus::AntibchOk
        );
        let mut code: *mut AntibchCode = ptr::null_mut();
        assert_eq!(
            antibch_code_new(tower, 1, &mut code),
            AntibchStatus::AntibchOk
        );
        let mut k = 0u64;
        assert_eq!(
            antibch_code_dimension(code, &mut k),
            AntibchStatus::AntibchOk
        );
        assert_eq!(k, 6);
        let mut n = 0u64;
        assert_eq!(antibch_code_length(code, &mut n), AntibchStatus::AntibchOk);
        assert_eq!(n, 10);

        let mut dual: *mut AntibchCode = ptr::null_mut();
        assert_eq!(
            antibch_code_dual(tower, code, &mut dual),
            AntibchStatus::AntibchOk
        );
        let mut kd = 0u64;
        antibch_code_dimension(dual, &mut kd);
        assert_eq!(kd, 4);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            antibch_code_descriptor_json(tower, code, &mut json),
            AntibchStatus::AntibchOk
        );
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["q"], 9);
        assert_eq!(doc["dimension"], 6);

        let mut dist: *mut c_char = ptr::null_mut();
        assert_eq!(
            antibch_weight_distribution_json(tower, dual, 1, 2, &mut dist),
            AntibchStatus::AntibchOk
        );
        let counts: Vec<String> = serde_json::from_str(&take_string(dist)).unwrap();
        assert_eq!(counts[6], "240");

        antibch_code_free(dual);
        antibch_code_free(code);
        antibch_tower_free(tower);
    }
}

#[test]
fn status_codes_for_bad_input() {
    unsafe {
        let mut tower: *mut AntibchTower = ptr::null_mut();
        // delta not a power of p
        assert_eq!(
            antibch_tower_new(3, 5, 2, &mut tower),
            AntibchStatus::AntibchInvalidArgument
        );
        // null out-pointer
        assert_eq!(
            antibch_tower_new(3, 3, 2, ptr::null_mut()),
            AntibchStatus::AntibchNullPointer
        );
        assert_eq!(
            antibch_code_new(ptr::null(), 1, &mut ptr::null_mut()),
            AntibchStatus::AntibchNullPointer
        );
        // frees tolerate null
        antibch_tower_free(ptr::null_mut());
        antibch_code_free(ptr::null_mut());
        antibch_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_suite_reports_and_statuses() {
    unsafe {
        let suite = CString::new("p-rank").unwrap();
        let mut json: *mut c_char = ptr::null_mut();
        let status =
            antibch_verify_json(suite.as_ptr(), 3, 2, 3, 1, 0, 100, 1, u64::MAX, &mut json);
        assert_eq!(status, AntibchStatus::AntibchOk);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["pass"], true);

        let unknown = CString::new("nope").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            antibch_verify_json(unknown.as_ptr(), 3, 2, 3, 1, 0, 10, 1, u64::MAX, &mut out),
            AntibchStatus::AntibchInvalidArgument
        );
    }
}

#[test]
fn guard_exceeded_status() {
    unsafe {
        let mut tower: *mut AntibchTower = ptr::null_mut();
        antibch_tower_new(5, 5, 2, &mut tower);
        let mut code: *mut AntibchCode = ptr::null_mut();
        antibch_code_new(tower, 1, &mut code);
        // 25^18 codewords
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            antibch_weight_distribution_json(tower, code, 0, 1, &mut out),
            AntibchStatus::AntibchGuardExceeded
        );
        antibch_code_free(code);
        antibch_tower_free(tower);
    }
}

#[test]
fn classification_json() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            antibch_classification_json(2, 2, 1, &mut out),
            AntibchStatus::AntibchOk
        );
        let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(doc["invariant_codes"].as_array().unwrap().len(), 4);
    }
}
