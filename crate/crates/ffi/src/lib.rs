//! C ABI over the antibch core: opaque handles for towers and codes,
//! status codes mirroring the CLI exit codes, and JSON strings for every
//! structured result.
//!
//! Ownership rules: every `*_new` ships a heap handle released by the
//! matching `*_free`; every string output is released by
//! `antibch_string_free`. All entry points catch panics and report them
//! as `ANTIBCH_INTERNAL_ERROR` instead of unwinding across the boundary.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use antibch::code::{self, CyclicCode};
use antibch::error::Error;
use antibch::field::Tower;
use antibch::verify::{self, RunCfg};
use antibch::weight;

/// Status codes; nonzero values match the CLI exit codes where they
/// overlap (1 verification failure, 2 invalid argument, 3 guard).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntibchStatus {
    AntibchOk = 0,
    AntibchVerificationFailed = 1,
    AntibchInvalidArgument = 2,
    AntibchGuardExceeded = 3,
    AntibchNullPointer = 4,
    AntibchInternalError = 5,
}

use AntibchStatus::*;

/// Opaque tower handle: the ambient field GF(p^{2am}) with its norm-one
/// coordinate group.
pub struct AntibchTower {
    tower: Tower,
    delta: u64,
}

/// Opaque cyclic-code handle bound to the tower that built it.
pub struct AntibchCode {
    code: CyclicCode,
    delta: u64,
    h: i64,
}

fn status_of(e: &Error) -> AntibchStatus {
    match e {
        Error::GuardExceeded(_) => AntibchGuardExceeded,
        _ => AntibchInvalidArgument,
    }
}

fn guarded(body: impl FnOnce() -> AntibchStatus) -> AntibchStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => AntibchInternalError,
    }
}

fn write_string(out: *mut *mut c_char, s: String) -> AntibchStatus {
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            AntibchOk
        }
        Err(_) => AntibchInternalError,
    }
}

fn power_exponent(p: u64, delta: u64) -> Option<usize> {
    if p < 2 || delta < 2 {
        return None;
    }
    let mut x = delta;
    let mut a = 0;
    while x % p == 0 {
        x /= p;
        a += 1;
    }
    (x == 1 && a >= 1).then_some(a)
}

/// Build the tower for q = delta^m over characteristic p; delta must be a
/// power of p.
///
/// # Safety
/// `out` must be a valid pointer to a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn antibch_tower_new(
    p: u64,
    delta: u64,
    m: u64,
    out: *mut *mut AntibchTower,
) -> AntibchStatus {
    if out.is_null() {
        return AntibchNullPointer;
    }
    guarded(|| {
        let Some(a) = power_exponent(p, delta) else {
            return AntibchInvalidArgument;
        };
        match Tower::new(p, a, m as usize) {
            Ok(tower) => {
                let handle = Box::new(AntibchTower { tower, delta });
                unsafe { *out = Box::into_raw(handle) };
                AntibchOk
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `t` must be a handle from `antibch_tower_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn antibch_tower_free(t: *mut AntibchTower) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

/// Construct bch(q, q+1, delta, h) on the tower.
///
/// # Safety
/// `t` must be a live tower handle and `out` a writable handle slot.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_new(
    t: *const AntibchTower,
    h: i64,
    out: *mut *mut AntibchCode,
) -> AntibchStatus {
    if t.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    let handle = unsafe { &*t };
    guarded(|| match code::bch(&handle.tower, handle.delta, h) {
        Ok(code) => {
            let boxed = Box::new(AntibchCode {
                code,
                delta: handle.delta,
                h,
            });
            unsafe { *out = Box::into_raw(boxed) };
            AntibchOk
        }
        Err(e) => status_of(&e),
    })
}

/// # Safety
/// `c` must be a handle from `antibch_code_new`/`antibch_code_dual`.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_free(c: *mut AntibchCode) {
    if !c.is_null() {
        drop(unsafe { Box::from_raw(c) });
    }
}

/// # Safety
/// `c` must be a live code handle; `out` a writable u64 slot.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_dimension(
    c: *const AntibchCode,
    out: *mut u64,
) -> AntibchStatus {
    if c.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    unsafe { *out = (*c).code.dimension() as u64 };
    AntibchOk
}

/// # Safety
/// `c` must be a live code handle; `out` a writable u64 slot.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_length(
    c: *const AntibchCode,
    out: *mut u64,
) -> AntibchStatus {
    if c.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    unsafe { *out = (*c).code.n() };
    AntibchOk
}

/// The dual code as a fresh handle.
///
/// # Safety
/// `t` and `c` must be live matching handles; `out` a writable slot.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_dual(
    t: *const AntibchTower,
    c: *const AntibchCode,
    out: *mut *mut AntibchCode,
) -> AntibchStatus {
    if t.is_null() || c.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    let tower = unsafe { &(*t).tower };
    let src = unsafe { &*c };
    guarded(|| {
        let dual = code::dual(tower.field(), &src.code);
        let boxed = Box::new(AntibchCode {
            code: dual,
            delta: src.delta,
            h: src.h,
        });
        unsafe { *out = Box::into_raw(boxed) };
        AntibchOk
    })
}

/// The code descriptor as JSON:
/// {"q","n","delta","h","dimension","generator","defining_set"}.
///
/// # Safety
/// `t` and `c` must be live matching handles; `out` a writable slot for a
/// string later released with `antibch_string_free`.
#[no_mangle]
pub unsafe extern "C" fn antibch_code_descriptor_json(
    t: *const AntibchTower,
    c: *const AntibchCode,
    out: *mut *mut c_char,
) -> AntibchStatus {
    if t.is_null() || c.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    let tower = unsafe { &(*t).tower };
    let handle = unsafe { &*c };
    guarded(|| {
        let desc = code::descriptor(tower, &handle.code, handle.delta, handle.h);
        write_string(out, serde_json::to_string(&desc).expect("serializable"))
    })
}

/// Weight distribution of the code as a JSON array of decimal strings.
/// `use_trace` nonzero selects the dual trace parameterization (the handle
/// must then be the dual of a narrow-sense code).
///
/// # Safety
/// `t` and `c` must be live matching handles; `out` as in
/// `antibch_code_descriptor_json`.
#[no_mangle]
pub unsafe extern "C" fn antibch_weight_distribution_json(
    t: *const AntibchTower,
    c: *const AntibchCode,
    use_trace: u32,
    threads: u64,
    out: *mut *mut c_char,
) -> AntibchStatus {
    if t.is_null() || c.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    let tower = unsafe { &(*t).tower };
    let handle = unsafe { &*c };
    guarded(|| {
        let threads = (threads as usize).max(1);
        let dist = if use_trace != 0 {
            weight::weight_distribution_trace(tower, handle.delta, threads)
        } else {
            weight::weight_distribution_exhaustive(tower.field(), &handle.code, threads)
        };
        match dist {
            Ok(d) => write_string(
                out,
                serde_json::to_string(&d.to_decimal_strings()).expect("serializable"),
            ),
            Err(e) => status_of(&e),
        }
    })
}

/// Run a named verification suite (same names as the CLI: params,
/// dual-params, min-words, design, design-iso, p-rank, classification,
/// automorphism, lemmas, scale) and write the JSON report. Returns
/// `ANTIBCH_VERIFICATION_FAILED` when any check fails; the report is
/// still written in that case. Pass `u0 = UINT64_MAX` for the default
/// base point.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out` as above.
#[no_mangle]
pub unsafe extern "C" fn antibch_verify_json(
    suite: *const c_char,
    p: u64,
    m: u64,
    delta: u64,
    h: u64,
    seed: u64,
    samples: u64,
    threads: u64,
    u0: u64,
    out: *mut *mut c_char,
) -> AntibchStatus {
    if suite.is_null() || out.is_null() {
        return AntibchNullPointer;
    }
    let Ok(suite) = (unsafe { CStr::from_ptr(suite) }).to_str() else {
        return AntibchInvalidArgument;
    };
    guarded(|| {
        let cfg = RunCfg {
            seed,
            samples: samples as usize,
            threads: (threads as usize).max(1),
            u0: (u0 != u64::MAX).then_some(u0),
        };
        let tower = || -> Result<Tower, Error> {
            let a = power_exponent(p, delta).ok_or_else(|| {
                Error::InvalidParameter(format!("delta = {delta} is not a power of p = {p}"))
            })?;
            Tower::new(p, a, m as usize)
        };
        let results = match suite {
            "params" => tower().and_then(|t| verify::verify_params(&t, &cfg)),
            "dual-params" => tower().and_then(|t| verify::verify_dual_params(&t, &cfg)),
            "min-words" => tower().and_then(|t| verify::verify_min_words(&t, &cfg)),
            "design" => tower().and_then(|t| verify::verify_design(&t, &cfg)),
            "design-iso" => tower().and_then(|t| verify::verify_design_iso(&t, &cfg)),
            "p-rank" => tower().and_then(|t| verify::verify_p_rank(&t, &cfg)),
            "classification" => verify::verify_classification(p, m as usize, h as usize),
            "automorphism" => tower().and_then(|t| verify::verify_automorphism(&t, &cfg)),
            "lemmas" => verify::verify_lemmas(&cfg),
            "scale" => tower().and_then(|t| verify::verify_scale_identity(&t, &cfg)),
            _ => Err(Error::InvalidParameter(format!("unknown suite '{suite}'"))),
        };
        match results {
            Ok(results) => {
                let pass = verify::all_pass(&results);
                let doc = serde_json::json!({
                    "suite": suite,
                    "pass": pass,
                    "results": results,
                });
                let status = write_string(out, doc.to_string());
                if status != AntibchOk {
                    status
                } else if pass {
                    AntibchOk
                } else {
                    AntibchVerificationFailed
                }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// The PGL-invariant code classification report as JSON.
///
/// # Safety
/// `out` as above.
#[no_mangle]
pub unsafe extern "C" fn antibch_classification_json(
    p: u64,
    m: u64,
    h: u64,
    out: *mut *mut c_char,
) -> AntibchStatus {
    if out.is_null() {
        return AntibchNullPointer;
    }
    guarded(
        || match antibch::classify::classify(p, m as usize, h as usize) {
            Ok(report) => write_string(out, serde_json::to_string(&report).expect("serializable")),
            Err(e) => status_of(&e),
        },
    )
}

/// Release a string produced by any `*_json` function.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn antibch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
