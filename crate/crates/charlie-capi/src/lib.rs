//! C interface: opaque handles over the table builder and the verification
//! entry points, with integer status codes and caller-freed strings.
//!
//! Conventions: functions return `CHARLIE_OK` (0) on success, a positive
//! `CharlieStatus` on failure, and `CHARLIE_VERIFY_FAIL` when a
//! verification ran to completion and refuted its claim.  Strings returned
//! through out-parameters are NUL-terminated, allocated by this library,
//! and must be released with `charlie_string_free`.  Handles must be
//! released with their matching `_free` function.  Passing a null handle
//! where one is required yields `CHARLIE_USAGE`.

use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};

use charlie::charmap::{CharTable, GroupKind};
use charlie::Error;

/// Status codes; nonzero values are errors except `CHARLIE_VERIFY_FAIL`,
/// which reports a completed verification whose claim is false.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum CharlieStatus {
    Ok = 0,
    VerifyFail = 1,
    NotPrime = 2,
    NotInSubfield = 3,
    ZeroArgument = 4,
    ZeroConstantTerm = 5,
    SizeMismatch = 6,
    NotSelfConjugate = 7,
    TooFewVariables = 8,
    ResourceBound = 9,
    MatchFailure = 10,
    Internal = 11,
    Usage = 12,
    Io = 13,
    Json = 14,
    Panic = 15,
}

fn status_of(e: &Error) -> CharlieStatus {
    match e {
        Error::NotPrime(_) => CharlieStatus::NotPrime,
        Error::NotInSubfield { .. } => CharlieStatus::NotInSubfield,
        Error::ZeroArgument => CharlieStatus::ZeroArgument,
        Error::ZeroConstantTerm => CharlieStatus::ZeroConstantTerm,
        Error::SizeMismatch(_, _) => CharlieStatus::SizeMismatch,
        Error::NotSelfConjugate => CharlieStatus::NotSelfConjugate,
        Error::TooFewVariables { .. } => CharlieStatus::TooFewVariables,
        Error::ResourceBound(_) => CharlieStatus::ResourceBound,
        Error::MatchFailure(_) => CharlieStatus::MatchFailure,
        Error::Internal(_) => CharlieStatus::Internal,
        Error::Usage(_) => CharlieStatus::Usage,
        Error::Io(_) => CharlieStatus::Io,
        Error::Json(_) => CharlieStatus::Json,
    }
}

std::thread_local! {
    static LAST_ERROR: std::cell::RefCell<CString> =
        std::cell::RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// The message of the most recent error on this thread.  The pointer is
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn charlie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

fn string_out(s: String, out: *mut *mut c_char) -> CharlieStatus {
    if out.is_null() {
        set_error("null output parameter");
        return CharlieStatus::Usage;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CharlieStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL");
            CharlieStatus::Internal
        }
    }
}

/// Release a string returned by this library.
#[no_mangle]
pub extern "C" fn charlie_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

fn group_kind(group: c_int) -> Option<GroupKind> {
    match group {
        0 => Some(GroupKind::GeneralLinear),
        1 => Some(GroupKind::Unitary),
        _ => None,
    }
}

fn guard<F: FnOnce() -> CharlieStatus>(f: F) -> CharlieStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            CharlieStatus::Panic
        }
    }
}

/// Opaque handle to a fully built character table.
pub struct CharlieTable {
    inner: CharTable,
}

/// Build the character table of the group (`group`: 0 general linear,
/// 1 unitary) and store a handle in `out`.
#[no_mangle]
pub extern "C" fn charlie_table_build(
    group: c_int,
    n: usize,
    q: u64,
    out: *mut *mut CharlieTable,
) -> CharlieStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        let Some(kind) = group_kind(group) else {
            set_error("group must be 0 (general linear) or 1 (unitary)");
            return CharlieStatus::Usage;
        };
        match CharTable::build(kind, n, q) {
            Ok(inner) => {
                let boxed = Box::new(CharlieTable { inner });
                unsafe { *out = Box::into_raw(boxed) };
                CharlieStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Release a table handle.
#[no_mangle]
pub extern "C" fn charlie_table_free(table: *mut CharlieTable) {
    if !table.is_null() {
        unsafe { drop(Box::from_raw(table)) };
    }
}

macro_rules! with_table {
    ($table:expr, $t:ident => $body:expr) => {{
        if $table.is_null() {
            set_error("null table handle");
            return CharlieStatus::Usage;
        }
        let $t = unsafe { &(*$table).inner };
        $body
    }};
}

/// Number of irreducible characters (equals the number of classes).
#[no_mangle]
pub extern "C" fn charlie_table_size(
    table: *const CharlieTable,
    out: *mut usize,
) -> CharlieStatus {
    with_table!(table, t => {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        unsafe { *out = t.chars.len() };
        CharlieStatus::Ok
    })
}

/// Order of the group.
#[no_mangle]
pub extern "C" fn charlie_table_order(
    table: *const CharlieTable,
    out: *mut u64,
) -> CharlieStatus {
    with_table!(table, t => {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        unsafe { *out = t.order };
        CharlieStatus::Ok
    })
}

/// Degree of character `i`; fails with `CHARLIE_USAGE` when the index is
/// out of range or the degree overflows an unsigned 64-bit integer.
#[no_mangle]
pub extern "C" fn charlie_table_degree(
    table: *const CharlieTable,
    i: usize,
    out: *mut u64,
) -> CharlieStatus {
    guard(|| {
        with_table!(table, t => {
            if out.is_null() {
                set_error("null output parameter");
                return CharlieStatus::Usage;
            }
            if i >= t.chars.len() {
                set_error("character index out of range");
                return CharlieStatus::Usage;
            }
            let d: Option<u64> = t.degree(i).to_string().parse().ok();
            match d {
                Some(d) => {
                    unsafe { *out = d };
                    CharlieStatus::Ok
                }
                None => {
                    set_error("degree does not fit in 64 bits");
                    CharlieStatus::Usage
                }
            }
        })
    })
}

/// Size of conjugacy class `j`.
#[no_mangle]
pub extern "C" fn charlie_table_class_size(
    table: *const CharlieTable,
    j: usize,
    out: *mut u64,
) -> CharlieStatus {
    with_table!(table, t => {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        if j >= t.classes.len() {
            set_error("class index out of range");
            return CharlieStatus::Usage;
        }
        unsafe { *out = t.class_size(j) };
        CharlieStatus::Ok
    })
}

/// Whether character `i` is real-valued (1 or 0).
#[no_mangle]
pub extern "C" fn charlie_table_row_is_real(
    table: *const CharlieTable,
    i: usize,
    out: *mut c_int,
) -> CharlieStatus {
    with_table!(table, t => {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        if i >= t.chars.len() {
            set_error("character index out of range");
            return CharlieStatus::Usage;
        }
        unsafe { *out = c_int::from(t.row_is_real(i)) };
        CharlieStatus::Ok
    })
}

/// The full table as a JSON document; release with `charlie_string_free`.
#[no_mangle]
pub extern "C" fn charlie_table_json(
    table: *const CharlieTable,
    out: *mut *mut c_char,
) -> CharlieStatus {
    guard(|| {
        with_table!(table, t => string_out(t.to_json().to_string(), out))
    })
}

/// Run one verification routine by its identifier (as in the command-line
/// tool), for one group kind (0, 1) or both (-1).  Returns `CHARLIE_OK`
/// when the claim holds, `CHARLIE_VERIFY_FAIL` when it is refuted, and an
/// error status otherwise.  When `report_out` is non-null it receives the
/// JSON report.
#[no_mangle]
pub extern "C" fn charlie_verify(
    theorem: *const c_char,
    group: c_int,
    n: usize,
    q: u64,
    report_out: *mut *mut c_char,
) -> CharlieStatus {
    guard(|| {
        if theorem.is_null() {
            set_error("null theorem identifier");
            return CharlieStatus::Usage;
        }
        let theorem = match unsafe { CStr::from_ptr(theorem) }.to_str() {
            Ok(s) => s,
            Err(_) => {
                set_error("theorem identifier is not valid UTF-8");
                return CharlieStatus::Usage;
            }
        };
        let kind = match group {
            -1 => None,
            g => match group_kind(g) {
                Some(k) => Some(k),
                None => {
                    set_error("group must be 0, 1, or -1 for both");
                    return CharlieStatus::Usage;
                }
            },
        };
        match charlie::brutechar::verify_theorem(theorem, kind, n, q) {
            Ok(report) => {
                let passed = report.passed();
                if !report_out.is_null() {
                    let doc = serde_json::to_string(&report)
                        .unwrap_or_else(|_| "{}".into());
                    let st = string_out(doc, report_out);
                    if st != CharlieStatus::Ok {
                        return st;
                    }
                }
                if passed {
                    CharlieStatus::Ok
                } else {
                    set_error("verification refuted the claim");
                    CharlieStatus::VerifyFail
                }
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// The count of real-valued regular characters (equivalently semisimple
/// ones) from the closed-form parity formula.
#[no_mangle]
pub extern "C" fn charlie_count_real(n: usize, q: u64, out: *mut u64) -> CharlieStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output parameter");
            return CharlieStatus::Usage;
        }
        unsafe { *out = charlie::brutechar::expected_real_constituents(n, q) };
        CharlieStatus::Ok
    })
}
