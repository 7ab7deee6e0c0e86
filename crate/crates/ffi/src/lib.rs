//! C ABI over `wq-core`.
//!
//! Handles are opaque and owned by the caller; free them with the matching
//! `*_free` function. Every fallible call returns a [`WqStatus`]; on failure
//! `wq_last_error` gives a message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wq_core::coeff::{qbinom, SubscriptedQ};
use wq_core::report::{self, Report, RunError, SessionConfig};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Config = 3,
    UnknownCommand = 4,
    Arithmetic = 5,
    Panic = 6,
}

/// Parsed session configuration.
pub struct WqSession {
    cfg: SessionConfig,
}

/// A finished report with its JSON and text renderings.
pub struct WqReport {
    report: Report,
    json: CString,
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn guard<F: FnOnce() -> WqStatus>(f: F) -> WqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            WqStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, WqStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(WqStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        WqStatus::InvalidUtf8
    })
}

/// Message for the last failed call on this thread. Valid until the next call.
#[no_mangle]
pub extern "C" fn wq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a TOML session config.
///
/// # Safety
/// `toml` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wq_session_new(toml: *const c_char, out: *mut *mut WqSession) -> WqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return WqStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let text = match read_str(toml) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match SessionConfig::parse(text) {
            Ok(cfg) => {
                *out = Box::into_raw(Box::new(WqSession { cfg }));
                WqStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                WqStatus::Config
            }
        }
    })
}

/// # Safety
/// `session` must come from `wq_session_new` (or be null).
#[no_mangle]
pub unsafe extern "C" fn wq_session_set_seed(session: *mut WqSession, seed: u64) -> WqStatus {
    match session.as_mut() {
        Some(s) => {
            s.cfg.seed = seed;
            WqStatus::Ok
        }
        None => {
            set_error("null session");
            WqStatus::NullPointer
        }
    }
}

/// # Safety
/// `session` must come from `wq_session_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wq_session_free(session: *mut WqSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Runs one command (or `all`). Failing checks still produce a report;
/// see `wq_report_failed`.
///
/// # Safety
/// `session` must be a live handle, `command` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wq_run(session: *const WqSession, command: *const c_char, out: *mut *mut WqReport) -> WqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return WqStatus::NullPointer;
        }
        *out = ptr::null_mut();
        let Some(s) = session.as_ref() else {
            set_error("null session");
            return WqStatus::NullPointer;
        };
        let command = match read_str(command) {
            Ok(c) => c,
            Err(st) => return st,
        };
        match report::run(command, &s.cfg) {
            Ok(report) => {
                let json = CString::new(report.to_json()).unwrap_or_default();
                let text = CString::new(report.to_string()).unwrap_or_default();
                *out = Box::into_raw(Box::new(WqReport { report, json, text }));
                WqStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                match e {
                    RunError::Config(_) => WqStatus::Config,
                    RunError::UnknownCommand(..) => WqStatus::UnknownCommand,
                }
            }
        }
    })
}

/// JSON rendering, owned by the report.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn wq_report_json(report: *const WqReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// Text rendering, owned by the report.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn wq_report_text(report: *const WqReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// 1 if some check failed, 0 if none did, -1 for a null handle.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn wq_report_failed(report: *const WqReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.report.failed() as i32)
}

/// Writes pass, fail and inconclusive counts. Null output pointers are skipped.
///
/// # Safety
/// `report` must be a live handle; the outputs writable or null.
#[no_mangle]
pub unsafe extern "C" fn wq_report_counts(report: *const WqReport, pass: *mut usize, fail: *mut usize, inconclusive: *mut usize) -> WqStatus {
    let Some(r) = report.as_ref() else {
        set_error("null report");
        return WqStatus::NullPointer;
    };
    let s = &r.report.summary;
    for (p, v) in [(pass, s.pass), (fail, s.fail), (inconclusive, s.inconclusive)] {
        if let Some(p) = p.as_mut() {
            *p = v;
        }
    }
    WqStatus::Ok
}

/// # Safety
/// `report` must come from `wq_run` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wq_report_free(report: *mut WqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// q-binomial `[m choose n]` for `q = v^(2 d root_length)`, rendered as a
/// rational function of `v`. Free the result with `wq_string_free`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wq_qbinom(m: i64, n: i64, d: i64, root_length: i64, out: *mut *mut c_char) -> WqStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return WqStatus::NullPointer;
        }
        *out = ptr::null_mut();
        if d <= 0 || root_length <= 0 {
            set_error("d and root_length must be positive");
            return WqStatus::Arithmetic;
        }
        match qbinom(m, n, SubscriptedQ::new(d, root_length)) {
            Ok(c) => {
                *out = CString::new(c.to_string()).unwrap_or_default().into_raw();
                WqStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                WqStatus::Arithmetic
            }
        }
    })
}

/// # Safety
/// `s` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn wq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests;
