//! C ABI over the workbench.
//!
//! Handles are opaque and owned by the caller once returned; each kind has a
//! matching `*_free`. Every fallible call returns a [`HumeStatus`] and writes
//! its result through an out pointer only on `HUME_STATUS_OK`. The message of
//! the last failure on the calling thread is available from
//! [`hume_last_error`]. Panics are caught at the boundary.

use hume::acf::AcfSet;
use hume::logic::{classify, parse_formula, print_formula, Formula, Level};
use hume::rcf::RcfSet;
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HumeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HumeLevelKind {
    Arithmetical = 0,
    Sigma = 1,
    Pi = 2,
}

/// `n` is 0 for arithmetical formulas.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HumeLevel {
    pub kind: HumeLevelKind,
    pub n: u32,
}

/// Dimension (`-1` for the empty set) and Euler characteristic.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HumeInvariant {
    pub dim: i32,
    pub euler: i64,
}

pub struct HumeFormula(Formula);

pub struct HumeAcfSet(AcfSet);

pub struct HumeRcfSet(RcfSet);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("interior nuls removed")));
}

struct Fail(HumeStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HumeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HumeStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside the library");
            HumeStatus::Panic
        }
    }
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HumeStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(HumeStatus::InvalidUtf8, e.to_string()))
}

/// # Safety
/// `p` is null or points to a live value of `T`.
unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(HumeStatus::NullPointer, "null handle".into()))
}

fn out<T>(p: *mut T, v: T) -> Result<(), Fail> {
    if p.is_null() {
        return Err(Fail(HumeStatus::NullPointer, "null out pointer".into()));
    }
    // SAFETY: non-null, and the caller guarantees it is writable.
    unsafe { p.write(v) };
    Ok(())
}

fn parse_fail(e: impl ToString) -> Fail {
    Fail(HumeStatus::Parse, e.to_string())
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn hume_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hume_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `src` is a nul-terminated string and `out_formula` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_formula_parse(src: *const c_char, out_formula: *mut *mut HumeFormula) -> HumeStatus {
    guard(|| {
        let f = parse_formula(text(src)?).map_err(parse_fail)?;
        out(out_formula, Box::into_raw(Box::new(HumeFormula(f))))
    })
}

/// # Safety
/// `f` is a live formula handle and `out_level` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_formula_classify(f: *const HumeFormula, out_level: *mut HumeLevel) -> HumeStatus {
    guard(|| {
        let level = match classify(&deref(f)?.0) {
            Level::Arithmetical => HumeLevel {
                kind: HumeLevelKind::Arithmetical,
                n: 0,
            },
            Level::Sigma(n) => HumeLevel {
                kind: HumeLevelKind::Sigma,
                n,
            },
            Level::Pi(n) => HumeLevel {
                kind: HumeLevelKind::Pi,
                n,
            },
        };
        out(out_level, level)
    })
}

/// The formula in surface syntax; free with [`hume_string_free`].
///
/// # Safety
/// `f` is a live formula handle and `out_text` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_formula_print(f: *const HumeFormula, out_text: *mut *mut c_char) -> HumeStatus {
    guard(|| {
        let s = CString::new(print_formula(&deref(f)?.0)).map_err(|e| Fail(HumeStatus::Domain, e.to_string()))?;
        out(out_text, s.into_raw())
    })
}

/// # Safety
/// `f` is null or a handle from [`hume_formula_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hume_formula_free(f: *mut HumeFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Accepts `roots(p)`, `co-roots(p)`, `empty` and `k`.
///
/// # Safety
/// `src` is a nul-terminated string and `out_set` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_acf_set_parse(src: *const c_char, out_set: *mut *mut HumeAcfSet) -> HumeStatus {
    guard(|| {
        let s: AcfSet = text(src)?.parse().map_err(parse_fail)?;
        out(out_set, Box::into_raw(Box::new(HumeAcfSet(s))))
    })
}

/// # Safety
/// `s` is a live handle and `out_number` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_acf_number(s: *const HumeAcfSet, out_number: *mut i64) -> HumeStatus {
    guard(|| out(out_number, deref(s)?.0.number()))
}

/// # Safety
/// `a` and `b` are live handles and `out_equiv` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_acf_hume_equiv(
    a: *const HumeAcfSet,
    b: *const HumeAcfSet,
    out_equiv: *mut bool,
) -> HumeStatus {
    guard(|| out(out_equiv, deref(a)?.0.hume_equiv(&deref(b)?.0)))
}

/// # Safety
/// `s` is null or a handle from [`hume_acf_set_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hume_acf_set_free(s: *mut HumeAcfSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Accepts cell notation such as `(-2, -1) U {0}` or a sign-condition
/// formula such as `x^2-2 < 0`.
///
/// # Safety
/// `src` is a nul-terminated string and `out_set` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_rcf_set_parse(src: *const c_char, out_set: *mut *mut HumeRcfSet) -> HumeStatus {
    guard(|| {
        let s: RcfSet = text(src)?.parse().map_err(parse_fail)?;
        out(out_set, Box::into_raw(Box::new(HumeRcfSet(s))))
    })
}

/// # Safety
/// `s` is a live handle and `out_inv` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_rcf_invariant(s: *const HumeRcfSet, out_inv: *mut HumeInvariant) -> HumeStatus {
    guard(|| {
        let inv = deref(s)?.0.invariant();
        out(
            out_inv,
            HumeInvariant {
                dim: inv.dim,
                euler: inv.euler,
            },
        )
    })
}

/// # Safety
/// `s` is a live handle and `out_number` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_rcf_number(s: *const HumeRcfSet, out_number: *mut i64) -> HumeStatus {
    guard(|| out(out_number, deref(s)?.0.number()))
}

/// # Safety
/// `a` and `b` are live handles and `out_equiv` is writable.
#[no_mangle]
pub unsafe extern "C" fn hume_rcf_hume_equiv(
    a: *const HumeRcfSet,
    b: *const HumeRcfSet,
    out_equiv: *mut bool,
) -> HumeStatus {
    guard(|| out(out_equiv, deref(a)?.0.hume_equiv(&deref(b)?.0)))
}

/// # Safety
/// `s` is null or a handle from [`hume_rcf_set_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hume_rcf_set_free(s: *mut HumeRcfSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Runs one CLI command. `argv` excludes the program name. The report is
/// written to `out_report` (free with [`hume_string_free`]) and the process
/// exit code the command would have produced to `out_code`.
///
/// # Safety
/// `argv` holds `argc` nul-terminated strings; both out pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn hume_cli_run(
    argv: *const *const c_char,
    argc: usize,
    out_report: *mut *mut c_char,
    out_code: *mut c_int,
) -> HumeStatus {
    guard(|| {
        if argv.is_null() && argc > 0 {
            return Err(Fail(HumeStatus::NullPointer, "null argv".into()));
        }
        let mut args = vec!["hume".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i))?.to_string());
        }
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = hume::cli::run(args, &mut stdout, &mut stderr);
        stdout.extend(stderr);
        let report = CString::new(stdout).map_err(|e| Fail(HumeStatus::Domain, e.to_string()))?;
        out(out_code, code)?;
        out(out_report, report.into_raw())
    })
}
