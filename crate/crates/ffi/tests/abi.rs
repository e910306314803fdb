use hume_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = hume_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn formula_round_trip() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(hume_formula_parse(c("exists X. forall x. R(x, #X)").as_ptr(), &mut f), HumeStatus::Ok);
        let mut level = HumeLevel {
            kind: HumeLevelKind::Arithmetical,
            n: 0,
        };
        assert_eq!(hume_formula_classify(f, &mut level), HumeStatus::Ok);
        assert_eq!(level, HumeLevel { kind: HumeLevelKind::Sigma, n: 1 });
        let mut s = ptr::null_mut();
        assert_eq!(hume_formula_print(f, &mut s), HumeStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "exists X. forall x. R(x, #X)");
        hume_string_free(s);
        hume_formula_free(f);
    }
}

#[test]
fn parse_errors_set_the_message() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(hume_formula_parse(c("forall x.").as_ptr(), &mut f), HumeStatus::Parse);
        assert!(f.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(hume_formula_parse(ptr::null(), &mut f), HumeStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(hume_formula_parse(bad.as_ptr().cast(), &mut f), HumeStatus::InvalidUtf8);
    }
}

#[test]
fn acf_numbers() {
    unsafe {
        let mut x = ptr::null_mut();
        let mut y = ptr::null_mut();
        assert_eq!(hume_acf_set_parse(c("co-roots(x^2+1)").as_ptr(), &mut x), HumeStatus::Ok);
        assert_eq!(hume_acf_set_parse(c("k").as_ptr(), &mut y), HumeStatus::Ok);
        let mut n = 0i64;
        assert_eq!(hume_acf_number(x, &mut n), HumeStatus::Ok);
        assert_eq!(n, -3);
        assert_eq!(hume_acf_number(y, &mut n), HumeStatus::Ok);
        assert_eq!(n, -1);
        let mut eq = true;
        assert_eq!(hume_acf_hume_equiv(x, y, &mut eq), HumeStatus::Ok);
        assert!(!eq);
        assert_eq!(hume_acf_number(x, ptr::null_mut()), HumeStatus::NullPointer);
        hume_acf_set_free(x);
        hume_acf_set_free(y);
    }
}

#[test]
fn rcf_euler_example() {
    unsafe {
        let mut x = ptr::null_mut();
        let mut y = ptr::null_mut();
        assert_eq!(hume_rcf_set_parse(c("(-2, -1) U {0} U (1, 2)").as_ptr(), &mut x), HumeStatus::Ok);
        assert_eq!(hume_rcf_set_parse(c("x^2 - 1 < 0").as_ptr(), &mut y), HumeStatus::Ok);
        let mut inv = HumeInvariant { dim: 0, euler: 0 };
        assert_eq!(hume_rcf_invariant(x, &mut inv), HumeStatus::Ok);
        assert_eq!(inv, HumeInvariant { dim: 1, euler: -1 });
        let mut eq = false;
        assert_eq!(hume_rcf_hume_equiv(x, y, &mut eq), HumeStatus::Ok);
        assert!(eq);
        let mut nx = 0;
        let mut ny = 1;
        assert_eq!(hume_rcf_number(x, &mut nx), HumeStatus::Ok);
        assert_eq!(hume_rcf_number(y, &mut ny), HumeStatus::Ok);
        assert_eq!(nx, ny);
        hume_rcf_set_free(x);
        hume_rcf_set_free(y);
        assert_eq!(hume_rcf_invariant(ptr::null(), &mut inv), HumeStatus::NullPointer);
    }
}

#[test]
fn cli_passthrough() {
    unsafe {
        let args = [c("hmodel"), c("complement"), c("--kappa"), c("2")];
        let ptrs: Vec<_> = args.iter().map(|a| a.as_ptr()).collect();
        let mut report = ptr::null_mut();
        let mut code = -1;
        assert_eq!(hume_cli_run(ptrs.as_ptr(), ptrs.len(), &mut report, &mut code), HumeStatus::Ok);
        assert_eq!(code, 0);
        assert_eq!(
            CStr::from_ptr(report).to_str().unwrap().trim(),
            r#"{"complement":["w+1","w+2"],"kappa":2,"size":2}"#
        );
        hume_string_free(report);
        let mut code = -1;
        assert_eq!(hume_cli_run(ptr::null(), 0, &mut report, &mut code), HumeStatus::Ok);
        assert_eq!(code, 2);
        hume_string_free(report);
    }
}

#[test]
fn header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hume.h")).unwrap();
    for name in [
        "hume_formula_parse",
        "hume_formula_classify",
        "hume_acf_number",
        "hume_rcf_invariant",
        "hume_cli_run",
        "typedef struct HumeFormula HumeFormula",
        "HUME_STATUS_OK",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/hume.h");
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(status.success());
}
