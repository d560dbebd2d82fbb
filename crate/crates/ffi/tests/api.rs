use std::ffi::{CStr, CString};
use std::ptr;

use libc::c_char;
use mubasis_ffi::*;

fn cstrs(polys: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = polys.iter().map(|p| CString::new(*p).unwrap()).collect();
    let ptrs = owned.iter().map(|c| c.as_ptr()).collect();
    (owned, ptrs)
}

fn text(p: *const c_char) -> String {
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn implicit_k(h: *const MbImplicit) -> u32 {
    unsafe { mb_implicit_k(h) }
}

fn implicit_degree(h: *const MbImplicit) -> u32 {
    unsafe { mb_implicit_degree(h) }
}

fn implicit_text(h: *const MbImplicit, frame: MbFrame) -> *const c_char {
    unsafe { mb_implicit_text(h, frame) }
}

fn implicit_json(h: *const MbImplicit) -> *const c_char {
    unsafe { mb_implicit_json(h) }
}

fn report_text(r: *const MbReport) -> *const c_char {
    unsafe { mb_report_text(r) }
}

#[test]
fn paraboloid_surface() {
    let (_keep, ptrs) = cstrs(&["s", "t", "s*t", "1"]);
    let mut h = ptr::null_mut();
    let st = unsafe { mb_implicitize_surface(ptrs.as_ptr(), ptrs.len(), 0, &mut h) };
    assert_eq!(st, MbStatus::Ok);
    assert_eq!(implicit_k(h), 1);
    assert_eq!(implicit_degree(h), 2);
    assert_eq!(text(implicit_text(h, MbFrame::Original)), "x*y - z*w");
    let json: serde_json::Value = serde_json::from_str(&text(implicit_json(h))).unwrap();
    assert_eq!(json["implicit"]["k"], 1);
    assert_eq!(text(mb_last_error()), "");
    unsafe { mb_implicit_free(h) };
}

#[test]
fn worked_example_normalized_frame() {
    let (_keep, ptrs) = cstrs(&["s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"]);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { mb_implicitize_surface(ptrs.as_ptr(), 4, 0, &mut h) }, MbStatus::Ok);
    assert_eq!((implicit_k(h), implicit_degree(h)), (2, 4));
    assert!(text(implicit_text(h, MbFrame::Normalized)).starts_with("4*x^2*y^2 - 4*x*y^3 + y^4"));
    unsafe { mb_implicit_free(h) };
}

#[test]
fn curve_double_cover() {
    let (_keep, ptrs) = cstrs(&["s^4", "s^2", "1"]);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { mb_implicitize_curve(ptrs.as_ptr(), 3, 0, &mut h) }, MbStatus::Ok);
    assert_eq!(implicit_k(h), 2);
    assert_eq!(text(implicit_text(h, MbFrame::Original)), "y^2 - x*z");
    unsafe { mb_implicit_free(h) };
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    let (_a, bad) = cstrs(&["s^(t)", "s", "1"]);
    assert_eq!(unsafe { mb_implicitize_curve(bad.as_ptr(), 3, 0, &mut h) }, MbStatus::InvalidInput);
    assert!(h.is_null());
    assert!(text(mb_last_error()).contains("offset 2"));

    let (_b, few) = cstrs(&["s", "1"]);
    assert_eq!(unsafe { mb_implicitize_curve(few.as_ptr(), 2, 0, &mut h) }, MbStatus::InvalidInput);

    let (_c, flat) = cstrs(&["s", "s", "s", "1"]);
    assert_eq!(unsafe { mb_implicitize_surface(flat.as_ptr(), 4, 0, &mut h) }, MbStatus::Degenerate);

    let (_d, quad) = cstrs(&["s", "t^2", "0", "1"]);
    assert_eq!(unsafe { mb_implicitize_surface(quad.as_ptr(), 4, 0, &mut h) }, MbStatus::InvalidInput);
    assert!(text(mb_last_error()).contains("t-degree"));

    assert_eq!(unsafe { mb_implicitize_surface(ptr::null(), 4, 0, &mut h) }, MbStatus::NullArgument);
    assert_eq!(unsafe { mb_implicitize_surface(flat.as_ptr(), 4, 0, ptr::null_mut()) }, MbStatus::NullArgument);

    let invalid = [0xffu8, 0];
    let ptrs = [invalid.as_ptr() as *const c_char; 3];
    assert_eq!(unsafe { mb_implicitize_curve(ptrs.as_ptr(), 3, 0, &mut h) }, MbStatus::InvalidUtf8);
    assert_eq!(text(mb_status_str(MbStatus::Degenerate)), "degenerate input");
}

#[test]
fn null_handles_are_harmless() {
    assert_eq!(implicit_k(ptr::null()), 0);
    assert!(implicit_text(ptr::null(), MbFrame::Original).is_null());
    assert!(report_text(ptr::null()).is_null());
    unsafe {
        mb_implicit_free(ptr::null_mut());
        mb_report_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_cli_json() {
    let (_keep, ptrs) = cstrs(&["s", "t", "s*t", "1"]);
    let mut r = ptr::null_mut();
    let st = unsafe { mb_run(MbCommand::ImplicitizeSurface, ptrs.as_ptr(), 4, 3, true, &mut r) };
    assert_eq!(st, MbStatus::Ok);
    let cli = mubasis::cli::run_args(["mubasis", "implicitize-surface", "s", "t", "s*t", "1", "--json", "--seed", "3"]);
    assert_eq!(text(report_text(r)), cli.stdout);
    unsafe { mb_report_free(r) };

    let (_v, ptrs) = cstrs(&["x*y-z*w", "s", "t", "s*t", "1"]);
    assert_eq!(unsafe { mb_run(MbCommand::Verify, ptrs.as_ptr(), 5, 0, false, &mut r) }, MbStatus::Ok);
    assert!(text(report_text(r)).contains("true"));
    unsafe { mb_report_free(r) };
}
