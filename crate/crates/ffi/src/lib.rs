//! C interface to `mubasis`.
//!
//! Results come back through opaque handles that the caller releases with the
//! matching `*_free` function. Every entry point returns an [`MbStatus`]; on
//! failure `mb_last_error` describes the cause until the next call on the
//! same thread. Strings returned by accessors are owned by their handle.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};
use mubasis::cli::{execute, CliConfig, Command, Output};
use mubasis::exact_poly::Rat;
use mubasis::expr_io::report::Report;
use mubasis::expr_io::{format_implicit, parse_poly, Frame};
use mubasis::{curve_implicitize, normalize, surface_implicitize, CurveParam, Error, ImplicitResult};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Parse errors, wrong arity, t-degree above one.
    InvalidInput = 3,
    /// The input does not define a curve or surface.
    Degenerate = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MbFrame {
    Original = 0,
    Normalized = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MbCommand {
    Pluecker = 0,
    MubasisCurve = 1,
    MubasisSurface = 2,
    ImplicitizeCurve = 3,
    ImplicitizeSurface = 4,
    Degrees = 5,
    Verify = 6,
}

/// An implicit equation with its exponent and degree data.
pub struct MbImplicit {
    result: ImplicitResult,
    original: CString,
    normalized: CString,
    json: CString,
}

/// A rendered command report.
pub struct MbReport {
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MbStatus {
    match e {
        Error::Degenerate(_) | Error::NoCoprimeCombination { .. } | Error::InvalidCurve(_) => MbStatus::Degenerate,
        Error::Internal(_) => MbStatus::Internal,
        _ => MbStatus::InvalidInput,
    }
}

struct Failure(MbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> MbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MbStatus::Internal
        }
    }
}

unsafe fn read_str(p: *const c_char) -> Result<String, Failure> {
    if p.is_null() {
        return Err(Failure(MbStatus::NullArgument, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map(str::to_owned)
        .map_err(|_| Failure(MbStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn read_strs(polys: *const *const c_char, count: size_t) -> Result<Vec<String>, Failure> {
    if polys.is_null() {
        return Err(Failure(MbStatus::NullArgument, "null polynomial array".into()));
    }
    (0..count).map(|i| read_str(*polys.add(i))).collect()
}

fn cstring(s: String) -> CString {
    CString::new(s).expect("formatted output has no NUL bytes")
}

fn into_handle(result: ImplicitResult, command: &str, frame: Frame) -> *mut MbImplicit {
    let json = Report::new(command).with_implicit(&result, frame).to_json();
    Box::into_raw(Box::new(MbImplicit {
        original: cstring(format_implicit(&result, Frame::Original, false)),
        normalized: cstring(format_implicit(&result, Frame::Normalized, false)),
        json: cstring(json),
        result,
    }))
}

/// Implicitizes the ruled surface given by four polynomials in `s, t`.
///
/// # Safety
/// `polys` must point to `count` NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_implicitize_surface(
    polys: *const *const c_char,
    count: size_t,
    seed: u64,
    out: *mut *mut MbImplicit,
) -> MbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure(MbStatus::NullArgument, "null output pointer".into()));
        }
        *out = ptr::null_mut();
        let inputs = read_strs(polys, count)?;
        if inputs.len() != 4 {
            return Err(Failure(MbStatus::InvalidInput, format!("expected 4 polynomials, got {}", inputs.len())));
        }
        let mut raw = Vec::with_capacity(4);
        for (i, s) in inputs.iter().enumerate() {
            raw.push(parse_poly(s).map_err(|e| Failure(MbStatus::InvalidInput, format!("input {i}: {e}")))?);
        }
        let raw: [_; 4] = raw.try_into().expect("four inputs");
        let (p, rec) = normalize(&raw, seed)?;
        let r = surface_implicitize(&p, &rec, seed)?;
        *out = into_handle(r, "implicitize-surface", Frame::Original);
        Ok(())
    })
}

/// Implicitizes the planar curve given by three polynomials in `s`.
///
/// # Safety
/// `polys` must point to `count` NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_implicitize_curve(
    polys: *const *const c_char,
    count: size_t,
    seed: u64,
    out: *mut *mut MbImplicit,
) -> MbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure(MbStatus::NullArgument, "null output pointer".into()));
        }
        *out = ptr::null_mut();
        let inputs = read_strs(polys, count)?;
        if inputs.len() != 3 {
            return Err(Failure(MbStatus::InvalidInput, format!("expected 3 polynomials, got {}", inputs.len())));
        }
        let mut affine: [Vec<Rat>; 3] = Default::default();
        for (i, s) in inputs.iter().enumerate() {
            let p = parse_poly(s).map_err(|e| Failure(MbStatus::InvalidInput, format!("input {i}: {e}")))?;
            if p.degree_in(1).unwrap_or(0) > 0 {
                return Err(Failure(MbStatus::InvalidInput, format!("input {i}: curve inputs are polynomials in s")));
            }
            let deg = p.degree_in(0).unwrap_or(0) as usize;
            affine[i] = (0..=deg).map(|j| p.coeff(&mubasis::exact_poly::Monomial([j as u32, 0]))).collect();
        }
        let c = CurveParam::from_affine(&affine)?;
        let r = curve_implicitize(&c, seed)?;
        *out = into_handle(r, "implicitize-curve", Frame::Original);
        Ok(())
    })
}

/// Map degree `k` with `Res = c·F^k`; 0 for a null handle.
///
/// # Safety
/// The handle must be null or live.
#[no_mangle]
pub unsafe extern "C" fn mb_implicit_k(h: *const MbImplicit) -> u32 {
    h.as_ref().map_or(0, |h| h.result.k)
}

/// Total degree of `F`; 0 for a null handle.
///
/// # Safety
/// The handle must be null or live.
#[no_mangle]
pub unsafe extern "C" fn mb_implicit_degree(h: *const MbImplicit) -> u32 {
    h.as_ref().map_or(0, |h| h.result.hypersurface_degree)
}

/// `F` as text in `x, y, z, w`; null for a null handle.
///
/// # Safety
/// The handle must be null or live.
#[no_mangle]
pub unsafe extern "C" fn mb_implicit_text(h: *const MbImplicit, frame: MbFrame) -> *const c_char {
    match h.as_ref() {
        Some(h) => match frame {
            MbFrame::Original => h.original.as_ptr(),
            MbFrame::Normalized => h.normalized.as_ptr(),
        },
        None => ptr::null(),
    }
}

/// The JSON `implicit` report for the original frame.
///
/// # Safety
/// The handle must be null or live.
#[no_mangle]
pub unsafe extern "C" fn mb_implicit_json(h: *const MbImplicit) -> *const c_char {
    h.as_ref().map_or(ptr::null(), |h| h.json.as_ptr())
}

/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mb_implicit_free(h: *mut MbImplicit) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Runs any command, rendering the report as JSON or text.
///
/// # Safety
/// `polys` must point to `count` NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mb_run(
    command: MbCommand,
    polys: *const *const c_char,
    count: size_t,
    seed: u64,
    json: bool,
    out: *mut *mut MbReport,
) -> MbStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure(MbStatus::NullArgument, "null output pointer".into()));
        }
        *out = ptr::null_mut();
        let config = CliConfig {
            command: match command {
                MbCommand::Pluecker => Command::Pluecker,
                MbCommand::MubasisCurve => Command::MubasisCurve,
                MbCommand::MubasisSurface => Command::MubasisSurface,
                MbCommand::ImplicitizeCurve => Command::ImplicitizeCurve,
                MbCommand::ImplicitizeSurface => Command::ImplicitizeSurface,
                MbCommand::Degrees => Command::Degrees,
                MbCommand::Verify => Command::Verify,
            },
            inputs: read_strs(polys, count)?,
            seed,
            output: if json { Output::Json } else { Output::Text },
            frame: Frame::Original,
        };
        let report = execute(&config)?;
        let text = if json { report.to_json() } else { report.to_text() };
        *out = Box::into_raw(Box::new(MbReport { text: cstring(text) }));
        Ok(())
    })
}

/// # Safety
/// The handle must be null or live.
#[no_mangle]
pub unsafe extern "C" fn mb_report_text(r: *const MbReport) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// # Safety
/// `r` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mb_report_free(r: *mut MbReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Message for the most recent failure on this thread, empty after a success.
#[no_mangle]
pub extern "C" fn mb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn mb_status_str(status: MbStatus) -> *const c_char {
    let s: &'static CStr = match status {
        MbStatus::Ok => c"ok",
        MbStatus::NullArgument => c"null argument",
        MbStatus::InvalidUtf8 => c"invalid UTF-8",
        MbStatus::InvalidInput => c"invalid input",
        MbStatus::Degenerate => c"degenerate input",
        MbStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Degenerate("x".into())), MbStatus::Degenerate);
        assert_eq!(status_of(&Error::NotRuled { index: 0, t_degree: 2 }), MbStatus::InvalidInput);
        assert_eq!(status_of(&Error::Internal("x".into())), MbStatus::Internal);
    }

    #[test]
    fn panics_become_internal() {
        assert_eq!(guarded(|| panic!("boom")), MbStatus::Internal);
        assert_eq!(unsafe { CStr::from_ptr(mb_last_error()) }.to_str().unwrap(), "internal panic");
    }
}
