//! C ABI for `ldend`.
//!
//! Objects cross the boundary as opaque handles created from the JSON file
//! formats and released with the matching `_free`. Every fallible call
//! returns an [`LdendStatus`]; on anything other than `LDEND_STATUS_OK` and
//! `LDEND_STATUS_CHECK_FAILED` the message is available from [`ldend_last_error`]
//! on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ldend::algebra::Algebra;
use ldend::axioms::{self, Class};
use ldend::cli::Functor;
use ldend::io;
use ldend::linear::LinearMap;
use ldend::operators;
use ldend::tensor::{Tensor2, Tensor3};
use ldend::ybe::{self, Equation};
use ldend::{CheckReport, Error};
use libc::c_char;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LdendStatus {
    Ok = 0,
    /// The call succeeded and the mathematical check it ran failed.
    CheckFailed = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Malformed = 4,
    Dimension = 5,
    Unknown = 6,
    Precondition = 7,
    Singular = 8,
    Symmetry = 9,
    SearchTooLarge = 10,
    Internal = 11,
}

pub struct LdendAlgebra(Algebra);
pub struct LdendMap(LinearMap);
pub struct LdendTensor2(Tensor2);
pub struct LdendTensor3(Tensor3);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LdendStatus {
    match e {
        Error::Format { .. } | Error::Json(_) | Error::Io(_) => LdendStatus::Malformed,
        Error::Dimension(_) | Error::Slots { .. } => LdendStatus::Dimension,
        Error::UnknownOp(_) | Error::MissingOp { .. } | Error::Unknown { .. } => {
            LdendStatus::Unknown
        }
        Error::Precondition { .. } => LdendStatus::Precondition,
        Error::Singular => LdendStatus::Singular,
        Error::Symmetry(_) => LdendStatus::Symmetry,
        Error::SearchTooLarge { .. } => LdendStatus::SearchTooLarge,
    }
}

struct Fail(LdendStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Fail>;

fn guard(f: impl FnOnce() -> Outcome<LdendStatus>) -> LdendStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            LdendStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Fail(LdendStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(LdendStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Fail(LdendStatus::NullArgument, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Fail(
            LdendStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return Err(Fail(
            LdendStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    *out = CString::new(s)
        .map_err(|_| Fail(LdendStatus::Internal, "interior NUL".into()))?
        .into_raw();
    Ok(())
}

fn parse_json(s: &str) -> Outcome<io::Value> {
    Ok(io::parse_json(s, "json")?)
}

unsafe fn report_out(report: &CheckReport, out: *mut *mut c_char) -> Outcome<LdendStatus> {
    if !out.is_null() {
        put_string(out, io::to_canonical_string(&report.to_json()))?;
    }
    Ok(if report.passed() {
        LdendStatus::Ok
    } else {
        LdendStatus::CheckFailed
    })
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn ldend_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ldend_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse an algebra file's contents.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_algebra_from_json(
    json: *const c_char,
    out: *mut *mut LdendAlgebra,
) -> LdendStatus {
    guard(|| {
        let v = parse_json(text(json, "json")?)?;
        put(out, LdendAlgebra(io::algebra_from_json(&v)?))?;
        Ok(LdendStatus::Ok)
    })
}

/// Canonical JSON of an algebra; free with [`ldend_string_free`].
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_algebra_to_json(
    alg: *const LdendAlgebra,
    out: *mut *mut c_char,
) -> LdendStatus {
    guard(|| {
        let a = handle(alg, "algebra")?;
        put_string(out, io::to_canonical_string(&io::algebra_to_json(&a.0)))?;
        Ok(LdendStatus::Ok)
    })
}

/// Dimension of the algebra, 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ldend_algebra_dim(alg: *const LdendAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.dim())
}

/// # Safety
/// `alg` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ldend_algebra_free(alg: *mut LdendAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Parse a map file's contents.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_map_from_json(
    json: *const c_char,
    out: *mut *mut LdendMap,
) -> LdendStatus {
    guard(|| {
        let v = parse_json(text(json, "json")?)?;
        put(out, LdendMap(io::map_from_json(&v)?))?;
        Ok(LdendStatus::Ok)
    })
}

/// # Safety
/// `map` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ldend_map_free(map: *mut LdendMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Parse a two-tensor file's contents.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_tensor2_from_json(
    json: *const c_char,
    out: *mut *mut LdendTensor2,
) -> LdendStatus {
    guard(|| {
        let v = parse_json(text(json, "json")?)?;
        put(out, LdendTensor2(io::tensor2_from_json(&v)?))?;
        Ok(LdendStatus::Ok)
    })
}

/// # Safety
/// `t` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ldend_tensor2_free(t: *mut LdendTensor2) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Canonical JSON of a residual; free with [`ldend_string_free`].
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_tensor3_to_json(
    t: *const LdendTensor3,
    out: *mut *mut c_char,
) -> LdendStatus {
    guard(|| {
        let t = handle(t, "tensor")?;
        put_string(out, io::to_canonical_string(&io::tensor3_to_json(&t.0)))?;
        Ok(LdendStatus::Ok)
    })
}

/// Number of nonzero entries.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ldend_tensor3_support(t: *const LdendTensor3) -> usize {
    t.as_ref().map_or(0, |t| t.0.support_size())
}

/// # Safety
/// `t` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ldend_tensor3_free(t: *mut LdendTensor3) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Check the axioms of `class` (e.g. "pre_lie"). Returns `LDEND_STATUS_OK` or
/// `LDEND_STATUS_CHECK_FAILED`; when `report` is non-null it receives the JSON
/// report.
///
/// # Safety
/// `alg` must be a live handle; `class` a NUL-terminated string; `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_check_class(
    alg: *const LdendAlgebra,
    class: *const c_char,
    report: *mut *mut c_char,
) -> LdendStatus {
    guard(|| {
        let a = handle(alg, "algebra")?;
        let class: Class = text(class, "class")?.parse()?;
        report_out(&axioms::check_class(&a.0, class)?, report)
    })
}

/// Apply a functor by name ("vertical", "quadri:succ_prec", ...). The input
/// class is not checked.
///
/// # Safety
/// `alg` must be a live handle; `functor` a NUL-terminated string; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_derive(
    alg: *const LdendAlgebra,
    functor: *const c_char,
    out: *mut *mut LdendAlgebra,
) -> LdendStatus {
    guard(|| {
        let a = handle(alg, "algebra")?;
        let f: Functor = text(functor, "functor")?
            .parse()
            .map_err(|msg| Fail(LdendStatus::Unknown, msg))?;
        put(out, LdendAlgebra(f.apply(&a.0)?))?;
        Ok(LdendStatus::Ok)
    })
}

/// Residual of a tensor equation ("eq-2.9", "eq-4.8", ...).
///
/// # Safety
/// `alg` and `r` must be live handles; `equation` a NUL-terminated string;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_residual(
    alg: *const LdendAlgebra,
    r: *const LdendTensor2,
    equation: *const c_char,
    out: *mut *mut LdendTensor3,
) -> LdendStatus {
    guard(|| {
        let a = handle(alg, "algebra")?;
        let r = handle(r, "tensor")?;
        let eq: Equation = text(equation, "equation")?.parse()?;
        put(out, LdendTensor3(ybe::residual(&a.0, &r.0, eq)?))?;
        Ok(LdendStatus::Ok)
    })
}

/// Check that `map` is a Rota-Baxter operator of weight zero on `alg`.
///
/// # Safety
/// `map` and `alg` must be live handles; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_check_rota_baxter(
    map: *const LdendMap,
    alg: *const LdendAlgebra,
    report: *mut *mut c_char,
) -> LdendStatus {
    guard(|| {
        let m = handle(map, "map")?;
        let a = handle(alg, "algebra")?;
        report_out(&operators::check_rota_baxter_prelie(&m.0, &a.0)?, report)
    })
}

/// L-dendriform algebra induced by a Rota-Baxter operator. Fails with
/// `LDEND_STATUS_PRECONDITION` when `map` is not one.
///
/// # Safety
/// `map` and `alg` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ldend_induce_from_rota_baxter(
    map: *const LdendMap,
    alg: *const LdendAlgebra,
    out: *mut *mut LdendAlgebra,
) -> LdendStatus {
    guard(|| {
        let m = handle(map, "map")?;
        let a = handle(alg, "algebra")?;
        put(out, LdendAlgebra(operators::ldend_from_rb(&m.0, &a.0)?))?;
        Ok(LdendStatus::Ok)
    })
}
