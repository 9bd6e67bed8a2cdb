//! C ABI over the holometric library.
//!
//! Every function returns an [`HmStatus`]; on failure a message is available
//! from [`hm_last_error`] until the next call on the same thread. Strings
//! handed out by the library are owned by the caller and must be released
//! with [`hm_string_free`]; specs with [`hm_spec_free`]. Panics never cross
//! the boundary: they are reported as [`HmStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use holometric::catalog::CatalogEntry;
use holometric::dsl::{self, SpecFile};
use holometric::metric::ConstantCurvature;
use holometric::verify::{entry_metric, mobius_invariance_check, verify_all};
use holometric::{Error, IsotropyType};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    MathError = 4,
    InvalidArgument = 5,
    CheckFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HmIsotropyType {
    Unipotent = 0,
    Semisimple = 1,
    Mixed = 2,
}

impl From<IsotropyType> for HmIsotropyType {
    fn from(t: IsotropyType) -> Self {
        match t {
            IsotropyType::Unipotent => Self::Unipotent,
            IsotropyType::Semisimple => Self::Semisimple,
            IsotropyType::Mixed => Self::Mixed,
        }
    }
}

/// A parsed `.liealg` document. Opaque to C.
pub struct HmSpec {
    spec: SpecFile,
}

struct Failure(HmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidArgument(_) => HmStatus::InvalidArgument,
            _ => HmStatus::MathError,
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("internal panic: {msg}"));
            HmStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(HmStatus::NullPointer, format!("`{what}` is null"))
}

/// # Safety
/// `p` must be null or point to a valid `T`.
unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

fn entry(spec: &SpecFile) -> Result<CatalogEntry, Failure> {
    Ok(CatalogEntry::from_spec(spec)?)
}

/// Parses a NUL-terminated `.liealg` document into a new spec handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_parse(text: *const c_char, out: *mut *mut HmSpec) -> HmStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| Failure(HmStatus::InvalidUtf8, e.to_string()))?;
        let spec = dsl::parse(text).map_err(|e| Failure(HmStatus::ParseError, e.to_string()))?;
        unsafe { write(out, Box::into_raw(Box::new(HmSpec { spec })), "out") }
    })
}

/// Releases a spec handle. Null is ignored.
///
/// # Safety
/// `spec` must come from [`hm_spec_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_free(spec: *mut HmSpec) {
    if !spec.is_null() {
        drop(unsafe { Box::from_raw(spec) });
    }
}

/// Dimension of the algebra.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_dim(spec: *const HmSpec, out: *mut usize) -> HmStatus {
    guard(|| {
        let s = unsafe { deref(spec, "spec") }?;
        unsafe { write(out, s.spec.algebra.dim(), "out") }
    })
}

/// Canonical text of the spec.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_serialize(spec: *const HmSpec, out: *mut *mut c_char) -> HmStatus {
    guard(|| {
        let s = unsafe { deref(spec, "spec") }?;
        unsafe { write(out, to_c_string(dsl::serialize(&s.spec)), "out") }
    })
}

/// Class name of a three-dimensional unimodular algebra, such as `SOL`.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_classify(spec: *const HmSpec, out: *mut *mut c_char) -> HmStatus {
    guard(|| {
        let s = unsafe { deref(spec, "spec") }?;
        let class = s.spec.algebra.classify_3d_unimodular()?;
        unsafe { write(out, to_c_string(class.to_string()), "out") }
    })
}

/// Constant curvature of the spec's metric. On success `is_constant` says
/// whether the curvature is constant; `value` receives the constant as text
/// when it is, and `witness` (three indices) receives a basis triple
/// `(i, j, k)` with `R(e_i, e_j)e_k` off the constant-curvature shape when
/// it is not. `value` and `witness` may be null.
///
/// # Safety
/// `spec` must be a live handle, `is_constant` valid for writes, `value`
/// null or valid for writes, `witness` null or valid for three writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_constcurv(
    spec: *const HmSpec,
    is_constant: *mut bool,
    value: *mut *mut c_char,
    witness: *mut usize,
) -> HmStatus {
    guard(|| {
        let s = unsafe { deref(spec, "spec") }?;
        let e = entry(&s.spec)?;
        let metric = match entry_metric(&e) {
            Some(m) => m?,
            None => return Err(Error::MissingForm.into()),
        };
        match metric.constant_curvature()? {
            ConstantCurvature::Constant(k) => {
                unsafe { write(is_constant, true, "is_constant") }?;
                if !value.is_null() {
                    unsafe { value.write(to_c_string(k.to_string())) };
                }
            }
            ConstantCurvature::NotConstant { witness: (i, j, k) } => {
                unsafe { write(is_constant, false, "is_constant") }?;
                if !value.is_null() {
                    unsafe { value.write(ptr::null_mut()) };
                }
                if !witness.is_null() {
                    for (n, x) in [i, j, k].into_iter().enumerate() {
                        unsafe { witness.add(n).write(x) };
                    }
                }
            }
        }
        Ok(())
    })
}

/// Isotropy type of the model described by the spec's `[isotropy]` section.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_spec_isotropy_type(spec: *const HmSpec, out: *mut HmIsotropyType) -> HmStatus {
    guard(|| {
        let s = unsafe { deref(spec, "spec") }?;
        if !s.spec.has_model() {
            return Err(Failure(HmStatus::InvalidArgument, "spec has no [isotropy] section".into()));
        }
        let ty = s.spec.model()?.isotropy_type()?;
        unsafe { write(out, ty.into(), "out") }
    })
}

/// Runs the full verification suite; `json` receives the report and
/// `all_passed` whether every check passed. Returns `CheckFailed` when any
/// check fails, with the report still written.
///
/// # Safety
/// `json` and `all_passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_verify_paper(seed: u64, tol: f64, json: *mut *mut c_char, all_passed: *mut bool) -> HmStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if all_passed.is_null() {
            return Err(null("all_passed"));
        }
        let report = verify_all(seed, tol)?;
        unsafe {
            json.write(to_c_string(report.to_json()));
            all_passed.write(report.all_passed());
        }
        if report.all_passed() {
            Ok(())
        } else {
            Err(Failure(HmStatus::CheckFailed, format!("{} checks failed", report.summary.fail)))
        }
    })
}

/// Numeric Möbius invariance check; `max_residual` receives the largest
/// residual over `samples` draws. Returns `CheckFailed` when it reaches `tol`.
///
/// # Safety
/// `max_residual` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hm_mobius_check(samples: usize, seed: u64, tol: f64, max_residual: *mut f64) -> HmStatus {
    guard(|| {
        let o = mobius_invariance_check(samples, seed, tol)?;
        unsafe { write(max_residual, o.max_residual, "max_residual") }?;
        if o.max_residual < tol {
            Ok(())
        } else {
            Err(Failure(HmStatus::CheckFailed, format!("residual {:e} reaches tolerance", o.max_residual)))
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn hm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
