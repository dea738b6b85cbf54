//! C ABI over `lierep`.
//!
//! Every function returns a [`LierepStatus`] and writes results through out
//! pointers. Algebras and representations are opaque handles released with
//! their `_free` function; strings returned by the library are released
//! with [`lierep_string_free`]. On failure [`lierep_last_error`] gives a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lierep::matrixrep::{self, MatrixRep, StructureConstants};
use lierep::{invariants, Error, ReductiveAlgebra};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LierepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Unsupported = 5,
    AlphaUnavailable = 6,
    Format = 7,
    Io = 8,
    Panic = 9,
}

/// A reductive Lie algebra.
pub struct LierepAlgebra {
    inner: ReductiveAlgebra,
}

/// A matrix representation of a reductive Lie algebra.
pub struct LierepRep {
    inner: MatrixRep,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LierepStatus {
    match e {
        Error::Parse(_) | Error::InvalidType(_) => LierepStatus::Parse,
        Error::Unsupported(_) | Error::MissingTable(_) => LierepStatus::Unsupported,
        Error::AlphaUnavailable(_) => LierepStatus::AlphaUnavailable,
        Error::Format(_) | Error::Json(_) | Error::DimensionMismatch { .. } => LierepStatus::Format,
        Error::Io(_) => LierepStatus::Io,
        _ => LierepStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LierepStatus>) -> LierepStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LierepStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            LierepStatus::Panic
        }
    }
}

fn fail(e: Error) -> LierepStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn null(what: &str) -> LierepStatus {
    set_error(format!("null pointer: {what}"));
    LierepStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, LierepStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        LierepStatus::InvalidUtf8
    })
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, LierepStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, LierepStatus> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lierep_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Parse an expression such as `"A1+C3+C^6"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_parse(
    text: *const c_char,
    out: *mut *mut LierepAlgebra,
) -> LierepStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let out = out_arg(out, "out")?;
        let inner = lierep::parse_expr(text).map_err(|e| fail(Error::Parse(e)))?;
        *out = Box::into_raw(Box::new(LierepAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_free(g: *mut LierepAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Canonical expression string; free with [`lierep_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_to_string(
    g: *const LierepAlgebra,
    out: *mut *mut c_char,
) -> LierepStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        *out_arg(out, "out")? = to_c_string(g.inner.to_string());
        Ok(())
    })
}

/// Minimal faithful degree.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_mu(g: *const LierepAlgebra, out: *mut u64) -> LierepStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        *out_arg(out, "out")? = invariants::mu(&g.inner);
        Ok(())
    })
}

/// Dimension.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_dim(g: *const LierepAlgebra, out: *mut u64) -> LierepStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        *out_arg(out, "out")? = invariants::dim_of(&g.inner);
        Ok(())
    })
}

/// Maximal abelian subalgebra dimension; `AlphaUnavailable` when not known.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_algebra_alpha(
    g: *const LierepAlgebra,
    out: *mut u64,
) -> LierepStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        let out = out_arg(out, "out")?;
        *out = invariants::alpha(&g.inner)
            .ok_or_else(|| fail(Error::AlphaUnavailable(g.inner.to_string())))?;
        Ok(())
    })
}

/// Nilpotent bound `p(n, k)` as a decimal string; free with
/// [`lierep_string_free`].
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_nilbound(n: usize, k: usize, out: *mut *mut c_char) -> LierepStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let p = invariants::p_bound(n, k).map_err(fail)?;
        *out = to_c_string(p.to_string());
        Ok(())
    })
}

/// Faithful representation of degree `mu(g)`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_construct(
    g: *const LierepAlgebra,
    out: *mut *mut LierepRep,
) -> LierepStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        let out = out_arg(out, "out")?;
        let inner = matrixrep::reductive_min_rep(&g.inner).map_err(fail)?;
        *out = Box::into_raw(Box::new(LierepRep { inner }));
        Ok(())
    })
}

/// Read a representation from its JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_from_json(
    json: *const c_char,
    out: *mut *mut LierepRep,
) -> LierepStatus {
    guard(|| {
        let json = str_arg(json, "json")?;
        let out = out_arg(out, "out")?;
        let file: matrixrep::RepFile =
            serde_json::from_str(json).map_err(|e| fail(Error::Json(e)))?;
        let inner = matrixrep::rep_from_json(&file).map_err(fail)?;
        *out = Box::into_raw(Box::new(LierepRep { inner }));
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_free(r: *mut LierepRep) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Matrix size.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_degree(r: *const LierepRep, out: *mut usize) -> LierepStatus {
    guard(|| {
        let r = ref_arg(r, "rep")?;
        *out_arg(out, "out")? = r.inner.degree();
        Ok(())
    })
}

/// JSON representation file text; free with [`lierep_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_to_json(
    r: *const LierepRep,
    out: *mut *mut c_char,
) -> LierepStatus {
    guard(|| {
        let r = ref_arg(r, "rep")?;
        let out = out_arg(out, "out")?;
        let text = serde_json::to_string(&matrixrep::rep_to_json(&r.inner))
            .map_err(|e| fail(Error::Json(e)))?;
        *out = to_c_string(text);
        Ok(())
    })
}

/// Check brackets against the algebra's structure constants. Writes whether
/// every bracket is preserved and the kernel dimension.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lierep_rep_verify(
    r: *const LierepRep,
    homomorphism: *mut bool,
    kernel_dim: *mut usize,
) -> LierepStatus {
    guard(|| {
        let r = ref_arg(r, "rep")?;
        let hom = out_arg(homomorphism, "homomorphism")?;
        let ker = out_arg(kernel_dim, "kernel_dim")?;
        let sc = StructureConstants::for_algebra(&r.inner.algebra()).map_err(fail)?;
        let report = matrixrep::verify_rep(&r.inner, &sc).map_err(fail)?;
        *hom = report.is_homomorphism();
        *ker = report.kernel_dim;
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn lierep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
