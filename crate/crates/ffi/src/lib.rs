//! C ABI for `lusztig-fock`.
//!
//! Engines and matrices are opaque handles owned by the caller and released
//! with their `_free` functions. Every fallible call returns an [`LfStatus`];
//! on failure [`lf_last_error`] describes the most recent error on the
//! calling thread. Strings returned through `char **` out-parameters are
//! NUL-terminated UTF-8 and must be released with [`lf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lusztig_fock::canonical::CanonicalEngine;
use lusztig_fock::partition::core_and_quotient;
use lusztig_fock::render::{self, Format};
use lusztig_fock::{Convention, Error, Partition, TransitionMatrix};
use num_bigint::BigInt;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    /// A required pointer was null.
    NullPointer = 1,
    /// Malformed or out-of-range input (partition literal, modulus, index).
    InvalidArgument = 2,
    /// The requested size exceeds the handle's bound.
    BoundExceeded = 3,
    /// The computation failed or an entry does not fit the output type.
    ComputationFailed = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Canonical-basis engine for one modulus and convention; caches its results.
pub struct LfEngine {
    engine: CanonicalEngine,
    max_n: u32,
}

/// A square integer matrix with partition labels.
pub struct LfMatrix {
    matrix: TransitionMatrix<BigInt>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> LfStatus {
    match err {
        Error::BoundExceeded { .. } => LfStatus::BoundExceeded,
        Error::MissingPivot(_) | Error::InexactDivision(_) | Error::Overflow | Error::AmbiguousTiling { .. } => {
            LfStatus::ComputationFailed
        }
        _ => LfStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and converting panics into [`LfStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (LfStatus, String)>) -> LfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LfStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic in lusztig-fock");
            LfStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (LfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (LfStatus, String) {
    (LfStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `s` must be null or point to a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (LfStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    // SAFETY: non-null and NUL-terminated by the caller's contract.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| (LfStatus::InvalidArgument, "string is not UTF-8".into()))
}

/// # Safety
/// `out` must be null or valid for writing one pointer.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (LfStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| (LfStatus::ComputationFailed, "output contains NUL".into()))?;
    // SAFETY: checked non-null above.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw` in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Creates an engine for modulus `e` (at least 2). `classical` selects the
/// classical label convention instead of the transposed default. `max_n`
/// bounds the degree of canonical-basis computations; 0 means 8.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_engine_new(e: u32, classical: bool, max_n: u32, out: *mut *mut LfEngine) -> LfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let convention = if classical { Convention::Classical } else { Convention::Transposed };
        let engine = CanonicalEngine::with_convention(e, convention).map_err(lib_err)?;
        let handle = Box::new(LfEngine { engine, max_n: if max_n == 0 { 8 } else { max_n } });
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(handle) };
        Ok(())
    })
}

/// Releases an engine. Null is ignored.
///
/// # Safety
/// `engine` must be null or a handle from [`lf_engine_new`] that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_engine_free(engine: *mut LfEngine) {
    if !engine.is_null() {
        // SAFETY: produced by `Box::into_raw` in `lf_engine_new`.
        drop(unsafe { Box::from_raw(engine) });
    }
}

/// `D_n` (rows `G⁺` at `v = 1`) or, with `inverse`, `E_n` (rows `G⁻`), on all
/// partitions of `n` in decreasing lexicographic order.
///
/// # Safety
/// `engine` must be a live handle and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_engine_decomposition_matrix(
    engine: *mut LfEngine,
    n: u32,
    inverse: bool,
    out: *mut *mut LfMatrix,
) -> LfStatus {
    guard(|| {
        if engine.is_null() || out.is_null() {
            return Err(null());
        }
        // SAFETY: live handle by contract; no other reference exists during the call.
        let h = unsafe { &mut *engine };
        if n > h.max_n {
            return Err(lib_err(Error::BoundExceeded { what: "n".into(), value: n.into(), bound: h.max_n.into() }));
        }
        let matrix = if inverse {
            h.engine.inverse_decomposition_matrix(n)
        } else {
            h.engine.decomposition_matrix(n)
        }
        .map_err(lib_err)?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(LfMatrix { matrix })) };
        Ok(())
    })
}

/// `G⁺(λ)` or, with `minus`, `G⁻(λ)` as a JSON object mapping partition
/// literals to Laurent polynomials in `v`.
///
/// # Safety
/// `engine` must be a live handle, `lambda` a NUL-terminated partition literal
/// such as `"3,1"`, and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_engine_canonical_json(
    engine: *mut LfEngine,
    lambda: *const c_char,
    minus: bool,
    out: *mut *mut c_char,
) -> LfStatus {
    guard(|| {
        if engine.is_null() {
            return Err(null());
        }
        // SAFETY: live handle by contract.
        let h = unsafe { &mut *engine };
        // SAFETY: caller contract on `lambda`.
        let lambda: Partition = unsafe { read_str(lambda) }?.parse().map_err(lib_err)?;
        if lambda.size() > h.max_n {
            let e = Error::BoundExceeded { what: "n".into(), value: lambda.size().into(), bound: h.max_n.into() };
            return Err(lib_err(e));
        }
        let g = if minus { h.engine.canonical_minus(&lambda) } else { h.engine.canonical_plus(&lambda) }
            .map_err(lib_err)?;
        let text = render::fock_vector(&g.vector, Format::Json);
        // SAFETY: caller contract on `out`.
        unsafe { write_string(out, text.trim_end().to_string()) }
    })
}

/// e-core, e-quotient and weight of a partition as JSON.
///
/// # Safety
/// `lambda` must be a NUL-terminated partition literal and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_core_quotient_json(lambda: *const c_char, e: u32, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        // SAFETY: caller contract on `lambda`.
        let lambda: Partition = unsafe { read_str(lambda) }?.parse().map_err(lib_err)?;
        let (core, quotient) = core_and_quotient(&lambda, e).map_err(lib_err)?;
        let v = serde_json::json!({ "core": core, "quotient": quotient, "weight": quotient.size() }).to_string();
        // SAFETY: caller contract on `out`.
        unsafe { write_string(out, v) }
    })
}

/// Releases a matrix. Null is ignored.
///
/// # Safety
/// `matrix` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_matrix_free(matrix: *mut LfMatrix) {
    if !matrix.is_null() {
        // SAFETY: produced by `Box::into_raw` in this crate.
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// Number of rows (and columns); 0 for null.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lf_matrix_dim(matrix: *const LfMatrix) -> usize {
    // SAFETY: null or live by contract.
    unsafe { matrix.as_ref() }.map_or(0, |m| m.matrix.dim())
}

/// Entry at `(row, col)` as a 64-bit integer.
///
/// # Safety
/// `matrix` must be a live handle and `out` valid for writing one `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn lf_matrix_entry(matrix: *const LfMatrix, row: usize, col: usize, out: *mut i64) -> LfStatus {
    guard(|| {
        // SAFETY: null or live by contract.
        let m = unsafe { matrix.as_ref() }.ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let dim = m.matrix.dim();
        if row >= dim || col >= dim {
            return Err((LfStatus::InvalidArgument, format!("index ({row},{col}) outside a {dim}x{dim} matrix")));
        }
        let x = i64::try_from(&m.matrix.entries[row][col])
            .map_err(|_| (LfStatus::ComputationFailed, "entry does not fit in int64_t".into()))?;
        // SAFETY: checked non-null above.
        unsafe { *out = x };
        Ok(())
    })
}

/// Partition literal labelling row and column `index`.
///
/// # Safety
/// `matrix` must be a live handle and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_matrix_label(matrix: *const LfMatrix, index: usize, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        // SAFETY: null or live by contract.
        let m = unsafe { matrix.as_ref() }.ok_or_else(null)?;
        let label = m
            .matrix
            .labels
            .get(index)
            .ok_or_else(|| (LfStatus::InvalidArgument, format!("label index {index} out of range")))?;
        // SAFETY: caller contract on `out`.
        unsafe { write_string(out, label.to_string()) }
    })
}

/// The matrix as `{"labels": [...], "entries": [[...]]}`.
///
/// # Safety
/// `matrix` must be a live handle and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_matrix_to_json(matrix: *const LfMatrix, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        // SAFETY: null or live by contract.
        let m = unsafe { matrix.as_ref() }.ok_or_else(null)?;
        let text = render::matrix(&m.matrix, Format::Json);
        // SAFETY: caller contract on `out`.
        unsafe { write_string(out, text.trim_end().to_string()) }
    })
}
