//! C ABI over `compound-core`.
//!
//! Every fallible function returns a [`CompoundStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`compound_last_error`] on the same thread. Strings returned through
//! out-pointers are owned by the caller and released with
//! [`compound_string_free`]; matrices with [`compound_matrix_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;

use compound_core::format::{decompose, emit_matrix, MatrixFormat};
use compound_core::transition::{build_matrix, k_value, split_blocks, MatrixKind};
use compound_core::verify::check;
use compound_core::{Error, LabelOrder, LabeledIntMatrix, Partition};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompoundStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidPartition = 4,
    OutOfRange = 5,
    Overflow = 6,
    ComputationFailed = 7,
    Panic = 8,
}

/// Output format for [`compound_matrix_to_string`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompoundFormat {
    Json = 0,
    Csv = 1,
    Latex = 2,
}

/// Row and column order of a matrix.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompoundOrder {
    Canonical = 0,
    Printed = 1,
}

/// An integer matrix with partition labels.
pub struct CompoundMatrix {
    inner: LabeledIntMatrix,
    kind: MatrixKind,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CompoundStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NotAPartition(_)
            | Error::NotStrict(_)
            | Error::NotOdd(_)
            | Error::NotHCore(_)
            | Error::WeightMismatch { .. }
            | Error::ParsePartition { .. } => CompoundStatus::InvalidPartition,
            Error::InvalidBlock { .. } | Error::OutOfRange { .. } => CompoundStatus::OutOfRange,
            Error::UnknownClaim(_) | Error::InvalidArgument(_) | Error::Malformed(_) => CompoundStatus::InvalidArgument,
            _ => CompoundStatus::ComputationFailed,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn run(body: impl FnOnce() -> Result<(), Failure>) -> CompoundStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| Err(Failure(CompoundStatus::Panic, "internal panic".to_string())));
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            CompoundStatus::Ok
        }
        Err(Failure(status, message)) => {
            set_last_error(&message);
            status
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CompoundStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(CompoundStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    let c = CString::new(text).map_err(|_| Failure(CompoundStatus::ComputationFailed, "nul in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn matrix_ref<'a>(m: *const CompoundMatrix) -> Result<&'a CompoundMatrix, Failure> {
    m.as_ref().ok_or_else(|| null("matrix"))
}

fn entry_of(m: &CompoundMatrix, row: usize, col: usize) -> Result<&BigInt, Failure> {
    if row >= m.inner.rows() || col >= m.inner.cols() {
        return Err(Failure(
            CompoundStatus::OutOfRange,
            format!("entry ({row}, {col}) outside {}x{}", m.inner.rows(), m.inner.cols()),
        ));
    }
    Ok(m.inner.entry(row, col))
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn compound_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a matrix. `kind` is one of `"A"`, `"Gamma"`, `"G"`, `"AtA"` or
/// `"block"`; `n0` and `n1` are read only for `"block"`.
///
/// # Safety
/// `kind` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_new(
    kind: *const c_char,
    n: usize,
    n0: usize,
    n1: usize,
    order: CompoundOrder,
    out: *mut *mut CompoundMatrix,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let name = read_str(kind, "kind")?;
        let kind = MatrixKind::parse(name, (name == "block").then_some((n0, n1)))?;
        let order = match order {
            CompoundOrder::Canonical => LabelOrder::Canonical,
            CompoundOrder::Printed => LabelOrder::Printed,
        };
        let inner = build_matrix(kind, n, order)?;
        *out = Box::into_raw(Box::new(CompoundMatrix { inner, kind }));
        Ok(())
    })
}

/// # Safety
/// `m` must come from [`compound_matrix_new`] and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_free(m: *mut CompoundMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for a null matrix.
///
/// # Safety
/// `m` must be null or a live matrix.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_rows(m: *const CompoundMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.rows())
}

/// Number of columns, or 0 for a null matrix.
///
/// # Safety
/// `m` must be null or a live matrix.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_cols(m: *const CompoundMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.cols())
}

/// Entry as a 64-bit integer; fails with `Overflow` if it does not fit.
///
/// # Safety
/// `m` must be a live matrix and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_entry_i64(
    m: *const CompoundMatrix,
    row: usize,
    col: usize,
    out: *mut i64,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let value = entry_of(matrix_ref(m)?, row, col)?;
        *out = i64::try_from(value)
            .map_err(|_| Failure(CompoundStatus::Overflow, format!("entry {value} does not fit in 64 bits")))?;
        Ok(())
    })
}

/// Entry in decimal.
///
/// # Safety
/// `m` must be a live matrix and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_entry_string(
    m: *const CompoundMatrix,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let value = entry_of(matrix_ref(m)?, row, col)?;
        write_string(out, value.to_string())
    })
}

/// Determinant in decimal.
///
/// # Safety
/// `m` must be a live matrix and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_determinant(
    m: *const CompoundMatrix,
    out: *mut *mut c_char,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let m = matrix_ref(m)?;
        if m.inner.rows() != m.inner.cols() {
            return Err(Failure(CompoundStatus::InvalidArgument, "matrix is not square".into()));
        }
        write_string(out, m.inner.determinant().to_string())
    })
}

/// Whole matrix as JSON, CSV or LaTeX, the same text the command line prints.
///
/// # Safety
/// `m` must be a live matrix and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_matrix_to_string(
    m: *const CompoundMatrix,
    format: CompoundFormat,
    out: *mut *mut c_char,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let m = matrix_ref(m)?;
        let format = match format {
            CompoundFormat::Json => MatrixFormat::Json,
            CompoundFormat::Csv => MatrixFormat::Csv,
            CompoundFormat::Latex => MatrixFormat::Latex,
        };
        let blocks = if m.kind == MatrixKind::AtA { Some(split_blocks(&m.inner)?) } else { None };
        write_string(out, emit_matrix(&m.inner, format, blocks.as_ref())?)
    })
}

/// Applies `map` (`"phi"`, `"psi"`, `"glaisher"`, `"glaisher-inverse"`,
/// `"habacus"` or `"2quot"`) to a partition such as `"11,10,5,3,2"` and
/// writes a JSON object.
///
/// # Safety
/// `map` and `partition` must be valid C strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_decompose(
    map: *const c_char,
    partition: *const c_char,
    out: *mut *mut c_char,
) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let map = read_str(map, "map")?;
        let lambda: Partition = read_str(partition, "partition")?.parse()?;
        write_string(out, decompose(map, &lambda)?.to_string())
    })
}

/// Runs one claim at one `n` with the default caps. `passed` receives the
/// verdict and `report` the JSON report; a failing claim still returns `Ok`.
///
/// # Safety
/// `claim` must be a valid C string; `passed` and `report` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn compound_verify(
    claim: *const c_char,
    n: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> CompoundStatus {
    run(|| {
        if passed.is_null() || report.is_null() {
            return Err(null("output"));
        }
        let r = check(read_str(claim, "claim")?, n)?;
        *passed = r.passed();
        write_string(report, r.to_json_line())
    })
}

/// `k_n`, the exponent in `|det A_n| = 2^k_n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn compound_k_value(n: usize, out: *mut u64) -> CompoundStatus {
    run(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = k_value(n)?;
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn compound_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
