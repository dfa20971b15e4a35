//! C interface to `rankmetric`.
//!
//! Codes and pairs live behind opaque handles created from the JSON file
//! formats of the command-line tool and released with the matching `_free`
//! function. Every fallible call returns an [`RmStatus`]; on failure the
//! message is available from [`rm_last_error`] on the same thread.
//! Strings handed out by the library are released with [`rm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rankmetric::error::Error;
use rankmetric::gf::Field;
use rankmetric::io::{self, CodeFile, MatrixJson, PairFile};
use rankmetric::rankcore::LinearCode;
use rankmetric::schemes::{self, Metric, NestedCodePair};
use rankmetric::{construct, weights};

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    InvalidParams = 4,
    CapExceeded = 5,
    /// A checked property failed or a decoding was ambiguous.
    Violation = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Metric selector for [`rm_pair_min_distance`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmMetric {
    Rank = 0,
    Hamming = 1,
}

/// A linear code over `F_{q^m}`.
pub struct RmCode {
    inner: LinearCode,
}

/// A nested pair `C_2 ⊊ C_1`.
pub struct RmPair {
    inner: NestedCodePair,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(RmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CapExceeded { .. } => RmStatus::CapExceeded,
            Error::InternalInconsistency(_) | Error::AmbiguityDetected(_) => RmStatus::Violation,
            Error::InvalidParams(_)
            | Error::InfeasibleBudget { .. }
            | Error::PreconditionViolated(_)
            | Error::UnsupportedMode(_)
            | Error::InvalidField(_) => RmStatus::InvalidParams,
            _ => RmStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RmStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RmStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside rankmetric");
            RmStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(RmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RmStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn parse<T: for<'de> serde::Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure(RmStatus::InvalidInput, e.to_string()))
}

fn cap_of(cap: u64) -> u128 {
    if cap == 0 {
        rankmetric::default_cap()
    } else {
        cap as u128
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(RmStatus::InvalidInput, "interior NUL".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Copies `values` into `out[0..len]`; `written` always receives the full count.
unsafe fn fill(values: &[usize], out: *mut usize, len: usize, written: *mut usize) -> Result<(), Failure> {
    if !written.is_null() {
        *written = values.len();
    }
    if len < values.len() {
        return Err(Failure(
            RmStatus::BufferTooSmall,
            format!("{} values, buffer holds {len}", values.len()),
        ));
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn rm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a code file (`{"field": …, "n": …, "G": …}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_code_from_json(json: *const c_char, out: *mut *mut RmCode) -> RmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let file: CodeFile = parse(str_arg(json, "json")?)?;
        let inner = file.to_code()?.code;
        *out = Box::into_raw(Box::new(RmCode { inner }));
        Ok(())
    })
}

/// Gabidulin code of length `n` and dimension `k` over `F_{p^{e m}}`.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_code_gabidulin(
    p: u32,
    e: u32,
    m: u32,
    n: usize,
    k: usize,
    out: *mut *mut RmCode,
) -> RmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = Field::new(p, e, m)?;
        let inner = construct::gabidulin(&f, n, k, None)?;
        *out = Box::into_raw(Box::new(RmCode { inner }));
        Ok(())
    })
}

/// # Safety
/// `code` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rm_code_free(code: *mut RmCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Dual code as a new handle.
///
/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_code_dual(code: *const RmCode, out: *mut *mut RmCode) -> RmStatus {
    guard(|| {
        let c = handle(code, "code")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let dual = c.inner.dual();
        if dual.k() == 0 {
            return Err(Failure(RmStatus::InvalidParams, "the dual is the zero code".into()));
        }
        *out = Box::into_raw(Box::new(RmCode { inner: dual }));
        Ok(())
    })
}

/// Length `n`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_code_length(code: *const RmCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.n())
}

/// Dimension `k`, or 0 for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_code_dimension(code: *const RmCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.k())
}

/// Whether the code is fixed by the Frobenius map; false for a null handle.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_code_is_galois_closed(code: *const RmCode) -> bool {
    code.as_ref().is_some_and(|c| c.inner.is_galois_closed())
}

/// Generalized rank weights `d_{R,1}, …, d_{R,k}`. `cap` bounds the
/// enumeration size; 0 selects the default.
///
/// # Safety
/// `code` must be a live handle, `out` must hold `len` values and `written`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn rm_code_rank_weights(
    code: *const RmCode,
    cap: u64,
    out: *mut usize,
    len: usize,
    written: *mut usize,
) -> RmStatus {
    guard(|| {
        let c = handle(code, "code")?;
        let values = weights::grw_profile(&c.inner, cap_of(cap))?;
        fill(&values, out, len, written)
    })
}

/// Generalized Hamming weights `d_{H,1}, …, d_{H,k}`.
///
/// # Safety
/// As for [`rm_code_rank_weights`].
#[no_mangle]
pub unsafe extern "C" fn rm_code_hamming_weights(
    code: *const RmCode,
    cap: u64,
    out: *mut usize,
    len: usize,
    written: *mut usize,
) -> RmStatus {
    guard(|| {
        let c = handle(code, "code")?;
        let values = weights::hamming_weights(&c.inner, cap_of(cap))?.values;
        fill(&values, out, len, written)
    })
}

/// The code as a code-file JSON string, released with [`rm_string_free`].
///
/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_code_to_json(code: *const RmCode, out: *mut *mut c_char) -> RmStatus {
    guard(|| {
        let c = handle(code, "code")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = serde_json::to_string(&CodeFile::from_code(&c.inner)).expect("code files serialize");
        give_string(text, out)
    })
}

/// Parses a pair file (`{"field": …, "n": …, "G2": …, "Gprime": …}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_pair_from_json(json: *const c_char, out: *mut *mut RmPair) -> RmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let file: PairFile = parse(str_arg(json, "json")?)?;
        let inner = file.to_pair()?;
        *out = Box::into_raw(Box::new(RmPair { inner }));
        Ok(())
    })
}

/// # Safety
/// `pair` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rm_pair_free(pair: *mut RmPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// `n`, `dim C_1` and `dim C_2`. Any output pointer may be null.
///
/// # Safety
/// `pair` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_pair_dims(pair: *const RmPair, n: *mut usize, k1: *mut usize, k2: *mut usize) -> RmStatus {
    guard(|| {
        let p = &handle(pair, "pair")?.inner;
        for (dst, v) in [(n, p.n()), (k1, p.k1()), (k2, p.k2())] {
            if !dst.is_null() {
                *dst = v;
            }
        }
        Ok(())
    })
}

/// Information leaked to an observer of `c Bᵀ`, in `F_{q^m}`-symbols. `b_json`
/// is a JSON array of rows over `F_q`, each of length `n`.
///
/// # Safety
/// `pair` must be a live handle, `b_json` a NUL-terminated string and `out`
/// a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_pair_leakage(pair: *const RmPair, b_json: *const c_char, out: *mut usize) -> RmStatus {
    guard(|| {
        let p = &handle(pair, "pair")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let rows: MatrixJson = parse(str_arg(b_json, "b_json")?)?;
        let b = io::matrix(p.field(), p.n(), &rows)?;
        *out = schemes::leakage_of_matrix(p, &b)?;
        Ok(())
    })
}

/// Minimum distance of the coset coding scheme in the chosen metric.
///
/// # Safety
/// `pair` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn rm_pair_min_distance(
    pair: *const RmPair,
    metric: RmMetric,
    cap: u64,
    out: *mut usize,
) -> RmStatus {
    guard(|| {
        let p = &handle(pair, "pair")?.inner;
        if out.is_null() {
            return Err(null("out"));
        }
        let metric = match metric {
            RmMetric::Rank => Metric::Rank,
            RmMetric::Hamming => Metric::Hamming,
        };
        *out = schemes::scheme_min_distance(p, metric, cap_of(cap))?;
        Ok(())
    })
}

/// Runs a command-line invocation (`argv[0]` is the program name) and
/// returns its JSON report in `report` and its exit code in `exit_code`.
/// A command that ran but reported a violation still returns `RM_STATUS_OK`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `report` and
/// `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_run(
    argc: usize,
    argv: *const *const c_char,
    report: *mut *mut c_char,
    exit_code: *mut c_int,
) -> RmStatus {
    guard(|| {
        if argv.is_null() || report.is_null() || exit_code.is_null() {
            return Err(null("argument"));
        }
        let args = (0..argc)
            .map(|i| str_arg(*argv.add(i), "argv entry").map(str::to_owned))
            .collect::<Result<Vec<_>, _>>()?;
        let outcome = rankmetric::cli::run_args(args)?;
        *exit_code = outcome.code;
        give_string(
            serde_json::to_string(&outcome.report).expect("reports serialize"),
            report,
        )
    })
}
