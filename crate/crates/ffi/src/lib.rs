//! C ABI over `quandle-core`.
//!
//! Quandles and Euler reports are opaque heap handles. Every fallible call
//! returns a [`QdlStatus`]; on failure a message is available from
//! [`qdl_last_error_message`] on the same thread. Strings handed out by the
//! library are freed with [`qdl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quandle_core::closure::{self, GroupKind, GroupOrder};
use quandle_core::euler::{self, EulerReport};
use quandle_core::spec;
use quandle_core::{Error, FiniteQuandle};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    CapExceeded = 5,
    BudgetExceeded = 6,
    OutOfRange = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QdlGroupKind {
    Inner = 0,
    Displacement = 1,
}

/// A validated finite quandle.
pub struct QdlQuandle {
    inner: FiniteQuandle,
}

/// The result of an Euler characteristic computation.
pub struct QdlReport {
    inner: EulerReport,
}

/// Plain-data view of a report. `chi` is meaningful only when `exact` is set,
/// `dis_order` only when `has_dis_order` is set.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QdlEulerSummary {
    pub exact: bool,
    pub chi: usize,
    pub upper_bound: usize,
    pub has_dis_order: bool,
    pub dis_order: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(QdlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.root() {
            Error::Syntax { .. } | Error::UnknownType(_) | Error::Schema { .. } => QdlStatus::Parse,
            Error::SearchBudgetExceeded(_) => QdlStatus::BudgetExceeded,
            Error::IndexOutOfRange { .. } => QdlStatus::OutOfRange,
            _ => QdlStatus::Invalid,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QdlStatus::NullPointer, format!("{what} is null"))
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QdlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            QdlStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            QdlStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(QdlStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn boxed_quandle(q: FiniteQuandle) -> *mut QdlQuandle {
    Box::into_raw(Box::new(QdlQuandle { inner: q }))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qdl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread, or an empty string.
/// Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn qdl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qdl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and resolves a JSON quandle spec.
///
/// # Safety
/// `spec_json` must be NULL or a NUL-terminated string; `out` must be NULL
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_from_json(spec_json: *const c_char, out: *mut *mut QdlQuandle) -> QdlStatus {
    guard(|| {
        let text = str_arg(spec_json, "spec_json")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let q = spec::parse_spec(text)?.resolve()?;
        write_out(out, boxed_quandle(q))
    })
}

/// Validates a row-major `n × n` table where `table[x*n + y] = s_x(y)`.
///
/// # Safety
/// `table` must point to `n * n` readable values; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_from_table(table: *const u32, n: usize, out: *mut *mut QdlQuandle) -> QdlStatus {
    guard(|| {
        if table.is_null() {
            return Err(null("table"));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let len = n
            .checked_mul(n)
            .ok_or_else(|| Failure(QdlStatus::Invalid, "table size overflows".into()))?;
        let flat = std::slice::from_raw_parts(table, len);
        let rows: Vec<Vec<usize>> = if n == 0 {
            Vec::new()
        } else {
            flat.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
        };
        let q = FiniteQuandle::validate(rows)?;
        write_out(out, boxed_quandle(q))
    })
}

/// # Safety
/// `q` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_free(q: *mut QdlQuandle) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of elements, or 0 for a NULL handle.
///
/// # Safety
/// `q` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_size(q: *const QdlQuandle) -> usize {
    q.as_ref().map_or(0, |q| q.inner.size())
}

/// Writes `s_x(y)` to `out`.
///
/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_act(q: *const QdlQuandle, x: usize, y: usize, out: *mut usize) -> QdlStatus {
    guard(|| {
        let q = &deref(q, "quandle")?.inner;
        let size = q.size();
        if let Some(index) = [x, y].into_iter().find(|&i| i >= size) {
            return Err(Error::IndexOutOfRange { index, size }.into());
        }
        write_out(out, q.act(x, y))
    })
}

/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_is_trivial(q: *const QdlQuandle, out: *mut bool) -> QdlStatus {
    guard(|| write_out(out, deref(q, "quandle")?.inner.is_trivial()))
}

/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_is_connected(q: *const QdlQuandle, out: *mut bool) -> QdlStatus {
    guard(|| write_out(out, deref(q, "quandle")?.inner.is_connected()))
}

/// Decides whether the automorphism group acts transitively. Returns
/// `BudgetExceeded` if the search needs more than `budget` nodes.
///
/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_is_homogeneous(q: *const QdlQuandle, budget: u64, out: *mut bool) -> QdlStatus {
    guard(|| {
        let h = deref(q, "quandle")?.inner.is_homogeneous(budget)?;
        write_out(out, h)
    })
}

/// Order of `Inn(X)` or `Dis(X)`. Returns `CapExceeded` past `cap` elements.
///
/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_group_order(
    q: *const QdlQuandle,
    kind: QdlGroupKind,
    cap: usize,
    out: *mut usize,
) -> QdlStatus {
    guard(|| {
        let q = &deref(q, "quandle")?.inner;
        let kind = match kind {
            QdlGroupKind::Inner => GroupKind::Inner,
            QdlGroupKind::Displacement => GroupKind::Displacement,
        };
        match closure::group_order(q, kind, cap)? {
            GroupOrder::Exact(n) => write_out(out, n),
            GroupOrder::Truncated => Err(Failure(
                QdlStatus::CapExceeded,
                format!("group has more than {cap} elements"),
            )),
        }
    })
}

/// # Safety
/// `a` and `b` must be NULL or live handles; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_product(
    a: *const QdlQuandle,
    b: *const QdlQuandle,
    out: *mut *mut QdlQuandle,
) -> QdlStatus {
    guard(|| {
        let (a, b) = (deref(a, "left quandle")?, deref(b, "right quandle")?);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let q = FiniteQuandle::direct_product(&a.inner, &b.inner)?;
        write_out(out, boxed_quandle(q))
    })
}

/// # Safety
/// `a` and `b` must be NULL or live handles; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_free_union(
    a: *const QdlQuandle,
    b: *const QdlQuandle,
    out: *mut *mut QdlQuandle,
) -> QdlStatus {
    guard(|| {
        let (a, b) = (deref(a, "left quandle")?, deref(b, "right quandle")?);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let q = FiniteQuandle::free_union(&a.inner, &b.inner)?;
        write_out(out, boxed_quandle(q))
    })
}

/// Canonical table JSON; free the result with [`qdl_string_free`].
///
/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_quandle_table_json(q: *const QdlQuandle, out: *mut *mut c_char) -> QdlStatus {
    guard(|| write_out(out, into_c_string(spec::table_json(&deref(q, "quandle")?.inner))))
}

/// Computes the Euler characteristic by enumerating `Dis(X)` up to `cap`
/// elements. A report is produced even when the cap is reached; its summary
/// then has `exact` unset.
///
/// # Safety
/// `q` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_euler(q: *const QdlQuandle, cap: usize, out: *mut *mut QdlReport) -> QdlStatus {
    guard(|| {
        let q = &deref(q, "quandle")?.inner;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let report = euler::euler_characteristic(q, cap)?;
        write_out(out, Box::into_raw(Box::new(QdlReport { inner: report })))
    })
}

/// Random search for a fixed-point-free element of `Dis(X)`. Writes true to
/// `found` and the element to `witness` (which must hold `size` values) on a
/// hit.
///
/// # Safety
/// `q` must be NULL or a live handle; `witness` must be NULL or point to
/// `qdl_quandle_size(q)` writable values; `found` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_zero_witness_search(
    q: *const QdlQuandle,
    trials: usize,
    seed: u64,
    witness: *mut u32,
    found: *mut bool,
) -> QdlStatus {
    guard(|| {
        let q = &deref(q, "quandle")?.inner;
        if witness.is_null() {
            return Err(null("witness buffer"));
        }
        let hit = euler::zero_witness_search(q, trials, seed);
        if let Some(w) = &hit {
            let buf = std::slice::from_raw_parts_mut(witness, q.size());
            for (slot, image) in buf.iter_mut().zip(w.images()) {
                *slot = image as u32;
            }
        }
        write_out(found, hit.is_some())
    })
}

/// # Safety
/// `r` must be NULL or a report handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qdl_report_free(r: *mut QdlReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be NULL or a live report; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_report_summary(r: *const QdlReport, out: *mut QdlEulerSummary) -> QdlStatus {
    guard(|| {
        let r = &deref(r, "report")?.inner;
        write_out(
            out,
            QdlEulerSummary {
                exact: r.exact,
                chi: r.chi.unwrap_or(0),
                upper_bound: r.upper_bound,
                has_dis_order: r.dis_order.is_some(),
                dis_order: r.dis_order.unwrap_or(0),
            },
        )
    })
}

/// Copies the witness permutation into `buf`. `written` receives the
/// witness length, which is 0 for an inexact report. Returns
/// `BufferTooSmall` if `len` is shorter than the witness.
///
/// # Safety
/// `r` must be NULL or a live report; `buf` must be NULL or point to `len`
/// writable values; `written` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_report_witness(
    r: *const QdlReport,
    buf: *mut u32,
    len: usize,
    written: *mut usize,
) -> QdlStatus {
    guard(|| {
        let r = &deref(r, "report")?.inner;
        let needed = r.witness.as_ref().map_or(0, |w| w.degree());
        write_out(written, needed)?;
        if needed > len {
            return Err(Failure(
                QdlStatus::BufferTooSmall,
                format!("witness needs {needed} slots, buffer has {len}"),
            ));
        }
        if let Some(w) = &r.witness {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            let slots = std::slice::from_raw_parts_mut(buf, needed);
            for (slot, image) in slots.iter_mut().zip(w.images()) {
                *slot = image as u32;
            }
        }
        Ok(())
    })
}

/// The report as JSON; free the result with [`qdl_string_free`].
///
/// # Safety
/// `r` must be NULL or a live report; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn qdl_report_to_json(r: *const QdlReport, out: *mut *mut c_char) -> QdlStatus {
    guard(|| write_out(out, into_c_string(deref(r, "report")?.inner.to_json())))
}
