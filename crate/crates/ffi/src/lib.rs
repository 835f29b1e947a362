//! C interface to `qgv-core`.
//!
//! Every fallible function returns a [`QgvStatus`]. On anything other than
//! `QGV_STATUS_OK` a message is available from [`qgv_last_error`] on the same
//! thread until the next call. Strings returned as `char *` are owned by the
//! caller and must be released with [`qgv_string_free`]; strings returned as
//! `const char *` are static.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use qgv_core::identities::{eval_side, IdentityId, Instance, Kind, Point, Side};
use qgv_core::numerics::{ExactRational, QPoint};
use qgv_core::verifier::{run_suite_with, verify_instance, Mode, SampleConfig, SuiteOptions, VerificationReport};
use qgv_core::Error;

/// Pass as `ell` or `k` when the entry does not take that index.
pub const QGV_NO_INDEX: i64 = i64::MIN;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgvStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Unknown id, wrong arity, unparsable rational or bad option.
    InvalidArgument = 3,
    /// Evaluation hit a vanishing denominator.
    Pole = 4,
    IllConditioned = 5,
    /// Sampling or grid construction ran out of candidates.
    Exhausted = 6,
    /// A Rust panic was caught at the boundary.
    Panic = 7,
}

/// Opaque handle to a finished verification report.
pub struct QgvReport {
    inner: VerificationReport,
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct QgvSuiteOptions {
    pub seed: u64,
    pub n_max: i64,
    pub ell_max: i64,
    pub trials: u32,
    pub bitsize: u32,
    pub max_resample: u32,
    /// Bits for the numeric checks.
    pub precision: usize,
    /// Selects grid certification where available.
    pub certify: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("no interior nul")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fault(QgvStatus, String);

impl From<Error> for Fault {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Pole(_) | Error::PoleOfGamma(_) | Error::ZeroToNegativePower(_) => QgvStatus::Pole,
            Error::IllConditioned(_) => QgvStatus::IllConditioned,
            Error::SamplingExhausted(_) | Error::GridConstructionFailed(_) => QgvStatus::Exhausted,
            _ => QgvStatus::InvalidArgument,
        };
        Fault(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fault>) -> QgvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QgvStatus::Ok,
        Ok(Err(Fault(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside qgv");
            QgvStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fault> {
    if p.is_null() {
        return Err(Fault(QgvStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fault(QgvStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn rational(p: *const c_char, what: &str) -> Result<ExactRational, Fault> {
    let s = text(p, what)?;
    s.parse().map_err(|_| Fault(QgvStatus::InvalidArgument, format!("{what} expects p/q, got {s:?}")))
}

unsafe fn identity(p: *const c_char) -> Result<IdentityId, Fault> {
    Ok(text(p, "id")?.parse()?)
}

fn index(v: i64) -> Option<i64> {
    (v != QGV_NO_INDEX).then_some(v)
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Fault> {
    if out.is_null() {
        return Err(Fault(QgvStatus::NullArgument, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn qgv_version() -> *const c_char {
    static V: OnceLock<CString> = OnceLock::new();
    V.get_or_init(|| CString::new(qgv_core::verifier::VERSION).unwrap()).as_ptr()
}

/// Message for the last failed call on this thread, or null.
#[no_mangle]
pub extern "C" fn qgv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qgv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn names() -> &'static [CString] {
    static N: OnceLock<Vec<CString>> = OnceLock::new();
    N.get_or_init(|| IdentityId::ALL.iter().map(|id| CString::new(id.name()).unwrap()).collect())
}

#[no_mangle]
pub extern "C" fn qgv_identity_count() -> usize {
    IdentityId::ALL.len()
}

/// Catalog name at `index`, static; null when out of range.
#[no_mangle]
pub extern "C" fn qgv_identity_name(index: usize) -> *const c_char {
    names().get(index).map_or(ptr::null(), |c| c.as_ptr())
}

/// Evaluates one side of an exact entry and stores `"p/q"` in `*out`.
///
/// `side` is `"lhs"` or `"rhs"`. `s` is ignored for classical entries; `b`
/// and `c` are read only for `PHI65`, where `x` is `sqrt(a)`.
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qgv_eval_side(
    id: *const c_char,
    side: *const c_char,
    n: i64,
    ell: i64,
    k: i64,
    s: *const c_char,
    x: *const c_char,
    b: *const c_char,
    c: *const c_char,
    out: *mut *mut c_char,
) -> QgvStatus {
    guard(|| {
        let id = identity(id)?;
        let side: Side = text(side, "side")?.parse()?;
        if id.kind() == Kind::FloatOnly {
            return Err(Fault(QgvStatus::InvalidArgument, format!("{id} has no exact evaluation")));
        }
        let inst = Instance { n, ell: index(ell), k: index(k) };
        let point = match id.kind() {
            Kind::Classical => Point::Classical(rational(x, "x")?),
            _ => {
                let qp = QPoint::new(rational(s, "s")?, rational(x, "x")?)?;
                if id == IdentityId::Phi65 {
                    Point::Phi65 { point: qp, b: rational(b, "b")?, c: rational(c, "c")? }
                } else {
                    Point::Q(qp)
                }
            }
        };
        let v = eval_side(id, side, &inst, &point)?;
        write(out, owned(v.to_string()))
    })
}

/// Samples `trials` points for one instance and stores whether every trial
/// agreed in `*passed`.
///
/// # Safety
/// `id` must be null or nul-terminated; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qgv_verify_instance(
    id: *const c_char,
    n: i64,
    ell: i64,
    k: i64,
    trials: u32,
    seed: u64,
    passed: *mut bool,
) -> QgvStatus {
    guard(|| {
        let id = identity(id)?;
        let inst = Instance { n, ell: index(ell), k: index(k) };
        let r = verify_instance(id, &inst, trials, &SampleConfig::new(seed))?;
        if r.status == qgv_core::verifier::Status::Skipped {
            return Err(Fault(QgvStatus::Exhausted, r.detail.unwrap_or_default()));
        }
        write(passed, r.passed())
    })
}

/// The defaults used by the command line.
#[no_mangle]
pub extern "C" fn qgv_suite_options_default() -> QgvSuiteOptions {
    let d = SuiteOptions::default();
    QgvSuiteOptions {
        seed: d.sample.seed,
        n_max: d.n_max,
        ell_max: d.ell_max,
        trials: d.trials,
        bitsize: d.sample.bitsize,
        max_resample: d.sample.max_resample,
        precision: d.precision,
        certify: d.mode == Mode::Certify,
    }
}

/// Runs the suite over `ids[0..n_ids]`, or over everything when `n_ids` is
/// zero, and stores a new report handle in `*out`.
///
/// # Safety
/// `opts` must be valid; `ids` must hold `n_ids` valid strings; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn qgv_run_suite(
    opts: *const QgvSuiteOptions,
    ids: *const *const c_char,
    n_ids: usize,
    out: *mut *mut QgvReport,
) -> QgvStatus {
    guard(|| {
        let o = opts.as_ref().ok_or_else(|| Fault(QgvStatus::NullArgument, "opts is null".into()))?;
        let ids = if n_ids == 0 {
            None
        } else if ids.is_null() {
            return Err(Fault(QgvStatus::NullArgument, "ids is null".into()));
        } else {
            let raw = std::slice::from_raw_parts(ids, n_ids);
            Some(raw.iter().map(|p| identity(*p)).collect::<Result<Vec<_>, _>>()?)
        };
        if o.n_max < 0 || o.ell_max < 0 || o.trials == 0 || o.precision < 64 {
            return Err(Fault(QgvStatus::InvalidArgument, "options out of range".into()));
        }
        let sample = SampleConfig { seed: o.seed, bitsize: o.bitsize, max_resample: o.max_resample };
        sample.validate()?;
        let suite = SuiteOptions {
            sample,
            n_max: o.n_max,
            ell_max: o.ell_max,
            trials: o.trials,
            mode: if o.certify { Mode::Certify } else { Mode::Sample },
            precision: o.precision,
            ids,
            ..SuiteOptions::default()
        };
        let report = Box::new(QgvReport { inner: run_suite_with(&suite) });
        write(out, Box::into_raw(report))
    })
}

/// Copies the pass, fail and skipped counts out of a report.
///
/// # Safety
/// `report` must be a live handle; the counters must be writable.
#[no_mangle]
pub unsafe extern "C" fn qgv_report_summary(
    report: *const QgvReport,
    pass: *mut usize,
    fail: *mut usize,
    skipped: *mut usize,
) -> QgvStatus {
    guard(|| {
        let r = report.as_ref().ok_or_else(|| Fault(QgvStatus::NullArgument, "report is null".into()))?;
        let s = r.inner.summary;
        write(pass, s.pass)?;
        write(fail, s.fail)?;
        write(skipped, s.skipped)
    })
}

/// The report as JSON, caller-owned; null on a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qgv_report_to_json(report: *const QgvReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => owned(r.inner.to_json()),
        None => ptr::null_mut(),
    }
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must come from [`qgv_run_suite`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qgv_report_free(report: *mut QgvReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
