use std::ffi::{CStr, CString};
use std::ptr;

use qgv_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn eval(id: &str, side: &str, n: i64, ell: i64, s: &str, x: &str) -> (QgvStatus, Option<String>) {
    let (id, side, s, x) = (c(id), c(side), c(s), c(x));
    let mut out = ptr::null_mut();
    let st = qgv_eval_side(
        id.as_ptr(),
        side.as_ptr(),
        n,
        ell,
        QGV_NO_INDEX,
        s.as_ptr(),
        x.as_ptr(),
        ptr::null(),
        ptr::null(),
        &mut out,
    );
    if out.is_null() {
        return (st, None);
    }
    let v = CStr::from_ptr(out).to_str().unwrap().to_owned();
    qgv_string_free(out);
    (st, Some(v))
}

fn last_error() -> String {
    let p = qgv_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn catalog_is_exposed() {
    assert_eq!(qgv_identity_count(), 31);
    let first = unsafe { CStr::from_ptr(qgv_identity_name(0)) };
    assert_eq!(first.to_str().unwrap(), "GOSPER_1");
    assert!(qgv_identity_name(31).is_null());
    let v = unsafe { CStr::from_ptr(qgv_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn both_sides_agree_through_the_boundary() {
    unsafe {
        let l = eval("THM1", "lhs", 2, 1, "2/7", "3/11");
        let r = eval("THM1", "rhs", 2, 1, "2/7", "3/11");
        assert_eq!(l.0, QgvStatus::Ok);
        assert_eq!(l.1, r.1);
        assert_eq!(eval("QGOSPER_1", "lhs", 0, QGV_NO_INDEX, "1/2", "3/5").1.as_deref(), Some("1/1"));
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let (st, out) = eval("THM1", "rhs", 1, 1, "1/2", "1/2");
        assert_eq!(st, QgvStatus::Pole);
        assert!(out.is_none());
        assert!(last_error().contains("pole"));

        assert_eq!(eval("NOPE", "lhs", 0, QGV_NO_INDEX, "1/2", "1/3").0, QgvStatus::InvalidArgument);
        assert_eq!(eval("THM1", "lhs", 1, QGV_NO_INDEX, "1/2", "1/3").0, QgvStatus::InvalidArgument);
        assert_eq!(eval("THM1", "lhs", 1, 1, "one half", "1/3").0, QgvStatus::InvalidArgument);

        let mut out = ptr::null_mut();
        let st = qgv_eval_side(
            ptr::null(),
            ptr::null(),
            0,
            QGV_NO_INDEX,
            QGV_NO_INDEX,
            ptr::null(),
            ptr::null(),
            ptr::null(),
            ptr::null(),
            &mut out,
        );
        assert_eq!(st, QgvStatus::NullArgument);
    }
}

#[test]
fn success_clears_the_last_error() {
    unsafe {
        eval("NOPE", "lhs", 0, QGV_NO_INDEX, "1/2", "1/3");
        assert!(!qgv_last_error().is_null());
        eval("GOSPER_1", "lhs", 1, QGV_NO_INDEX, "1/2", "5/13");
        assert!(qgv_last_error().is_null());
    }
}

#[test]
fn verify_instance_reports_pass() {
    let id = c("QGOSPER_2");
    let mut passed = false;
    let st = unsafe { qgv_verify_instance(id.as_ptr(), 3, QGV_NO_INDEX, QGV_NO_INDEX, 5, 0, &mut passed) };
    assert_eq!(st, QgvStatus::Ok);
    assert!(passed);
}

#[test]
fn report_handle_round_trip() {
    let ids = [c("GOSPER_2"), c("REL6")];
    let ptrs: Vec<_> = ids.iter().map(|s| s.as_ptr()).collect();
    let mut opts = qgv_suite_options_default();
    opts.n_max = 2;
    opts.ell_max = 2;
    opts.trials = 3;
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(qgv_run_suite(&opts, ptrs.as_ptr(), ptrs.len(), &mut report), QgvStatus::Ok);
        let (mut p, mut f, mut s) = (0, 0, 0);
        assert_eq!(qgv_report_summary(report, &mut p, &mut f, &mut s), QgvStatus::Ok);
        assert_eq!((f, s), (0, 0));
        assert!(p > 0);

        let json = qgv_report_to_json(report);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        qgv_string_free(json);
        assert_eq!(v["summary"]["pass"].as_u64(), Some(p as u64));
        assert_eq!(v["seed"].as_u64(), Some(0));
        qgv_report_free(report);

        let bad = [c("BOGUS")];
        let bp = [bad[0].as_ptr()];
        let mut r2 = ptr::null_mut();
        assert_eq!(qgv_run_suite(&opts, bp.as_ptr(), 1, &mut r2), QgvStatus::InvalidArgument);
        assert!(r2.is_null());
        assert!(qgv_report_to_json(ptr::null()).is_null());
        qgv_report_free(ptr::null_mut());
    }
}

#[test]
fn default_options_match_the_command_line() {
    let o = qgv_suite_options_default();
    assert_eq!((o.seed, o.n_max, o.ell_max, o.trials, o.bitsize), (0, 6, 4, 20, 16));
    assert!(!o.certify);
}
