use std::ffi::{CStr, CString};
use std::ptr;

use lucas_pantograph_ffi::*;

struct Handle(*mut LpParams);

impl Handle {
    fn new(s: f64, t: f64) -> Handle {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { lp_params_new(s, t, &mut p) }, LpStatus::Ok);
        assert!(!p.is_null());
        Handle(p)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { lp_params_free(self.0) }
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(lp_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn sequences_through_the_handle() {
    let h = Handle::new(1.0, 1.0);
    let mut out = 0.0;
    let fib = [0.0, 1.0, 1.0, 2.0, 3.0, 5.0, 8.0, 13.0];
    for (n, want) in fib.iter().enumerate() {
        assert_eq!(unsafe { lp_lucas_u(h.0, n as u32, &mut out) }, LpStatus::Ok);
        assert_eq!(out, *want);
        assert_eq!(unsafe { lp_binet(h.0, n as u32, &mut out) }, LpStatus::Ok);
        assert!((out - want).abs() < 1e-12);
    }
    assert_eq!(unsafe { lp_lucas_v(h.0, 5, &mut out) }, LpStatus::Ok);
    assert_eq!(out, 11.0);
    assert_eq!(unsafe { lp_lucastorial(h.0, 5, &mut out) }, LpStatus::Ok);
    assert_eq!(out, 30.0);
    assert_eq!(unsafe { lp_lucasnomial(h.0, 6, 3, &mut out) }, LpStatus::Ok);
    assert_eq!(out, 60.0);
}

#[test]
fn bad_parameters_and_null_pointers() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { lp_params_new(0.0, 1.0, &mut p) }, LpStatus::Domain);
    assert!(p.is_null());
    assert!(!last_error().is_empty());
    let mut out = 0.0;
    assert_eq!(unsafe { lp_lucas_u(ptr::null(), 3, &mut out) }, LpStatus::NullPointer);
    let h = Handle::new(1.0, 1.0);
    assert_eq!(unsafe { lp_lucas_u(h.0, 3, ptr::null_mut()) }, LpStatus::NullPointer);
    assert_eq!(unsafe { lp_lucasnomial(h.0, 2, 3, &mut out) }, LpStatus::Domain);
    unsafe { lp_params_free(ptr::null_mut()) };
    unsafe { lp_string_free(ptr::null_mut()) };
}

#[test]
fn function_values() {
    let h = Handle::new(1.0, 1.0);
    let (mut out, mut terms) = (f64::NAN, 0usize);
    let cos = CString::new("cos").unwrap();
    assert_eq!(unsafe { lp_fn_value(h.0, cos.as_ptr(), 1.0, 0.0, 1e-12, &mut out, &mut terms) }, LpStatus::Ok);
    assert_eq!(out, 1.0);
    let cot = CString::new("cot").unwrap();
    assert_eq!(unsafe { lp_fn_value(h.0, cot.as_ptr(), 1.0, 0.0, 1e-12, &mut out, ptr::null_mut()) }, LpStatus::Domain);
    let bogus = CString::new("nope").unwrap();
    assert_eq!(
        unsafe { lp_fn_value(h.0, bogus.as_ptr(), 1.0, 0.5, 1e-12, &mut out, ptr::null_mut()) },
        LpStatus::InvalidArgument
    );
    assert!(last_error().contains("nope"));
}

#[test]
fn pi_u_and_integral() {
    let h = Handle::new(1.0, 1.0);
    let (mut root, mut residual) = (0.0, 1.0);
    assert_eq!(unsafe { lp_find_pi_u(h.0, 1.0, 10.0, &mut root, &mut residual) }, LpStatus::Ok);
    assert!(root > 1.5 && root < 1.6);
    assert!(residual < 1e-10);
    assert_eq!(unsafe { lp_find_pi_u(h.0, 1.0, 0.5, &mut root, ptr::null_mut()) }, LpStatus::NoRoot);

    let cube = [0.0, 0.0, 0.0, 1.0];
    let mut value = 0.0;
    let status = unsafe { lp_lucas_integral_poly(h.0, cube.as_ptr(), cube.len(), 0.0, 1.0, 1e-15, &mut value) };
    assert_eq!(status, LpStatus::Ok);
    assert!((value - 1.0 / 3.0).abs() < 1e-10);
    assert_eq!(
        unsafe { lp_lucas_integral_poly(h.0, ptr::null(), 0, 0.0, 1.0, 1e-15, &mut value) },
        LpStatus::InvalidArgument
    );
    let flat = Handle::new(1.0, -1.0);
    assert_eq!(
        unsafe { lp_lucas_integral_poly(flat.0, cube.as_ptr(), cube.len(), 0.0, 1.0, 1e-15, &mut value) },
        LpStatus::Domain
    );
}

#[test]
fn verify_report() {
    let sel = CString::new("pascal-1,pascal-2").unwrap();
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { lp_verify_json(sel.as_ptr(), 3, 8, 1, &mut json) }, LpStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { lp_string_free(json) };
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["identities"].as_array().unwrap().len(), 2);
    assert_eq!(report["failed"], 0);

    let bad = CString::new("nosuch").unwrap();
    assert_eq!(unsafe { lp_verify_json(bad.as_ptr(), 1, 8, 1, &mut json) }, LpStatus::UnknownIdentity);
    assert!(json.is_null());
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/lucas_pantograph.h");
    for name in [
        "lp_params_new",
        "lp_params_free",
        "lp_lucas_u",
        "lp_lucas_v",
        "lp_binet",
        "lp_lucastorial",
        "lp_lucasnomial",
        "lp_fn_value",
        "lp_find_pi_u",
        "lp_lucas_integral_poly",
        "lp_verify_json",
        "lp_string_free",
        "lp_last_error",
        "typedef struct LpParams LpParams;",
        "LP_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name} missing from the header");
    }
}
