//! C ABI over the float backend of `lucas-pantograph`.
//!
//! Every entry point returns an [`LpStatus`]; results go through out
//! pointers. On failure a message is kept per thread and can be read with
//! [`lp_last_error`]. Strings returned by the library must be released with
//! [`lp_string_free`], handles with [`lp_params_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lucas_pantograph::calculus::{lucas_integral, Polynomial};
use lucas_pantograph::functions::{find_pi_u, fn_value, FnKind, PiUOptions};
use lucas_pantograph::harness::{self, SuiteConfig};
use lucas_pantograph::lucas::{binet, lucas_u, lucas_v, lucasnomial, lucastorial, LucasParams, SeqCache};
use lucas_pantograph::Error;

/// Status codes shared by all functions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Parameters outside the domain of the operation (zero s or t,
    /// vanishing factors, poles, non-contracting integral nodes).
    Domain = 3,
    /// The adaptive series or the integral did not converge.
    Diverged = 4,
    NoRoot = 5,
    UnknownIdentity = 6,
    /// The suite ran but some identity failed; the report is still returned.
    VerifyFailed = 7,
    Panic = 8,
}

/// Opaque handle to a Lucas parameter pair `(s, t)` and its sequence cache.
pub struct LpParams {
    cache: SeqCache<f64>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> LpStatus {
    match e {
        Error::InvalidArgument(_) => LpStatus::InvalidArgument,
        Error::SeriesDiverging { .. } | Error::NonConvergent { .. } => LpStatus::Diverged,
        Error::NoRootFound { .. } => LpStatus::NoRoot,
        Error::UnknownIdentityId(_) => LpStatus::UnknownIdentity,
        _ => LpStatus::Domain,
    }
}

fn fail(status: LpStatus, message: &str) -> LpStatus {
    set_error(message);
    status
}

/// Run `body`, turning errors and panics into status codes.
fn guarded(body: impl FnOnce() -> Result<(), LpStatus>) -> LpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LpStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(LpStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: lucas_pantograph::Result<T>) -> Result<T, LpStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

unsafe fn params_ref<'a>(p: *const LpParams) -> Result<&'a LpParams, LpStatus> {
    p.as_ref().ok_or_else(|| fail(LpStatus::NullPointer, "null params handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), LpStatus> {
    if out.is_null() {
        return Err(fail(LpStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, LpStatus> {
    if s.is_null() {
        return Err(fail(LpStatus::NullPointer, &format!("null {what}")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(LpStatus::InvalidArgument, &format!("{what} is not UTF-8")))
}

/// Create a handle for `(s, t)`; both must be non-zero.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn lp_params_new(s: f64, t: f64, out: *mut *mut LpParams) -> LpStatus {
    guarded(|| {
        if out.is_null() {
            return Err(fail(LpStatus::NullPointer, "null output pointer"));
        }
        out.write(ptr::null_mut());
        let params = lift(LucasParams::new(s, t))?;
        let handle = Box::new(LpParams {
            cache: SeqCache::new(params),
        });
        out.write(Box::into_raw(handle));
        Ok(())
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `p` must come from [`lp_params_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_params_free(p: *mut LpParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `{n}` by the recurrence.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_lucas_u(p: *const LpParams, n: u32, out: *mut f64) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        write(out, lucas_u(n as usize, p.cache.params()))
    })
}

/// `<n>` by the recurrence.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_lucas_v(p: *const LpParams, n: u32, out: *mut f64) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        write(out, lucas_v(n as usize, p.cache.params()))
    })
}

/// `{n}` by the closed form.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_binet(p: *const LpParams, n: u32, out: *mut f64) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        write(out, lift(binet(n as usize, p.cache.params()))?)
    })
}

/// `{n}!`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_lucastorial(p: *const LpParams, n: u32, out: *mut f64) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        write(out, lift(lucastorial(n as usize, p.cache.params()))?)
    })
}

/// `{n choose k}`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_lucasnomial(p: *const LpParams, n: u32, k: u32, out: *mut f64) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        write(out, lift(lucasnomial(n as usize, k as usize, p.cache.params()))?)
    })
}

/// `kind(x, u)` where `kind` is one of `exp sin cos tan cot sec csc sinh
/// cosh tanh coth sech csch`. `terms` may be null.
///
/// # Safety
/// `p` must be a live handle, `kind` a NUL-terminated string, `out` valid
/// for writes and `terms` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_fn_value(
    p: *const LpParams,
    kind: *const c_char,
    u: f64,
    x: f64,
    eps: f64,
    out: *mut f64,
    terms: *mut usize,
) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        let kind: FnKind = lift(text(kind, "function name")?.parse())?;
        let e = lift(fn_value(kind, x, u, &p.cache, eps))?;
        write(out, e.value)?;
        if !terms.is_null() {
            terms.write(e.terms);
        }
        Ok(())
    })
}

/// First positive zero of `sin(x, u)` in `(0, x_max]`, with `|sin|` at it.
/// `residual` may be null.
///
/// # Safety
/// `p` must be a live handle, `out` valid for writes and `residual` null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_find_pi_u(
    p: *const LpParams,
    u: f64,
    x_max: f64,
    out: *mut f64,
    residual: *mut f64,
) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        let opts = PiUOptions {
            x_max,
            ..PiUOptions::default()
        };
        let root = lift(find_pi_u(&p.cache, u, &opts))?;
        write(out, root.value)?;
        if !residual.is_null() {
            residual.write(root.residual);
        }
        Ok(())
    })
}

/// Lucas integral over `[a, b]` of the polynomial with `len` coefficients,
/// constant first.
///
/// # Safety
/// `p` must be a live handle, `coeffs` valid for `len` reads and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lp_lucas_integral_poly(
    p: *const LpParams,
    coeffs: *const f64,
    len: usize,
    a: f64,
    b: f64,
    eps: f64,
    out: *mut f64,
) -> LpStatus {
    guarded(|| {
        let p = params_ref(p)?;
        if coeffs.is_null() || len == 0 {
            return Err(fail(LpStatus::InvalidArgument, "empty coefficient list"));
        }
        let poly = Polynomial::new(std::slice::from_raw_parts(coeffs, len).to_vec());
        write(out, lift(lucas_integral(&poly, a, b, p.cache.params(), eps))?)
    })
}

/// Run the identity suite on `selection` (`all`, a group, an id, or a
/// comma-separated list) and return the JSON report in `out_json`.
/// Returns [`LpStatus::VerifyFailed`] with a report when an identity fails.
///
/// # Safety
/// `selection` must be a NUL-terminated string and `out_json` valid for
/// writes. The returned string must be released with [`lp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lp_verify_json(
    selection: *const c_char,
    trials: usize,
    order: usize,
    seed: u64,
    out_json: *mut *mut c_char,
) -> LpStatus {
    let mut failed = false;
    let status = guarded(|| {
        if out_json.is_null() {
            return Err(fail(LpStatus::NullPointer, "null output pointer"));
        }
        out_json.write(ptr::null_mut());
        let selection: Vec<&str> = text(selection, "selection")?.split(',').map(str::trim).collect();
        let records = lift(harness::select_many(&selection))?;
        let report = harness::run_records(&records, &SuiteConfig { trials, order, seed });
        failed = !report.all_ok();
        let json = serde_json::to_string(&report).map_err(|e| fail(LpStatus::Panic, &e.to_string()))?;
        let json = CString::new(json).map_err(|_| fail(LpStatus::Panic, "report contains NUL"))?;
        out_json.write(json.into_raw());
        Ok(())
    });
    if status == LpStatus::Ok && failed {
        return fail(LpStatus::VerifyFailed, "some identities failed");
    }
    status
}

/// Release a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
