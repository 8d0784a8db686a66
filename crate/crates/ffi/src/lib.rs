//! C interface to zhouval.
//!
//! Every entry point returns a [`ZvStatus`]. On failure a description is
//! available from [`zv_last_error_message`] until the next call on the same
//! thread. Strings written to `out` parameters belong to the caller and are
//! released with [`zv_string_free`]; weights with [`zv_weight_free`].
//! Panics never cross the boundary; they surface as `ZV_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zhouval::cli::{execute_text, parse_args, CliError};
use zhouval::poly::{context, Polynomial};
use zhouval::rational::{parse_q, ExtQ, Q};
use zhouval::trop::{jumping_number, relative_type, weight_relative_type, AnalyticWeight, Generator, TropError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed expressions, rationals, weights or problem files.
    InvalidInput = 3,
    /// Well-formed input outside the supported class.
    Unsupported = 4,
    /// A numeric run ran out of samples or could not decide.
    BudgetExhausted = 5,
    Internal = 6,
    Panic = 7,
}

/// Opaque weight `scale * log(sum_j |f_j|^(1/a_j))`.
pub struct ZvWeight {
    inner: AnalyticWeight,
}

struct Failure(ZvStatus, String);

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        let status = match e.exit_code() {
            2 => ZvStatus::InvalidInput,
            3 => ZvStatus::Unsupported,
            4 => ZvStatus::BudgetExhausted,
            _ => ZvStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

impl From<TropError> for Failure {
    fn from(e: TropError) -> Self {
        CliError::from(e).into()
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ZvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZvStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            ZvStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(ZvStatus::NullPointer, format!("`{name}` is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(ZvStatus::InvalidUtf8, format!("`{name}` is not UTF-8")))
}

unsafe fn optional_q(p: *const c_char, name: &str) -> Result<Q, Failure> {
    if p.is_null() {
        return Ok(Q::from_integer(1.into()));
    }
    let s = text(p, name)?;
    parse_q(s).ok_or_else(|| Failure(ZvStatus::InvalidInput, format!("`{name}` = `{s}` is not a rational")))
}

unsafe fn weight<'a>(p: *const ZvWeight, name: &str) -> Result<&'a AnalyticWeight, Failure> {
    p.as_ref().map(|w| &w.inner).ok_or_else(|| Failure(ZvStatus::NullPointer, format!("`{name}` is null")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(ZvStatus::NullPointer, "`out` is null".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(ZvStatus::Internal, "result contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn ext_string(v: &ExtQ) -> String {
    v.to_report_string()
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn zv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn zv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned through an `out` parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn zv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a weight in the comma-separated variables `vars`.
///
/// `generators` holds `count` polynomial expressions. `exponents` may be
/// null, and so may each entry and `scale`; a missing value means 1.
///
/// # Safety
/// String arguments must be null or nul-terminated; `generators` (and
/// `exponents` when given) must point to `count` entries.
#[no_mangle]
pub unsafe extern "C" fn zv_weight_new(
    vars: *const c_char,
    scale: *const c_char,
    generators: *const *const c_char,
    exponents: *const *const c_char,
    count: usize,
    out: *mut *mut ZvWeight,
) -> ZvStatus {
    guard(|| {
        if out.is_null() || generators.is_null() {
            return Err(Failure(ZvStatus::NullPointer, "`out` or `generators` is null".into()));
        }
        let names: Vec<&str> = text(vars, "vars")?.split(',').map(str::trim).collect();
        let ctx = context(&names);
        let mut gens = Vec::with_capacity(count);
        for i in 0..count {
            let expr = text(*generators.add(i), "generators[i]")?;
            let poly = Polynomial::parse_in(&ctx, expr).map_err(|e| Failure(ZvStatus::InvalidInput, e.to_string()))?;
            let a = if exponents.is_null() { optional_q(ptr::null(), "")? } else { optional_q(*exponents.add(i), "exponents[i]")? };
            gens.push(Generator { poly, a });
        }
        let inner = AnalyticWeight::new(optional_q(scale, "scale")?, gens)?;
        *out = Box::into_raw(Box::new(ZvWeight { inner }));
        Ok(())
    })
}

/// Releases a weight. Null is ignored.
///
/// # Safety
/// `w` must come from [`zv_weight_new`] and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn zv_weight_free(w: *mut ZvWeight) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of variables of a weight.
///
/// # Safety
/// `w` must be a live weight and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zv_weight_dim(w: *const ZvWeight, out: *mut usize) -> ZvStatus {
    guard(|| {
        let w = weight(w, "w")?;
        let out = out.as_mut().ok_or_else(|| Failure(ZvStatus::NullPointer, "`out` is null".into()))?;
        *out = w.dim();
        Ok(())
    })
}

/// Relative type of `log|g|` against `phi`, as `"p/q"` or `"inf"`.
///
/// # Safety
/// `phi` must be a live weight, `g` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zv_relative_type(phi: *const ZvWeight, g: *const c_char, out: *mut *mut c_char) -> ZvStatus {
    guard(|| {
        let phi = weight(phi, "phi")?;
        let g = Polynomial::parse_in(phi.context(), text(g, "g")?).map_err(|e| Failure(ZvStatus::InvalidInput, e.to_string()))?;
        write_string(out, ext_string(&relative_type(&g, phi)?.value))
    })
}

/// Relative type of the weight `psi` against `phi`.
///
/// # Safety
/// Both weights must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zv_weight_relative_type(
    psi: *const ZvWeight,
    phi: *const ZvWeight,
    out: *mut *mut c_char,
) -> ZvStatus {
    guard(|| {
        let v = weight_relative_type(weight(psi, "psi")?, weight(phi, "phi")?)?;
        write_string(out, ext_string(&v))
    })
}

/// Jumping number of `phi` with multiplier `g` (pass `"1"` for the
/// plain threshold).
///
/// # Safety
/// `phi` must be a live weight, `g` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zv_jumping_number(phi: *const ZvWeight, g: *const c_char, out: *mut *mut c_char) -> ZvStatus {
    guard(|| {
        let phi = weight(phi, "phi")?;
        let g = Polynomial::parse_in(phi.context(), text(g, "g")?).map_err(|e| Failure(ZvStatus::InvalidInput, e.to_string()))?;
        write_string(out, zhouval::rational::fmt_q(&jumping_number(phi, &g)?))
    })
}

/// Runs a command-line subcommand (`"sigma"`, `"lct"`, `"interpolate"`, ...)
/// on an in-memory problem file and returns the JSON report. `seed` may be
/// null.
///
/// # Safety
/// `command` and `problem_json` must be nul-terminated, `seed` null or
/// readable, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zv_run(
    command: *const c_char,
    problem_json: *const c_char,
    seed: *const u64,
    out: *mut *mut c_char,
) -> ZvStatus {
    guard(|| {
        let command = text(command, "command")?;
        let problem = text(problem_json, "problem_json")?;
        let mut argv = vec!["zhouval".to_string(), command.to_string(), "<memory>".into(), "--format".into(), "json".into()];
        if let Some(s) = seed.as_ref() {
            argv.extend(["--seed".into(), s.to_string()]);
        }
        let args = parse_args(argv)?;
        let report = execute_text(&args, problem, "<memory>")?;
        let mut buf = Vec::new();
        report.write_json(&mut buf).map_err(|e| Failure(ZvStatus::Internal, e.to_string()))?;
        write_string(out, String::from_utf8(buf).map_err(|e| Failure(ZvStatus::Internal, e.to_string()))?)
    })
}
