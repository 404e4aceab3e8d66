//! C interface to `absorb-core`.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Every fallible call returns an
//! [`AbsorbStatus`]; on failure the message is available from
//! [`absorb_last_error`] on the same thread. Strings returned through out
//! parameters are NUL-terminated JSON and must be released with
//! [`absorb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use absorb_core::classify::{classify_all, minimal_classical_2_absorbing, Predicate};
use absorb_core::export::classification_report;
use absorb_core::harness::{search_separating, verify, InstanceFamily, SuiteId};
use absorb_core::module::{Module, Submodule};
use absorb_core::ring::Ring;
use absorb_core::spec::{parse_module, parse_ring};
use absorb_core::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbsorbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    SizeLimit = 5,
    Improper = 6,
    Unsupported = 7,
    Mismatch = 8,
    OutOfRange = 9,
    Panic = 10,
}

/// A finite ring `Z_n1 x ... x Z_nk`.
pub struct AbsorbRing(Ring);

/// A finite module over an [`AbsorbRing`].
pub struct AbsorbModule(Module);

/// A submodule of an [`AbsorbModule`].
pub struct AbsorbSubmodule(Submodule);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AbsorbStatus {
    match e {
        Error::Parse(_) | Error::UnknownSuite(_) | Error::UnknownPredicate(_) => AbsorbStatus::Parse,
        Error::SizeLimit { .. } => AbsorbStatus::SizeLimit,
        Error::ImproperInput(_) => AbsorbStatus::Improper,
        Error::UnsupportedStructure(_) => AbsorbStatus::Unsupported,
        Error::RingMismatch | Error::ModuleMismatch => AbsorbStatus::Mismatch,
        _ => AbsorbStatus::InvalidInput,
    }
}

struct Fail(AbsorbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AbsorbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            AbsorbStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            AbsorbStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(AbsorbStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(AbsorbStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, value: &impl serde::Serialize) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    let s = serde_json::to_string(value).map_err(|e| Fail(AbsorbStatus::Panic, e.to_string()))?;
    *out = CString::new(s).expect("JSON has no NUL").into_raw();
    Ok(())
}

fn family(max_module: usize) -> InstanceFamily {
    let d = InstanceFamily::default();
    if max_module == 0 {
        d
    } else {
        InstanceFamily { max_module, ..d }
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn absorb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn absorb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Ring from its moduli, e.g. `{2, 3}` for `Z2 x Z3`.
///
/// # Safety
/// `moduli` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_ring_new(moduli: *const u32, len: usize, out: *mut *mut AbsorbRing) -> AbsorbStatus {
    guard(|| {
        if moduli.is_null() {
            return Err(null("moduli"));
        }
        let ring = Ring::new(std::slice::from_raw_parts(moduli, len))?;
        put(out, AbsorbRing(ring))
    })
}

/// Ring from text such as `Z8` or `Z2xZ3`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_ring_parse(spec: *const c_char, out: *mut *mut AbsorbRing) -> AbsorbStatus {
    guard(|| {
        let ring = parse_ring(text(spec, "spec")?)?;
        put(out, AbsorbRing(ring))
    })
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn absorb_ring_cardinality(ring: *const AbsorbRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.cardinality())
}

/// # Safety
/// `ring` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn absorb_ring_free(ring: *mut AbsorbRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// The ring as a module over itself.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_regular(ring: *const AbsorbRing, out: *mut *mut AbsorbModule) -> AbsorbStatus {
    guard(|| {
        let r = deref(ring, "ring")?;
        put(out, AbsorbModule(Module::regular(&r.0)))
    })
}

/// Module from cyclic orders on coordinate 0 (`"2,4"`) or module JSON.
/// `ring` may be null when the JSON names its ring.
///
/// # Safety
/// `ring` must be null or a live handle; `spec` must be a NUL-terminated
/// string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_parse(
    ring: *const AbsorbRing,
    spec: *const c_char,
    out: *mut *mut AbsorbModule,
) -> AbsorbStatus {
    guard(|| {
        let r = ring.as_ref().map(|r| &r.0);
        let m = parse_module(text(spec, "spec")?, r)?;
        put(out, AbsorbModule(m))
    })
}

/// # Safety
/// `module` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_cardinality(module: *const AbsorbModule) -> usize {
    module.as_ref().map_or(0, |m| m.0.cardinality())
}

/// Number of coordinates of a module element.
///
/// # Safety
/// `module` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_width(module: *const AbsorbModule) -> usize {
    module.as_ref().map_or(0, |m| m.0.coords(0).len())
}

/// # Safety
/// `module` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_free(module: *mut AbsorbModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Number of submodules, including zero and the whole module.
///
/// # Safety
/// `module` must be a live handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_submodule_count(module: *const AbsorbModule, count: *mut usize) -> AbsorbStatus {
    guard(|| {
        let m = deref(module, "module")?;
        let n = m.0.enumerate_submodules()?.len();
        if count.is_null() {
            return Err(null("count"));
        }
        *count = n;
        Ok(())
    })
}

/// Submodule `index` in lattice order (by size, then elements).
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_module_submodule_at(
    module: *const AbsorbModule,
    index: usize,
    out: *mut *mut AbsorbSubmodule,
) -> AbsorbStatus {
    guard(|| {
        let m = deref(module, "module")?;
        let subs = m.0.enumerate_submodules()?;
        let n = subs.get(index).cloned().ok_or_else(|| {
            Fail(AbsorbStatus::OutOfRange, format!("index {index} but only {} submodules", subs.len()))
        })?;
        put(out, AbsorbSubmodule(n))
    })
}

/// Submodule generated by `count` elements given as consecutive
/// coordinate tuples of length `absorb_module_width`.
///
/// # Safety
/// `coords` must point to `count * width` readable values (it may be null
/// when `count` is 0); `module` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_submodule_generated(
    module: *const AbsorbModule,
    coords: *const u32,
    count: usize,
    out: *mut *mut AbsorbSubmodule,
) -> AbsorbStatus {
    guard(|| {
        let m = &deref(module, "module")?.0;
        let width = m.coords(0).len();
        let flat: &[u32] = if count == 0 {
            &[]
        } else if coords.is_null() {
            return Err(null("coords"));
        } else {
            std::slice::from_raw_parts(coords, count * width)
        };
        let gens = flat
            .chunks(width.max(1))
            .map(|c| m.index_of(c))
            .collect::<Result<Vec<_>, _>>()?;
        put(out, AbsorbSubmodule(m.submodule_generated(&gens)?))
    })
}

/// # Safety
/// `sub` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn absorb_submodule_len(sub: *const AbsorbSubmodule) -> usize {
    sub.as_ref().map_or(0, |s| s.0.len())
}

/// Whether `sub` belongs to a class: `prime`, `classical-prime`, `2abs`,
/// `c2a`, or `<k>abs`. Fails with `Improper` on the whole module.
///
/// # Safety
/// `sub` must be a live handle; `predicate` a NUL-terminated string;
/// `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_submodule_is(
    sub: *const AbsorbSubmodule,
    predicate: *const c_char,
    holds: *mut bool,
) -> AbsorbStatus {
    guard(|| {
        let n = &deref(sub, "sub")?.0;
        let p: Predicate = text(predicate, "predicate")?.parse()?;
        let h = p.holds(n)?;
        if holds.is_null() {
            return Err(null("holds"));
        }
        *holds = h;
        Ok(())
    })
}

/// # Safety
/// `sub` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn absorb_submodule_free(sub: *mut AbsorbSubmodule) {
    if !sub.is_null() {
        drop(Box::from_raw(sub));
    }
}

/// Classification of every proper submodule, as the CLI's JSON report.
///
/// # Safety
/// `module` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_classify_json(module: *const AbsorbModule, out: *mut *mut c_char) -> AbsorbStatus {
    guard(|| {
        let m = &deref(module, "module")?.0;
        let records = classify_all(m)?;
        let minimal = minimal_classical_2_absorbing(m)?;
        put_json(out, &classification_report(m, &records, &minimal))
    })
}

/// Runs suites (comma-separated ids or `all`). `max_module` of 0 keeps the
/// default bound. `passed` receives the overall verdict.
///
/// # Safety
/// `suites` must be a NUL-terminated string; `out` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_verify_json(
    suites: *const c_char,
    max_module: usize,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> AbsorbStatus {
    guard(|| {
        let ids = SuiteId::parse_list(text(suites, "suites")?)?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        let report = verify(&ids, &family(max_module));
        *passed = report.passed;
        put_json(out, &report)
    })
}

/// First submodule in class `left` but not `right`. `found` is false when
/// the bounded family is exhausted.
///
/// # Safety
/// `left` and `right` must be NUL-terminated strings; `out` and `found`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn absorb_search_json(
    left: *const c_char,
    right: *const c_char,
    max_module: usize,
    out: *mut *mut c_char,
    found: *mut bool,
) -> AbsorbStatus {
    guard(|| {
        let l: Predicate = text(left, "left")?.parse()?;
        let r: Predicate = text(right, "right")?.parse()?;
        if found.is_null() {
            return Err(null("found"));
        }
        let outcome = search_separating(l, r, &family(max_module))?;
        *found = outcome.found().is_some();
        put_json(out, &outcome.to_json())
    })
}
