//! C ABI over the slopelab engine.
//!
//! Slope types cross the boundary as opaque `SlSlopeType` handles owned by
//! the caller and released with [`sl_slope_type_free`]. Every fallible call
//! returns an [`SlStatus`]; on failure the message is available from
//! [`sl_last_error`] on the same thread. Strings returned through `char **`
//! out-parameters are owned by the caller and released with
//! [`sl_string_free`]. Panics never unwind into C; they surface as
//! `SL_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::Value;
use slopelab::cli::{report, spec::parse_slopes};
use slopelab::{
    classify, wa_exists, BadWitness, ExtCount, FilteredType, MinusculeHodge, PatternKind,
    SlopeError, SlopeType,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = -1,
    Parse = -2,
    Domain = -3,
    Internal = -4,
    Panic = -5,
    Overflow = -6,
}

/// Opaque slope type.
pub struct SlSlopeType(SlopeType);

/// Which side of the classification a verdict landed on, and the shape found.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlVerdictKind {
    PatternA = 1,
    PatternB = 2,
    PatternC = 3,
    WitnessT1 = 11,
    WitnessT2 = 12,
    WitnessT3 = 13,
    WitnessT4 = 14,
    WitnessT5 = 15,
}

/// Flattened classification result.
///
/// For patterns `params` is `{h1, h, h0}`; for witnesses it holds the family
/// parameters (`{c, h}` or `{h1, h2}`) padded with zeros.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlVerdict {
    pub equal: bool,
    pub kind: SlVerdictKind,
    pub params: [u64; 3],
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', "?")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SlStatus, msg: impl Into<String>) -> SlStatus {
    set_error(msg.into());
    status
}

fn from_error(e: SlopeError) -> SlStatus {
    let status = match e {
        SlopeError::Parse { .. } => SlStatus::Parse,
        SlopeError::Domain(_) => SlStatus::Domain,
        SlopeError::Overflow(_) => SlStatus::Overflow,
        SlopeError::Internal(_) => SlStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), SlStatus>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SlStatus::Ok,
        Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(SlStatus::Panic, msg)
        }
    }
}

unsafe fn handle<'a>(p: *const SlSlopeType) -> Result<&'a SlopeType, SlStatus> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(SlStatus::NullPointer, "null slope type handle"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, SlStatus> {
    p.as_mut()
        .ok_or_else(|| fail(SlStatus::NullPointer, "null output pointer"))
}

fn boxed(t: SlopeType) -> *mut SlSlopeType {
    Box::into_raw(Box::new(SlSlopeType(t)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("engine output has no nul bytes")
        .into_raw()
}

fn generic(iso: &SlopeType, h: i64, f: u64) -> Result<FilteredType, SlStatus> {
    FilteredType::generic(iso.clone(), h, f).map_err(from_error)
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a slope specification such as `"-1/2^2,1/3^3"`.
///
/// # Safety
/// `spec` must be NUL-terminated; `out_handle` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_parse(
    spec: *const c_char,
    out_handle: *mut *mut SlSlopeType,
) -> SlStatus {
    guard(|| {
        let out_handle = out(out_handle)?;
        if spec.is_null() {
            return Err(fail(SlStatus::NullPointer, "null spec"));
        }
        let text = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| fail(SlStatus::Parse, "spec is not UTF-8"))?;
        *out_handle = boxed(parse_slopes(text).map_err(from_error)?);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `t` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_free(t: *mut SlSlopeType) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_rank(t: *const SlSlopeType, rank: *mut u64) -> SlStatus {
    guard(|| {
        *out(rank)? = handle(t)?.rank();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_degree(t: *const SlSlopeType, degree: *mut i64) -> SlStatus {
    guard(|| {
        *out(degree)? = handle(t)?.degree();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_tensor(
    a: *const SlSlopeType,
    b: *const SlSlopeType,
    result: *mut *mut SlSlopeType,
) -> SlStatus {
    guard(|| {
        let r = out(result)?;
        *r = boxed(handle(a)?.tensor(handle(b)?));
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_dual(
    t: *const SlSlopeType,
    result: *mut *mut SlSlopeType,
) -> SlStatus {
    guard(|| {
        let r = out(result)?;
        *r = boxed(handle(t)?.dual());
        Ok(())
    })
}

/// Canonical specification string, e.g. `"-1/2^2,1/3^3"`.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_to_spec(
    t: *const SlSlopeType,
    spec: *mut *mut c_char,
) -> SlStatus {
    guard(|| {
        let s = out(spec)?;
        *s = c_string(handle(t)?.to_spec());
        Ok(())
    })
}

/// Compact JSON with the same shape as the CLI's slope type objects.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_slope_type_to_json(
    t: *const SlSlopeType,
    json: *mut *mut c_char,
) -> SlStatus {
    guard(|| {
        let s = out(json)?;
        *s = c_string(report::slope_type(handle(t)?).to_string());
        Ok(())
    })
}

/// `dim Hom(a, b)`; `*infinite` is set when the dimension is infinite, in
/// which case `*dim` is 0.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_hom_dim(
    a: *const SlSlopeType,
    b: *const SlSlopeType,
    dim: *mut u64,
    infinite: *mut bool,
) -> SlStatus {
    guard(|| {
        let (dim, infinite) = (out(dim)?, out(infinite)?);
        match handle(a)?.hom_dim(handle(b)?) {
            ExtCount::Finite(k) => (*dim, *infinite) = (k, false),
            ExtCount::Infinity => (*dim, *infinite) = (0, true),
        }
        Ok(())
    })
}

/// Classifies slope data in `[0,1]`. Fails with `SL_STATUS_DOMAIN` outside it.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_classify(t: *const SlSlopeType, verdict: *mut SlVerdict) -> SlStatus {
    guard(|| {
        let verdict = out(verdict)?;
        let v = classify(handle(t)?).map_err(from_error)?;
        let (kind, params) = match (v.pattern, v.witness) {
            (Some(p), _) => {
                let kind = match p.kind {
                    PatternKind::A => SlVerdictKind::PatternA,
                    PatternKind::B => SlVerdictKind::PatternB,
                    PatternKind::C => SlVerdictKind::PatternC,
                };
                (kind, [p.h1, p.h, p.h0])
            }
            (None, Some(w)) => {
                let kind = match w {
                    BadWitness::T1 { .. } => SlVerdictKind::WitnessT1,
                    BadWitness::T2 { .. } => SlVerdictKind::WitnessT2,
                    BadWitness::T3 { .. } => SlVerdictKind::WitnessT3,
                    BadWitness::T4 { .. } => SlVerdictKind::WitnessT4,
                    BadWitness::T5 => SlVerdictKind::WitnessT5,
                };
                let mut params = [0; 3];
                for (slot, p) in params.iter_mut().zip(w.params()) {
                    *slot = p;
                }
                (kind, params)
            }
            (None, None) => {
                return Err(fail(
                    SlStatus::Internal,
                    "verdict without pattern or witness",
                ))
            }
        };
        *verdict = SlVerdict {
            equal: v.equal,
            kind,
            params,
        };
        Ok(())
    })
}

/// Weak admissibility of the generic filtration with Hodge datum `(h, f)`.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_wa_generic(
    t: *const SlSlopeType,
    h: i64,
    f: u64,
    result: *mut bool,
) -> SlStatus {
    guard(|| {
        let result = out(result)?;
        *result = generic(handle(t)?, h, f)?
            .is_weakly_admissible()
            .map_err(from_error)?;
        Ok(())
    })
}

/// Whether any weakly admissible filtration with Hodge datum `(h, f)` exists.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_wa_exists(
    t: *const SlSlopeType,
    h: i64,
    f: u64,
    result: *mut bool,
) -> SlStatus {
    guard(|| {
        let result = out(result)?;
        let iso = handle(t)?;
        let hodge = MinusculeHodge::new(h, f, iso.rank()).map_err(from_error)?;
        *result = wa_exists(iso, hodge).map_err(from_error)?;
        Ok(())
    })
}

/// Candidate slope types of the lattice module as a JSON array, in the same
/// order and shape as `slopelab enumerate`.
///
/// # Safety
/// Pointers must be valid or NULL.
#[no_mangle]
pub unsafe extern "C" fn sl_enumerate_candidates(
    t: *const SlSlopeType,
    h: i64,
    f: u64,
    json: *mut *mut c_char,
) -> SlStatus {
    guard(|| {
        let json = out(json)?;
        let cands = generic(handle(t)?, h, f)?
            .enumerate_m_candidates()
            .map_err(from_error)?;
        *json = c_string(Value::Array(cands.iter().map(report::slope_type).collect()).to_string());
        Ok(())
    })
}
