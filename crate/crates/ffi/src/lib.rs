//! C interface to `kneser_core`.
//!
//! Every fallible function returns a [`KneserStatus`]; on failure a message is
//! available from [`kneser_last_error`] until the next call on the same
//! thread. Complexes are opaque handles released with [`kneser_complex_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kneser_core::bounds::{bigdim_bound, connectivity_bound, smalldim_bound};
use kneser_core::generators::{build_certificate, CertificateOptions};
use kneser_core::{betti_numbers, Error, FlagComplex, HomologyOptions, PrimeField};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KneserStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    ResourceCap = 3,
    UnsupportedOrder = 4,
    CertificateInvalid = 5,
    Overflow = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque flag complex `VR(F_n^{[m]}; r)`.
pub struct KneserComplex {
    inner: FlagComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> KneserStatus {
    set_error(&e.to_string());
    match e {
        Error::InvalidInput(_) => KneserStatus::InvalidInput,
        Error::ResourceCap { .. } => KneserStatus::ResourceCap,
        Error::UnsupportedOrder(_) => KneserStatus::UnsupportedOrder,
        Error::CertificateInvalid { .. } => KneserStatus::CertificateInvalid,
        Error::Overflow(_) => KneserStatus::Overflow,
    }
}

fn guard<F: FnOnce() -> KneserStatus>(f: F) -> KneserStatus {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        KneserStatus::Panic
    })
}

fn null() -> KneserStatus {
    set_error("null pointer argument");
    KneserStatus::NullPointer
}

fn to_u64(v: u128) -> Result<u64, KneserStatus> {
    u64::try_from(v).map_err(|_| {
        set_error("value does not fit in 64 bits");
        KneserStatus::Overflow
    })
}

/// Message for the most recent failure on this thread; empty after success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn kneser_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build `VR(F_n^{[m]}; scale)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_new(n: u32, m: u32, scale: u32, out: *mut *mut KneserComplex) -> KneserStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match FlagComplex::full(n, m, scale) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(KneserComplex { inner }));
                KneserStatus::Ok
            }
            Err(e) => {
                *out = ptr::null_mut();
                status_of(&e)
            }
        }
    })
}

/// Build `Ind(KG(n, k)) = VR(F_n^{[2n+k]}; 2(n-1))`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_new_kneser(n: u32, k: u32, out: *mut *mut KneserComplex) -> KneserStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match FlagComplex::kneser_independence(n, k) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(KneserComplex { inner }));
                KneserStatus::Ok
            }
            Err(e) => {
                *out = ptr::null_mut();
                status_of(&e)
            }
        }
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `c` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_free(c: *mut KneserComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_vertex_count(c: *const KneserComplex) -> usize {
    c.as_ref().map_or(0, |c| c.inner.vertex_count())
}

/// Number of simplices of dimension `dim`.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_count_simplices(c: *const KneserComplex, dim: usize, out: *mut u64) -> KneserStatus {
    guard(|| {
        let (Some(c), false) = (c.as_ref(), out.is_null()) else {
            return null();
        };
        *out = c.inner.count_simplices(dim);
        KneserStatus::Ok
    })
}

/// Reduced Betti numbers `b_0 ..= b_max_dim` over `GF(p)` written to
/// `out[0..=max_dim]`. `max_simplices = 0` selects the default cap.
///
/// # Safety
/// `c` must be a live handle; `out` must point to `out_len` writable `u64`s.
#[no_mangle]
pub unsafe extern "C" fn kneser_complex_betti(
    c: *const KneserComplex,
    p: u32,
    max_dim: usize,
    max_simplices: u64,
    out: *mut u64,
    out_len: usize,
) -> KneserStatus {
    guard(|| {
        let (Some(c), false) = (c.as_ref(), out.is_null()) else {
            return null();
        };
        if out_len <= max_dim {
            set_error("output buffer shorter than max_dim + 1");
            return KneserStatus::BufferTooSmall;
        }
        let field = match PrimeField::new(p) {
            Ok(f) => f,
            Err(e) => return status_of(&e),
        };
        let mut opts = HomologyOptions::with_field(field);
        if max_simplices > 0 {
            opts.max_simplices = max_simplices;
        }
        match betti_numbers(&c.inner, max_dim, &opts) {
            Ok(r) => {
                let dst = std::slice::from_raw_parts_mut(out, max_dim + 1);
                for (d, slot) in dst.iter_mut().enumerate() {
                    *slot = r.get(d);
                }
                KneserStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// `C(2n+k, 2n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kneser_bigdim_bound(n: u32, k: u32, out: *mut u64) -> KneserStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match bigdim_bound(n, k).map_err(|e| status_of(&e)).and_then(to_u64) {
            Ok(v) => {
                *out = v;
                KneserStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// `base · Σ_{i=ℓ}^{m} C(i-2, ℓ-2)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kneser_smalldim_bound(l: u32, base: u64, m: u32, out: *mut u64) -> KneserStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match smalldim_bound(l, u128::from(base), m)
            .map_err(|e| status_of(&e))
            .and_then(to_u64)
        {
            Ok(v) => {
                *out = v;
                KneserStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Connectivity bound for `Ind(KG(n, k))` and the total-domination lower
/// bound `gamma_num / gamma_den` in lowest terms.
///
/// # Safety
/// All output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn kneser_connectivity_bound(
    n: u32,
    k: u32,
    conn: *mut i64,
    gamma_num: *mut u64,
    gamma_den: *mut u64,
) -> KneserStatus {
    guard(|| {
        if conn.is_null() || gamma_num.is_null() || gamma_den.is_null() {
            return null();
        }
        let b = match connectivity_bound(n, k) {
            Ok(b) => b,
            Err(e) => return status_of(&e),
        };
        let (Ok(num), Ok(den), Ok(c)) = (
            to_u64(*b.gamma_lb.numer()),
            to_u64(*b.gamma_lb.denom()),
            i64::try_from(b.conn),
        ) else {
            set_error("value does not fit in 64 bits");
            return KneserStatus::Overflow;
        };
        *conn = c;
        *gamma_num = num;
        *gamma_den = den;
        KneserStatus::Ok
    })
}

/// Build and check the rank certificate for `VR(F_n^{[m]}; 2(n-1))`; on
/// success `rank` receives the certified number of independent classes.
///
/// # Safety
/// `rank` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kneser_certificate_rank(n: u32, m: u32, p: u32, rank: *mut u64) -> KneserStatus {
    guard(|| {
        if rank.is_null() {
            return null();
        }
        let field = match PrimeField::new(p) {
            Ok(f) => f,
            Err(e) => return status_of(&e),
        };
        match build_certificate(n, m, field, &CertificateOptions::default()) {
            Ok(c) => {
                *rank = c.rank_lower_bound as u64;
                KneserStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
