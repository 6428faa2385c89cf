//! C ABI over the `z3orbifold` crate.
//!
//! Every function returns a [`Z3oStatus`]; results are written through out
//! pointers. A catalog handle is created with [`z3o_catalog_new`] and
//! released with [`z3o_catalog_free`]. After a non-OK status the message is
//! available from [`z3o_last_error_message`] on the same thread.
//!
//! The header `include/z3orbifold.h` is regenerated by the build script.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use z3orbifold::verify::{Suite, VerifyConfig};
use z3orbifold::{
    conformal_weight, contragredient, enumerate_irreducibles, fuse_irreducible, has_unit_qdim,
    make_label, qdim_numeric, Error, IrrLabel, Level, Sector,
};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z3oStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidLevel = 2,
    InvalidLabel = 3,
    ParseError = 4,
    BufferTooSmall = 5,
    VerificationFailed = 6,
    CapExceeded = 7,
    InvalidArgument = 8,
    Internal = 9,
}

/// An irreducible module: `sector` is 0 (untwisted), 1 (T1) or 2 (T2).
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Z3oLabel {
    pub sector: u32,
    pub i: u32,
    pub j: u32,
}

/// One summand of a fusion product.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Z3oFusionTerm {
    pub label: Z3oLabel,
    pub multiplicity: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z3oSuite {
    Unit = 0,
    Comm = 1,
    Assoc = 2,
    Dual = 3,
    Qdim = 4,
    Oracle = 5,
    Catalog = 6,
}

/// Opaque handle for one level.
pub struct Z3oCatalog {
    level: Level,
    labels: Vec<IrrLabel>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: Z3oStatus, msg: impl Into<String>) -> Z3oStatus {
    set_last_error(msg);
    status
}

fn status_of(err: &Error) -> Z3oStatus {
    match err {
        Error::LevelOutOfRange(_) => Z3oStatus::InvalidLevel,
        Error::Syntax { .. } => Z3oStatus::ParseError,
        Error::CapExceeded { .. } => Z3oStatus::CapExceeded,
        Error::NegativeIndex(_) | Error::IndexAboveLevel { .. } | Error::LevelMismatch(_) => {
            Z3oStatus::InvalidLabel
        }
        Error::Precision | Error::TwistOutOfRange(_) | Error::Parity(_) => Z3oStatus::InvalidArgument,
        Error::Output(_) => Z3oStatus::Internal,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Z3oStatus>) -> Z3oStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Z3oStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(Z3oStatus::Internal, "internal panic"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, Z3oStatus>;
}

impl<T> OrStatus<T> for z3orbifold::Result<T> {
    fn or_status(self) -> Result<T, Z3oStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn catalog_ref<'a>(h: *const Z3oCatalog) -> Result<&'a Z3oCatalog, Z3oStatus> {
    h.as_ref().ok_or_else(|| fail(Z3oStatus::NullPointer, "null catalog handle"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Z3oStatus> {
    p.as_mut().ok_or_else(|| fail(Z3oStatus::NullPointer, "null output pointer"))
}

impl Z3oCatalog {
    fn label(&self, l: Z3oLabel) -> Result<IrrLabel, Z3oStatus> {
        if l.sector > 2 {
            return Err(fail(Z3oStatus::InvalidLabel, format!("sector {} is not 0, 1 or 2", l.sector)));
        }
        make_label(Sector::ALL[l.sector as usize], l.i as i64, l.j as i64, self.level).or_status()
    }
}

fn to_c(l: IrrLabel) -> Z3oLabel {
    Z3oLabel { sector: l.sector().grade() as u32, i: l.i(), j: l.j() as u32 }
}

/// Creates a catalog for level `level` (must be at least 1).
#[no_mangle]
pub unsafe extern "C" fn z3o_catalog_new(level: i64, out_handle: *mut *mut Z3oCatalog) -> Z3oStatus {
    guard(|| {
        let slot = out(out_handle)?;
        *slot = ptr::null_mut();
        let level = Level::new(level).or_status()?;
        let catalog = Z3oCatalog { level, labels: enumerate_irreducibles(level) };
        *slot = Box::into_raw(Box::new(catalog));
        Ok(())
    })
}

/// Releases a handle from [`z3o_catalog_new`]. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn z3o_catalog_free(handle: *mut Z3oCatalog) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

#[no_mangle]
pub unsafe extern "C" fn z3o_catalog_level(handle: *const Z3oCatalog, out_level: *mut u32) -> Z3oStatus {
    guard(|| {
        *out(out_level)? = catalog_ref(handle)?.level.get();
        Ok(())
    })
}

/// Number of irreducible modules, `9(k+1)`.
#[no_mangle]
pub unsafe extern "C" fn z3o_catalog_len(handle: *const Z3oCatalog, out_len: *mut usize) -> Z3oStatus {
    guard(|| {
        *out(out_len)? = catalog_ref(handle)?.labels.len();
        Ok(())
    })
}

/// Label at position `index` of the canonical order.
#[no_mangle]
pub unsafe extern "C" fn z3o_catalog_label(
    handle: *const Z3oCatalog,
    index: usize,
    out_label: *mut Z3oLabel,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let label = h.labels.get(index).ok_or_else(|| {
            fail(Z3oStatus::InvalidArgument, format!("index {index} out of range 0..{}", h.labels.len()))
        })?;
        *out(out_label)? = to_c(*label);
        Ok(())
    })
}

/// Parses `u:<i>:<j>`, `t1:<i>:<j>` or `t2:<i>:<j>` (NUL-terminated).
#[no_mangle]
pub unsafe extern "C" fn z3o_label_parse(
    handle: *const Z3oCatalog,
    text: *const c_char,
    out_label: *mut Z3oLabel,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        if text.is_null() {
            return Err(fail(Z3oStatus::NullPointer, "null label text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(Z3oStatus::ParseError, "label text is not UTF-8"))?;
        *out(out_label)? = to_c(IrrLabel::parse_at(text, h.level).or_status()?);
        Ok(())
    })
}

/// Writes the canonical text of `label` into `buf` (NUL-terminated).
/// `out_needed` receives the required size including the NUL, also when
/// the buffer is too small.
#[no_mangle]
pub unsafe extern "C" fn z3o_label_format(
    handle: *const Z3oCatalog,
    label: Z3oLabel,
    buf: *mut c_char,
    buf_len: usize,
    out_needed: *mut usize,
) -> Z3oStatus {
    guard(|| {
        let l = catalog_ref(handle)?.label(label)?;
        write_c_string(&l.to_string(), buf, buf_len, out_needed)
    })
}

unsafe fn write_c_string(s: &str, buf: *mut c_char, buf_len: usize, out_needed: *mut usize) -> Result<(), Z3oStatus> {
    let needed = s.len() + 1;
    if let Some(n) = out_needed.as_mut() {
        *n = needed;
    }
    if buf.is_null() || buf_len < needed {
        return Err(fail(Z3oStatus::BufferTooSmall, format!("need {needed} bytes")));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Exact conformal weight as a reduced fraction `num/den`.
#[no_mangle]
pub unsafe extern "C" fn z3o_conformal_weight(
    handle: *const Z3oCatalog,
    label: Z3oLabel,
    out_num: *mut i64,
    out_den: *mut i64,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let w = conformal_weight(h.label(label)?, h.level).or_status()?;
        *out(out_num)? = w.numer();
        *out(out_den)? = w.denom();
        Ok(())
    })
}

/// Quantum dimension as a double.
#[no_mangle]
pub unsafe extern "C" fn z3o_qdim(handle: *const Z3oCatalog, label: Z3oLabel, out_value: *mut f64) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let d = qdim_numeric(h.label(label)?, h.level, 20).or_status()?;
        *out(out_value)? = d.to_f64();
        Ok(())
    })
}

/// Quantum dimension rendered to `digits` decimal places.
#[no_mangle]
pub unsafe extern "C" fn z3o_qdim_string(
    handle: *const Z3oCatalog,
    label: Z3oLabel,
    digits: u32,
    buf: *mut c_char,
    buf_len: usize,
    out_needed: *mut usize,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let d = qdim_numeric(h.label(label)?, h.level, digits).or_status()?;
        write_c_string(&d.to_string(), buf, buf_len, out_needed)
    })
}

/// 1 if the quantum dimension is exactly 1 (a simple current), else 0.
#[no_mangle]
pub unsafe extern "C" fn z3o_is_simple_current(
    handle: *const Z3oCatalog,
    label: Z3oLabel,
    out_flag: *mut u8,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        *out(out_flag)? = has_unit_qdim(h.label(label)?, h.level).or_status()? as u8;
        Ok(())
    })
}

/// Contragredient module.
#[no_mangle]
pub unsafe extern "C" fn z3o_dual(handle: *const Z3oCatalog, label: Z3oLabel, out_label: *mut Z3oLabel) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        *out(out_label)? = to_c(contragredient(h.label(label)?, h.level).or_status()?);
        Ok(())
    })
}

/// Fusion rule `N_{a,b}^c`.
#[no_mangle]
pub unsafe extern "C" fn z3o_fusion_coefficient(
    handle: *const Z3oCatalog,
    a: Z3oLabel,
    b: Z3oLabel,
    c: Z3oLabel,
    out_value: *mut u64,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let (a, b, c) = (h.label(a)?, h.label(b)?, h.label(c)?);
        *out(out_value)? = fuse_irreducible(a, b, h.level).or_status()?.multiplicity(&c);
        Ok(())
    })
}

/// Writes the terms of `a ⊠ b` in canonical order into `terms`.
/// `out_len` always receives the number of terms; if `capacity` is smaller
/// the call returns `BufferTooSmall` and writes nothing.
#[no_mangle]
pub unsafe extern "C" fn z3o_fuse(
    handle: *const Z3oCatalog,
    a: Z3oLabel,
    b: Z3oLabel,
    terms: *mut Z3oFusionTerm,
    capacity: usize,
    out_len: *mut usize,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let v = fuse_irreducible(h.label(a)?, h.label(b)?, h.level).or_status()?;
        *out(out_len)? = v.len();
        if terms.is_null() || capacity < v.len() {
            return Err(fail(Z3oStatus::BufferTooSmall, format!("need room for {} terms", v.len())));
        }
        for (n, (label, m)) in v.iter().enumerate() {
            *terms.add(n) = Z3oFusionTerm { label: to_c(*label), multiplicity: *m };
        }
        Ok(())
    })
}

/// Runs one verification suite with the default caps and seed. Returns
/// `VerificationFailed` when any check fails; counts are written either way.
#[no_mangle]
pub unsafe extern "C" fn z3o_verify(
    handle: *const Z3oCatalog,
    suite: Z3oSuite,
    out_checks: *mut u64,
    out_failures: *mut u64,
) -> Z3oStatus {
    guard(|| {
        let h = catalog_ref(handle)?;
        let suite = match suite {
            Z3oSuite::Unit => Suite::Unit,
            Z3oSuite::Comm => Suite::Comm,
            Z3oSuite::Assoc => Suite::Assoc,
            Z3oSuite::Dual => Suite::Dual,
            Z3oSuite::Qdim => Suite::Qdim,
            Z3oSuite::Oracle => Suite::Oracle,
            Z3oSuite::Catalog => Suite::Catalog,
        };
        let report = suite.run(h.level, &VerifyConfig::default()).or_status()?;
        *out(out_checks)? = report.checks_run;
        *out(out_failures)? = report.failures.len() as u64;
        if report.passed() {
            Ok(())
        } else {
            Err(fail(Z3oStatus::VerificationFailed, report.to_string()))
        }
    })
}

/// Copies the last error message of this thread into `buf` and returns
/// the size it needs including the NUL (0 when there is no message).
#[no_mangle]
pub unsafe extern "C" fn z3o_last_error_message(buf: *mut c_char, buf_len: usize) -> usize {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        None => 0,
        Some(msg) => {
            let bytes = msg.as_bytes_with_nul();
            if !buf.is_null() && buf_len > 0 {
                let n = bytes.len().min(buf_len);
                ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
                *buf.add(n - 1) = 0;
            }
            bytes.len()
        }
    })
}

/// Static, NUL-terminated version string.
#[no_mangle]
pub extern "C" fn z3o_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
