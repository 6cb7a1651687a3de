//! C ABI over `orbcoh`.
//!
//! Atlases live behind an opaque [`OrbcohAtlas`] handle. Every fallible call
//! returns an [`OrbcohStatus`]; on failure [`orbcoh_last_error`] describes
//! what went wrong on the calling thread. Strings handed out by the library
//! are released with [`orbcoh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbcoh::cli::{self, Command, OutputFormat, EXIT_INCOMPLETE, EXIT_VERIFICATION_FAILED};
use orbcoh::presentations::{load_document, load_oracle, EulerOracle, InputFormat, SectorAtlas};
use orbcoh::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbcohStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// The document does not parse or violates the input schema.
    Schema = 3,
    /// The presentation or atlas is mathematically inconsistent.
    Invalid = 4,
    /// An Euler oracle entry was rejected.
    Oracle = 5,
    /// The report was produced but some structural check failed.
    VerificationFailed = 6,
    /// The report was produced but some products need Euler oracle values.
    Incomplete = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbcohFormat {
    Table = 0,
    Json = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbcohCommand {
    Sectors = 0,
    Cohomology = 1,
    Ring = 2,
    Verify = 3,
}

/// An atlas together with the Euler oracle entries attached to it.
pub struct OrbcohAtlas {
    atlas: SectorAtlas,
    oracle: EulerOracle,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_for(e: &Error) -> OrbcohStatus {
    match e {
        Error::Schema { .. } | Error::Io(_) => OrbcohStatus::Schema,
        Error::OracleValidation { .. } => OrbcohStatus::Oracle,
        _ => OrbcohStatus::Invalid,
    }
}

fn fail(status: OrbcohStatus, message: impl Into<String>) -> OrbcohStatus {
    set_error(message.into());
    status
}

/// Runs `f`, turning panics into `Internal`.
fn guarded(f: impl FnOnce() -> OrbcohStatus) -> OrbcohStatus {
    clear_error();
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(OrbcohStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, OrbcohStatus> {
    if p.is_null() {
        return Err(fail(OrbcohStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(OrbcohStatus::InvalidUtf8, e.to_string()))
}

/// Parses a TOML or JSON input document (detected from its content) into a
/// new atlas handle written to `*out`. Inline Euler oracle entries are kept.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_from_str(
    text: *const c_char,
    out: *mut *mut OrbcohAtlas,
) -> OrbcohStatus {
    guarded(|| {
        if out.is_null() {
            return fail(OrbcohStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed = load_document(text, InputFormat::detect(None, text)).and_then(|doc| {
            Ok(OrbcohAtlas {
                atlas: doc.to_atlas()?,
                oracle: doc.oracle()?,
            })
        });
        match parsed {
            Ok(handle) => {
                *out = Box::into_raw(Box::new(handle));
                OrbcohStatus::Ok
            }
            Err(e) => fail(status_for(&e), e.to_string()),
        }
    })
}

/// Merges the entries of an Euler oracle document into the atlas's oracle.
///
/// # Safety
/// `atlas` must come from [`orbcoh_atlas_from_str`]; `text` must be a valid
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_add_oracle(
    atlas: *mut OrbcohAtlas,
    text: *const c_char,
) -> OrbcohStatus {
    guarded(|| {
        let Some(handle) = atlas.as_mut() else {
            return fail(OrbcohStatus::NullPointer, "null atlas");
        };
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match load_oracle(text, InputFormat::detect(None, text)) {
            Ok(oracle) => {
                handle.oracle.merge(oracle);
                OrbcohStatus::Ok
            }
            Err(e) => fail(status_for(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `atlas` must come from [`orbcoh_atlas_from_str`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_free(atlas: *mut OrbcohAtlas) {
    if !atlas.is_null() {
        drop(Box::from_raw(atlas));
    }
}

/// Number of twisted sectors including the untwisted one; 0 for a null handle.
///
/// # Safety
/// `atlas` must be null or come from [`orbcoh_atlas_from_str`].
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_sector_count(atlas: *const OrbcohAtlas) -> usize {
    atlas.as_ref().map_or(0, |h| h.atlas.sectors().len())
}

/// # Safety
/// `atlas` must be null or come from [`orbcoh_atlas_from_str`].
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_multisector_count(atlas: *const OrbcohAtlas) -> usize {
    atlas.as_ref().map_or(0, |h| h.atlas.multisectors().len())
}

/// # Safety
/// `atlas` must be null or come from [`orbcoh_atlas_from_str`].
#[no_mangle]
pub unsafe extern "C" fn orbcoh_atlas_ambient_dim(atlas: *const OrbcohAtlas) -> u32 {
    atlas.as_ref().map_or(0, |h| h.atlas.ambient_dim())
}

/// Renders a report into a new string written to `*out`.
///
/// `VerificationFailed` and `Incomplete` still produce the report; any other
/// non-`Ok` status leaves `*out` null.
///
/// # Safety
/// `atlas` must come from [`orbcoh_atlas_from_str`] and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orbcoh_report(
    atlas: *const OrbcohAtlas,
    command: OrbcohCommand,
    format: OrbcohFormat,
    out: *mut *mut c_char,
) -> OrbcohStatus {
    guarded(|| {
        if out.is_null() {
            return fail(OrbcohStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let Some(handle) = atlas.as_ref() else {
            return fail(OrbcohStatus::NullPointer, "null atlas");
        };
        let command = match command {
            OrbcohCommand::Sectors => Command::Sectors,
            OrbcohCommand::Cohomology => Command::Cohomology,
            OrbcohCommand::Ring => Command::Ring,
            OrbcohCommand::Verify => Command::Verify,
        };
        let format = match format {
            OrbcohFormat::Table => OutputFormat::Table,
            OrbcohFormat::Json => OutputFormat::Json,
        };
        let outcome = match cli::report_for(command, &handle.atlas, &handle.oracle, format, false) {
            Ok(o) => o,
            Err(e) => return fail(status_for(&e), e.to_string()),
        };
        let Ok(text) = CString::new(outcome.output) else {
            return fail(OrbcohStatus::Internal, "report contains a NUL byte");
        };
        *out = text.into_raw();
        match outcome.exit_code {
            EXIT_VERIFICATION_FAILED => {
                fail(OrbcohStatus::VerificationFailed, "verification failed")
            }
            EXIT_INCOMPLETE => fail(
                OrbcohStatus::Incomplete,
                "products need Euler oracle values",
            ),
            _ => OrbcohStatus::Ok,
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn orbcoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
