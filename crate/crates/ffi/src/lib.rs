//! C ABI over the core library.
//!
//! Tables travel across the boundary as opaque `RiautTable` handles created
//! from the text format (`[x1->y1,...]`, `^` for the empty word) and are
//! released with [`riaut_table_free`]. Every fallible call returns a
//! [`RiautStatus`]; results come back through out-parameters. A
//! thread-local message with the detail of the last failure is available
//! through [`riaut_last_error`]. Returned strings are NUL-terminated and
//! owned by the caller; release them with [`riaut_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use riaut::text;
use riaut::words::Alphabet;
use riaut::{Error, RiAutElem};

/// Status codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RiautStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer,
    /// A string argument was not valid UTF-8.
    InvalidUtf8,
    /// The text could not be parsed in the expected format.
    ParseError,
    /// The table or code violates a structural invariant (not a prefix
    /// code, not maximal, empty, out-of-range letter, bad alphabet...).
    InvalidElement,
    /// The word lies outside the domain ideal of the table.
    Undefined,
    /// The two arguments live over different alphabets.
    AlphabetMismatch,
    /// The requested comparison or factorization is not defined for these
    /// arguments.
    DomainError,
}

/// An element of the right-ideal automorphism monoid (opaque).
pub struct RiautTable {
    elem: RiAutElem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

fn status_of(err: &Error) -> RiautStatus {
    set_error(&err.to_string());
    match err {
        Error::Parse(_) => RiautStatus::ParseError,
        Error::InvalidAlphabet(_)
        | Error::EmptyCode
        | Error::LetterOutOfRange { .. }
        | Error::NotAPrefixCode(_, _)
        | Error::NotMaximal { .. }
        | Error::NotInjective => RiautStatus::InvalidElement,
        _ => RiautStatus::DomainError,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, RiautStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(RiautStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        RiautStatus::InvalidUtf8
    })
}

unsafe fn read_table<'a>(ptr: *const RiautTable) -> Result<&'a RiAutElem, RiautStatus> {
    if ptr.is_null() {
        set_error("null table handle");
        return Err(RiautStatus::NullPointer);
    }
    Ok(unsafe { &(*ptr).elem })
}

fn write_table(out: *mut *mut RiautTable, elem: RiAutElem) -> RiautStatus {
    if out.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    unsafe {
        *out = Box::into_raw(Box::new(RiautTable { elem }));
    }
    RiautStatus::Ok
}

fn require_same_alphabet(a: &RiAutElem, b: &RiAutElem) -> Result<(), RiautStatus> {
    if a.alphabet() != b.alphabet() {
        set_error("tables live over different alphabets");
        return Err(RiautStatus::AlphabetMismatch);
    }
    Ok(())
}

macro_rules! ffi_try {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Detail message of the most recent failure on this thread. Owned by the
/// library; do not free. Valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn riaut_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a table in text form over a k-letter alphabet into a new handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to a writable
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_parse(
    k: u32,
    text: *const c_char,
    out: *mut *mut RiautTable,
) -> RiautStatus {
    let text = ffi_try!(unsafe { read_str(text) });
    let alphabet = match Alphabet::new(k) {
        Ok(a) => a,
        Err(e) => return status_of(&e),
    };
    match text::parse_table(text, &alphabet) {
        Ok(elem) => write_table(out, elem),
        Err(e) => status_of(&e),
    }
}

/// The identity map on the whole free monoid, `[^->^]`.
///
/// # Safety
/// `out` must point to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_identity(k: u32, out: *mut *mut RiautTable) -> RiautStatus {
    match Alphabet::new(k) {
        Ok(alphabet) => write_table(out, RiAutElem::identity(alphabet)),
        Err(e) => status_of(&e),
    }
}

/// Releases a table handle. Null is ignored.
///
/// # Safety
/// `table` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_free(table: *mut RiautTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// Renders a table in its canonical text form. The caller owns the returned
/// string and must release it with `riaut_string_free`.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_to_text(table: *const RiautTable) -> *mut c_char {
    match unsafe { read_table(table) } {
        Ok(elem) => CString::new(elem.to_string()).unwrap().into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn riaut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Composes two tables (`psi` after `phi`).
///
/// # Safety
/// `psi` and `phi` must be live handles and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_compose(
    psi: *const RiautTable,
    phi: *const RiautTable,
    out: *mut *mut RiautTable,
) -> RiautStatus {
    let psi = ffi_try!(unsafe { read_table(psi) });
    let phi = ffi_try!(unsafe { read_table(phi) });
    ffi_try!(require_same_alphabet(psi, phi));
    write_table(out, psi.compose(phi))
}

/// Inverts a table.
///
/// # Safety
/// `table` must be a live handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_inverse(
    table: *const RiautTable,
    out: *mut *mut RiautTable,
) -> RiautStatus {
    let elem = ffi_try!(unsafe { read_table(table) });
    write_table(out, elem.inverse())
}

/// The unique maximal essential extension of a table.
///
/// # Safety
/// `table` must be a live handle and `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_max_extend(
    table: *const RiautTable,
    out: *mut *mut RiautTable,
) -> RiautStatus {
    let elem = ffi_try!(unsafe { read_table(table) });
    write_table(out, elem.max_extend().into_rep())
}

/// Applies the table to a word. Returns `Undefined` (leaving `out_word`
/// untouched) when the word is outside the domain ideal.
///
/// # Safety
/// `table` must be a live handle, `word` a NUL-terminated string, and
/// `out_word` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn riaut_apply(
    table: *const RiautTable,
    word: *const c_char,
    out_word: *mut *mut c_char,
) -> RiautStatus {
    let elem = ffi_try!(unsafe { read_table(table) });
    let word = ffi_try!(unsafe { read_str(word) });
    if out_word.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    let parsed = match text::parse_word(word, &elem.alphabet()) {
        Ok(w) => w,
        Err(e) => return status_of(&e),
    };
    match elem.apply(&parsed) {
        Some(image) => {
            unsafe {
                *out_word = CString::new(image.to_string()).unwrap().into_raw();
            }
            RiautStatus::Ok
        }
        None => {
            set_error("word lies outside the domain ideal");
            RiautStatus::Undefined
        }
    }
}

/// Table size (cardinality of the domain code).
///
/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_size(
    table: *const RiautTable,
    out: *mut usize,
) -> RiautStatus {
    let elem = ffi_try!(unsafe { read_table(table) });
    if out.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    unsafe { *out = elem.size() };
    RiautStatus::Ok
}

/// Structural equality of two tables (equality as monoid elements).
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riaut_table_eq(
    left: *const RiautTable,
    right: *const RiautTable,
    out: *mut bool,
) -> RiautStatus {
    let left = ffi_try!(unsafe { read_table(left) });
    let right = ffi_try!(unsafe { read_table(right) });
    if out.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    unsafe { *out = left == right };
    RiautStatus::Ok
}

/// Dictionary-order preservation check.
///
/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riaut_is_dict_preserving(
    table: *const RiautTable,
    out: *mut bool,
) -> RiautStatus {
    let elem = ffi_try!(unsafe { read_table(table) });
    if out.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    unsafe { *out = elem.is_dict_preserving() };
    RiautStatus::Ok
}

/// J-order comparison: is `left <=_J right` (i.e. the domain code of `left`
/// at least as large)?
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn riaut_j_leq(
    left: *const RiautTable,
    right: *const RiautTable,
    out: *mut bool,
) -> RiautStatus {
    let left = ffi_try!(unsafe { read_table(left) });
    let right = ffi_try!(unsafe { read_table(right) });
    ffi_try!(require_same_alphabet(left, right));
    if out.is_null() {
        set_error("null output pointer");
        return RiautStatus::NullPointer;
    }
    unsafe { *out = riaut::green::j_leq(left, right) };
    RiautStatus::Ok
}
