//! C ABI for `surflink`.
//!
//! Objects are opaque handles created by `sl_*_new`/`sl_*_parse` style
//! functions and released with the matching `*_free`. Every function returns an
//! [`SlStatus`]; on failure a message is available from
//! [`sl_last_error_message`] until the next failing call on the same thread.
//! Component indices are 0-based. Strings returned through `char **` are owned
//! by the caller and must be released with [`sl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use surflink::braid::{full_twist, make_family, parse_braid, BraidWord, FamilySpec, YVariant};
use surflink::constructions::{genus_rank_feasible, highgenus, plus_tower, GenusProfile};
use surflink::group::{abelian_verdict, AbelianVerdict, Caps};
use surflink::linking::TorusLink;
use surflink::report::{group_of, LinkInput, Report};
use surflink::Error;

/// Result codes. `SL_OK` is zero; every other value is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlStatus {
    SlOk = 0,
    SlNullPointer = 1,
    SlInvalidUtf8 = 2,
    SlSyntax = 3,
    SlGeneratorOutOfRange = 4,
    SlStrandMismatch = 5,
    SlNonCommuting = 6,
    SlInvalidFamily = 7,
    SlIndexOutOfRange = 8,
    SlDimensionMismatch = 9,
    SlInvalidArgument = 10,
    SlInternal = 11,
    SlPanic = 12,
}

/// Outcome kind of an abelianness check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlVerdict {
    SlAbelian = 0,
    SlNonAbelian = 1,
    SlInconclusive = 2,
}

/// Opaque braid word.
pub struct SlBraid(BraidWord);

/// Opaque torus-covering link with its defining input.
pub struct SlLink {
    input: LinkInput,
    link: TorusLink,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::Syntax { .. } => SlStatus::SlSyntax,
        Error::GeneratorOutOfRange { .. } => SlStatus::SlGeneratorOutOfRange,
        Error::StrandMismatch { .. } => SlStatus::SlStrandMismatch,
        Error::NonCommuting => SlStatus::SlNonCommuting,
        Error::InvalidFamily(_) => SlStatus::SlInvalidFamily,
        Error::IndexOutOfRange { .. } => SlStatus::SlIndexOutOfRange,
        Error::DimensionMismatch(_) => SlStatus::SlDimensionMismatch,
        Error::InvalidArgument(_) => SlStatus::SlInvalidArgument,
        Error::Internal(_) => SlStatus::SlInternal,
    }
}

enum Fail {
    Status(SlStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn null() -> Fail {
    Fail::Status(SlStatus::SlNullPointer, "null pointer argument".into())
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SlStatus::SlOk,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            SlStatus::SlPanic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail::Status(SlStatus::SlInvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Status(SlStatus::SlInternal, "interior NUL".into()))?;
    write(out, c.into_raw())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a braid word such as `"s1^2 s3^-1"` or `"1,1,-3"` on `strands` strands.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_parse(text: *const c_char, strands: usize, out: *mut *mut SlBraid) -> SlStatus {
    guard(|| {
        let b = parse_braid(read_str(text)?, strands)?;
        write(out, Box::into_raw(Box::new(SlBraid(b))))
    })
}

/// Builds a family braid. `family` is one of `'X' 'Y' 'Z' 'P' 'Q'`; `l` and `e`
/// are ignored where the family has no such parameter. `verbatim` selects the
/// literal reading of the Y descending factor.
///
/// # Safety
/// `e` must point to three readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_family(
    family: c_char,
    k: u32,
    l: u32,
    e: *const i8,
    verbatim: bool,
    out: *mut *mut SlBraid,
) -> SlStatus {
    guard(|| {
        let signs = if e.is_null() { [1, 1, 1] } else { [*e, *e.add(1), *e.add(2)] };
        let variant = if verbatim { YVariant::Verbatim } else { YVariant::Consecutive };
        let spec = match (family as u8).to_ascii_uppercase() {
            b'X' => FamilySpec::X { k, l, e: signs },
            b'Y' => FamilySpec::Y { k, l, e: signs, variant },
            b'Z' => FamilySpec::Z { k, e: signs },
            b'P' => FamilySpec::P { k },
            b'Q' => FamilySpec::Q { k },
            other => {
                return Err(Fail::Lib(Error::InvalidFamily(format!("unknown family `{}`", other as char))))
            }
        };
        write(out, Box::into_raw(Box::new(SlBraid(make_family(&spec)?))))
    })
}

/// `Δ^{2n}` on `strands` strands.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_full_twist(strands: usize, n: i64, out: *mut *mut SlBraid) -> SlStatus {
    guard(|| {
        if strands == 0 {
            return Err(Fail::Lib(Error::InvalidArgument("strand count must be positive".into())));
        }
        write(out, Box::into_raw(Box::new(SlBraid(full_twist(strands, n)))))
    })
}

/// # Safety
/// `b` must be a live braid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_strands(b: *const SlBraid, out: *mut usize) -> SlStatus {
    guard(|| write(out, borrow(b)?.0.strands()))
}

/// Prints the braid in the parser's token syntax. Free the result with [`sl_string_free`].
///
/// # Safety
/// `b` must be a live braid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_to_string(b: *const SlBraid, out: *mut *mut c_char) -> SlStatus {
    guard(|| write_string(out, borrow(b)?.0.to_string()))
}

/// # Safety
/// `b` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_braid_free(b: *mut SlBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Link from a commuting basis pair. Fails with `SL_NON_COMMUTING` otherwise.
///
/// # Safety
/// `a`, `b` must be live braid handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_new(a: *const SlBraid, b: *const SlBraid, out: *mut *mut SlLink) -> SlStatus {
    guard(|| {
        let (a, b) = (borrow(a)?, borrow(b)?);
        let input = LinkInput::Words {
            strands: a.0.strands(),
            braid_a: a.0.to_string(),
            braid_b: Some(b.0.to_string()),
            twist: None,
        };
        let link = TorusLink::new(a.0.clone(), b.0.clone())?;
        write(out, Box::into_raw(Box::new(SlLink { input, link })))
    })
}

/// Link `S_m(a, Δ^{2n})`.
///
/// # Safety
/// `a` must be a live braid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_new_full_twist(a: *const SlBraid, n: i64, out: *mut *mut SlLink) -> SlStatus {
    guard(|| {
        let a = borrow(a)?;
        let input = LinkInput::Words {
            strands: a.0.strands(),
            braid_a: a.0.to_string(),
            braid_b: None,
            twist: Some(n),
        };
        let link = TorusLink::with_full_twist(a.0.clone(), n);
        write(out, Box::into_raw(Box::new(SlLink { input, link })))
    })
}

/// # Safety
/// `l` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_link_free(l: *mut SlLink) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_component_count(l: *const SlLink, out: *mut usize) -> SlStatus {
    guard(|| write(out, borrow(l)?.link.n()))
}

fn check_index(i: usize, n: usize) -> Result<(), Fail> {
    if i >= n {
        return Err(Fail::Lib(Error::IndexOutOfRange { index: i, size: n }));
    }
    Ok(())
}

/// Number of strands in component `i`.
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_degree(l: *const SlLink, i: usize, out: *mut usize) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        check_index(i, l.link.n())?;
        write(out, l.link.components.degrees[i])
    })
}

/// Directional linking number; `direction` 0 is the `a` direction, 1 the `b` direction.
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_lk(l: *const SlLink, direction: u32, i: usize, j: usize, out: *mut i64) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        let n = l.link.n();
        check_index(i, n)?;
        check_index(j, n)?;
        let m = match direction {
            0 => l.link.lk_a()?,
            1 => l.link.lk_b()?,
            d => return Err(Fail::Lib(Error::InvalidArgument(format!("direction {d} is not 0 or 1")))),
        };
        write(out, m.get(i, j))
    })
}

/// Double linking number (0 or 1). Only defined for links built with
/// [`sl_link_new_full_twist`].
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_dlk(l: *const SlLink, i: usize, j: usize, out: *mut u8) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        check_index(i, l.link.n())?;
        check_index(j, l.link.n())?;
        let d = l.link.dlk()?.ok_or_else(|| {
            Fail::Lib(Error::InvalidArgument("double linking numbers need b to be a full twist power".into()))
        })?;
        write(out, d[i][j])
    })
}

/// Triple linking number `Tlk(i, j, k)`.
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_tlk(l: *const SlLink, i: usize, j: usize, k: usize, out: *mut i64) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        for x in [i, j, k] {
            check_index(x, l.link.n())?;
        }
        write(out, l.link.tlk()?.get(i, j, k))
    })
}

/// Lower bound on the triple point number from the triple linking numbers.
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_triple_point_bound(l: *const SlLink, out: *mut u64) -> SlStatus {
    guard(|| write(out, borrow(l)?.link.invariants()?.triple_point_lower_bound))
}

/// Abelianness check of the link group. A zero cap selects the default.
/// `rank` receives the free rank for abelian groups and 0 otherwise.
///
/// # Safety
/// `l` must be a live link handle; `kind` and `rank` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_abelian_verdict(
    l: *const SlLink,
    max_rules: usize,
    max_len: usize,
    max_passes: usize,
    kind: *mut SlVerdict,
    rank: *mut usize,
) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        let d = Caps::default();
        let pick = |v: usize, dflt: usize| if v == 0 { dflt } else { v };
        let caps = Caps {
            max_rules: pick(max_rules, d.max_rules),
            max_len: pick(max_len, d.max_len),
            max_passes: pick(max_passes, d.max_passes),
        };
        let v = abelian_verdict(&group_of(&l.link)?, &caps)?;
        let (k, r) = match v {
            AbelianVerdict::Abelian { rank } => (SlVerdict::SlAbelian, rank),
            AbelianVerdict::NonAbelian { .. } => (SlVerdict::SlNonAbelian, 0),
            AbelianVerdict::Inconclusive { .. } => (SlVerdict::SlInconclusive, 0),
        };
        write(kind, k)?;
        write(rank, r)
    })
}

/// Full JSON report (schema 1). With `with_verdict`, the abelianness check runs
/// under default caps.
///
/// # Safety
/// `l` must be a live link handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_link_report_json(l: *const SlLink, with_verdict: bool, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let l = borrow(l)?;
        let caps = Caps::default();
        let r = Report::compute(&l.input, with_verdict.then_some(&caps))?;
        write_string(out, r.to_json())
    })
}

/// Necessary genus-rank condition for an abelian surface link with these genera.
///
/// # Safety
/// `genera` must point to `len` readable values (may be null when `len` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_genus_feasible(genera: *const u64, len: usize, out: *mut bool) -> SlStatus {
    guard(|| {
        let g = if len == 0 {
            Vec::new()
        } else if genera.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(genera, len).to_vec()
        };
        write(out, genus_rank_feasible(&GenusProfile::new(g)))
    })
}

/// Runs a construction and returns its record as JSON: `kind` 0 is the
/// rank-`n` tower, 1 the high-genus family (`n > 4`). With `certify`, the
/// record carries an abelianness verdict under default caps.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_construct_json(kind: u32, n: usize, certify: bool, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let rec = match kind {
            0 => plus_tower(n)?,
            1 => highgenus(n)?,
            k => return Err(Fail::Lib(Error::InvalidArgument(format!("construction kind {k} is not 0 or 1")))),
        };
        let rec = if certify { rec.certify(&Caps::default())? } else { rec };
        write_string(out, rec.to_json())
    })
}
