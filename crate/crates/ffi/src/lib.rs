//! C ABI over the `serpentine` library.
//!
//! Every function returns a [`SerpStatus`]; results go through out-pointers.
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `_free` function. Strings returned to C are freed with
//! [`serp_string_free`]. The message for the most recent failure on the
//! calling thread is available from [`serp_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serpentine::fusion::ZChoice;
use serpentine::harness::{run_subcommand, OutputFormat, Report, RunConfig};
use serpentine::symfun::schur_to_p;
use serpentine::{Partition, SerpError, SerpentineTableau, SymFun, TwoRowTableau};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SerpStatus {
    Ok = 0,
    InvalidArgument = 1,
    Unsupported = 2,
    DegreeOverflow = 3,
    VerificationFailed = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SerpZChoice {
    Consecutive = 0,
    Shifted = 1,
}

/// Run parameters. Negative `n` / `k` mean "use the default range".
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct SerpConfig {
    pub degree_bound: u32,
    pub n_max: u32,
    pub k_max: u32,
    pub n: i32,
    pub k: i32,
    pub z_choice: SerpZChoice,
}

pub struct SerpTableau {
    inner: TwoRowTableau,
}

pub struct SerpSymFun {
    inner: SymFun,
}

pub struct SerpReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &SerpError) -> SerpStatus {
    match e {
        SerpError::InvalidArgument(_) => SerpStatus::InvalidArgument,
        SerpError::Unsupported(_) => SerpStatus::Unsupported,
        SerpError::DegreeOverflow { .. } => SerpStatus::DegreeOverflow,
        SerpError::VerificationFailed { .. } => SerpStatus::VerificationFailed,
    }
}

struct Failure(SerpStatus, String);

impl From<SerpError> for Failure {
    fn from(e: SerpError) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's
/// last error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SerpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SerpStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SerpStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SerpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(SerpStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nuls removed").into_raw()
}

/// Copies the calling thread's last error message into `buf` (truncated,
/// nul-terminated) and returns the full message length in bytes.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn serp_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let bytes = e.borrow();
        let bytes = bytes.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn serp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a tableau written as `[1 2 4 / 3]`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_parse(text: *const c_char, out: *mut *mut SerpTableau) -> SerpStatus {
    guard(|| {
        let inner: TwoRowTableau = read_str(text, "text")?.parse()?;
        write(out, Box::into_raw(Box::new(SerpTableau { inner })), "out")
    })
}

/// # Safety
/// `t` must be null or a handle from [`serp_tableau_parse`].
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_free(t: *mut SerpTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_size(t: *const SerpTableau, out: *mut usize) -> SerpStatus {
    guard(|| write(out, deref(t, "tableau")?.inner.size(), "out"))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_maj(t: *const SerpTableau, out: *mut u64) -> SerpStatus {
    guard(|| write(out, deref(t, "tableau")?.inner.maj(), "out"))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_charge(t: *const SerpTableau, out: *mut u64) -> SerpStatus {
    guard(|| write(out, deref(t, "tableau")?.inner.charge(), "out"))
}

/// The stable major index of the serpentine tableau continuing `t`, which
/// must have an even number of cells.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_tableau_stable_major_index(t: *const SerpTableau, out: *mut i64) -> SerpStatus {
    guard(|| {
        let s = SerpentineTableau::from_base(deref(t, "tableau")?.inner.clone())?;
        write(out, s.stable_major_index(), "out")
    })
}

/// The Schur function `s_λ` in the power-sum basis.
///
/// # Safety
/// `parts` must point to `len` values (or be null with `len == 0`); `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_schur(parts: *const u32, len: usize, out: *mut *mut SerpSymFun) -> SerpStatus {
    guard(|| {
        let parts = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(null("parts"));
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        let lambda = Partition::new(parts)?;
        write(out, Box::into_raw(Box::new(SerpSymFun { inner: schur_to_p(&lambda) })), "out")
    })
}

/// # Safety
/// `f` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn serp_symfun_free(f: *mut SerpSymFun) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Text form such as `1/2 p(1,1) + 1/2 p(2)`; free with [`serp_string_free`].
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_symfun_to_string(f: *const SerpSymFun, out: *mut *mut c_char) -> SerpStatus {
    guard(|| write(out, into_c_string(deref(f, "symfun")?.inner.to_string()), "out"))
}

/// `⟨f, g⟩` under the boson pairing, as a `num/den` string.
///
/// # Safety
/// `f` and `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_symfun_inner_product(
    f: *const SerpSymFun,
    g: *const SerpSymFun,
    out: *mut *mut c_char,
) -> SerpStatus {
    guard(|| {
        let ip = deref(f, "f")?.inner.inner_product(&deref(g, "g")?.inner);
        write(out, into_c_string(serpentine::symfun::format_rational(&ip)), "out")
    })
}

/// The default run parameters.
#[no_mangle]
pub extern "C" fn serp_config_default() -> SerpConfig {
    let d = RunConfig::default();
    SerpConfig {
        degree_bound: d.degree_bound,
        n_max: d.n_max as u32,
        k_max: d.k_max as u32,
        n: -1,
        k: -1,
        z_choice: SerpZChoice::Consecutive,
    }
}

fn run_config(c: &SerpConfig) -> RunConfig {
    RunConfig {
        degree_bound: c.degree_bound,
        n_max: c.n_max as usize,
        k_max: c.k_max as usize,
        n: usize::try_from(c.n).ok(),
        k: usize::try_from(c.k).ok(),
        z_choice: match c.z_choice {
            SerpZChoice::Consecutive => ZChoice::Consecutive,
            SerpZChoice::Shifted => ZChoice::Shifted,
        },
        ..RunConfig::default()
    }
}

/// Runs a harness subcommand. A run whose checks fail still returns `OK`
/// with a report; inspect it with [`serp_report_passed`].
///
/// # Safety
/// `subcommand` must be a nul-terminated string; `config` may be null for
/// the defaults; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_run(
    subcommand: *const c_char,
    config: *const SerpConfig,
    out: *mut *mut SerpReport,
) -> SerpStatus {
    guard(|| {
        let name = read_str(subcommand, "subcommand")?;
        let cfg = match config.as_ref() {
            Some(c) => run_config(c),
            None => RunConfig::default(),
        };
        let inner = run_subcommand(name, &cfg)?;
        write(out, Box::into_raw(Box::new(SerpReport { inner })), "out")
    })
}

/// # Safety
/// `r` must be null or a handle from [`serp_run`].
#[no_mangle]
pub unsafe extern "C" fn serp_report_free(r: *mut SerpReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_report_passed(r: *const SerpReport, out: *mut bool) -> SerpStatus {
    guard(|| write(out, deref(r, "report")?.inner.passed(), "out"))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_report_check_count(r: *const SerpReport, out: *mut usize) -> SerpStatus {
    guard(|| write(out, deref(r, "report")?.inner.checks.len(), "out"))
}

/// The report as JSON; free with [`serp_string_free`].
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn serp_report_json(r: *const SerpReport, out: *mut *mut c_char) -> SerpStatus {
    guard(|| write(out, into_c_string(deref(r, "report")?.inner.render(OutputFormat::Json)), "out"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let mut buf = vec![0 as c_char; 256];
        unsafe { serp_last_error(buf.as_mut_ptr(), buf.len()) };
        unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn tableau_roundtrip() {
        let text = CString::new("[1 2 4 / 3]").unwrap();
        let mut t = ptr::null_mut();
        unsafe {
            assert_eq!(serp_tableau_parse(text.as_ptr(), &mut t), SerpStatus::Ok);
            let (mut maj, mut charge, mut r) = (0u64, 0u64, 0i64);
            assert_eq!(serp_tableau_maj(t, &mut maj), SerpStatus::Ok);
            assert_eq!(serp_tableau_charge(t, &mut charge), SerpStatus::Ok);
            assert_eq!(serp_tableau_stable_major_index(t, &mut r), SerpStatus::Ok);
            assert_eq!((maj, charge, r), (2, 4, 2));
            serp_tableau_free(t);
        }
    }

    #[test]
    fn errors_carry_messages() {
        let text = CString::new("[2 1]").unwrap();
        let mut t = ptr::null_mut();
        unsafe {
            assert_eq!(serp_tableau_parse(text.as_ptr(), &mut t), SerpStatus::InvalidArgument);
            assert!(t.is_null());
            assert!(last_error().starts_with("invalid argument"));
            assert_eq!(serp_tableau_parse(ptr::null(), &mut t), SerpStatus::NullPointer);
            let mut out = 0u64;
            assert_eq!(serp_tableau_maj(ptr::null(), &mut out), SerpStatus::NullPointer);
            let odd = CString::new("[1 2 3]").unwrap();
            assert_eq!(serp_tableau_parse(odd.as_ptr(), &mut t), SerpStatus::Ok);
            let mut r = 0i64;
            assert_eq!(serp_tableau_stable_major_index(t, &mut r), SerpStatus::InvalidArgument);
            serp_tableau_free(t);
        }
    }

    #[test]
    fn schur_and_inner_product() {
        let parts = [2u32, 2];
        let mut f = ptr::null_mut();
        let mut s = ptr::null_mut();
        unsafe {
            assert_eq!(serp_schur(parts.as_ptr(), 2, &mut f), SerpStatus::Ok);
            assert_eq!(serp_symfun_to_string(f, &mut s), SerpStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "1/12 p(1,1,1,1) + 1/4 p(2,2) - 1/3 p(3,1)");
            serp_string_free(s);
            assert_eq!(serp_symfun_inner_product(f, f, &mut s), SerpStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "6");
            serp_string_free(s);
            serp_symfun_free(f);
            let bad = [1u32, 2];
            assert_eq!(serp_schur(bad.as_ptr(), 2, &mut f), SerpStatus::InvalidArgument);
        }
    }

    #[test]
    fn run_reports() {
        let name = CString::new("table-check").unwrap();
        let mut r = ptr::null_mut();
        unsafe {
            assert_eq!(serp_run(name.as_ptr(), ptr::null(), &mut r), SerpStatus::Ok);
            let mut passed = false;
            assert_eq!(serp_report_passed(r, &mut passed), SerpStatus::Ok);
            assert!(passed);
            let mut json = ptr::null_mut();
            assert_eq!(serp_report_json(r, &mut json), SerpStatus::Ok);
            assert!(CStr::from_ptr(json).to_str().unwrap().contains("\"subcommand\": \"table-check\""));
            serp_string_free(json);
            serp_report_free(r);
            let unknown = CString::new("nope").unwrap();
            assert_eq!(serp_run(unknown.as_ptr(), ptr::null(), &mut r), SerpStatus::InvalidArgument);
            let mut cfg = serp_config_default();
            cfg.n = 5;
            let fusion = CString::new("fusion-check").unwrap();
            assert_eq!(serp_run(fusion.as_ptr(), &cfg, &mut r), SerpStatus::InvalidArgument);
        }
    }
}
