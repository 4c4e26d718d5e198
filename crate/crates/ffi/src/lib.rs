//! C ABI over the hexoct toolkit.
//!
//! The surface follows the usual C-binding conventions: an opaque context
//! handle created and destroyed by this library, integer status codes with
//! a per-context last-error message, and caller-freed C strings for
//! structured (JSON) results. The committed header `include/hexoct.h`
//! mirrors this file; `cbindgen.toml` regenerates it where cbindgen is
//! available.
//!
//! Handles are not thread-safe; use one context per thread.

use std::collections::BTreeMap;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use hexoct::chartab::SubgroupName;
use hexoct::claims::{self, ExtraChecks};
use hexoct::ggraph::{GGraph, SpectrumReport};
use hexoct::perm::SignedPerm;
use hexoct::pipeline::Pipeline;
use hexoct::store;

/// Status codes returned by every fallible function.
pub const HEXOCT_OK: c_int = 0;
pub const HEXOCT_ERR_NULL_ARGUMENT: c_int = 1;
pub const HEXOCT_ERR_INVALID_UTF8: c_int = 2;
pub const HEXOCT_ERR_BAD_NAME: c_int = 3;
pub const HEXOCT_ERR_PARSE: c_int = 4;
pub const HEXOCT_ERR_COMPUTE: c_int = 5;
pub const HEXOCT_ERR_CLAIMS_FAILED: c_int = 6;

/// Opaque toolkit context: owns the computed classification and analyzed
/// graphs, plus the last error message.
pub struct HexoctContext {
    pipeline: Option<Pipeline>,
    graphs: BTreeMap<SubgroupName, (GGraph, SpectrumReport)>,
    last_error: CString,
}

impl HexoctContext {
    fn set_error(&mut self, message: impl Into<String>) {
        self.last_error =
            CString::new(message.into()).unwrap_or_else(|_| CString::new("error").unwrap());
    }

    fn pipeline(&mut self) -> Result<&Pipeline, String> {
        if self.pipeline.is_none() {
            let p = Pipeline::compute(None).map_err(|e| e.to_string())?;
            self.pipeline = Some(p);
        }
        Ok(self.pipeline.as_ref().unwrap())
    }

    fn graph(&mut self, name: SubgroupName) -> Result<&(GGraph, SpectrumReport), String> {
        if !self.graphs.contains_key(&name) {
            self.pipeline()?;
            let built = self
                .pipeline
                .as_ref()
                .unwrap()
                .graph(name)
                .map_err(|e| e.to_string())?;
            self.graphs.insert(name, built);
        }
        Ok(&self.graphs[&name])
    }
}

/// Creates a fresh context. Returns NULL only on allocation failure.
/// Free with `hexoct_context_free`.
#[no_mangle]
pub extern "C" fn hexoct_context_new() -> *mut HexoctContext {
    Box::into_raw(Box::new(HexoctContext {
        pipeline: None,
        graphs: BTreeMap::new(),
        last_error: CString::new("").unwrap(),
    }))
}

/// Frees a context created by `hexoct_context_new`. NULL is ignored.
///
/// # Safety
/// `ctx` must be NULL or a pointer previously returned by
/// `hexoct_context_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hexoct_context_free(ctx: *mut HexoctContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// The message of the most recent failure on this context. The pointer is
/// owned by the context and valid until the next call on it.
///
/// # Safety
/// `ctx` must be a live context pointer.
#[no_mangle]
pub unsafe extern "C" fn hexoct_last_error(ctx: *const HexoctContext) -> *const c_char {
    if ctx.is_null() {
        return ptr::null();
    }
    (*ctx).last_error.as_ptr()
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a pointer returned by a hexoct function documented
/// as caller-freed, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hexoct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Order of the full signed-permutation group (46,080).
///
/// # Safety
/// `out` must point to writable memory for one u64.
#[no_mangle]
pub unsafe extern "C" fn hexoct_group_order(out: *mut u64) -> c_int {
    if out.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    *out = 46_080;
    HEXOCT_OK
}

/// Number of crystallographic representations (computes the classification
/// on first use).
///
/// # Safety
/// `ctx` must be a live context pointer; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_crystallographic_count(
    ctx: *mut HexoctContext,
    out: *mut u64,
) -> c_int {
    if ctx.is_null() || out.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let ctx = &mut *ctx;
    match ctx.pipeline() {
        Ok(p) => {
            *out = p.catalog.members.len() as u64;
            HEXOCT_OK
        }
        Err(e) => {
            ctx.set_error(e);
            HEXOCT_ERR_COMPUTE
        }
    }
}

/// Sizes of the two rotation-subgroup classes.
///
/// # Safety
/// `ctx` must be a live context pointer; `out_a` and `out_b` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_rotation_split(
    ctx: *mut HexoctContext,
    out_a: *mut u64,
    out_b: *mut u64,
) -> c_int {
    if ctx.is_null() || out_a.is_null() || out_b.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let ctx = &mut *ctx;
    match ctx.pipeline() {
        Ok(p) => {
            let (a, b) = p.catalog.split_sizes();
            *out_a = a as u64;
            *out_b = b as u64;
            HEXOCT_OK
        }
        Err(e) => {
            ctx.set_error(e);
            HEXOCT_ERR_COMPUTE
        }
    }
}

unsafe fn parse_name(
    ctx: &mut HexoctContext,
    name: *const c_char,
) -> Result<SubgroupName, c_int> {
    if name.is_null() {
        return Err(HEXOCT_ERR_NULL_ARGUMENT);
    }
    let s = match CStr::from_ptr(name).to_str() {
        Ok(s) => s,
        Err(_) => {
            ctx.set_error("subgroup name is not valid UTF-8");
            return Err(HEXOCT_ERR_INVALID_UTF8);
        }
    };
    SubgroupName::parse(s).ok_or_else(|| {
        ctx.set_error(format!("unknown subgroup name: {s}"));
        HEXOCT_ERR_BAD_NAME
    })
}

/// Regular degree of the named intersection graph
/// (T, D10, D6, D4, C5, C3, C2, or e).
///
/// # Safety
/// `ctx` must be a live context pointer; `name` a NUL-terminated string;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_graph_degree(
    ctx: *mut HexoctContext,
    name: *const c_char,
    out: *mut u64,
) -> c_int {
    if ctx.is_null() || out.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let ctx = &mut *ctx;
    let name = match parse_name(ctx, name) {
        Ok(n) => n,
        Err(code) => return code,
    };
    match ctx.graph(name) {
        Ok((_, report)) => {
            *out = report.degree as u64;
            HEXOCT_OK
        }
        Err(e) => {
            ctx.set_error(e);
            HEXOCT_ERR_COMPUTE
        }
    }
}

/// Full analysis of the named graph as a JSON document (adjacency rows,
/// exact spectrum, components, flags). Caller frees via
/// `hexoct_string_free`.
///
/// # Safety
/// `ctx` must be a live context pointer; `name` a NUL-terminated string;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_graph_json(
    ctx: *mut HexoctContext,
    name: *const c_char,
    out: *mut *mut c_char,
) -> c_int {
    if ctx.is_null() || out.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let ctx = &mut *ctx;
    let name = match parse_name(ctx, name) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let json = match ctx.graph(name) {
        Ok((graph, report)) => {
            let file = store::graph_to_file(graph, report, "");
            serde_json::to_string(&file).expect("graph serializes")
        }
        Err(e) => {
            ctx.set_error(e);
            return HEXOCT_ERR_COMPUTE;
        }
    };
    match CString::new(json) {
        Ok(s) => {
            *out = s.into_raw();
            HEXOCT_OK
        }
        Err(_) => {
            ctx.set_error("result contained an interior NUL");
            HEXOCT_ERR_COMPUTE
        }
    }
}

/// Runs the full claim checklist. Returns `HEXOCT_OK` when every claim
/// passes, `HEXOCT_ERR_CLAIMS_FAILED` (with the first failing claim in the
/// last-error message) otherwise. The report markdown is returned through
/// `out_report` when non-NULL; caller frees it.
///
/// # Safety
/// `ctx` must be a live context pointer; `out_report` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_verify(
    ctx: *mut HexoctContext,
    out_report: *mut *mut c_char,
) -> c_int {
    if ctx.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let ctx = &mut *ctx;
    for name in SubgroupName::ALL {
        if let Err(e) = ctx.graph(name) {
            ctx.set_error(e);
            return HEXOCT_ERR_COMPUTE;
        }
    }
    let p = ctx.pipeline.as_ref().expect("pipeline computed above");
    let outcomes = claims::evaluate(p, &ctx.graphs, &ExtraChecks::default());
    if !out_report.is_null() {
        let report = claims::render_report(&outcomes, Some(p));
        match CString::new(report) {
            Ok(s) => *out_report = s.into_raw(),
            Err(_) => *out_report = ptr::null_mut(),
        }
    }
    match outcomes.iter().find(|o| !o.pass) {
        None => HEXOCT_OK,
        Some(first) => {
            ctx.set_error(format!("claim failed: {} — {}", first.id, first.detail));
            HEXOCT_ERR_CLAIMS_FAILED
        }
    }
}

/// Multiplies two elements given in bracket notation
/// (e.g. `[000001|(1 2)]`); writes the product in the same notation.
/// Stateless. Caller frees the result.
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hexoct_element_multiply(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> c_int {
    if a.is_null() || b.is_null() || out.is_null() {
        return HEXOCT_ERR_NULL_ARGUMENT;
    }
    let parse = |p: *const c_char| -> Result<SignedPerm, c_int> {
        let s = CStr::from_ptr(p).to_str().map_err(|_| HEXOCT_ERR_INVALID_UTF8)?;
        s.parse().map_err(|_| HEXOCT_ERR_PARSE)
    };
    let x = match parse(a) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let y = match parse(b) {
        Ok(y) => y,
        Err(code) => return code,
    };
    match CString::new(x.multiply(&y).to_string()) {
        Ok(s) => {
            *out = s.into_raw();
            HEXOCT_OK
        }
        Err(_) => HEXOCT_ERR_PARSE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stateless_element_arithmetic() {
        let a = CString::new("[000000|(1 2)]").unwrap();
        let b = CString::new("[000001|()]").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        let code = unsafe { hexoct_element_multiply(a.as_ptr(), b.as_ptr(), &mut out) };
        assert_eq!(code, HEXOCT_OK);
        let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { hexoct_string_free(out) };
        assert_eq!(s, "[000001|(1 2)]");
    }

    #[test]
    fn parse_errors_are_reported() {
        let bad = CString::new("[junk]").unwrap();
        let good = CString::new("[000000|()]").unwrap();
        let mut out: *mut c_char = ptr::null_mut();
        let code = unsafe { hexoct_element_multiply(bad.as_ptr(), good.as_ptr(), &mut out) };
        assert_eq!(code, HEXOCT_ERR_PARSE);
        assert_eq!(
            unsafe { hexoct_element_multiply(ptr::null(), good.as_ptr(), &mut out) },
            HEXOCT_ERR_NULL_ARGUMENT
        );
    }

    #[test]
    fn order_without_context() {
        let mut out = 0u64;
        assert_eq!(unsafe { hexoct_group_order(&mut out) }, HEXOCT_OK);
        assert_eq!(out, 46_080);
    }

    #[test]
    fn context_classification_and_graphs() {
        let ctx = hexoct_context_new();
        assert!(!ctx.is_null());

        let mut count = 0u64;
        assert_eq!(unsafe { hexoct_crystallographic_count(ctx, &mut count) }, HEXOCT_OK);
        assert_eq!(count, 192);

        let (mut a, mut b) = (0u64, 0u64);
        assert_eq!(unsafe { hexoct_rotation_split(ctx, &mut a, &mut b) }, HEXOCT_OK);
        assert_eq!((a, b), (96, 96));

        let name = CString::new("C5").unwrap();
        let mut degree = 99u64;
        assert_eq!(
            unsafe { hexoct_graph_degree(ctx, name.as_ptr(), &mut degree) },
            HEXOCT_OK
        );
        assert_eq!(degree, 0);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(unsafe { hexoct_graph_json(ctx, name.as_ptr(), &mut json) }, HEXOCT_OK);
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap();
        assert!(text.contains("\"spectrum\":[[0,192]]"));
        unsafe { hexoct_string_free(json) };

        let bogus = CString::new("Q8").unwrap();
        assert_eq!(
            unsafe { hexoct_graph_degree(ctx, bogus.as_ptr(), &mut degree) },
            HEXOCT_ERR_BAD_NAME
        );
        let err = unsafe { CStr::from_ptr(hexoct_last_error(ctx)) }.to_str().unwrap();
        assert!(err.contains("Q8"));

        unsafe { hexoct_context_free(ctx) };
    }
}
