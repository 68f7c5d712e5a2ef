//! C interface to the `simson` library.
//!
//! Polygons live behind an opaque [`SimsonPolygonHandle`] created by one of
//! the `simson_polygon_*` constructors and released with
//! [`simson_polygon_free`]. Every function returns a [`SimsonStatus`]; on
//! failure [`simson_last_error_message`] describes the problem. Panics are
//! caught at the boundary and reported as `SIMSON_STATUS_PANIC`.
//!
//! The generated header is `include/simson.h`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use simson::approx::{optimal_knots, ApproxProblem};
use simson::equidistant::{make_equidistant, verify_polygon, CheckSet, EquidistantConfig};
use simson::geom::{Line, Point, Tolerance};
use simson::simson::{construct_simson_polygon, find_simson_point, miquel_point, CompleteQuadrilateral};
use simson::{Error, Polygon, SimsonPolygon};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimsonPoint {
    pub x: f64,
    pub y: f64,
}

/// `a x + b y + c = 0` with `a² + b² = 1`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimsonLine {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Comparisons at length scale `L` allow `abs_eps + rel_eps * L`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimsonTolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimsonStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Degenerate = 3,
    NotFound = 4,
    Panic = 5,
}

pub const SIMSON_CHECK_SIMSON: u32 = 1;
pub const SIMSON_CHECK_PARALLEL_CHORDS: u32 = 1 << 1;
pub const SIMSON_CHECK_ISOGONAL: u32 = 1 << 2;
pub const SIMSON_CHECK_OPTICAL: u32 = 1 << 3;
pub const SIMSON_CHECK_ARCHIMEDES: u32 = 1 << 4;
pub const SIMSON_CHECK_LAMBERT: u32 = 1 << 5;
pub const SIMSON_CHECK_ALL: u32 = (1 << 6) - 1;

/// A polygon and, once known, its Simson point, line and feet.
pub struct SimsonPolygonHandle {
    polygon: Polygon,
    simson: Option<SimsonPolygon>,
}

impl From<Point> for SimsonPoint {
    fn from(p: Point) -> Self {
        SimsonPoint { x: p.x, y: p.y }
    }
}

impl From<SimsonPoint> for Point {
    fn from(p: SimsonPoint) -> Self {
        Point::new(p.x, p.y)
    }
}

impl From<Line> for SimsonLine {
    fn from(l: Line) -> Self {
        let [a, b, c] = l.coefficients();
        SimsonLine { a, b, c }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: SimsonStatus,
    message: String,
}

impl Failure {
    fn new(status: SimsonStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }

    fn null(what: &str) -> Self {
        Failure::new(SimsonStatus::NullPointer, format!("{what} is null"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_)
            | Error::InvalidTolerance
            | Error::IndexOutOfRange(_)
            | Error::BadInterval(..)
            | Error::UnorderedKnots
            | Error::OutOfDomain(..)
            | Error::InvalidProblem(_)
            | Error::TooFewVertices(_)
            | Error::NonFinite
            | Error::InvalidLine => SimsonStatus::InvalidArgument,
            _ => SimsonStatus::Degenerate,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn call(f: impl FnOnce() -> Result<(), Failure>) -> SimsonStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            SimsonStatus::Ok
        }
        Ok(Err(failure)) => {
            set_error(Some(failure.message));
            failure.status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            SimsonStatus::Panic
        }
    }
}

fn tolerance(t: SimsonTolerance) -> Result<Tolerance, Failure> {
    Ok(Tolerance::new(t.abs_eps, t.rel_eps)?)
}

unsafe fn points(ptr: *const SimsonPoint, count: usize, what: &str) -> Result<Vec<Point>, Failure> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if ptr.is_null() {
        return Err(Failure::null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, count).iter().map(|p| Point::from(*p)).collect())
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a>(h: *const SimsonPolygonHandle) -> Result<&'a SimsonPolygonHandle, Failure> {
    h.as_ref().ok_or_else(|| Failure::null("polygon handle"))
}

unsafe fn publish(out: *mut *mut SimsonPolygonHandle, h: SimsonPolygonHandle) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(h)), "output handle pointer")
}

fn line_of(l: SimsonLine) -> Result<Line, Failure> {
    Ok(Line::new(l.a, l.b, l.c)?)
}

/// The default tolerance, `1e-9` absolute and relative.
#[no_mangle]
pub extern "C" fn simson_tolerance_default() -> SimsonTolerance {
    let t = Tolerance::DEFAULT;
    SimsonTolerance {
        abs_eps: t.abs_eps,
        rel_eps: t.rel_eps,
    }
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call into the library.
#[no_mangle]
pub extern "C" fn simson_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Polygon with the given vertices and no Simson data.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_from_vertices(
    vertices: *const SimsonPoint,
    count: usize,
    out: *mut *mut SimsonPolygonHandle,
) -> SimsonStatus {
    call(|| {
        let polygon = Polygon::new(points(vertices, count, "vertices")?)?;
        publish(out, SimsonPolygonHandle { polygon, simson: None })
    })
}

/// Equidistant polygon with `S = (0, s)`, `L` the x-axis and feet
/// `x0, x0 + delta, ...`.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_equidistant(
    s: f64,
    x0: f64,
    delta: f64,
    n: usize,
    out: *mut *mut SimsonPolygonHandle,
) -> SimsonStatus {
    call(|| {
        let eq = make_equidistant(&EquidistantConfig::new(s, x0, delta, n)?)?;
        publish(
            out,
            SimsonPolygonHandle {
                polygon: eq.simson.polygon.clone(),
                simson: Some(eq.simson),
            },
        )
    })
}

/// Polygon whose sides pass through `feet` perpendicular to the lines
/// joining them to `simson_point`.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_construct(
    simson_point: SimsonPoint,
    simson_line: SimsonLine,
    feet: *const SimsonPoint,
    count: usize,
    tol: SimsonTolerance,
    out: *mut *mut SimsonPolygonHandle,
) -> SimsonStatus {
    call(|| {
        let feet = points(feet, count, "feet")?;
        let sp = construct_simson_polygon(simson_point.into(), &line_of(simson_line)?, &feet, tolerance(tol)?)?;
        publish(
            out,
            SimsonPolygonHandle {
                polygon: sp.polygon.clone(),
                simson: Some(sp),
            },
        )
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_free(handle: *mut SimsonPolygonHandle) {
    if !handle.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(handle))));
    }
}

#[no_mangle]
pub unsafe extern "C" fn simson_polygon_len(handle: *const SimsonPolygonHandle, out_len: *mut usize) -> SimsonStatus {
    call(|| write(out_len, deref(handle)?.polygon.len(), "out_len"))
}

/// Vertex `index` (0-based).
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_vertex(
    handle: *const SimsonPolygonHandle,
    index: usize,
    out: *mut SimsonPoint,
) -> SimsonStatus {
    call(|| {
        let h = deref(handle)?;
        let v = h.polygon.vertices().get(index).ok_or_else(|| {
            Failure::new(
                SimsonStatus::InvalidArgument,
                format!("vertex {index} out of range for {} vertices", h.polygon.len()),
            )
        })?;
        write(out, (*v).into(), "out")
    })
}

/// The recorded Simson point and line; `NOT_FOUND` when none is known yet.
/// Either output pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_simson_point(
    handle: *const SimsonPolygonHandle,
    out_point: *mut SimsonPoint,
    out_line: *mut SimsonLine,
) -> SimsonStatus {
    call(|| {
        let sp = deref(handle)?
            .simson
            .as_ref()
            .ok_or_else(|| Failure::new(SimsonStatus::NotFound, "no Simson point recorded"))?;
        if !out_point.is_null() {
            out_point.write(sp.simson_point.into());
        }
        if !out_line.is_null() {
            out_line.write(sp.simson_line.into());
        }
        Ok(())
    })
}

/// Searches for a Simson point and records it in the handle. Returns
/// `NOT_FOUND` when the polygon has none. Either output pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_find_point(
    handle: *mut SimsonPolygonHandle,
    tol: SimsonTolerance,
    out_point: *mut SimsonPoint,
    out_line: *mut SimsonLine,
) -> SimsonStatus {
    call(|| {
        let h = handle.as_mut().ok_or_else(|| Failure::null("polygon handle"))?;
        let cert = find_simson_point(&h.polygon, tolerance(tol)?)?
            .ok_or_else(|| Failure::new(SimsonStatus::NotFound, "polygon has no Simson point"))?;
        if !out_point.is_null() {
            out_point.write(cert.simson_point.into());
        }
        if !out_line.is_null() {
            out_line.write(cert.simson_line.into());
        }
        h.simson = Some(SimsonPolygon::from_certificate(h.polygon.clone(), &cert));
        Ok(())
    })
}

/// Runs the checks selected by `checks` (a mask of `SIMSON_CHECK_*`).
/// `out_pass` receives the overall verdict; when `out_json` is not null it
/// receives the full report, to be released with [`simson_string_free`].
#[no_mangle]
pub unsafe extern "C" fn simson_polygon_verify(
    handle: *const SimsonPolygonHandle,
    checks: u32,
    tol: SimsonTolerance,
    out_pass: *mut bool,
    out_json: *mut *mut c_char,
) -> SimsonStatus {
    call(|| {
        let h = deref(handle)?;
        if checks == 0 || checks & !SIMSON_CHECK_ALL != 0 {
            return Err(Failure::new(SimsonStatus::InvalidArgument, format!("bad check mask {checks:#x}")));
        }
        let set = CheckSet {
            simson: checks & SIMSON_CHECK_SIMSON != 0,
            parallel_chords: checks & SIMSON_CHECK_PARALLEL_CHORDS != 0,
            isogonal: checks & SIMSON_CHECK_ISOGONAL != 0,
            optical: checks & SIMSON_CHECK_OPTICAL != 0,
            archimedes: checks & SIMSON_CHECK_ARCHIMEDES != 0,
            lambert: checks & SIMSON_CHECK_LAMBERT != 0,
        };
        let report = verify_polygon(&h.polygon, h.simson.as_ref(), set, None, tolerance(tol)?)?;
        write(out_pass, report.overall, "out_pass")?;
        if !out_json.is_null() {
            let text = serde_json::to_string(&report).expect("report serialization cannot fail");
            out_json.write(CString::new(text).expect("JSON has no interior NUL").into_raw());
        }
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn simson_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Equally spaced optimal knots for interpolating `(x² - delta²)/(4s)` on
/// `[a, b]` with `n` segments. `knots` must hold `n + 1` values; either
/// error output may be null.
#[no_mangle]
pub unsafe extern "C" fn simson_approx_optimal(
    s: f64,
    delta: f64,
    a: f64,
    b: f64,
    n: usize,
    knots: *mut f64,
    knots_len: usize,
    out_l1: *mut f64,
    out_l2: *mut f64,
) -> SimsonStatus {
    call(|| {
        let result = optimal_knots(&ApproxProblem::new(s, delta, a, b, n)?)?;
        if knots.is_null() {
            return Err(Failure::null("knots"));
        }
        if knots_len < result.knots.len() {
            return Err(Failure::new(
                SimsonStatus::InvalidArgument,
                format!("knots buffer holds {knots_len}, need {}", result.knots.len()),
            ));
        }
        ptr::copy_nonoverlapping(result.knots.as_ptr(), knots, result.knots.len());
        if !out_l1.is_null() {
            out_l1.write(result.l1_error);
        }
        if !out_l2.is_null() {
            out_l2.write(result.l2_error);
        }
        Ok(())
    })
}

/// Common point of the circumcircles of the four triangles formed by
/// `lines[0..4]`.
#[no_mangle]
pub unsafe extern "C" fn simson_miquel_point(
    lines: *const SimsonLine,
    tol: SimsonTolerance,
    out: *mut SimsonPoint,
) -> SimsonStatus {
    call(|| {
        if lines.is_null() {
            return Err(Failure::null("lines"));
        }
        let raw = std::slice::from_raw_parts(lines, 4);
        let ls = [line_of(raw[0])?, line_of(raw[1])?, line_of(raw[2])?, line_of(raw[3])?];
        let tol = tolerance(tol)?;
        let m = miquel_point(&CompleteQuadrilateral::new(ls, tol)?, tol)?;
        write(out, m.into(), "out")
    })
}
