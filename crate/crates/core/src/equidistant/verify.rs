//! Numeric checks of the discrete parabola properties.
//!
//! Every verifier measures the polygon it is handed: vertices, the recorded
//! Simson point and line, and the recorded feet. Nothing is recomputed from
//! a configuration, so perturbed copies make meaningful negative controls.
//! Positions along `L` are read in the canonical frame of `(S, L)`.
//! Length residuals are compared with `tol.bound(scale)` and angular ones
//! (radians, or sines of small angles) with the same number, `scale` being
//! the bounding-box diagonal of the vertices and `S`.

use super::CanonicalFrame;
use crate::error::{Error, Result};
use crate::geom::{
    circumcircle, collinearity_residual, line_intersection, line_through, reflect_point,
    Intersection, Line, Point, Tolerance,
};
use crate::report::{Check, VerificationReport};
use crate::simson::{
    config_scale, find_simson_point, pedal_points, simson_candidates, Polygon, SimsonPolygon,
};

struct Setup<'a> {
    poly: &'a SimsonPolygon,
    local: Vec<Point>,
    s: f64,
    bound: f64,
    tol: Tolerance,
}

impl<'a> Setup<'a> {
    fn new(poly: &'a SimsonPolygon, tol: Tolerance) -> Self {
        let frame = CanonicalFrame::from_simson(poly.simson_point, &poly.simson_line);
        let local = poly.vertices().iter().map(|v| frame.to_local(*v)).collect();
        let s = frame.to_local(poly.simson_point).y;
        let bound = tol.bound(config_scale(&poly.polygon, &[poly.simson_point]));
        Setup {
            poly,
            local,
            s,
            bound,
            tol,
        }
    }

    /// 1-based vertex in world coordinates.
    fn v(&self, i: usize) -> Point {
        self.poly.polygon.vertex(i - 1)
    }

    /// 1-based vertex in local coordinates.
    fn lv(&self, i: usize) -> Point {
        self.local[(i - 1) % self.local.len()]
    }

    /// Line `V_i V_{i+1}`, 1-based.
    fn side(&self, i: usize) -> Option<Line> {
        line_through(self.v(i), self.v(i % self.poly.len() + 1), self.tol).ok()
    }

    fn n(&self) -> usize {
        self.poly.len()
    }
}

fn sin_between(u: Point, v: Point) -> f64 {
    let d = u.norm() * v.norm();
    if d == 0.0 {
        return f64::INFINITY;
    }
    (u.cross(v) / d).abs()
}

fn spread(xs: impl IntoIterator<Item = f64>) -> f64 {
    let (lo, hi) = xs
        .into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    if lo > hi {
        0.0
    } else {
        hi - lo
    }
}

/// Chords `V_i V_j` with equal `i + j` are parallel, parallel to the
/// tangent of `C` at `V_{(i+j)/2}` when `i + j` is even, and have their
/// midpoints on one perpendicular to `L`. Only `V_1 .. V_{n-1}` take part.
pub fn verify_parallel_chords(poly: &SimsonPolygon, tol: Tolerance) -> VerificationReport {
    let st = Setup::new(poly, tol);
    let mut report = VerificationReport::new(tol);
    let m = st.n() - 1;
    for k in 3..=(2 * m - 1) {
        let chords: Vec<(usize, usize)> = (1..=m)
            .filter_map(|i| {
                let j = k.checked_sub(i)?;
                (i < j && j <= m).then_some((i, j))
            })
            .collect();
        if chords.is_empty() {
            continue;
        }
        let indices: Vec<usize> = chords.iter().flat_map(|&(i, j)| [i, j]).collect();
        let dir = |&(i, j): &(usize, usize)| st.lv(j) - st.lv(i);
        if chords.len() >= 2 {
            let d0 = dir(&chords[0]);
            let res = chords[1..]
                .iter()
                .map(|c| sin_between(d0, dir(c)))
                .fold(0.0, f64::max);
            report.push(Check::measured("parallel chords", indices.clone(), res, st.bound));
            let mids = chords.iter().map(|&(i, j)| st.lv(i).midpoint(st.lv(j)).x);
            report.push(Check::measured(
                "chord midpoints on a perpendicular to L",
                indices.clone(),
                spread(mids),
                st.bound,
            ));
        }
        if k % 2 == 0 {
            let mid = k / 2;
            let x = st.lv(mid).x;
            let tangent = Point::new(1.0, x / (2.0 * st.s));
            let res = chords
                .iter()
                .map(|c| sin_between(tangent, dir(c)))
                .fold(0.0, f64::max);
            let mut idx = indices;
            idx.push(mid);
            report.push(Check::measured("chords parallel to tangent", idx, res, st.bound));
        }
    }
    report
}

/// At each vertex, the lines to the two adjacent feet are isogonal with
/// respect to `V_i V_i'` (`V_i'` the mirror image in `L`) and `V_i S`.
/// Holds for every Simson polygon. Vertices on `L` are skipped.
pub fn verify_isogonal(poly: &SimsonPolygon, tol: Tolerance) -> VerificationReport {
    let st = Setup::new(poly, tol);
    let mut report = VerificationReport::new(tol);
    let l = poly.simson_line;
    for i in 1..=st.n() {
        let v = st.v(i);
        let xi = poly.projection(i - 1);
        let xj = poly.projection(i);
        if l.signed_distance(v).abs() <= st.bound {
            report.skip("isogonal", vec![i], "vertex lies on L, its mirror image is itself");
            continue;
        }
        if v.distance(xi) <= st.bound || v.distance(xj) <= st.bound {
            report.skip("isogonal", vec![i], "vertex coincides with a foot");
            continue;
        }
        let mirrored = reflect_point(v, &l);
        let a = (mirrored - v).angle_to(xi - v);
        let b = (xj - v).angle_to(poly.simson_point - v);
        report.push(Check::measured("isogonal", vec![i], (a - b).abs(), st.bound));
    }
    report
}

/// The perpendicular to `L` through the midpoint of `V_i V_{i+1}`,
/// reflected in that side, passes through `S` (`i = 1 .. n-2`).
pub fn verify_optical(poly: &SimsonPolygon, tol: Tolerance) -> VerificationReport {
    let st = Setup::new(poly, tol);
    let mut report = VerificationReport::new(tol);
    let axis = poly.simson_line.normal();
    for i in 1..=st.n().saturating_sub(2) {
        let Some(side) = st.side(i) else {
            report.push(Check::failed("optical", vec![i], "side collapsed"));
            continue;
        };
        let m = st.v(i).midpoint(st.v(i + 1));
        let nrm = side.normal();
        let reflected = axis - nrm * (2.0 * axis.dot(nrm));
        let dist = reflected.cross(poly.simson_point - m).abs() / reflected.norm();
        report.push(Check::measured("optical", vec![i], dist, st.bound));
    }
    report
}

/// For sides `i < j` among `1 .. n-2`, the meet `W_{i,j}` and the midpoints
/// of chords `V_i V_{j+1}` and `V_{i+1} V_j` lie on one perpendicular to
/// `L`. Also, for each `k`, all `W_{a,b}` with `a + b = k` and all chord
/// midpoints `M_{a,b}` with `a + b = k + 1` share that perpendicular.
pub fn verify_archimedes(poly: &SimsonPolygon, tol: Tolerance) -> VerificationReport {
    let st = Setup::new(poly, tol);
    let frame = CanonicalFrame::from_simson(poly.simson_point, &poly.simson_line);
    let mut report = VerificationReport::new(tol);
    let sides = st.n().saturating_sub(2);
    let m = st.n() - 1;
    let meet = |i: usize, j: usize| -> Option<Point> {
        let (a, b) = (st.side(i)?, st.side(j)?);
        match line_intersection(&a, &b, tol) {
            Ok(Intersection::Finite { point }) => Some(frame.to_local(point)),
            _ => None,
        }
    };
    let mid = |i: usize, j: usize| st.lv(i).midpoint(st.lv(j));

    for i in 1..=sides {
        for j in i + 1..=sides {
            let Some(w) = meet(i, j) else {
                report.push(Check::failed("Archimedes median", vec![i, j], "sides do not meet"));
                continue;
            };
            let xs = [w.x, mid(i, j + 1).x, mid(i + 1, j).x];
            report.push(Check::measured("Archimedes median", vec![i, j], spread(xs), st.bound));
        }
    }

    for k in 3..=(2 * sides).saturating_sub(1) {
        let mut xs = Vec::new();
        let mut ok = true;
        for a in 1..=sides {
            let b = match k.checked_sub(a) {
                Some(b) if a < b && b <= sides => b,
                _ => continue,
            };
            match meet(a, b) {
                Some(w) => xs.push(w.x),
                None => ok = false,
            }
        }
        for a in 1..=m {
            if let Some(b) = (k + 1).checked_sub(a).filter(|&b| a < b && b <= m) {
                xs.push(mid(a, b).x);
            }
        }
        if !ok {
            report.push(Check::failed("Archimedes family", vec![k], "sides do not meet"));
        } else if xs.len() >= 2 {
            report.push(Check::measured("Archimedes family", vec![k], spread(xs), st.bound));
        }
    }
    report
}

/// The circumcircle of the triangle cut out by sides `i`, `j`, `k`
/// (1-based, side `i` = `V_i V_{i+1}`) passes through `S`.
pub fn verify_lambert(
    poly: &SimsonPolygon,
    i: usize,
    j: usize,
    k: usize,
    tol: Tolerance,
) -> Result<VerificationReport> {
    let st = Setup::new(poly, tol);
    let n = st.n();
    for idx in [i, j, k] {
        if !(1..=n).contains(&idx) {
            return Err(Error::IndexOutOfRange(format!("side {idx} not in 1..={n}")));
        }
    }
    if i == j || j == k || i == k {
        return Err(Error::IndexOutOfRange(format!("sides {i}, {j}, {k} must be distinct")));
    }
    let side = |a: usize| st.side(a).ok_or(Error::DegenerateSide(a));
    let lines = [side(i)?, side(j)?, side(k)?];
    let idx = [i, j, k];
    let mut corners = [Point::ORIGIN; 3];
    for (slot, (a, b)) in [(0, 1), (1, 2), (0, 2)].into_iter().enumerate() {
        corners[slot] = match line_intersection(&lines[a], &lines[b], tol) {
            Ok(Intersection::Finite { point }) => point,
            Ok(Intersection::AtInfinity { .. }) => return Err(Error::ParallelSides(idx[a], idx[b])),
            Err(_) => {
                return Err(Error::DegenerateConfiguration(format!(
                    "sides {} and {} coincide",
                    idx[a], idx[b]
                )))
            }
        };
    }
    let circle = circumcircle(corners[0], corners[1], corners[2], tol).map_err(|_| {
        Error::DegenerateConfiguration(format!("sides {i}, {j}, {k} are concurrent"))
    })?;
    let scale = config_scale(&poly.polygon, &[poly.simson_point]).max(circle.radius);
    let mut report = VerificationReport::new(tol);
    report.push(Check::measured(
        "Lambert circle through S",
        vec![i, j, k],
        circle.residual(poly.simson_point),
        tol.bound(scale),
    ));
    Ok(report)
}

/// [`verify_lambert`] over every triple of sides; triples with parallel or
/// concurrent sides are skipped.
pub fn verify_lambert_all(poly: &SimsonPolygon, tol: Tolerance) -> VerificationReport {
    let n = poly.len();
    let mut report = VerificationReport::new(tol);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                match verify_lambert(poly, i, j, k, tol) {
                    Ok(r) => report.merge(r),
                    Err(e) => report.skip("Lambert circle through S", vec![i, j, k], e.to_string()),
                }
            }
        }
    }
    report
}

/// Checks that the polygon admits a Simson point through its
/// characterization circles and, when one is claimed, that the claimed
/// point has collinear pedal points.
pub fn verify_simson(poly: &Polygon, claimed: Option<Point>, tol: Tolerance) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(tol);
    let cands = simson_candidates(poly, tol)?;
    if poly.len() == 3 {
        report.skip(
            "characterization circles",
            vec![],
            "triangle: every point of the circumcircle is a Simson point",
        );
    } else {
        let all: Vec<usize> = (1..=poly.len()).collect();
        let best = cands
            .iter()
            .min_by(|a, b| a.violation.total_cmp(&b.violation));
        let check = match best {
            Some(c) if c.violation <= 1.0 => {
                let bound = if c.violation > 0.0 { c.residual / c.violation } else { tol.bound(poly.scale()) };
                Check::measured("characterization circles", all, c.residual, bound)
                    .with_note(format!("common point ({}, {})", c.point.x, c.point.y))
            }
            Some(c) => {
                let bound = c.residual / c.violation;
                Check::measured("characterization circles", all, c.residual, bound)
                    .with_note("no common intersection of characterization circles")
            }
            None => Check::failed(
                "characterization circles",
                all,
                "no common intersection of characterization circles",
            ),
        };
        report.push(check);
    }
    if let Some(s) = claimed {
        let feet = pedal_points(s, poly, tol)?;
        let bound = tol.bound(crate::geom::bbox_diagonal(&feet));
        report.push(Check::measured(
            "pedal points collinear",
            (1..=poly.len()).collect(),
            collinearity_residual(&feet),
            bound,
        ));
    }
    Ok(report)
}

/// Which verifiers [`verify_polygon`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckSet {
    pub simson: bool,
    pub parallel_chords: bool,
    pub isogonal: bool,
    pub optical: bool,
    pub archimedes: bool,
    pub lambert: bool,
}

impl CheckSet {
    pub const ALL: CheckSet = CheckSet {
        simson: true,
        parallel_chords: true,
        isogonal: true,
        optical: true,
        archimedes: true,
        lambert: true,
    };

    fn needs_simson_polygon(&self) -> bool {
        self.parallel_chords || self.isogonal || self.optical || self.archimedes || self.lambert
    }
}

/// Runs the selected verifiers on `polygon`. The discrete checks use the
/// recorded Simson data when given and a recognized Simson point otherwise;
/// without either they report a single failure. `triple` restricts the
/// circumcircle check to three sides (1-based).
pub fn verify_polygon(
    polygon: &Polygon,
    recorded: Option<&SimsonPolygon>,
    checks: CheckSet,
    triple: Option<[usize; 3]>,
    tol: Tolerance,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(tol);
    if checks.simson {
        report.merge(verify_simson(polygon, recorded.map(|sp| sp.simson_point), tol)?);
    }
    if !checks.needs_simson_polygon() {
        return Ok(report);
    }
    let sp = match recorded {
        Some(sp) => sp.clone(),
        None => match find_simson_point(polygon, tol)? {
            Some(cert) => SimsonPolygon::from_certificate(polygon.clone(), &cert),
            None => {
                report.push(Check::failed("Simson point", vec![], "polygon has no Simson point"));
                return Ok(report);
            }
        },
    };
    if checks.parallel_chords {
        report.merge(verify_parallel_chords(&sp, tol));
    }
    if checks.isogonal {
        report.merge(verify_isogonal(&sp, tol));
    }
    if checks.optical {
        report.merge(verify_optical(&sp, tol));
    }
    if checks.archimedes {
        report.merge(verify_archimedes(&sp, tol));
    }
    if checks.lambert {
        match triple {
            Some([i, j, k]) => report.merge(verify_lambert(&sp, i, j, k, tol)?),
            None => report.merge(verify_lambert_all(&sp, tol)),
        }
    }
    Ok(report)
}
