//! Equidistant Simson polygons: feet of the Simson point equally spaced on
//! the Simson line.
//!
//! Everything here lives in the canonical frame where `L` is the x-axis and
//! `S = (0, s)`. The feet are `X_i = (X + (i-1)Δ, 0)` and, for `i < n`, the
//! vertex `V_i` (meet of the sides through `X_i` and `X_{i+1}`) is
//!
//! ```text
//! V_i = (2X + (2i-1)Δ, (X + (i-1)Δ)(X + iΔ) / s)
//! ```
//!
//! which lies on `y = (x² - Δ²) / (4s)` whatever `X` is. The closing vertex
//! `V_n` is off that parabola. [`CanonicalFrame`] carries configurations to
//! and from arbitrary positions.

mod convergence;
mod verify;

pub use convergence::{convergence_table, hausdorff_to_parabola, observed_orders, ConvergenceRow};
pub use verify::{
    verify_archimedes, verify_isogonal, verify_lambert, verify_lambert_all, verify_optical,
    verify_parallel_chords, verify_polygon, verify_simson, CheckSet,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{foot_of_perpendicular, line_intersection, Line, Point, Tolerance};
use crate::simson::{Polygon, SimsonPolygon};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquidistantConfig {
    /// Signed height of `S` above `L`.
    pub s: f64,
    /// Abscissa of the first foot `X_1`.
    pub x0: f64,
    /// Spacing of consecutive feet.
    pub delta: f64,
    pub n: usize,
}

impl EquidistantConfig {
    pub fn new(s: f64, x0: f64, delta: f64, n: usize) -> Result<Self> {
        if !(s.is_finite() && x0.is_finite() && delta.is_finite()) {
            return Err(Error::InvalidConfig("non-finite parameter".into()));
        }
        if s == 0.0 {
            return Err(Error::InvalidConfig("s must be nonzero".into()));
        }
        if delta <= 0.0 {
            return Err(Error::InvalidConfig(format!("delta must be positive, got {delta}")));
        }
        if n < 3 {
            return Err(Error::InvalidConfig(format!("n must be at least 3, got {n}")));
        }
        Ok(EquidistantConfig { s, x0, delta, n })
    }

    /// Abscissa of `X_i`, 1-based.
    #[inline]
    pub fn foot_x(&self, i: usize) -> f64 {
        self.x0 + (i as f64 - 1.0) * self.delta
    }

    /// Closed-form `V_i` for `1 <= i <= n-1`.
    pub fn vertex(&self, i: usize) -> Result<Point> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange(format!(
                "vertex {i} not in 1..={}",
                self.n - 1
            )));
        }
        let (xi, xj) = (self.foot_x(i), self.foot_x(i + 1));
        Ok(Point::new(xi + xj, xi * xj / self.s))
    }

    /// Closed-form midpoint `M_i` of `V_i V_{i+1}` for `1 <= i <= n-2`.
    pub fn side_midpoint(&self, i: usize) -> Result<Point> {
        if i == 0 || i + 1 >= self.n {
            return Err(Error::IndexOutOfRange(format!(
                "midpoint {i} not in 1..={}",
                self.n - 2
            )));
        }
        let t = self.foot_x(i + 1);
        Ok(Point::new(2.0 * t, t * t / self.s))
    }
}

/// `y = (x² - c) / (4s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Parabola {
    pub s: f64,
    pub c: f64,
}

impl Parabola {
    pub fn new(s: f64, c: f64) -> Result<Self> {
        if s == 0.0 || !s.is_finite() || !c.is_finite() {
            return Err(Error::InvalidConfig("parabola needs finite nonzero s".into()));
        }
        Ok(Parabola { s, c })
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (x * x - self.c) / (4.0 * self.s)
    }

    #[inline]
    pub fn slope(&self, x: f64) -> f64 {
        x / (2.0 * self.s)
    }

    pub fn vertex(&self) -> Point {
        Point::new(0.0, -self.c / (4.0 * self.s))
    }

    /// Focal length is `s`, so the focus sits `s` above the vertex.
    pub fn focus(&self) -> Point {
        Point::new(0.0, self.s - self.c / (4.0 * self.s))
    }

    pub fn directrix(&self) -> Line {
        Line::horizontal(-self.s - self.c / (4.0 * self.s))
    }

    /// Vertical residual `|y - p(x)|`.
    pub fn residual(&self, p: Point) -> f64 {
        (p.y - self.eval(p.x)).abs()
    }
}

/// The parabola through `V_1 .. V_{n-1}`.
pub fn associated_parabola(cfg: &EquidistantConfig) -> Parabola {
    Parabola {
        s: cfg.s,
        c: cfg.delta * cfg.delta,
    }
}

/// The parabola through the side midpoints, tangent to the sides there and
/// with focus `S`.
pub fn midpoint_parabola(cfg: &EquidistantConfig) -> Parabola {
    Parabola { s: cfg.s, c: 0.0 }
}

/// Slope of chord `V_i V_j`, `1 <= i < j <= n-1`.
pub fn chord_slope(cfg: &EquidistantConfig, i: usize, j: usize) -> Result<f64> {
    if !(1 <= i && i < j && j < cfg.n) {
        return Err(Error::IndexOutOfRange(format!(
            "chord ({i}, {j}) needs 1 <= i < j <= {}",
            cfg.n - 1
        )));
    }
    Ok((2.0 * cfg.x0 + (i + j - 1) as f64 * cfg.delta) / (2.0 * cfg.s))
}

/// Meet `W_{i,j}` of the sides `V_i V_{i+1}` and `V_j V_{j+1}`,
/// `1 <= i, j <= n-2`, `i != j`.
pub fn w_point(cfg: &EquidistantConfig, i: usize, j: usize) -> Result<Point> {
    let max = cfg.n - 2;
    if i == j || !(1..=max).contains(&i) || !(1..=max).contains(&j) {
        return Err(Error::IndexOutOfRange(format!(
            "W({i}, {j}) needs distinct indices in 1..={max}"
        )));
    }
    let (ti, tj) = (cfg.foot_x(i + 1), cfg.foot_x(j + 1));
    Ok(Point::new(ti + tj, ti * tj / cfg.s))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquidistantPolygon {
    pub config: EquidistantConfig,
    pub simson: SimsonPolygon,
}

impl EquidistantPolygon {
    pub fn vertices(&self) -> &[Point] {
        self.simson.vertices()
    }

    pub fn projections(&self) -> &[Point] {
        &self.simson.projections
    }

    pub fn simson_point(&self) -> Point {
        self.simson.simson_point
    }

    pub fn simson_line(&self) -> Line {
        self.simson.simson_line
    }

    /// The vertices lying on the associated parabola, `V_1 .. V_{n-1}`.
    pub fn parabola_vertices(&self) -> &[Point] {
        &self.vertices()[..self.config.n - 1]
    }

    /// Same polygon placed in world coordinates by `frame`.
    pub fn to_world(&self, frame: &CanonicalFrame) -> Result<SimsonPolygon> {
        frame.polygon_to_world(&self.simson)
    }
}

impl AsRef<SimsonPolygon> for EquidistantPolygon {
    fn as_ref(&self) -> &SimsonPolygon {
        &self.simson
    }
}

/// Equidistant Simson polygon in the canonical frame.
pub fn make_equidistant(cfg: &EquidistantConfig) -> Result<EquidistantPolygon> {
    let cfg = EquidistantConfig::new(cfg.s, cfg.x0, cfg.delta, cfg.n)?;
    let n = cfg.n;
    let s_point = Point::new(0.0, cfg.s);
    let feet: Vec<Point> = (1..=n).map(|i| Point::new(cfg.foot_x(i), 0.0)).collect();
    let mut vertices = (1..n).map(|i| cfg.vertex(i)).collect::<Result<Vec<_>>>()?;
    // closing vertex from the sides through X_n and X_1
    let first = Line::with_normal(feet[0], feet[0] - s_point)?;
    let last = Line::with_normal(feet[n - 1], feet[n - 1] - s_point)?;
    let closing = line_intersection(&last, &first, Tolerance::DEFAULT)?
        .finite()
        .ok_or_else(|| Error::InvalidConfig("closing sides are parallel".into()))?;
    vertices.push(closing);
    Ok(EquidistantPolygon {
        config: cfg,
        simson: SimsonPolygon {
            polygon: Polygon::new(vertices)?,
            simson_point: s_point,
            simson_line: Line::horizontal(0.0),
            projections: feet,
        },
    })
}

/// Equidistant polygon for an arbitrary `S`, `L` and first foot `X_1`; the
/// feet advance along `L` in the direction of `l.direction()`.
pub fn make_equidistant_at(
    s_point: Point,
    l: &Line,
    first_foot: Point,
    delta: f64,
    n: usize,
    tol: Tolerance,
) -> Result<SimsonPolygon> {
    let frame = CanonicalFrame::from_simson(s_point, l);
    let local_s = frame.to_local(s_point);
    let local_x = frame.to_local(first_foot);
    let scale = s_point.distance(first_foot);
    if local_s.y.abs() <= tol.bound(scale) {
        return Err(Error::PointOnLine);
    }
    if local_x.y.abs() > tol.bound(scale) {
        return Err(Error::FootOffLine(0));
    }
    let cfg = EquidistantConfig::new(local_s.y, local_x.x, delta, n)?;
    make_equidistant(&cfg)?.to_world(&frame)
}

/// Rigid motion taking the canonical frame (`L` = x-axis, `S` on the
/// y-axis) to world coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalFrame {
    pub origin: Point,
    /// Unit vector along `L`; the local y-axis is its left normal.
    pub x_axis: Point,
}

impl CanonicalFrame {
    pub const IDENTITY: CanonicalFrame = CanonicalFrame {
        origin: Point::ORIGIN,
        x_axis: Point::new(1.0, 0.0),
    };

    /// Origin at the foot of `S` on `L`, x-axis along `l.direction()`.
    pub fn from_simson(s_point: Point, l: &Line) -> Self {
        CanonicalFrame {
            origin: foot_of_perpendicular(s_point, l),
            x_axis: l.direction(),
        }
    }

    #[inline]
    pub fn y_axis(&self) -> Point {
        self.x_axis.perp()
    }

    pub fn to_local(&self, p: Point) -> Point {
        let d = p - self.origin;
        Point::new(d.dot(self.x_axis), d.dot(self.y_axis()))
    }

    pub fn to_world(&self, q: Point) -> Point {
        self.origin + self.x_axis * q.x + self.y_axis() * q.y
    }

    pub fn line_to_world(&self, l: &Line) -> Result<Line> {
        let p = self.to_world(l.closest_to_origin());
        let d = self.to_world(l.direction()) - self.to_world(Point::ORIGIN);
        Line::with_direction(p, d)
    }

    pub fn polygon_to_world(&self, sp: &SimsonPolygon) -> Result<SimsonPolygon> {
        Ok(SimsonPolygon {
            polygon: Polygon::new(sp.vertices().iter().map(|v| self.to_world(*v)).collect())?,
            simson_point: self.to_world(sp.simson_point),
            simson_line: self.line_to_world(&sp.simson_line)?,
            projections: sp.projections.iter().map(|x| self.to_world(*x)).collect(),
        })
    }
}
