use serde::{Deserialize, Serialize};

use super::{Point, Tolerance};
use crate::error::{Error, Result};

/// The line `a*x + b*y + c = 0`, kept with `a^2 + b^2 = 1` and the first
/// nonzero of `(a, b)` positive, so equal lines have equal coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = a.hypot(b);
        if n == 0.0 {
            return Err(Error::InvalidLine);
        }
        let sign = if a > 0.0 || (a == 0.0 && b > 0.0) { 1.0 } else { -1.0 };
        let k = sign / n;
        // -0.0 would break the canonical form under PartialEq-based tests
        let fix = |v: f64| if v == 0.0 { 0.0 } else { v };
        Ok(Line {
            a: fix(a * k),
            b: fix(b * k),
            c: fix(c * k),
        })
    }

    /// Line through `p` with the given normal vector.
    pub fn with_normal(p: Point, normal: Point) -> Result<Self> {
        Line::new(normal.x, normal.y, -normal.dot(p))
    }

    /// Line through `p` along `dir`.
    pub fn with_direction(p: Point, dir: Point) -> Result<Self> {
        Line::with_normal(p, dir.perp())
    }

    /// The x-axis.
    pub fn horizontal(y: f64) -> Line {
        Line { a: 0.0, b: 1.0, c: 0.0 - y }
    }

    pub fn vertical(x: f64) -> Line {
        Line { a: 1.0, b: 0.0, c: 0.0 - x }
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }
    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }
    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn coefficients(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Unit normal `(a, b)`.
    #[inline]
    pub fn normal(&self) -> Point {
        Point::new(self.a, self.b)
    }

    /// Unit direction `(b, -a)`; the normal is its quarter-turn to the left.
    #[inline]
    pub fn direction(&self) -> Point {
        Point::new(self.b, -self.a)
    }

    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn contains(&self, p: Point, tol: Tolerance) -> bool {
        self.signed_distance(p).abs() <= tol.bound(p.norm())
    }

    /// Foot of the perpendicular from the origin.
    pub fn closest_to_origin(&self) -> Point {
        self.normal() * -self.c
    }

    /// Slope `dy/dx`, `None` for vertical lines.
    pub fn slope(&self) -> Option<f64> {
        (self.b != 0.0).then(|| -self.a / self.b)
    }
}

impl TryFrom<[f64; 3]> for Line {
    type Error = Error;
    fn try_from([a, b, c]: [f64; 3]) -> Result<Self> {
        Line::new(a, b, c)
    }
}

impl From<Line> for [f64; 3] {
    fn from(l: Line) -> Self {
        l.coefficients()
    }
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

/// Result of intersecting two lines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Intersection {
    Finite { point: Point },
    /// Parallel lines meet at the point at infinity in this (unit) direction.
    AtInfinity { direction: Point },
}

impl Intersection {
    pub fn finite(self) -> Option<Point> {
        match self {
            Intersection::Finite { point } => Some(point),
            Intersection::AtInfinity { .. } => None,
        }
    }
}

pub fn line_through(p: Point, q: Point, tol: Tolerance) -> Result<Line> {
    let d = q - p;
    if d.norm() <= tol.bound(p.norm().max(q.norm())) {
        return Err(Error::CoincidentPoints);
    }
    // anchor at the midpoint to balance rounding between the two inputs
    Line::with_direction(p.midpoint(q), d)
}

pub fn foot_of_perpendicular(p: Point, l: &Line) -> Point {
    p - l.normal() * l.signed_distance(p)
}

pub fn reflect_point(p: Point, l: &Line) -> Point {
    p - l.normal() * (2.0 * l.signed_distance(p))
}

/// Parallelism is decided on `|a1*b2 - a2*b1|`, the sine of the angle
/// between the lines, against `tol.abs_eps`.
pub fn line_intersection(l1: &Line, l2: &Line, tol: Tolerance) -> Result<Intersection> {
    let det = l1.a * l2.b - l2.a * l1.b;
    if det.abs() <= tol.abs_eps {
        let same_side = l1.normal().dot(l2.normal()) >= 0.0;
        let c2 = if same_side { l2.c } else { -l2.c };
        if (l1.c - c2).abs() <= tol.bound(l1.c.abs().max(l2.c.abs())) {
            return Err(Error::IdenticalLines);
        }
        return Ok(Intersection::AtInfinity {
            direction: l1.direction(),
        });
    }
    let x = (l1.b * l2.c - l2.b * l1.c) / det;
    let y = (l2.a * l1.c - l1.a * l2.c) / det;
    Ok(Intersection::Finite {
        point: Point::new(x, y),
    })
}

/// Total-least-squares line through a point set, `None` when all points
/// coincide or the slice has fewer than two points.
pub fn fit_line(points: &[Point]) -> Option<Line> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for p in points {
        let (dx, dy) = (p.x - cx, p.y - cy);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx + syy == 0.0 {
        return None;
    }
    // principal axis of the 2x2 scatter matrix
    let theta = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let dir = Point::new(theta.cos(), theta.sin());
    Line::with_direction(Point::new(cx, cy), dir).ok()
}
