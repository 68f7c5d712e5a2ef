use serde::{Deserialize, Serialize};

use super::{config_scale, is_simson_point, Polygon, SimsonCertificate};
use crate::error::{Error, Result};
use crate::geom::{
    circle_intersection, circle_line_intersection, circumcircle, line_intersection, Circle,
    Intersection, Line, Point, Tolerance,
};

/// The circle `(V_i W_i V_{i+1})`, or the side line itself when the two
/// neighbouring sides are parallel and `W_i` sits at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CharElement {
    Circle(Circle),
    Line(Line),
}

impl CharElement {
    pub fn residual(&self, p: Point) -> f64 {
        match self {
            CharElement::Circle(c) => c.residual(p),
            CharElement::Line(l) => l.signed_distance(p).abs(),
        }
    }

    /// Residual bound at the element's own scale, but never below `scale`.
    fn bound(&self, tol: Tolerance, scale: f64) -> f64 {
        match self {
            CharElement::Circle(c) => tol.bound(scale.max(c.radius)),
            CharElement::Line(_) => tol.bound(scale),
        }
    }

    fn same_as(&self, other: &CharElement, tol: Tolerance, scale: f64) -> bool {
        match (self, other) {
            (CharElement::Circle(a), CharElement::Circle(b)) => {
                let eps = tol.bound(scale.max(a.radius));
                a.center.distance(b.center) <= eps && (a.radius - b.radius).abs() <= eps
            }
            (CharElement::Line(a), CharElement::Line(b)) => {
                matches!(line_intersection(a, b, tol), Err(Error::IdenticalLines))
            }
            _ => false,
        }
    }

    fn meet(&self, other: &CharElement, tol: Tolerance) -> Vec<Point> {
        match (self, other) {
            (CharElement::Circle(a), CharElement::Circle(b)) => {
                circle_intersection(a, b, tol).unwrap_or_default()
            }
            (CharElement::Circle(c), CharElement::Line(l))
            | (CharElement::Line(l), CharElement::Circle(c)) => circle_line_intersection(c, l, tol),
            (CharElement::Line(a), CharElement::Line(b)) => match line_intersection(a, b, tol) {
                Ok(Intersection::Finite { point }) => vec![point],
                _ => Vec::new(),
            },
        }
    }
}

/// One element per side `i` (0-based): the circle through `V_i`, `V_{i+1}`
/// and `W_i`, where `W_i` is the meet of sides `i-1` and `i+1`.
pub fn characterization_circles(poly: &Polygon, tol: Tolerance) -> Result<Vec<CharElement>> {
    poly.ensure_nondegenerate(tol)?;
    let n = poly.len();
    let sides = poly.side_lines(tol)?;
    (0..n)
        .map(|i| {
            let prev = &sides[(i + n - 1) % n];
            let next = &sides[(i + 1) % n];
            match line_intersection(prev, next, tol) {
                Ok(Intersection::Finite { point: w }) => {
                    circumcircle(poly.vertex(i), w, poly.vertex(i + 1), tol)
                        .map(CharElement::Circle)
                        .map_err(|_| {
                            Error::DegenerateConfiguration(format!("circle for side {i} is flat"))
                        })
                }
                Ok(Intersection::AtInfinity { .. }) => Ok(CharElement::Line(sides[i])),
                Err(_) => Err(Error::DegenerateConfiguration(format!(
                    "sides {} and {} coincide",
                    (i + n - 1) % n,
                    (i + 1) % n
                ))),
            }
        })
        .collect()
}

/// A point where the first two distinct characterization elements meet,
/// scored against all elements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub point: Point,
    /// Largest distance from the point to any element.
    pub residual: f64,
    /// Largest ratio of distance to tolerance bound; at most 1 on a common point.
    pub violation: f64,
}

/// At most two candidates. Empty when every element coincides (a triangle,
/// whose whole circumcircle consists of Simson points) or when the first two
/// distinct elements do not meet.
pub fn simson_candidates(poly: &Polygon, tol: Tolerance) -> Result<Vec<Candidate>> {
    let elements = characterization_circles(poly, tol)?;
    let scale = poly.scale();
    let first = elements[0];
    let Some(second) = elements[1..]
        .iter()
        .find(|e| !e.same_as(&first, tol, scale))
    else {
        return Ok(Vec::new());
    };
    let cands = first
        .meet(second, tol)
        .into_iter()
        .map(|point| {
            let mut residual: f64 = 0.0;
            let mut violation: f64 = 0.0;
            for e in &elements {
                let r = e.residual(point);
                residual = residual.max(r);
                violation = violation.max(r / e.bound(tol, config_scale(poly, &[point])));
            }
            Candidate {
                point,
                residual,
                violation,
            }
        })
        .collect();
    Ok(cands)
}

/// Simson point of a nondegenerate polygon, found as the common point of
/// its characterization elements and confirmed by collinear pedals.
pub fn find_simson_point(poly: &Polygon, tol: Tolerance) -> Result<Option<SimsonCertificate>> {
    let mut cands = simson_candidates(poly, tol)?;
    cands.retain(|c| c.violation <= 1.0);
    cands.sort_by(|a, b| a.violation.total_cmp(&b.violation));
    Ok(cands
        .into_iter()
        .find_map(|c| is_simson_point(c.point, poly, tol)))
}
