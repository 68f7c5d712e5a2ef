//! Simson points of general polygons.
//!
//! A point is a Simson point of a polygon when its feet of perpendiculars on
//! all (extended) sides are collinear; the common line is its Simson line.
//! Detection goes through the circles `(V_i W_i V_{i+1})`, where `W_i` is
//! where the two sides adjacent to side `i` meet: a Simson point is exactly
//! a common point of all of them.

mod characterization;
mod construct;
mod polygon;
mod quad;

pub use characterization::{
    characterization_circles, find_simson_point, simson_candidates, Candidate, CharElement,
};
pub use construct::{construct_simson_polygon, SimsonPolygon};
pub use polygon::Polygon;
pub use quad::{miquel_point, CompleteQuadrilateral};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geom::{bbox_diagonal, collinear, fit_line, foot_of_perpendicular, Line, Point, Tolerance};

/// Evidence that a point is a Simson point of a polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimsonCertificate {
    pub simson_point: Point,
    /// Total-least-squares line through the pedal points.
    pub simson_line: Line,
    /// Foot on side `V_i V_{i+1}` at position `i`.
    pub projections: Vec<Point>,
    /// Largest distance of a projection from `simson_line`.
    pub residual: f64,
}

/// Feet of the perpendiculars from `p` on every side line, in side order.
pub fn pedal_points(p: Point, poly: &Polygon, tol: Tolerance) -> Result<Vec<Point>> {
    (0..poly.len())
        .map(|i| Ok(foot_of_perpendicular(p, &poly.side_line(i, tol)?)))
        .collect()
}

/// Certificate iff the pedal points of `p` are collinear under `tol`.
pub fn is_simson_point(p: Point, poly: &Polygon, tol: Tolerance) -> Option<SimsonCertificate> {
    let projections = pedal_points(p, poly, tol).ok()?;
    if !collinear(&projections, tol) {
        return None;
    }
    let simson_line = fit_line(&projections).or_else(|| {
        // all feet coincide: any line through them works, take the one
        // perpendicular to the first side
        let side = poly.side_line(0, tol).ok()?;
        Line::with_normal(projections[0], side.direction()).ok()
    })?;
    let residual = projections
        .iter()
        .map(|q| simson_line.signed_distance(*q).abs())
        .fold(0.0, f64::max);
    Some(SimsonCertificate {
        simson_point: p,
        simson_line,
        projections,
        residual,
    })
}

/// Scale used for tolerance bounds around a polygon and a point of interest.
pub(crate) fn config_scale(poly: &Polygon, extra: &[Point]) -> f64 {
    let mut pts = poly.vertices().to_vec();
    pts.extend_from_slice(extra);
    bbox_diagonal(&pts)
}
