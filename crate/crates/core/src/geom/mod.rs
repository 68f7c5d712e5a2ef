//! Planar primitives and tolerance-aware predicates.
//!
//! Every construction is closed-form; robustness comes from explicit
//! [`Tolerance`] values rather than exact arithmetic. Distances are compared
//! against `abs_eps + rel_eps * scale`, where the scale is usually the
//! bounding-box diagonal of the inputs involved.

mod circle;
mod line;
mod parse;
mod point;

pub use circle::{circle_intersection, circle_line_intersection, circumcircle, point_on_circle, Circle};
pub use line::{
    fit_line, foot_of_perpendicular, line_intersection, line_through, reflect_point, Intersection,
    Line,
};
pub use parse::{parse_line, parse_point, parse_point_list};
pub use point::{bbox_diagonal, diameter, Point};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute and relative slack used by every predicate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        abs_eps: 1e-9,
        rel_eps: 1e-9,
    };

    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        let ok = |e: f64| e.is_finite() && e > 0.0;
        if ok(abs_eps) && ok(rel_eps) {
            Ok(Tolerance { abs_eps, rel_eps })
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    /// Same value for both epsilons.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }

    /// Allowed deviation for a quantity measured at the given length scale.
    #[inline]
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale.abs()
    }

    pub fn scaled(&self, factor: f64) -> Tolerance {
        Tolerance {
            abs_eps: self.abs_eps * factor,
            rel_eps: self.rel_eps * factor,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// True iff every point lies within `abs_eps + rel_eps * diag` of the
/// total-least-squares line through the set, `diag` being the bounding-box
/// diagonal. Sets of fewer than three points are always collinear.
pub fn collinear(points: &[Point], tol: Tolerance) -> bool {
    collinearity_residual(points) <= tol.bound(bbox_diagonal(points))
}

/// Largest distance from a point of the set to its best-fit line.
pub fn collinearity_residual(points: &[Point]) -> f64 {
    match fit_line(points) {
        Some(l) => points
            .iter()
            .map(|p| l.signed_distance(*p).abs())
            .fold(0.0, f64::max),
        None => 0.0,
    }
}
