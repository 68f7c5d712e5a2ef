use serde::{Deserialize, Serialize};

use super::Polygon;
use crate::error::{Error, Result};
use crate::geom::{circle_intersection, circumcircle, line_intersection, Circle, Line, Point, Tolerance};

/// Four lines in general position and their six pairwise intersections.
///
/// Lines are stored as `[ABC, AEF, BDE, CDF]`, each named by the three
/// intersection points it carries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompleteQuadrilateral {
    lines: [Line; 4],
    points: [Point; 6],
}

impl CompleteQuadrilateral {
    pub fn new(lines: [Line; 4], tol: Tolerance) -> Result<Self> {
        let meet = |i: usize, j: usize| -> Result<Point> {
            line_intersection(&lines[i], &lines[j], tol)
                .ok()
                .and_then(|x| x.finite())
                .ok_or_else(|| Error::DegenerateConfiguration(format!("lines {i} and {j} are parallel")))
        };
        let a = meet(0, 1)?;
        let b = meet(0, 2)?;
        let c = meet(0, 3)?;
        let d = meet(2, 3)?;
        let e = meet(1, 2)?;
        let f = meet(1, 3)?;
        let q = CompleteQuadrilateral {
            lines,
            points: [a, b, c, d, e, f],
        };
        // three concurrent lines collapse one of the triangles
        for t in q.triangles() {
            circumcircle(t[0], t[1], t[2], tol)
                .map_err(|_| Error::DegenerateConfiguration("three of the lines are concurrent".into()))?;
        }
        Ok(q)
    }

    /// Complete quadrilateral spanned by the four sides of a quadrilateral.
    pub fn from_polygon(poly: &Polygon, tol: Tolerance) -> Result<Self> {
        if poly.len() != 4 {
            return Err(Error::DegenerateConfiguration(format!(
                "expected a quadrilateral, got {} vertices",
                poly.len()
            )));
        }
        let s = poly.side_lines(tol)?;
        CompleteQuadrilateral::new([s[0], s[1], s[2], s[3]], tol)
    }

    pub fn lines(&self) -> &[Line; 4] {
        &self.lines
    }

    /// `[A, B, C, D, E, F]`.
    pub fn points(&self) -> &[Point; 6] {
        &self.points
    }

    /// Triangles `AFC, ABE, BCD, DEF`, each formed by three of the lines.
    pub fn triangles(&self) -> [[Point; 3]; 4] {
        let [a, b, c, d, e, f] = self.points;
        [[a, f, c], [a, b, e], [b, c, d], [d, e, f]]
    }

    pub fn circumcircles(&self, tol: Tolerance) -> Result<[Circle; 4]> {
        let t = self.triangles();
        let circle = |k: usize| {
            circumcircle(t[k][0], t[k][1], t[k][2], tol)
                .map_err(|_| Error::DegenerateConfiguration(format!("triangle {k} is flat")))
        };
        Ok([circle(0)?, circle(1)?, circle(2)?, circle(3)?])
    }

    fn scale(&self) -> f64 {
        crate::geom::bbox_diagonal(&self.points)
    }
}

/// Common point of the four circumcircles.
pub fn miquel_point(q: &CompleteQuadrilateral, tol: Tolerance) -> Result<Point> {
    let circles = q.circumcircles(tol)?;
    // (AFC) and (ABE) meet at A and at the Miquel point
    let candidates = circle_intersection(&circles[0], &circles[1], tol)
        .map_err(|_| Error::DegenerateConfiguration("circumcircles coincide".into()))?;
    let a = q.points()[0];
    let misfit = |p: &Point| circles[2].residual(*p).max(circles[3].residual(*p));
    let best = candidates
        .iter()
        .copied()
        .min_by(|u, v| {
            misfit(u)
                .total_cmp(&misfit(v))
                // when A also fits, prefer the other point
                .then(v.distance(a).total_cmp(&u.distance(a)))
        })
        .ok_or_else(|| Error::DegenerateConfiguration("circumcircles do not meet".into()))?;
    let scale = circles
        .iter()
        .map(|c| c.radius)
        .fold(q.scale(), f64::max);
    if misfit(&best) > tol.scaled(1e3).bound(scale) {
        return Err(Error::DegenerateConfiguration(
            "no common point of the four circumcircles".into(),
        ));
    }
    Ok(best)
}
