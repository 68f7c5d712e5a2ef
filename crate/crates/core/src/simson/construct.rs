use serde::{Deserialize, Serialize};

use super::{Polygon, SimsonCertificate};
use crate::error::{Error, Result};
use crate::geom::{line_intersection, Line, Point, Tolerance};

/// A polygon together with its Simson point `S`, Simson line `L` and the
/// feet `X_1 .. X_n` of `S` on its sides.
///
/// Vertex `V_i` is where the sides through `X_i` and `X_{i+1}` meet, so the
/// side `V_{i-1} V_i` has foot `X_i`. In 0-based terms: `projections[i]` is
/// the foot on side `V_{i-1} V_i`, and `Polygon::side_line(i)` (joining
/// `vertices[i]` and `vertices[i+1]`) has foot `projections[i + 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimsonPolygon {
    pub polygon: Polygon,
    pub simson_point: Point,
    pub simson_line: Line,
    pub projections: Vec<Point>,
}

impl SimsonPolygon {
    pub fn len(&self) -> usize {
        self.polygon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        self.polygon.vertices()
    }

    /// Cyclic 0-based foot access.
    pub fn projection(&self, i: usize) -> Point {
        self.projections[i % self.projections.len()]
    }

    /// Wraps a recognized polygon. The certificate lists feet side by side,
    /// so they are rotated into vertex order.
    pub fn from_certificate(polygon: Polygon, cert: &SimsonCertificate) -> SimsonPolygon {
        let mut projections = cert.projections.clone();
        projections.rotate_right(1);
        SimsonPolygon {
            polygon,
            simson_point: cert.simson_point,
            simson_line: cert.simson_line,
            projections,
        }
    }

    /// Copy with vertex `index` displaced; the recorded `S`, `L` and feet
    /// are kept as they were.
    pub fn with_perturbed_vertex(&self, index: usize, offset: Point) -> Result<SimsonPolygon> {
        Ok(SimsonPolygon {
            polygon: self.polygon.perturbed(index, offset)?,
            ..self.clone()
        })
    }

    /// Copy with the recorded Simson point moved.
    pub fn with_simson_point(&self, s: Point) -> SimsonPolygon {
        SimsonPolygon {
            simson_point: s,
            ..self.clone()
        }
    }
}

/// Builds the polygon whose `i`-th side passes through `feet[i]`
/// perpendicular to `S X_i`; consecutive such sides meet at the vertices.
pub fn construct_simson_polygon(
    s: Point,
    l: &Line,
    feet: &[Point],
    tol: Tolerance,
) -> Result<SimsonPolygon> {
    if feet.len() < 3 {
        return Err(Error::TooFewVertices(feet.len()));
    }
    let mut all = feet.to_vec();
    all.push(s);
    let scale = crate::geom::bbox_diagonal(&all);
    let eps = tol.bound(scale);
    if l.signed_distance(s).abs() <= eps {
        return Err(Error::PointOnLine);
    }
    for (i, x) in feet.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite);
        }
        if l.signed_distance(*x).abs() > eps {
            return Err(Error::FootOffLine(i));
        }
    }
    for i in 0..feet.len() {
        for j in i + 1..feet.len() {
            if feet[i].distance(feet[j]) <= eps {
                return Err(Error::DuplicateFeet(i, j));
            }
        }
    }
    let sides: Vec<Line> = feet
        .iter()
        .map(|x| Line::with_normal(*x, *x - s))
        .collect::<Result<_>>()?;
    let n = feet.len();
    let vertices = (0..n)
        .map(|i| {
            line_intersection(&sides[i], &sides[(i + 1) % n], tol)
                .ok()
                .and_then(|x| x.finite())
                .ok_or(Error::DuplicateFeet(i, (i + 1) % n))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimsonPolygon {
        polygon: Polygon::new(vertices)?,
        simson_point: s,
        simson_line: *l,
        projections: feet.to_vec(),
    })
}
