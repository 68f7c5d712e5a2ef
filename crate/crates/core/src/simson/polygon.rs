use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{bbox_diagonal, line_through, Line, Point, Tolerance};

/// A closed polygon `V_1 ... V_n`; indices wrap, side `i` joins `V_i` and
/// `V_{i+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Requires at least three finite vertices with no two consecutive ones
    /// exactly equal.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::DegenerateSide(i));
            }
        }
        Ok(Polygon { vertices })
    }

    pub fn regular(n: usize, center: Point, radius: f64) -> Result<Self> {
        let verts = (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / n as f64;
                center + Point::new(t.cos(), t.sin()) * radius
            })
            .collect();
        Polygon::new(verts)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex with cyclic (0-based) indexing.
    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Line through `V_i` and `V_{i+1}` (0-based, wrapping).
    pub fn side_line(&self, i: usize, tol: Tolerance) -> Result<Line> {
        line_through(self.vertex(i), self.vertex(i + 1), tol).map_err(|_| Error::DegenerateSide(i))
    }

    pub fn side_lines(&self, tol: Tolerance) -> Result<Vec<Line>> {
        (0..self.len()).map(|i| self.side_line(i, tol)).collect()
    }

    /// Bounding-box diagonal of the vertices.
    pub fn scale(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    /// First collinear vertex triple, if any (0-based indices).
    pub fn collinear_triple(&self, tol: Tolerance) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let eps = tol.bound(self.scale());
        for i in 0..n {
            for j in i + 1..n {
                let d = self.vertices[j] - self.vertices[i];
                let len = d.norm();
                if len <= eps {
                    return Some((i, j, j));
                }
                for k in j + 1..n {
                    let h = d.cross(self.vertices[k] - self.vertices[i]) / len;
                    if h.abs() <= eps {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// No three vertices on a common line.
    pub fn is_nondegenerate(&self, tol: Tolerance) -> bool {
        self.collinear_triple(tol).is_none()
    }

    pub fn ensure_nondegenerate(&self, tol: Tolerance) -> Result<()> {
        match self.collinear_triple(tol) {
            Some((i, j, k)) => Err(Error::DegeneratePolygon(i, j, k)),
            None => Ok(()),
        }
    }

    /// Convex iff every turn has the same strict orientation and the
    /// boundary winds exactly once, which rules out star polygons.
    pub fn is_convex(&self) -> bool {
        let n = self.len();
        let mut sign = 0.0;
        let mut turning = 0.0;
        for i in 0..n {
            let e1 = self.vertex(i + 1) - self.vertex(i);
            let e2 = self.vertex(i + 2) - self.vertex(i + 1);
            let c = e1.cross(e2);
            if c == 0.0 {
                return false;
            }
            if sign == 0.0 {
                sign = c.signum();
            } else if c.signum() != sign {
                return false;
            }
            turning += e1.cross(e2).atan2(e1.dot(e2));
        }
        (turning.abs() - std::f64::consts::TAU).abs() < 1e-6
    }

    /// Copy with one vertex displaced (for negative controls).
    pub fn perturbed(&self, index: usize, offset: Point) -> Result<Polygon> {
        let mut v = self.vertices.clone();
        let n = v.len();
        v[index % n] = v[index % n] + offset;
        Polygon::new(v)
    }
}

impl TryFrom<Vec<Point>> for Polygon {
    type Error = Error;
    fn try_from(v: Vec<Point>) -> Result<Self> {
        Polygon::new(v)
    }
}

impl From<Polygon> for Vec<Point> {
    fn from(p: Polygon) -> Self {
        p.vertices
    }
}
