use serde::{Deserialize, Serialize};

use super::{foot_of_perpendicular, Line, Point, Tolerance};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius <= 0.0 {
            return Err(Error::InvalidCircle(format!("radius {radius} is not positive")));
        }
        Ok(Circle { center, radius })
    }

    /// Distance from `p` to the circle itself (not the disc).
    #[inline]
    pub fn residual(&self, p: Point) -> f64 {
        (p.distance(self.center) - self.radius).abs()
    }
}

/// Circle through three points.
pub fn circumcircle(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<Circle> {
    let scale = a.distance(b).max(b.distance(c)).max(c.distance(a));
    let eps = tol.bound(scale);
    if a.distance(b) <= eps || b.distance(c) <= eps || c.distance(a) <= eps {
        return Err(Error::CollinearInput);
    }
    // distance of the third point from the line through the farthest pair
    let (u, v, w) = if a.distance(b) >= b.distance(c) && a.distance(b) >= c.distance(a) {
        (a, b, c)
    } else if b.distance(c) >= c.distance(a) {
        (b, c, a)
    } else {
        (c, a, b)
    };
    let base = v - u;
    if (base.cross(w - u) / base.norm()).abs() <= eps {
        return Err(Error::CollinearInput);
    }
    // solve relative to `a` for precision away from the origin
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let ab2 = ab.dot(ab);
    let ac2 = ac.dot(ac);
    let ux = (ac.y * ab2 - ab.y * ac2) / d;
    let uy = (ab.x * ac2 - ac.x * ab2) / d;
    let center = a + Point::new(ux, uy);
    let radius = (center.distance(a) + center.distance(b) + center.distance(c)) / 3.0;
    Circle::new(center, radius).map_err(|_| Error::CollinearInput)
}

/// Intersection points of two circles; one point on tangency, none when
/// disjoint or nested.
pub fn circle_intersection(c1: &Circle, c2: &Circle, tol: Tolerance) -> Result<Vec<Point>> {
    let delta = c2.center - c1.center;
    let d = delta.norm();
    let eps = tol.bound(c1.radius.max(c2.radius).max(d));
    if d <= eps {
        if (c1.radius - c2.radius).abs() <= eps {
            return Err(Error::IdenticalCircles);
        }
        return Ok(Vec::new());
    }
    let u = delta * (1.0 / d);
    let (r1, r2) = (c1.radius, c2.radius);
    let outer = r1 + r2;
    let inner = (r1 - r2).abs();
    if d > outer + eps || d < inner - eps {
        return Ok(Vec::new());
    }
    if (d - outer).abs() <= eps {
        return Ok(vec![c1.center + u * r1]);
    }
    if (d - inner).abs() <= eps {
        let sign = if r1 >= r2 { 1.0 } else { -1.0 };
        return Ok(vec![c1.center + u * (sign * r1)]);
    }
    // distance along the centre line to the radical line
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h = (r1 * r1 - along * along).max(0.0).sqrt();
    let base = c1.center + u * along;
    let off = u.perp() * h;
    Ok(vec![base + off, base - off])
}

/// Intersection points of a circle and a line.
pub fn circle_line_intersection(c: &Circle, l: &Line, tol: Tolerance) -> Vec<Point> {
    let foot = foot_of_perpendicular(c.center, l);
    let d = l.signed_distance(c.center).abs();
    let eps = tol.bound(c.radius.max(c.center.norm()));
    if d > c.radius + eps {
        return Vec::new();
    }
    if (d - c.radius).abs() <= eps {
        return vec![foot];
    }
    let h = (c.radius * c.radius - d * d).max(0.0).sqrt();
    let dir = l.direction();
    vec![foot + dir * h, foot - dir * h]
}

pub fn point_on_circle(p: Point, c: &Circle, tol: Tolerance) -> bool {
    c.residual(p) <= tol.bound(c.radius)
}
