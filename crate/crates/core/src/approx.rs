//! Optimal continuous piecewise-linear interpolation of a parabola.
//!
//! For `f(x) = (x² - Δ²)/(4s)` and knots `a = x_0 < ... < x_n = b`, the
//! chord interpolant `l` satisfies `f - l = (x - x_i)(x - x_{i+1})/(4s)` on
//! each segment, so a segment of width `h` contributes `h³/(24|s|)` to the
//! L1 error and `h⁵/(480 s²)` to the squared L2 error, wherever it sits.
//! Minimizing `Σ h_i³` under `Σ h_i = b - a` gives equal widths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Point;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxProblem {
    pub s: f64,
    pub delta: f64,
    pub a: f64,
    pub b: f64,
    /// Number of segments.
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub knots: Vec<f64>,
    pub knot_points: Vec<Point>,
    pub l1_error: f64,
    /// Integral of the squared deviation (not its square root).
    pub l2_error: f64,
}

impl ApproxProblem {
    pub fn new(s: f64, delta: f64, a: f64, b: f64, n: usize) -> Result<Self> {
        if ![s, delta, a, b].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidProblem("non-finite parameter".into()));
        }
        if s == 0.0 {
            return Err(Error::InvalidProblem("s must be nonzero".into()));
        }
        if delta < 0.0 {
            return Err(Error::InvalidProblem("delta must be non-negative".into()));
        }
        if !(a < b) {
            return Err(Error::InvalidProblem(format!("need a < b, got a = {a}, b = {b}")));
        }
        if n == 0 {
            return Err(Error::InvalidProblem("need at least one segment".into()));
        }
        Ok(ApproxProblem { s, delta, a, b, n })
    }

    #[inline]
    pub fn f(&self, x: f64) -> f64 {
        (x * x - self.delta * self.delta) / (4.0 * self.s)
    }

    /// Full knot vector from interior knots, checking strict order.
    pub fn knots_with_interior(&self, interior: &[f64]) -> Result<Vec<f64>> {
        if interior.len() + 1 != self.n {
            return Err(Error::InvalidProblem(format!(
                "expected {} interior knots, got {}",
                self.n - 1,
                interior.len()
            )));
        }
        let mut knots = Vec::with_capacity(self.n + 1);
        knots.push(self.a);
        knots.extend_from_slice(interior);
        knots.push(self.b);
        check_knots(self, &knots)?;
        Ok(knots)
    }
}

fn check_knots(p: &ApproxProblem, knots: &[f64]) -> Result<()> {
    if knots.len() < 2 || knots[0] != p.a || knots[knots.len() - 1] != p.b {
        return Err(Error::UnorderedKnots);
    }
    if knots.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::UnorderedKnots)
    }
}

/// Equally spaced knots and their closed-form errors.
pub fn optimal_knots(p: &ApproxProblem) -> Result<ApproxResult> {
    let p = ApproxProblem::new(p.s, p.delta, p.a, p.b, p.n)?;
    let h = (p.b - p.a) / p.n as f64;
    let mut knots: Vec<f64> = (0..p.n).map(|i| p.a + i as f64 * h).collect();
    knots.push(p.b);
    let knot_points = knots.iter().map(|&x| Point::new(x, p.f(x))).collect();
    let mut l1_error = 0.0;
    let mut l2_error = 0.0;
    for w in knots.windows(2) {
        l1_error += segment_l1_error(&p, w[0], w[1])?;
        l2_error += segment_l2_error(&p, w[0], w[1])?;
    }
    Ok(ApproxResult {
        knots,
        knot_points,
        l1_error,
        l2_error,
    })
}

/// `∫ |f - l|` over one chord, `(xj - xi)³ / (24|s|)`.
pub fn segment_l1_error(p: &ApproxProblem, xi: f64, xj: f64) -> Result<f64> {
    if !(xi < xj) {
        return Err(Error::BadInterval(xi, xj));
    }
    let h = xj - xi;
    Ok(h * h * h / (24.0 * p.s.abs()))
}

/// `∫ (f - l)²` over one chord, `(xj - xi)⁵ / (480 s²)`.
pub fn segment_l2_error(p: &ApproxProblem, xi: f64, xj: f64) -> Result<f64> {
    if !(xi < xj) {
        return Err(Error::BadInterval(xi, xj));
    }
    let h = xj - xi;
    Ok(h.powi(5) / (480.0 * p.s * p.s))
}

/// Unscaled objective `Σ (x_{i+1} - x_i)³`; the L1 error is this over `24|s|`.
pub fn total_error_objective(p: &ApproxProblem, interior: &[f64]) -> Result<f64> {
    let knots = p
        .knots_with_interior(interior)
        .map_err(|_| Error::UnorderedKnots)?;
    Ok(knots.windows(2).map(|w| (w[1] - w[0]).powi(3)).sum())
}

/// Value at `x` of the chord interpolant through `(x_i, f(x_i))`.
pub fn interpolant_at(p: &ApproxProblem, knots: &[f64], x: f64) -> Result<f64> {
    check_knots(p, knots)?;
    if !(p.a..=p.b).contains(&x) {
        return Err(Error::OutOfDomain(x, p.a, p.b));
    }
    let i = knots.partition_point(|&k| k <= x).clamp(1, knots.len() - 1) - 1;
    let (x0, x1) = (knots[i], knots[i + 1]);
    let slope = (p.f(x1) - p.f(x0)) / (x1 - x0);
    Ok(slope * (x - x1) + p.f(x1))
}

// three-point Gauss-Legendre on [-1, 1], exact through degree 5
const GAUSS3: [(f64, f64); 3] = [
    (-0.774_596_669_241_483_4, 5.0 / 9.0),
    (0.0, 8.0 / 9.0),
    (0.774_596_669_241_483_4, 5.0 / 9.0),
];

fn gauss3(x0: f64, x1: f64, g: impl Fn(f64) -> f64) -> f64 {
    let half = 0.5 * (x1 - x0);
    let mid = 0.5 * (x0 + x1);
    half * GAUSS3.iter().map(|&(t, w)| w * g(mid + half * t)).sum::<f64>()
}

/// `∫ |f - l|` by quadrature of the interpolant itself. `f - l` keeps one
/// sign on each segment, so each segment's signed integral is computed
/// exactly and then made absolute.
pub fn quadrature_l1(p: &ApproxProblem, knots: &[f64]) -> Result<f64> {
    check_knots(p, knots)?;
    let mut total = 0.0;
    for w in knots.windows(2) {
        let line = chord(p, w[0], w[1]);
        total += gauss3(w[0], w[1], |x| p.f(x) - line(x)).abs();
    }
    Ok(total)
}

/// `∫ (f - l)²` by the same per-segment quadrature.
pub fn quadrature_l2(p: &ApproxProblem, knots: &[f64]) -> Result<f64> {
    check_knots(p, knots)?;
    let mut total = 0.0;
    for w in knots.windows(2) {
        let line = chord(p, w[0], w[1]);
        total += gauss3(w[0], w[1], |x| (p.f(x) - line(x)).powi(2));
    }
    Ok(total)
}

fn chord(p: &ApproxProblem, x0: f64, x1: f64) -> impl Fn(f64) -> f64 {
    let (y0, y1) = (p.f(x0), p.f(x1));
    let slope = (y1 - y0) / (x1 - x0);
    move |x| y0 + slope * (x - x0)
}
