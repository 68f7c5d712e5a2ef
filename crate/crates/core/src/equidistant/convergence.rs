//! Convergence of equidistant chains to the limiting parabola `y = x²/(4s)`.

use serde::{Deserialize, Serialize};

use super::{make_equidistant, EquidistantConfig};
use crate::error::{Error, Result};
use crate::geom::Point;

/// One refinement level. `spacing` is the horizontal distance between
/// consecutive chain vertices, twice the spacing of the feet on `L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub spacing: f64,
    pub foot_spacing: f64,
    pub hausdorff: f64,
    /// `spacing² / (16|s|)`, the largest vertical gap between a parabola and
    /// its chord interpolant with that knot spacing.
    pub bound: f64,
    pub ratio: f64,
    /// `log2` of the previous distance over this one.
    pub order: Option<f64>,
}

/// Chain `V_1 .. V_{n-1}` of an equidistant polygon with vertex spacing
/// `spacing`, covering `[-window - spacing, window + spacing]`.
pub fn equidistant_chain(s: f64, window: f64, spacing: f64) -> Result<Vec<Point>> {
    if !(window > 0.0 && spacing > 0.0 && window.is_finite() && spacing.is_finite()) {
        return Err(Error::InvalidConfig("window and spacing must be positive".into()));
    }
    let foot = 0.5 * spacing;
    let start = -window - spacing;
    let count = (2.0 * window / spacing).ceil() as usize + 3;
    let cfg = EquidistantConfig::new(s, 0.5 * (start - foot), foot, count + 1)?;
    let poly = make_equidistant(&cfg)?;
    Ok(poly.parabola_vertices().to_vec())
}

/// Hausdorff distance between an x-monotone polyline and the arc of
/// `y = x²/(4s)`, both restricted to `|x| <= window`.
pub fn hausdorff_to_parabola(chain: &[Point], s: f64, window: f64) -> f64 {
    const SUBDIV: usize = 8;
    let clipped = clip(chain, window);
    if clipped.len() < 2 {
        return f64::NAN;
    }
    let f = |x: f64| x * x / (4.0 * s);
    let mut worst: f64 = 0.0;
    for w in clipped.windows(2) {
        for k in 0..=SUBDIV {
            let t = k as f64 / SUBDIV as f64;
            let q = w[0] + (w[1] - w[0]) * t;
            worst = worst.max(distance_to_parabola(q, s, window));
            let x = w[0].x + (w[1].x - w[0].x) * t;
            worst = worst.max(distance_to_polyline(Point::new(x, f(x)), &clipped));
        }
    }
    worst
}

fn clip(chain: &[Point], window: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(chain.len());
    let lerp = |a: Point, b: Point, x: f64| a + (b - a) * ((x - a.x) / (b.x - a.x));
    for (i, p) in chain.iter().enumerate() {
        if let Some(prev) = i.checked_sub(1).map(|j| chain[j]) {
            for edge in [-window, window] {
                if (prev.x < edge && p.x > edge) || (prev.x > edge && p.x < edge) {
                    out.push(lerp(prev, *p, edge));
                }
            }
        }
        if p.x.abs() <= window {
            out.push(*p);
        }
    }
    out
}

/// Distance from `q` to the arc `|t| <= window` of `y = t²/(4s)`.
fn distance_to_parabola(q: Point, s: f64, window: f64) -> f64 {
    let at = |t: f64| Point::new(t, t * t / (4.0 * s)).distance(q);
    // stationary points of the squared distance, by Newton from t = q.x
    let mut t = q.x.clamp(-window, window);
    for _ in 0..60 {
        let g1 = (t - q.x) + (t * t / (4.0 * s) - q.y) * t / (2.0 * s);
        let g2 = 1.0 + 3.0 * t * t / (8.0 * s * s) - q.y / (2.0 * s);
        if g2 <= 0.0 {
            break;
        }
        let step = g1 / g2;
        t = (t - step).clamp(-window, window);
        if step.abs() <= 1e-15 * (1.0 + t.abs()) {
            break;
        }
    }
    at(t).min(at(-window)).min(at(window))
}

fn distance_to_polyline(q: Point, chain: &[Point]) -> f64 {
    let segs = chain.len() - 1;
    let pos = chain.partition_point(|p| p.x < q.x).clamp(1, segs);
    let lo = pos.saturating_sub(5);
    let hi = (pos + 4).min(segs);
    (lo..hi)
        .map(|i| segment_distance(q, chain[i], chain[i + 1]))
        .fold(f64::INFINITY, f64::min)
}

fn segment_distance(q: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    let len2 = d.dot(d);
    let t = if len2 > 0.0 { ((q - a).dot(d) / len2).clamp(0.0, 1.0) } else { 0.0 };
    (a + d * t).distance(q)
}

/// Distances for vertex spacings `1, 1/2, ..., 2^-m_max`.
pub fn convergence_table(s: f64, window: f64, m_max: u32) -> Result<Vec<ConvergenceRow>> {
    if s == 0.0 || !s.is_finite() {
        return Err(Error::InvalidConfig("s must be finite and nonzero".into()));
    }
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    for m in 0..=m_max {
        let spacing = 0.5f64.powi(m as i32);
        let chain = equidistant_chain(s, window, spacing)?;
        let hausdorff = hausdorff_to_parabola(&chain, s, window);
        let bound = spacing * spacing / (16.0 * s.abs());
        let order = rows.last().map(|prev| (prev.hausdorff / hausdorff).log2());
        rows.push(ConvergenceRow {
            spacing,
            foot_spacing: 0.5 * spacing,
            hausdorff,
            bound,
            ratio: hausdorff / bound,
            order,
        });
    }
    Ok(rows)
}

pub fn observed_orders(rows: &[ConvergenceRow]) -> Vec<f64> {
    rows.iter().filter_map(|r| r.order).collect()
}
