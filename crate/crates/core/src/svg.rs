//! SVG 1.1 rendering of scene documents.
//!
//! Output depends only on the scene: entities are drawn in document order
//! and every coordinate is printed with four decimals. The viewport maps
//! world `y` upwards.

use std::fmt::Write;

use crate::geom::{bbox_diagonal, Line, Point};
use crate::scene::{Entity, SceneDocument, Shape};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Width in pixels; the height follows the aspect ratio of the scene.
    pub width: f64,
    pub margin: f64,
    /// Samples per drawn parabola.
    pub samples: usize,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            margin: 24.0,
            samples: 128,
        }
    }
}

struct View {
    min: Point,
    max: Point,
    k: f64,
    margin: f64,
}

impl View {
    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.margin + (p.x - self.min.x) * self.k,
            self.margin + (self.max.y - p.y) * self.k,
        )
    }

    fn height(&self) -> f64 {
        2.0 * self.margin + (self.max.y - self.min.y) * self.k
    }

    /// Part of `l` inside the world rectangle.
    fn clip(&self, l: &Line) -> Option<(Point, Point)> {
        let p0 = l.closest_to_origin();
        let d = l.direction();
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (o, dv, a, b) in [
            (p0.x, d.x, self.min.x, self.max.x),
            (p0.y, d.y, self.min.y, self.max.y),
        ] {
            if dv.abs() < 1e-15 {
                if o < a || o > b {
                    return None;
                }
            } else {
                let (t1, t2) = ((a - o) / dv, (b - o) / dv);
                lo = lo.max(t1.min(t2));
                hi = hi.min(t1.max(t2));
            }
        }
        (lo < hi).then(|| (p0 + d * lo, p0 + d * hi))
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_owned()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// `X_12` becomes `X` with a subscript `12`.
fn label_markup(label: &str) -> String {
    match label.split_once('_') {
        Some((base, sub)) if !base.is_empty() && !sub.is_empty() => format!(
            "{}<tspan baseline-shift=\"sub\" font-size=\"70%\">{}</tspan>",
            escape(base),
            escape(sub)
        ),
        _ => escape(label),
    }
}

fn parabola_y(s: f64, c: f64, x: f64) -> f64 {
    (x * x - c) / (4.0 * s)
}

fn extent(doc: &SceneDocument, samples: usize) -> Vec<Point> {
    let mut pts = Vec::new();
    for e in &doc.entities {
        match &e.shape {
            Shape::Point { at, .. } | Shape::Annotation { at, .. } => pts.push(*at),
            Shape::Polygon { vertices, .. } => pts.extend_from_slice(vertices),
            Shape::Circle { center, radius } => {
                pts.push(*center + Point::new(*radius, *radius));
                pts.push(*center - Point::new(*radius, *radius));
            }
            Shape::Parabola { s, c, range } => {
                for x in sample(range, samples) {
                    pts.push(Point::new(x, parabola_y(*s, *c, x)));
                }
            }
            Shape::Line { .. } => {}
        }
    }
    pts.retain(|p| p.is_finite());
    pts
}

fn sample(range: &[f64; 2], samples: usize) -> impl Iterator<Item = f64> + '_ {
    let n = samples.max(2);
    (0..n).map(move |i| range[0] + (range[1] - range[0]) * i as f64 / (n - 1) as f64)
}

fn view_for(doc: &SceneDocument, opts: &SvgOptions) -> View {
    let pts = extent(doc, opts.samples);
    let (mut min, mut max) = if pts.is_empty() {
        (Point::new(-1.0, -1.0), Point::new(1.0, 1.0))
    } else {
        pts.iter().fold(
            (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
            |(lo, hi), p| (Point::new(lo.x.min(p.x), lo.y.min(p.y)), Point::new(hi.x.max(p.x), hi.y.max(p.y))),
        )
    };
    let pad = 0.08 * bbox_diagonal(&[min, max]).max(1e-6);
    min = min - Point::new(pad, pad);
    max = max + Point::new(pad, pad);
    View {
        min,
        max,
        k: (opts.width - 2.0 * opts.margin) / (max.x - min.x),
        margin: opts.margin,
    }
}

fn style_attrs(e: &Entity, default_stroke: &str, default_fill: &str) -> String {
    let mut out = String::new();
    if !e.style.contains_key("stroke") {
        let _ = write!(out, " stroke=\"{default_stroke}\"");
    }
    if !e.style.contains_key("fill") {
        let _ = write!(out, " fill=\"{default_fill}\"");
    }
    for (k, v) in &e.style {
        let _ = write!(out, " {}=\"{}\"", escape(k), escape(v));
    }
    out
}

fn text(out: &mut String, view: &View, at: Point, dx: f64, dy: f64, label: &str) {
    let (x, y) = view.map(at);
    let _ = writeln!(
        out,
        "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"14\">{}</text>",
        num(x + dx),
        num(y + dy),
        label_markup(label)
    );
}

fn points_attr(view: &View, pts: impl IntoIterator<Item = Point>) -> String {
    pts.into_iter()
        .map(|p| {
            let (x, y) = view.map(p);
            format!("{},{}", num(x), num(y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(doc: &SceneDocument) -> String {
    render_with(doc, &SvgOptions::default())
}

pub fn render_with(doc: &SceneDocument, opts: &SvgOptions) -> String {
    let view = view_for(doc, opts);
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(opts.width),
        h = num(view.height())
    );
    let _ = writeln!(out, "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for e in &doc.entities {
        let _ = writeln!(out, "  <!-- {} -->", escape(&e.id).replace("--", "- -"));
        match &e.shape {
            Shape::Point { at, label } => {
                let (x, y) = view.map(*at);
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"3\"{}/>",
                    num(x),
                    num(y),
                    style_attrs(e, "none", "black")
                );
                if let Some(l) = label {
                    text(&mut out, &view, *at, 5.0, -5.0, l);
                }
            }
            Shape::Line { line, label } => {
                if let Some((a, b)) = view.clip(line) {
                    let ((x1, y1), (x2, y2)) = (view.map(a), view.map(b));
                    let _ = writeln!(
                        out,
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-dasharray=\"6 4\"{}/>",
                        num(x1),
                        num(y1),
                        num(x2),
                        num(y2),
                        style_attrs(e, "gray", "none")
                    );
                    if let Some(l) = label {
                        let at = if view.map(a).0 > view.map(b).0 { a } else { b };
                        text(&mut out, &view, at, -16.0, -6.0, l);
                    }
                }
            }
            Shape::Circle { center, radius } => {
                let (x, y) = view.map(*center);
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\"{}/>",
                    num(x),
                    num(y),
                    num(radius * view.k),
                    style_attrs(e, "steelblue", "none")
                );
            }
            Shape::Polygon {
                vertices,
                closed,
                simson,
            } => {
                let tag = if *closed { "polygon" } else { "polyline" };
                let _ = writeln!(
                    out,
                    "  <{tag} points=\"{}\"{}/>",
                    points_attr(&view, vertices.iter().copied()),
                    style_attrs(e, "black", "none")
                );
                if simson.is_some() {
                    let n = vertices.len() as f64;
                    let centroid = vertices.iter().fold(Point::ORIGIN, |acc, v| acc + *v) * (1.0 / n);
                    for (i, v) in vertices.iter().enumerate() {
                        let dir = (*v - centroid).normalized().unwrap_or(Point::new(0.0, 1.0));
                        text(&mut out, &view, *v, 10.0 * dir.x - 6.0, -10.0 * dir.y + 5.0, &format!("V_{}", i + 1));
                    }
                }
            }
            Shape::Parabola { s, c, range } => {
                let pts = sample(range, opts.samples).map(|x| Point::new(x, parabola_y(*s, *c, x)));
                let _ = writeln!(
                    out,
                    "  <polyline points=\"{}\"{}/>",
                    points_attr(&view, pts),
                    style_attrs(e, "firebrick", "none")
                );
            }
            Shape::Annotation { at, text: t } => text(&mut out, &view, *at, 0.0, 0.0, t),
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equidistant::{make_equidistant, EquidistantConfig};

    fn pentagon_scene() -> SceneDocument {
        let cfg = EquidistantConfig::new(1.0, 0.0, 1.0, 5).unwrap();
        let mut doc = SceneDocument::default();
        doc.add_simson_polygon(&make_equidistant(&cfg).unwrap().simson);
        doc
    }

    #[test]
    fn labels_and_structure() {
        let svg = render(&pentagon_scene());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), 1);
        for label in ["V<tspan", ">S</text>", ">L</text>", "X<tspan"] {
            assert!(svg.contains(label), "missing {label}");
        }
        assert_eq!(svg.matches(">5</tspan>").count(), 2);
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(render(&pentagon_scene()), render(&pentagon_scene()));
    }

    #[test]
    fn y_axis_points_up() {
        let mut doc = SceneDocument::default();
        doc.push(Entity::point("low", Point::new(0.0, 0.0)));
        doc.push(Entity::point("high", Point::new(0.0, 1.0)));
        let view = view_for(&doc, &SvgOptions::default());
        assert!(view.map(Point::new(0.0, 1.0)).1 < view.map(Point::ORIGIN).1);
    }

    #[test]
    fn clipping_and_formatting() {
        let mut doc = SceneDocument::default();
        doc.push(Entity::point("a", Point::new(-1.0, -1.0)));
        doc.push(Entity::point("b", Point::new(1.0, 1.0)));
        let view = view_for(&doc, &SvgOptions::default());
        let (a, b) = view.clip(&Line::horizontal(0.0)).unwrap();
        assert_eq!((a.y, b.y), (0.0, 0.0));
        assert!((a.x - view.min.x).abs() < 1e-12 || (b.x - view.min.x).abs() < 1e-12);
        assert!(view.clip(&Line::horizontal(50.0)).is_none());
        assert_eq!(num(-0.00001), "0.0000");
        assert_eq!(label_markup("a<b"), "a&lt;b");
    }
}
