//! Seeded random inputs shared by the integration and acceptance tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simson::equidistant::{make_equidistant_at, EquidistantConfig};
use simson::geom::{Line, Point, Tolerance};
use simson::simson::{construct_simson_polygon, Polygon, SimsonPolygon};

pub const TOL: Tolerance = Tolerance::DEFAULT;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejects polygons with a vertex triple within 1e-3 of collinear, relative
/// to the polygon's size.
pub fn well_shaped(poly: &Polygon) -> bool {
    poly.is_nondegenerate(TOL.scaled(1e6))
}

fn sine(u: Point, v: Point) -> f64 {
    (u.cross(v) / (u.norm() * v.norm())).abs()
}

/// Sides `i` and `j` (0-based) are at least `min_sine` away from parallel.
pub fn sides_transversal(poly: &Polygon, min_sine: f64) -> bool {
    let n = poly.len();
    let edge = |i: usize| poly.vertex(i + 1) - poly.vertex(i);
    (0..n).all(|i| (i + 1..n).all(|j| sine(edge(i), edge(j)) >= min_sine))
}

pub fn point_in<R: Rng>(rng: &mut R, half: f64) -> Point {
    Point::new(rng.gen_range(-half..half), rng.gen_range(-half..half))
}

/// A quadrilateral, possibly self-intersecting, with no near-collinear
/// vertex triple and no two sides within about 6 degrees of parallel.
pub fn random_quadrilateral<R: Rng>(rng: &mut R) -> Polygon {
    loop {
        let v: Vec<Point> = (0..4).map(|_| point_in(rng, 10.0)).collect();
        let Ok(poly) = Polygon::new(v) else { continue };
        if well_shaped(&poly) && sides_transversal(&poly, 0.1) {
            return poly;
        }
    }
}

/// A convex n-gon: sorted angles around a random centre with radii jittered
/// by up to 20 percent.
pub fn random_convex<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    loop {
        let centre = point_in(rng, 10.0);
        let size = rng.gen_range(0.5..10.0);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let v = angles
            .iter()
            .map(|t| {
                let r = size * rng.gen_range(0.8..1.2);
                centre + Point::new(t.cos(), t.sin()) * r
            })
            .collect();
        let Ok(poly) = Polygon::new(v) else { continue };
        if poly.is_convex() && well_shaped(&poly) {
            return poly;
        }
    }
}

/// A unit direction at a random angle.
pub fn direction<R: Rng>(rng: &mut R) -> Point {
    let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    Point::new(t.cos(), t.sin())
}

/// Random `S` and `L` with `S` between 0.5 and 5 away from `L`.
pub fn random_simson_pair<R: Rng>(rng: &mut R) -> (Point, Line, Point) {
    let anchor = point_in(rng, 10.0);
    let dir = direction(rng);
    let l = Line::with_direction(anchor, dir).unwrap();
    let side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let s = anchor + dir * rng.gen_range(-3.0..3.0) + l.normal() * (side * rng.gen_range(0.5..5.0));
    (s, l, anchor)
}

/// Construction input with 4 to 10 feet, at least 0.3 apart, in random order
/// half of the time, whose polygon is well shaped.
pub fn random_construction<R: Rng>(rng: &mut R) -> (Point, Line, Vec<Point>, SimsonPolygon) {
    loop {
        let (s, l, anchor) = random_simson_pair(rng);
        let n = rng.gen_range(4..=10);
        let mut ts: Vec<f64> = Vec::new();
        while ts.len() < n {
            let t = rng.gen_range(-8.0..8.0);
            if ts.iter().all(|u: &f64| (u - t).abs() >= 0.3) {
                ts.push(t);
            }
        }
        if rng.gen_bool(0.5) {
            ts.sort_by(f64::total_cmp);
        } else {
            ts.shuffle(rng);
        }
        let dir = l.direction();
        let feet: Vec<Point> = ts.iter().map(|t| anchor + dir * *t).collect();
        let Ok(sp) = construct_simson_polygon(s, &l, &feet, TOL) else { continue };
        if well_shaped(&sp.polygon) && sp.polygon.scale() < 1e4 {
            return (s, l, feet, sp);
        }
    }
}

/// Canonical-frame parameters: `s` in ±[0.5, 5], `Δ` in [0.1, 2], `X` in
/// [-3, 3], `n` in [5, 12].
pub fn random_equidistant_config<R: Rng>(rng: &mut R) -> EquidistantConfig {
    let s = rng.gen_range(0.5..5.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    EquidistantConfig::new(s, rng.gen_range(-3.0..3.0), rng.gen_range(0.1..2.0), rng.gen_range(5..=12)).unwrap()
}

/// An equidistant polygon placed at a random position and orientation.
pub fn random_equidistant_world<R: Rng>(rng: &mut R) -> (EquidistantConfig, SimsonPolygon) {
    let cfg = random_equidistant_config(rng);
    let (_, l, anchor) = random_simson_pair(rng);
    let s_point = anchor + l.normal() * cfg.s;
    let first = anchor + l.direction() * cfg.x0;
    let sp = make_equidistant_at(s_point, &l, first, cfg.delta, cfg.n, TOL).unwrap();
    (cfg, sp)
}

/// Offset of size `eps * scale` in a random direction.
pub fn perturbation<R: Rng>(rng: &mut R, poly: &Polygon, eps: f64) -> (usize, Point) {
    (rng.gen_range(0..poly.len()), direction(rng) * (eps * poly.scale()))
}
