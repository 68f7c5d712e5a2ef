mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use simson::geom::{circle_line_intersection, circumcircle, Point};
use simson::simson::{
    find_simson_point, is_simson_point, miquel_point, pedal_points, simson_candidates, CompleteQuadrilateral,
    Polygon, SimsonPolygon,
};

fn random_triangle<R: Rng>(rng: &mut R) -> Polygon {
    loop {
        let v: Vec<Point> = (0..3).map(|_| point_in(rng, 50.0)).collect();
        let poly = Polygon::new(v).unwrap();
        if well_shaped(&poly) {
            return poly;
        }
    }
}

fn area2(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn circumcircle_points_are_simson_points(seed in any::<u64>(), theta in 0.0..std::f64::consts::TAU) {
        let tri = random_triangle(&mut rng(seed));
        let [a, b, c] = [tri.vertex(0), tri.vertex(1), tri.vertex(2)];
        let cc = circumcircle(a, b, c, TOL).unwrap();
        let p = cc.center + Point::new(theta.cos(), theta.sin()) * cc.radius;
        let cert = is_simson_point(p, &tri, TOL);
        prop_assert!(cert.is_some(), "rejected {:?} on {:?}", p, tri);
    }

    #[test]
    fn points_off_the_circumcircle_are_rejected(seed in any::<u64>()) {
        let mut r = rng(seed);
        let tri = random_triangle(&mut r);
        let [a, b, c] = [tri.vertex(0), tri.vertex(1), tri.vertex(2)];
        let cc = circumcircle(a, b, c, TOL).unwrap();
        let p = loop {
            let p = cc.center + point_in(&mut r, 2.0 * cc.radius);
            let scale = simson::geom::bbox_diagonal(&[a, b, c, p]);
            if cc.residual(p) > 2.0 * TOL.bound(scale) {
                break p;
            }
        };
        prop_assert!(is_simson_point(p, &tri, TOL).is_none(), "accepted {:?}", p);
    }

    #[test]
    fn pedal_triangle_area(seed in any::<u64>()) {
        let mut r = rng(seed);
        let tri = random_triangle(&mut r);
        let [a, b, c] = [tri.vertex(0), tri.vertex(1), tri.vertex(2)];
        let cc = circumcircle(a, b, c, TOL).unwrap();
        let p = cc.center + point_in(&mut r, 2.0 * cc.radius);
        let f = pedal_points(p, &tri, TOL).unwrap();
        let pedal = area2(f[0], f[1], f[2]).abs();
        let op2 = (p - cc.center).dot(p - cc.center);
        let expected = (cc.radius * cc.radius - op2).abs() / (4.0 * cc.radius * cc.radius) * area2(a, b, c).abs();
        prop_assert!((pedal - expected).abs() <= 1e-9 * (1.0 + area2(a, b, c).abs()));
    }

    #[test]
    fn quadrilaterals_have_the_miquel_point(seed in any::<u64>()) {
        let quad = random_quadrilateral(&mut rng(seed));
        let cert = find_simson_point(&quad, TOL).unwrap();
        prop_assert!(cert.is_some(), "no Simson point for {:?}", quad);
        let cert = cert.unwrap();
        let m = miquel_point(&CompleteQuadrilateral::from_polygon(&quad, TOL).unwrap(), TOL).unwrap();
        let diam = simson::geom::diameter(quad.vertices());
        prop_assert!(cert.simson_point.distance(m) <= 1e-7 * diam);
    }

    #[test]
    fn convex_polygons_have_none(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(5..=10);
        let poly = random_convex(&mut r, n);
        prop_assert!(find_simson_point(&poly, TOL).unwrap().is_none());
    }

    #[test]
    fn constructed_polygons_are_never_convex(seed in any::<u64>()) {
        let (.., sp) = random_construction(&mut rng(seed));
        if sp.len() >= 5 {
            prop_assert!(!sp.polygon.is_convex(), "{:?}", sp.polygon);
        }
    }

    #[test]
    fn construction_round_trip(seed in any::<u64>()) {
        let (s, l, feet, sp) = random_construction(&mut rng(seed));
        let scale = sp.polygon.scale();
        let cert = find_simson_point(&sp.polygon, TOL).unwrap();
        prop_assert!(cert.is_some());
        let cert = cert.unwrap();
        prop_assert!(cert.simson_point.distance(s) <= 1e-7 * scale);
        for x in [feet[0], *feet.last().unwrap()] {
            prop_assert!(cert.simson_line.signed_distance(x).abs() <= 1e-7 * scale);
        }
        prop_assert!(l.signed_distance(cert.simson_point) * l.signed_distance(s) > 0.0);
        let rebuilt = SimsonPolygon::from_certificate(sp.polygon.clone(), &cert);
        for (a, b) in rebuilt.projections.iter().zip(&sp.projections) {
            prop_assert!(a.distance(*b) <= 1e-7 * scale);
        }
    }

    #[test]
    fn second_intersection_passes_beyond(seed in any::<u64>()) {
        // A at the origin, B and C on two rays, S on the arc BC away from A,
        // X between A and B; circle AXS meets ray AC again beyond C.
        let mut r = rng(seed);
        let t1: f64 = r.gen_range(0.0..std::f64::consts::TAU);
        let w: f64 = r.gen_range(0.2..std::f64::consts::PI - 0.2);
        let (u, v) = (Point::new(t1.cos(), t1.sin()), Point::new((t1 + w).cos(), (t1 + w).sin()));
        let a = Point::ORIGIN;
        let b = u * r.gen_range(0.5..3.0);
        let c = v * r.gen_range(0.5..3.0);
        let circle = circumcircle(a, b, c, TOL).unwrap();
        let angle = |p: Point| (p.y - circle.center.y).atan2(p.x - circle.center.x);
        let tau = std::f64::consts::TAU;
        let mut sweep = (angle(c) - angle(b)).rem_euclid(tau);
        if (angle(a) - angle(b)).rem_euclid(tau) < sweep {
            sweep -= tau;
        }
        let phi = angle(b) + r.gen_range(0.05..0.95) * sweep;
        let s = circle.center + Point::new(phi.cos(), phi.sin()) * circle.radius;
        let x = b * r.gen_range(0.05..0.95);
        let axs = circumcircle(a, x, s, TOL).unwrap();
        let ray = simson::geom::line_through(a, c, TOL).unwrap();
        let y = circle_line_intersection(&axs, &ray, TOL)
            .into_iter()
            .max_by(|p, q| p.norm().total_cmp(&q.norm()))
            .unwrap();
        prop_assert!(y.dot(v) > 0.0);
        prop_assert!(y.norm() > c.norm());
    }
}

#[test]
fn convex_candidates_violate_a_later_element() {
    let mut r = rng(7);
    for _ in 0..50 {
        let n = r.gen_range(5..=10);
        let poly = random_convex(&mut r, n);
        for c in simson_candidates(&poly, TOL).unwrap() {
            assert!(c.violation > 1e3, "{c:?}");
        }
    }
}
