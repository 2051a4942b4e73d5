//! Shared oracles for the integration tests: a brute-force polygon Hausdorff
//! distance built from vertices and edges, and seeded random body factories.
//!
//! The oracle deliberately avoids the library's support-difference formula so
//! the two routes stay independent.

#![allow(dead_code)]

use std::sync::Arc;

use svapprox_core::convex_sets::{ConvexBody, DirectionGrid, Point};
use svapprox_core::set_functions::RandomShape;
use svapprox_core::SampleRng;

/// Distance from a point to a closed segment.
pub fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Distance from a point to a convex body, through its vertex polygon.
pub fn point_body_distance(p: Point, body: &ConvexBody) -> f64 {
    if body.contains_point(p, 1e-12) {
        return 0.0;
    }
    let vs = body.vertices();
    if vs.len() == 1 {
        return (p - vs[0]).norm();
    }
    let mut best = f64::INFINITY;
    for i in 0..vs.len() {
        let j = (i + 1) % vs.len();
        best = best.min(segment_distance(p, vs[i], vs[j]));
    }
    best
}

/// Brute two-sided Hausdorff distance between the vertex polygons.
pub fn brute_hausdorff(a: &ConvexBody, b: &ConvexBody) -> f64 {
    let mut worst = 0.0f64;
    for v in a.vertices() {
        worst = worst.max(point_body_distance(v, b));
    }
    for v in b.vertices() {
        worst = worst.max(point_body_distance(v, a));
    }
    worst
}

/// Random body drawn from the shape family at a fixed argument.
pub fn shape_body(seed: u64, x: f64, xi: &Arc<DirectionGrid>) -> ConvexBody {
    let mut rng = SampleRng::from_seed(seed);
    RandomShape::draw(&mut rng, xi.m()).body_at(x, xi).expect("valid body")
}

/// Random polygon from a seeded point cloud of the given size.
pub fn cloud_body(seed: u64, len: usize, xi: &Arc<DirectionGrid>) -> ConvexBody {
    let mut rng = SampleRng::from_seed(seed);
    let pts: Vec<Point> = (0..len.max(1))
        .map(|_| Point::new(rng.symmetric(), rng.symmetric()))
        .collect();
    ConvexBody::convexify(xi, &pts).expect("valid hull")
}
