//! Planar points and the handful of distance predicates the assembly needs.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    /// Rotated by -90 degrees.
    pub fn perp_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        Point::new(self * p.x, self * p.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

pub type Triangle = [Point; 3];

/// Twice the signed area; positive for counterclockwise vertex order.
pub fn signed_area2(t: &Triangle) -> f64 {
    (t[1] - t[0]).cross(t[2] - t[0])
}

pub fn centroid(t: &Triangle) -> Point {
    Point::new(
        (t[0].x + t[1].x + t[2].x) / 3.0,
        (t[0].y + t[1].y + t[2].y) / 3.0,
    )
}

/// Longest edge length.
pub fn diameter(t: &Triangle) -> f64 {
    (t[1] - t[0])
        .norm()
        .max((t[2] - t[1]).norm())
        .max((t[0] - t[2]).norm())
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    let l2 = d.norm2();
    if l2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(d) / l2).clamp(0.0, 1.0);
    (p - a.lerp(b, t)).norm()
}

/// Closed-triangle containment; orientation agnostic.
pub fn contains(t: &Triangle, p: Point) -> bool {
    let s = signed_area2(t).signum();
    (0..3).all(|k| s * (t[(k + 1) % 3] - t[k]).cross(p - t[k]) >= 0.0)
}

pub fn point_triangle_distance(p: Point, t: &Triangle) -> f64 {
    if contains(t, p) {
        return 0.0;
    }
    (0..3)
        .map(|k| point_segment_distance(p, t[k], t[(k + 1) % 3]))
        .fold(f64::INFINITY, f64::min)
}

fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = (b - a).cross(c - a);
    let o2 = (b - a).cross(d - a);
    let o3 = (d - c).cross(a - c);
    let o4 = (d - c).cross(b - c);
    if o1 == 0.0 && o2 == 0.0 {
        // collinear: overlap of the projections onto the common line
        let dir = b - a;
        let (tc, td) = ((c - a).dot(dir), (d - a).dot(dir));
        return tc.min(td) <= dir.norm2() && tc.max(td) >= 0.0;
    }
    o1 * o2 <= 0.0 && o3 * o4 <= 0.0
}

pub fn segment_segment_distance(a: Point, b: Point, c: Point, d: Point) -> f64 {
    if segments_intersect(a, b, c, d) {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

pub fn segment_triangle_distance(a: Point, b: Point, t: &Triangle) -> f64 {
    if contains(t, a) || contains(t, b) {
        return 0.0;
    }
    (0..3)
        .map(|k| segment_segment_distance(a, b, t[k], t[(k + 1) % 3]))
        .fold(f64::INFINITY, f64::min)
}

/// Minimum Euclidean distance between two closed triangles.
pub fn triangle_distance(s: &Triangle, t: &Triangle) -> f64 {
    if s.iter().any(|&p| contains(t, p)) || t.iter().any(|&p| contains(s, p)) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for i in 0..3 {
        for j in 0..3 {
            best = best.min(segment_segment_distance(
                s[i],
                s[(i + 1) % 3],
                t[j],
                t[(j + 1) % 3],
            ));
        }
    }
    best
}

/// Largest distance between any two points of the triangles (attained at vertices).
pub fn triangle_max_distance(s: &Triangle, t: &Triangle) -> f64 {
    let mut best: f64 = 0.0;
    for p in s {
        for q in t {
            best = best.max((*p - *q).norm());
        }
    }
    best
}
