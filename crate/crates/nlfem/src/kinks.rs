//! Curves along which the closed-form inner integrals lose smoothness.
//!
//! For a disk of radius `ρ` centred at a moving point `x`, the clipped region
//! against a polygon changes shape when the circle passes through a polygon
//! vertex or becomes tangent to a polygon edge. As a function of `x` this
//! happens on circles of radius `ρ` about the vertices and on edge segments
//! shifted by `±ρ` along their normal.

use crate::geometry::{point_segment_distance, point_triangle_distance, segment_triangle_distance, Point, Triangle};

const BREAK_TOL: f64 = 1e-12;

#[derive(Clone, Debug, Default)]
pub(crate) struct KinkSet {
    rho: f64,
    circles: Vec<Point>,
    lines: Vec<(Point, Point)>,
}

impl KinkSet {
    pub fn new(rho: f64) -> Self {
        Self {
            rho,
            circles: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, v: Point) {
        self.circles.push(v);
    }

    pub fn add_edge(&mut self, a: Point, b: Point) {
        let d = b - a;
        let n = (self.rho / d.norm()) * d.perp_cw();
        self.lines.push((a + n, b + n));
        self.lines.push((a - n, b - n));
    }

    pub fn add_triangle(&mut self, t: &Triangle) {
        for e in 0..3 {
            self.add_vertex(t[e]);
            self.add_edge(t[e], t[(e + 1) % 3]);
        }
    }

    pub fn of_triangle(t: &Triangle, rho: f64) -> Self {
        let mut k = Self::new(rho);
        k.add_triangle(t);
        k
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty() && self.lines.is_empty()
    }

    /// Whether some curve passes through `p`.
    pub fn touches(&self, p: Point) -> bool {
        let tol = 1e-12 * self.rho;
        self.circles.iter().any(|&v| ((p - v).norm() - self.rho).abs() <= tol)
            || self.lines.iter().any(|&(a, b)| point_segment_distance(p, a, b) <= tol)
    }

    /// The curves meeting the closed triangle `t`.
    pub fn restricted_to(&self, t: &Triangle) -> KinkSet {
        let far = |v: Point| t.iter().map(|&p| (p - v).norm()).fold(0.0, f64::max);
        KinkSet {
            rho: self.rho,
            circles: self
                .circles
                .iter()
                .copied()
                .filter(|&v| point_triangle_distance(v, t) <= self.rho && far(v) >= self.rho)
                .collect(),
            lines: self
                .lines
                .iter()
                .copied()
                .filter(|&(a, b)| segment_triangle_distance(a, b, t) == 0.0)
                .collect(),
        }
    }

    /// Sorted parameters in `(0, 1)` where `[a, b]` crosses a curve.
    pub fn segment_breaks(&self, a: Point, b: Point, out: &mut Vec<f64>) {
        out.clear();
        for &v in &self.circles {
            circle_params(a, b, v, self.rho, out);
        }
        for &(c, d) in &self.lines {
            if let Some((t, _)) = segment_params(a, b, c, d) {
                out.push(t);
            }
        }
        out.retain(|&t| t > BREAK_TOL && t < 1.0 - BREAK_TOL);
        out.sort_by(f64::total_cmp);
        out.dedup_by(|x, y| (*x - *y).abs() < BREAK_TOL);
    }

    /// Values of `x·dir` where the chords of `t` orthogonal to `dir` change
    /// how they cross the curves: triangle vertices, tangencies, curve
    /// endpoints, curve-curve and curve-edge intersections.
    pub fn sweep_breaks(&self, t: &Triangle, dir: Point, out: &mut Vec<f64>) {
        out.clear();
        let rho = self.rho;
        let mut push = |p: Point| out.push(p.dot(dir));
        for &p in t {
            push(p);
        }
        let mut scratch = Vec::new();
        for &v in &self.circles {
            out.push(v.dot(dir) - rho);
            out.push(v.dot(dir) + rho);
        }
        for (k, &v) in self.circles.iter().enumerate() {
            for &w in &self.circles[k + 1..] {
                for p in circle_circle(v, w, rho) {
                    out.push(p.dot(dir));
                }
            }
            for &(a, b) in &self.lines {
                scratch.clear();
                circle_params(a, b, v, rho, &mut scratch);
                for &s in &scratch {
                    if (0.0..=1.0).contains(&s) {
                        out.push(a.lerp(b, s).dot(dir));
                    }
                }
            }
        }
        for (k, &(a, b)) in self.lines.iter().enumerate() {
            out.push(a.dot(dir));
            out.push(b.dot(dir));
            for &(c, d) in &self.lines[k + 1..] {
                if let Some((s, _)) = segment_params(a, b, c, d) {
                    out.push(a.lerp(b, s).dot(dir));
                }
            }
        }
        for e in 0..3 {
            let (a, b) = (t[e], t[(e + 1) % 3]);
            self.segment_breaks(a, b, &mut scratch);
            for &s in &scratch {
                out.push(a.lerp(b, s).dot(dir));
            }
        }
        let lo = t.iter().map(|p| p.dot(dir)).fold(f64::INFINITY, f64::min);
        let hi = t.iter().map(|p| p.dot(dir)).fold(f64::NEG_INFINITY, f64::max);
        let tol = BREAK_TOL * (hi - lo);
        out.retain(|&s| s >= lo && s <= hi);
        out.push(lo);
        out.push(hi);
        out.sort_by(f64::total_cmp);
        out.dedup_by(|x, y| (*x - *y).abs() <= tol);
    }
}

/// Parameters `t` (unrestricted) with `|a + t (b - a) - c| = r`.
fn circle_params(a: Point, b: Point, c: Point, r: f64, out: &mut Vec<f64>) {
    let d = b - a;
    let f = a - c;
    let qa = d.norm2();
    let qb = 2.0 * d.dot(f);
    let qc = f.norm2() - r * r;
    let disc = qb * qb - 4.0 * qa * qc;
    if qa == 0.0 || disc <= 0.0 {
        return;
    }
    let sq = disc.sqrt();
    if qb == 0.0 {
        out.push(-sq / (2.0 * qa));
        out.push(sq / (2.0 * qa));
        return;
    }
    let q = -0.5 * (qb + qb.signum() * sq);
    out.push(q / qa);
    if q != 0.0 {
        out.push(qc / q);
    }
}

/// Intersection parameters of two non-parallel segments.
fn segment_params(a: Point, b: Point, c: Point, d: Point) -> Option<(f64, f64)> {
    let r = b - a;
    let s = d - c;
    let den = r.cross(s);
    if den.abs() <= 1e-14 * r.norm() * s.norm() {
        return None;
    }
    let t = (c - a).cross(s) / den;
    let u = (c - a).cross(r) / den;
    ((0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)).then_some((t, u))
}

fn circle_circle(v: Point, w: Point, r: f64) -> Vec<Point> {
    let d = w - v;
    let dist2 = d.norm2();
    if dist2 == 0.0 || dist2 >= 4.0 * r * r {
        return Vec::new();
    }
    let mid = v.lerp(w, 0.5);
    let h = (r * r - 0.25 * dist2).sqrt() / dist2.sqrt();
    let off = h * d.perp_cw();
    vec![mid + off, mid - off]
}
