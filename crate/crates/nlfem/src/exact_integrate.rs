//! Closed-form integrals of radial polynomials over triangle ∩ disk.
//!
//! A triangle is written as the signed sum of the three wedges `(c, P, Q)`
//! spanned by the disk center `c` and its counterclockwise edges. Each wedge,
//! clipped by the disk, splits into apex triangles (integrated in polar
//! coordinates through the `sec^n` recurrence) and circular sectors.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geometry::{contains, point_segment_distance, point_triangle_distance, signed_area2, Point, Triangle};
use crate::kernel::{KernelFamily, Polynomial, Tier};

const POLE_TOL: f64 = 1e-9;
const SNAP_TOL: f64 = 1e-12;
const TANGENT_TOL: f64 = 1e-12;
const COLLINEAR_TOL: f64 = 1e-12;

/// Highest kernel degree the fixed-size moment buffers accept.
pub const MAX_MOMENT: usize = 24;

const fn reciprocals<const N: usize>() -> [f64; N] {
    let mut out = [0.0; N];
    let mut k = 1;
    while k < N {
        out[k] = 1.0 / k as f64;
        k += 1;
    }
    out
}

/// `INV[k] = 1/k`, avoiding divisions in the moment loops.
static INV: [f64; 2 * MAX_MOMENT + 2] = reciprocals();

fn sec_antiderivative(n: usize, theta: f64) -> f64 {
    let t = theta.tan();
    let sec = 1.0 / theta.cos();
    let (mut f, start) = if n % 2 == 1 {
        ((sec + t).abs().ln(), 1)
    } else {
        (t, 2)
    };
    let mut m = start + 2;
    while m <= n {
        let mf = m as f64;
        f = sec.powi(m as i32 - 2) * t / (mf - 1.0) + (mf - 2.0) / (mf - 1.0) * f;
        m += 2;
    }
    f
}

/// `∫_{θ0}^{θ1} sec^n θ dθ` by the reduction formula.
pub fn secant_power_integral(n: usize, theta0: f64, theta1: f64) -> Result<f64> {
    assert!(n >= 1, "secant power must be at least 1");
    for th in [theta0, theta1] {
        if !(th.abs() < FRAC_PI_2 - POLE_TOL) {
            return Err(Error::DomainError(th));
        }
    }
    Ok(sec_antiderivative(n, theta1) - sec_antiderivative(n, theta0))
}

/// `∫ |x|^{2k}` over the triangle with apex at the origin whose opposite side
/// lies on a line at distance `a`, spanning polar angles `[θ0, θ1]` measured
/// from the foot of the perpendicular.
pub fn apex_triangle_monomial(k: usize, a: f64, theta0: f64, theta1: f64) -> Result<f64> {
    let n = 2 * k + 2;
    Ok(a.powi(n as i32) / n as f64 * secant_power_integral(n, theta0, theta1)?)
}

/// Oriented triangle `(center, p, q)` clipped by the disk of radius `radius`.
#[derive(Clone, Copy, Debug)]
pub struct Wedge {
    pub center: Point,
    pub p: Point,
    pub q: Point,
    pub radius: f64,
}

impl Wedge {
    pub fn new(center: Point, p: Point, q: Point, radius: f64) -> Self {
        Self { center, p, q, radius }
    }

    /// Accumulates the signed integrals of `|x - c|^{2k}` for `k < out.len()`.
    pub fn add_moments(&self, out: &mut [f64]) {
        let p = self.p - self.center;
        let q = self.q - self.center;
        let rho = self.radius;
        let cr = p.cross(q);
        let d = q - p;
        let len2 = d.norm2();
        if len2 == 0.0 {
            return;
        }
        let len = len2.sqrt();
        let inv_len = 1.0 / len;
        let a = cr.abs() * inv_len;
        if a < COLLINEAR_TOL * rho {
            return;
        }
        let sign = cr.signum();
        // signed positions along the edge line, measured from the perpendicular foot
        let u0 = p.dot(d) * inv_len;
        let u1 = q.dot(d) * inv_len;

        let disc = rho * rho - a * a;
        let half_chord = if disc > TANGENT_TOL * rho * rho {
            Some(disc.sqrt())
        } else {
            None
        };

        let mut cuts = [u0, 0.0, 0.0, u1];
        let mut ncut = 1;
        if let Some(h) = half_chord {
            let snap = SNAP_TOL * len;
            for b in [-h, h] {
                if b > u0 + snap && b < u1 - snap {
                    cuts[ncut] = b;
                    ncut += 1;
                }
            }
        }
        cuts[ncut] = u1;

        let a2 = a * a;
        let rho2 = rho * rho;
        for w in cuts[..=ncut].windows(2) {
            let (ua, ub) = (w[0], w[1]);
            let mid = 0.5 * (ua + ub);
            let inside = matches!(half_chord, Some(h) if mid.abs() < h);
            if inside {
                chord_moments(a, ua, ub, sign, out);
            } else {
                let dtheta = (a * (ub - ua)).atan2(a2 + ua * ub);
                let mut rpow = rho2;
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += sign * dtheta * rpow * INV[2 * k + 2];
                    rpow *= rho2;
                }
            }
        }
    }
}

/// Signed `∫ |x - c|^{2k}` over the clipped wedge.
pub fn wedge_monomial(w: &Wedge, k: usize) -> f64 {
    let mut buf = vec![0.0; k + 1];
    w.add_moments(&mut buf);
    buf[k]
}

fn check_triangle(t: &Triangle) -> Result<()> {
    let area2 = signed_area2(t);
    let scale = (t[1] - t[0])
        .norm2()
        .max((t[2] - t[1]).norm2())
        .max((t[0] - t[2]).norm2());
    if !(area2.abs() >= 2e-14 * scale) {
        return Err(Error::DegenerateTriangle { area: 0.5 * area2.abs() });
    }
    Ok(())
}

/// Radial moments `m_k = ∫_{T ∩ B(c, ρ)} |y - c|^{2k} dy` for `k < out.len()`.
/// Orientation of `t` is normalized internally.
///
/// Equivalent to summing the three signed wedges, but the sector parts are
/// collected as the circular arcs bounding `T ∩ B`, which needs one `atan2`
/// per arc instead of one per wedge piece.
pub fn triangle_disk_moments(center: Point, t: &Triangle, radius: f64, out: &mut [f64]) {
    out.iter_mut().for_each(|m| *m = 0.0);
    let rel = t.map(|v| v - center);
    let v = if signed_area2(&rel) >= 0.0 { rel } else { [rel[0], rel[2], rel[1]] };
    let rho2 = radius * radius;
    // pieces of ∂T inside the disk, in boundary order
    let mut parts = [(Point::default(), Point::default()); 3];
    let mut nparts = 0;
    for e in 0..3 {
        let (p, q) = (v[e], v[(e + 1) % 3]);
        let d = q - p;
        let len2 = d.norm2();
        if len2 == 0.0 {
            continue;
        }
        let inv_len = 1.0 / len2.sqrt();
        let cr = p.cross(q);
        let a = cr.abs() * inv_len;
        let disc = rho2 - a * a;
        if disc <= TANGENT_TOL * rho2 {
            continue;
        }
        let h = disc.sqrt();
        let u0 = p.dot(d) * inv_len;
        let u1 = q.dot(d) * inv_len;
        let (ua, ub) = (u0.max(-h), u1.min(h));
        if ub - ua <= SNAP_TOL * (u1 - u0) {
            continue;
        }
        if a >= COLLINEAR_TOL * radius {
            chord_moments(a, ua, ub, cr.signum(), out);
        }
        let start = if ua == u0 { p } else { p + ((ua - u0) * inv_len) * d };
        let end = if ub == u1 { q } else { p + ((ub - u0) * inv_len) * d };
        parts[nparts] = (start, end);
        nparts += 1;
    }
    let theta = if nparts == 0 {
        if contains(&v, Point::default()) {
            2.0 * std::f64::consts::PI
        } else {
            0.0
        }
    } else {
        let snap2 = (SNAP_TOL * radius).powi(2);
        let mut theta = 0.0;
        for k in 0..nparts {
            let from = parts[k].1;
            let to = parts[(k + 1) % nparts].0;
            if (to - from).norm2() > snap2 {
                let mut ang = from.cross(to).atan2(from.dot(to));
                if ang <= 0.0 {
                    ang += 2.0 * std::f64::consts::PI;
                }
                theta += ang;
            }
        }
        theta
    };
    if theta != 0.0 {
        let mut rpow = rho2;
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += theta * rpow * INV[2 * k + 2];
            rpow *= rho2;
        }
    }
}

/// Signed moments of the apex triangle with the opposite side on a line at
/// distance `a`, between foot-relative positions `ua` and `ub`.
fn chord_moments(a: f64, ua: f64, ub: f64, sign: f64, out: &mut [f64]) {
    // G_m(u) = a^{2m} F_{2m}(θ) with tanθ = u/a; avoids dividing by a
    let a2 = a * a;
    let (ra2, rb2) = (a2 + ua * ua, a2 + ub * ub);
    let (aua, aub) = (a * ua, a * ub);
    let (mut ga, mut gb) = (aua, aub);
    let (mut pa, mut pb) = (1.0, 1.0);
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            pa *= ra2;
            pb *= rb2;
            let c = INV[2 * k + 1];
            let e = (2 * k) as f64 * c * a2;
            ga = pa * aua * c + e * ga;
            gb = pb * aub * c + e * gb;
        }
        *slot += sign * (gb - ga) * INV[2 * k + 2];
    }
}

fn combine(p: &Polynomial, moments: &[f64], inv_scale: f64) -> f64 {
    let mut acc = 0.0;
    let mut w = 1.0;
    for (k, &c) in p.coeffs().iter().enumerate() {
        if c != 0.0 {
            acc += c * w * moments[k];
        }
        w *= inv_scale;
    }
    acc
}

/// `∫_{T ∩ B(c, 2δ)} p(|y - c|^2 / 4δ^2) dy`.
pub fn triangle_disk_poly(p: &Polynomial, delta: f64, center: Point, t: &Triangle) -> Result<f64> {
    check_triangle(t)?;
    let rho = 2.0 * delta;
    if point_triangle_distance(center, t) >= rho {
        return Ok(0.0);
    }
    let mut moments = vec![0.0; p.coeffs().len()];
    triangle_disk_moments(center, t, rho, &mut moments);
    Ok(combine(p, &moments, 1.0 / (rho * rho)))
}

/// Inner integrals `∫_T R_δ(c, y) dy`, `∫_T R̄_δ`, `∫_T R̄̄_δ`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TierIntegrals {
    pub u: f64,
    pub p: f64,
    pub q: f64,
}

pub fn kernel_triangle_integrals(kf: &KernelFamily, center: Point, t: &Triangle) -> Result<TierIntegrals> {
    check_triangle(t)?;
    Ok(tier_integrals_unchecked(kf, center, t))
}

/// Same as [`kernel_triangle_integrals`] for triangles already known to be
/// nondegenerate.
pub fn tier_integrals_unchecked(kf: &KernelFamily, center: Point, t: &Triangle) -> TierIntegrals {
    let rho = kf.support_radius();
    if !disk_meets_triangle(center, t, rho) {
        return TierIntegrals::default();
    }
    let n = kf.poly(Tier::Rbarbar).coeffs().len();
    debug_assert!(n <= MAX_MOMENT);
    let mut moments = [0.0; MAX_MOMENT];
    triangle_disk_moments(center, t, rho, &mut moments[..n]);
    tiers_from_moments(kf, &moments[..n])
}

/// Whether the open disk `B(c, ρ)` meets `t`; a vertex test settles most
/// calls before the exact distance is needed.
fn disk_meets_triangle(c: Point, t: &Triangle, rho: f64) -> bool {
    let r2 = rho * rho;
    if t.iter().any(|&v| (v - c).norm2() < r2) {
        return true;
    }
    let lo = Point::new(t[0].x.min(t[1].x).min(t[2].x), t[0].y.min(t[1].y).min(t[2].y));
    let hi = Point::new(t[0].x.max(t[1].x).max(t[2].x), t[0].y.max(t[1].y).max(t[2].y));
    if c.x + rho <= lo.x || c.x - rho >= hi.x || c.y + rho <= lo.y || c.y - rho >= hi.y {
        return false;
    }
    point_triangle_distance(c, t) < rho
}

/// Radial moments over `Ω ∩ B(c, ρ)` for a point `c` inside a polygonal
/// domain `Ω`. `near_edges` must hold every directed boundary edge (domain on
/// the left) closer than `ρ` to `c`; the others only contribute full sectors.
pub fn domain_disk_moments(center: Point, near_edges: &[(Point, Point)], radius: f64, out: &mut [f64]) {
    let rho2 = radius * radius;
    let mut sector = 2.0 * std::f64::consts::PI;
    for &(p, q) in near_edges {
        if point_segment_distance(center, p, q) >= radius {
            continue;
        }
        Wedge::new(center, p, q, radius).add_moments(out);
        let (u, v) = (p - center, q - center);
        sector -= u.cross(v).atan2(u.dot(v));
    }
    let mut rpow = rho2;
    for (k, slot) in out.iter_mut().enumerate() {
        *slot += sector * rpow / (2 * k + 2) as f64;
        rpow *= rho2;
    }
}

/// Inner integrals over `Ω ∩ B(c, 2δ)`; see [`domain_disk_moments`].
pub fn domain_tier_integrals(kf: &KernelFamily, center: Point, near_edges: &[(Point, Point)]) -> TierIntegrals {
    let n = kf.poly(Tier::Rbarbar).coeffs().len();
    let mut moments = [0.0; MAX_MOMENT];
    domain_disk_moments(center, near_edges, kf.support_radius(), &mut moments[..n]);
    tiers_from_moments(kf, &moments[..n])
}

fn tiers_from_moments(kf: &KernelFamily, moments: &[f64]) -> TierIntegrals {
    let rho = kf.support_radius();
    let inv = 1.0 / (rho * rho);
    let c = kf.c_delta();
    TierIntegrals {
        u: c * combine(kf.poly(Tier::R), moments, inv),
        p: c * combine(kf.poly(Tier::Rbar), moments, inv),
        q: c * combine(kf.poly(Tier::Rbarbar), moments, inv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_4, PI};

    const O: Point = Point::new(0.0, 0.0);
    const UNIT: Triangle = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)];

    #[test]
    fn secant_examples() {
        assert_relative_eq!(secant_power_integral(2, 0.0, FRAC_PI_4).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            secant_power_integral(1, 0.0, FRAC_PI_4).unwrap(),
            (1.0 + 2f64.sqrt()).ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(secant_power_integral(4, 0.0, FRAC_PI_4).unwrap(), 4.0 / 3.0, max_relative = 1e-15);
        // sec^3: (secθ tanθ + ln|secθ + tanθ|)/2
        let want = 0.5 * (2f64.sqrt() + (1.0 + 2f64.sqrt()).ln());
        assert_relative_eq!(secant_power_integral(3, 0.0, FRAC_PI_4).unwrap(), want, max_relative = 1e-15);
    }

    #[test]
    fn secant_rejects_poles() {
        assert!(matches!(secant_power_integral(2, 0.0, FRAC_PI_2), Err(Error::DomainError(_))));
        assert!(secant_power_integral(2, -FRAC_PI_2 + 1e-10, 0.0).is_err());
    }

    #[test]
    fn apex_examples() {
        assert_relative_eq!(apex_triangle_monomial(0, 1.0, -FRAC_PI_4, FRAC_PI_4).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(apex_triangle_monomial(1, 1.0, 0.0, FRAC_PI_4).unwrap(), 1.0 / 3.0, max_relative = 1e-15);
        assert_eq!(apex_triangle_monomial(0, 1.0, 0.3, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn wedge_examples() {
        let quarter = Wedge::new(O, Point::new(2.0, 0.0), Point::new(0.0, 2.0), 1.0);
        assert_relative_eq!(wedge_monomial(&quarter, 0), FRAC_PI_4, max_relative = 1e-14);
        let whole = Wedge::new(O, Point::new(1.0, 0.0), Point::new(0.0, 1.0), 10.0);
        assert_relative_eq!(wedge_monomial(&whole, 0), 0.5, max_relative = 1e-15);
        let flipped = Wedge::new(O, Point::new(0.0, 1.0), Point::new(1.0, 0.0), 10.0);
        assert_relative_eq!(wedge_monomial(&flipped, 0), -0.5, max_relative = 1e-15);
        let flat = Wedge::new(O, Point::new(1.0, 1.0), Point::new(2.0, 2.0), 1.5);
        for k in 0..4 {
            assert_eq!(wedge_monomial(&flat, k), 0.0);
        }
    }

    #[test]
    fn wedge_matches_apex_form() {
        // apex triangle (0,0), (1,-0.5), (1,0.7) inside a big disk
        let w = Wedge::new(O, Point::new(1.0, -0.5), Point::new(1.0, 0.7), 5.0);
        for k in 0..5 {
            let want = apex_triangle_monomial(k, 1.0, (-0.5f64).atan(), 0.7f64.atan()).unwrap();
            assert_relative_eq!(wedge_monomial(&w, k), want, max_relative = 1e-13);
        }
    }

    #[test]
    fn triangle_disk_examples() {
        let one = Polynomial::new(vec![1.0]);
        let c = crate::geometry::centroid(&UNIT);
        assert_relative_eq!(triangle_disk_poly(&one, 2.0, c, &UNIT).unwrap(), 0.5, max_relative = 1e-14);
        let s = Polynomial::new(vec![0.0, 1.0]);
        assert_relative_eq!(triangle_disk_poly(&s, 0.5, O, &UNIT).unwrap(), 1.0 / 6.0, max_relative = 1e-14);
        assert_eq!(triangle_disk_poly(&one, 0.5, Point::new(3.0, 3.0), &UNIT).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_triangle_rejected() {
        let flat = [O, Point::new(1.0, 0.0), Point::new(2.0, 1e-16)];
        let one = Polynomial::new(vec![1.0]);
        assert!(matches!(
            triangle_disk_poly(&one, 1.0, O, &flat),
            Err(Error::DegenerateTriangle { .. })
        ));
    }

    #[test]
    fn disk_inside_triangle() {
        let big: Triangle = [Point::new(-10.0, -10.0), Point::new(10.0, -10.0), Point::new(0.0, 10.0)];
        let c = Point::new(0.1, -0.3);
        for coeffs in [vec![1.0], vec![1.0, -1.0], vec![2.0, 0.3, -0.4]] {
            let kf = KernelFamily::new(&coeffs, 0.7).unwrap();
            let t = kernel_triangle_integrals(&kf, c, &big).unwrap();
            // full-disk integral of R̄_δ is 8π·α₂·∫₀¹ R̄(r²) r dr = 4
            assert_relative_eq!(t.p, 4.0 * kf.normalization(), max_relative = 1e-12);
            if coeffs.len() == 1 {
                assert_relative_eq!(t.u, 8.0, max_relative = 1e-12);
            }
        }
        let kf = KernelFamily::new(&[1.0], 0.1).unwrap();
        let far = kernel_triangle_integrals(&kf, Point::new(0.5, 1.2), &UNIT).unwrap();
        assert_eq!(far, TierIntegrals::default());
    }

    #[test]
    fn disk_completeness() {
        // square polygon containing the disk
        let poly = [
            Point::new(-2.0, -2.0),
            Point::new(2.0, -2.0),
            Point::new(2.0, 2.0),
            Point::new(-2.0, 2.0),
        ];
        let c = Point::new(0.3, -0.2);
        let rho = 1.1;
        let mut m = [0.0; 6];
        for e in 0..4 {
            Wedge::new(c, poly[e], poly[(e + 1) % 4], rho).add_moments(&mut m);
        }
        for (k, v) in m.iter().enumerate() {
            let want = 2.0 * PI * rho.powi(2 * k as i32 + 2) / (2 * k + 2) as f64;
            assert_relative_eq!(*v, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn clockwise_triangle_same_result() {
        let kf = KernelFamily::new(&[1.0, -1.0], 0.3).unwrap();
        let c = Point::new(0.6, 0.1);
        let a = kernel_triangle_integrals(&kf, c, &UNIT).unwrap();
        let b = kernel_triangle_integrals(&kf, c, &[UNIT[0], UNIT[2], UNIT[1]]).unwrap();
        assert_relative_eq!(a.p, b.p, max_relative = 1e-14);
        assert_relative_eq!(a.q, b.q, max_relative = 1e-14);
    }

    fn wedge_sum(center: Point, t: &Triangle, radius: f64, out: &mut [f64]) {
        out.iter_mut().for_each(|m| *m = 0.0);
        let ccw = signed_area2(t) >= 0.0;
        for e in 0..3 {
            let (p, q) = if ccw { (t[e], t[(e + 1) % 3]) } else { (t[(e + 1) % 3], t[e]) };
            Wedge::new(center, p, q, radius).add_moments(out);
        }
    }

    proptest::proptest! {
        #[test]
        fn arc_form_matches_wedge_sum(
            xs in proptest::array::uniform3(-1.0f64..1.0),
            ys in proptest::array::uniform3(-1.0f64..1.0),
            cx in -1.2f64..1.2, cy in -1.2f64..1.2, radius in 0.05f64..2.0,
        ) {
            let t: Triangle = std::array::from_fn(|k| Point::new(xs[k], ys[k]));
            proptest::prop_assume!(signed_area2(&t).abs() > 1e-3);
            let c = Point::new(cx, cy);
            let (mut fast, mut slow) = ([0.0; 4], [0.0; 4]);
            triangle_disk_moments(c, &t, radius, &mut fast);
            wedge_sum(c, &t, radius, &mut slow);
            for k in 0..4 {
                let scale = radius.powi(2 * k as i32 + 2);
                proptest::prop_assert!((fast[k] - slow[k]).abs() <= 1e-12 * scale, "k={} {} vs {}", k, fast[k], slow[k]);
            }
        }
    }

    #[test]
    fn arc_form_handles_vertices_on_the_circle() {
        let t: Triangle = [Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(-1.0, -0.5)];
        let (mut fast, mut slow) = ([0.0; 3], [0.0; 3]);
        for radius in [1.0, 1.0 + 1e-15, 1.0 - 1e-15, 0.5f64.sqrt()] {
            triangle_disk_moments(O, &t, radius, &mut fast);
            wedge_sum(O, &t, radius, &mut slow);
            for k in 0..3 {
                assert!((fast[k] - slow[k]).abs() < 1e-12, "radius {radius} k {k}: {fast:?} vs {slow:?}");
            }
        }
    }
}
