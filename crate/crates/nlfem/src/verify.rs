//! Self-checks run by `nlfem verify`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assembly::{assemble_system, QuadConfig};
use crate::error::{Error, Result};
use crate::exact_integrate::{secant_power_integral, triangle_disk_poly};
use crate::geometry::{signed_area2, Point, Triangle};
use crate::kernel::{KernelFamily, Polynomial, Tier};
use crate::mesh::Mesh;
use crate::oracle::{adaptive_simpson, monte_carlo, sample_triangle, Oracle, OracleMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Kernels,
    Geometry,
    Oracle,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "kernels" => Ok(Self::Kernels),
            "geometry" => Ok(Self::Geometry),
            "oracle" => Ok(Self::Oracle),
            "all" => Ok(Self::All),
            _ => Err(format!("unknown suite {s:?} (expected kernels, geometry, oracle or all)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

const SEED: u64 = 20240229;

/// Runs `suite`, reporting each check as soon as it finishes.
pub fn run(suite: Suite, mut report: impl FnMut(&Check)) -> Result<bool> {
    let mut ok = true;
    let mut emit = |c: Check| {
        ok &= c.passed;
        report(&c);
    };
    if matches!(suite, Suite::Kernels | Suite::All) {
        kernels(&mut emit)?;
    }
    if matches!(suite, Suite::Geometry | Suite::All) {
        geometry(&mut emit)?;
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        oracle(&mut emit)?;
    }
    Ok(ok)
}

/// Polynomial profile with random coefficients and a positive second moment.
pub fn random_kernel(rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let degree = rng.gen_range(0..=4);
        let c: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let moment: f64 = c.iter().enumerate().map(|(k, a)| a / (k + 2) as f64).sum();
        if moment > 0.1 {
            return c;
        }
    }
}

fn kernels(emit: &mut impl FnMut(Check)) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cases = vec![("const".to_string(), vec![1.0]), ("quadratic".to_string(), vec![1.0, -1.0])];
    for k in 0..5 {
        cases.push((format!("random #{k}"), random_kernel(&mut rng)));
    }
    for (name, coeffs) in cases {
        let kf = KernelFamily::new(&coeffs, 0.37)?;
        let err = (kf.normalization() - 1.0).abs();
        emit(check(format!("normalization {name}"), err <= 1e-12, format!("|2πα₂·½∫R̄ - 1| = {err:.2e}")));
        let d1 = diff(&kf.poly(Tier::Rbar).derivative(), kf.poly(Tier::R), -1.0);
        let d2 = diff(&kf.poly(Tier::Rbarbar).derivative(), kf.poly(Tier::Rbar), -1.0);
        emit(check(
            format!("tiers {name}"),
            d1.max(d2) <= 1e-12,
            format!("max |R̄' + R| = {d1:.2e}, |R̄̄' + R̄| = {d2:.2e}"),
        ));
        let tail = kf.poly(Tier::Rbar).eval(1.0).abs() + kf.poly(Tier::Rbarbar).eval(1.0).abs();
        emit(check(format!("tails vanish {name}"), tail <= 1e-14, format!("|R̄(1)| + |R̄̄(1)| = {tail:.2e}")));
    }
    let bad = KernelFamily::new(&[1.0, -3.0], 0.5);
    emit(check("non-normalizable profile rejected", matches!(bad, Err(Error::NonNormalizable(_))), format!("{bad:?}").chars().take(60).collect::<String>()));
    Ok(())
}

fn diff(a: &Polynomial, b: &Polynomial, scale: f64) -> f64 {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n)
        .map(|k| a.coeffs().get(k).unwrap_or(&0.0) - scale * b.coeffs().get(k).unwrap_or(&0.0))
        .fold(0.0, |m: f64, v| m.max(v.abs()))
}

/// A random triangle and disk that cut each other.
pub fn random_clipped_config(rng: &mut impl Rng) -> (Triangle, Point, f64) {
    loop {
        let t: Triangle = std::array::from_fn(|_| Point::new(rng.gen(), rng.gen()));
        if signed_area2(&t).abs() < 0.05 {
            continue;
        }
        let t = if signed_area2(&t) > 0.0 { t } else { [t[0], t[2], t[1]] };
        let c = Point::new(rng.gen_range(-0.2..1.2), rng.gen_range(-0.2..1.2));
        let delta = rng.gen_range(0.1..0.4);
        let rho = 2.0 * delta;
        let inside = t.iter().filter(|&&p| (p - c).norm() < rho).count();
        if (1..3).contains(&inside) {
            return (t, c, delta);
        }
    }
}

/// Monte Carlo estimate of `∫_{T ∩ B(c, 2δ)} p(|y - c|² / 4δ²) dy`.
pub fn triangle_disk_monte_carlo(p: &Polynomial, delta: f64, c: Point, t: &Triangle, samples: u64, seed: u64) -> (f64, f64) {
    let area = 0.5 * signed_area2(t);
    let inv = 1.0 / (4.0 * delta * delta);
    let e = monte_carlo(samples, seed, |rng| {
        let y = sample_triangle(rng, t);
        let s = (y - c).norm2() * inv;
        if s < 1.0 {
            area * p.eval(s)
        } else {
            0.0
        }
    });
    (e.value, e.std_error)
}

fn geometry(emit: &mut impl FnMut(Check)) -> Result<()> {
    let unit: Triangle = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)];
    let origin = Point::new(0.0, 0.0);
    let full = triangle_disk_poly(&Polynomial::new(vec![1.0]), 2.0, origin, &unit)?;
    emit(check("unit triangle, p = 1, full coverage", (full - 0.5).abs() <= 1e-12, format!("{full:.17} vs 1/2")));
    let second = triangle_disk_poly(&Polynomial::new(vec![0.0, 1.0]), 0.5, origin, &unit)?;
    emit(check("unit triangle, p = s, δ = 1/2", (second - 1.0 / 6.0).abs() <= 1e-12, format!("{second:.17} vs 1/6")));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for k in 0..10 {
        let (t, c, delta) = random_clipped_config(&mut rng);
        let p = Polynomial::new((0..=rng.gen_range(0..3)).map(|_| rng.gen_range(-1.0..1.0)).collect());
        let exact = triangle_disk_poly(&p, delta, c, &t)?;
        let (mc, se) = triangle_disk_monte_carlo(&p, delta, c, &t, 200_000, SEED + k);
        worst = worst.max((exact - mc).abs() / se.max(1e-300));
    }
    emit(check("clipped triangle ∩ disk vs Monte Carlo (10 configs)", worst <= 4.0, format!("max |diff| / std-err = {worst:.2}")));

    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(-1.4..1.4), rng.gen_range(-1.4..1.4));
        for n in 1..=12 {
            let exact = secant_power_integral(n, a, b)?;
            let numeric = adaptive_simpson(&|t: f64| t.cos().powi(-(n as i32)), a, b, 1e-13 * exact.abs().max(1.0));
            worst = worst.max((exact - numeric).abs() / numeric.abs().max(1e-300));
        }
    }
    emit(check("secant recurrence vs adaptive quadrature", worst <= 1e-10, format!("max relative error {worst:.2e}")));

    let mesh = Mesh::unit_square(5)?;
    let area: f64 = (0..mesh.num_cells()).map(|c| mesh.area(c)).sum();
    let euler = mesh.vertices().len() as i64 - mesh.num_edges() as i64 + mesh.num_cells() as i64;
    emit(check("unit-square mesh", (area - 1.0).abs() < 1e-14 && euler == 1, format!("area {area}, V - E + F = {euler}")));
    Ok(())
}

fn oracle(emit: &mut impl FnMut(Check)) -> Result<()> {
    let tensor = OracleMode::Tensor { degree: 8 };
    let f = |p: Point| 1.0 + p.x - 0.5 * p.y * p.y;
    let g = |p: Point| 0.3 + p.x * p.y;
    let quad = QuadConfig::default();

    let mesh = Mesh::unit_square(2)?;
    let kf = KernelFamily::new(&[1.0, -1.0], 0.8)?;
    let sys = assemble_system(&mesh, &kf, &f, &g, quad)?;
    let o = Oracle::new(&mesh, &kf)?;
    let (dmax, mmax, bmax) = (sys.diffusion.max_abs(), sys.zero_order.max_abs(), sys.rhs.max_abs());
    for (a, b) in [((0, 0), (0, 0)), ((0, 1), (0, 2)), ((0, 0), (3, 2)), ((2, 1), (5, 0)), ((4, 2), (7, 1))] {
        let (r, c) = (3 * a.0 + a.1, 3 * b.0 + b.1);
        let d = o.diffusion_entry(a, b, tensor)?.value;
        let red = sys.diffusion.get(r, c).unwrap_or(0.0);
        let rel = (red - d).abs() / dmax;
        emit(check(format!("D{a:?}{b:?}"), rel <= 1e-8, format!("reduced {red:+.10e} oracle {d:+.10e} rel-diff {rel:.1e}")));
        let m = o.zero_order_entry(a, b, tensor)?.value;
        let red = sys.zero_order.get(r, c).unwrap_or(0.0);
        let rel = (red - m).abs() / mmax;
        emit(check(format!("M{a:?}{b:?}"), rel <= 1e-8, format!("reduced {red:+.10e} oracle {m:+.10e} rel-diff {rel:.1e}")));
    }
    for a in [(0, 0), (3, 1), (6, 2)] {
        let e = o.rhs_entry(a, &f, &g, tensor)?.value;
        let red = sys.rhs.0[3 * a.0 + a.1];
        let rel = (red - e).abs() / bmax;
        emit(check(format!("b{a:?}"), rel <= 1e-8, format!("reduced {red:+.10e} oracle {e:+.10e} rel-diff {rel:.1e}")));
    }

    // clipped horizon: Monte Carlo oracle
    let mesh = Mesh::unit_square(8)?;
    let kf = KernelFamily::new(&[1.0], 0.5)?;
    let sys = assemble_system(&mesh, &kf, &f, &g, quad)?;
    let o = Oracle::new(&mesh, &kf)?;
    let mc = OracleMode::MonteCarlo { samples: 1_000_000, seed: SEED };
    for (a, b) in [((0, 0), (0, 0)), ((9, 1), (9, 2)), ((0, 2), (1, 0)), ((40, 0), (43, 1))] {
        let e = o.diffusion_entry(a, b, mc)?;
        let red = sys.diffusion.get(3 * a.0 + a.1, 3 * b.0 + b.1).unwrap_or(0.0);
        let z = (red - e.value).abs() / e.std_error;
        emit(check(format!("D{a:?}{b:?} clipped"), z <= 4.0, format!("reduced {red:+.6e} oracle {:+.6e} ± {:.1e} diff/std-err {z:.2}", e.value, e.std_error)));
    }
    for a in [(0, 0), (20, 1)] {
        let e = o.rhs_entry(a, &f, &g, mc)?;
        let red = sys.rhs.0[3 * a.0 + a.1];
        let z = (red - e.value).abs() / e.std_error;
        emit(check(format!("b{a:?} clipped"), z <= 4.0, format!("reduced {red:+.6e} oracle {:+.6e} ± {:.1e} diff/std-err {z:.2}", e.value, e.std_error)));
    }
    Ok(())
}
