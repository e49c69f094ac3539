//! Brute-force evaluation of the unreduced double integrals, for validating
//! the reduced assembly.
//!
//! Tensor mode nests triangle rules over `T_i × T_j` and is exact when the
//! kernel is never clipped on the integration region. Monte Carlo mode works
//! in any regime and reports a standard error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::assembly::ScalarField;
use crate::error::{Error, Result};
use crate::geometry::{triangle_distance, triangle_max_distance, Point, Triangle};
use crate::kernel::{KernelFamily, Tier};
use crate::mesh::{AffineBasis, CellIndex, Mesh};
use crate::quadrature::{gauss_segment, map_segment, map_triangle, triangle_rule, MappedRule, MAX_SEGMENT_POINTS};

/// A degree of freedom `(cell, local vertex)`.
pub type Dof = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OracleMode {
    /// Nested triangle rules of the given polynomial degree.
    Tensor { degree: usize },
    MonteCarlo { samples: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Zero in tensor mode.
    pub std_error: f64,
}

const BATCH: u64 = 1 << 15;

pub struct Oracle<'a> {
    mesh: &'a Mesh,
    kernel: &'a KernelFamily,
    index: CellIndex,
    basis: Vec<[AffineBasis; 3]>,
}

impl<'a> Oracle<'a> {
    pub fn new(mesh: &'a Mesh, kernel: &'a KernelFamily) -> Result<Self> {
        let basis = (0..mesh.num_cells())
            .map(|c| mesh.basis_functions(c))
            .collect::<Result<_>>()?;
        Ok(Self {
            mesh,
            kernel,
            index: CellIndex::new(mesh, mesh.mean_cell_diameter()),
            basis,
        })
    }

    fn phi(&self, d: Dof, x: Point) -> f64 {
        self.basis[d.0][d.1].eval(x)
    }

    fn rho(&self) -> f64 {
        self.kernel.support_radius()
    }

    fn unclipped(&self, i: usize, j: usize) -> bool {
        triangle_max_distance(&self.mesh.triangle(i), &self.mesh.triangle(j)) <= self.rho()
    }

    fn unclipped_everywhere(&self, i: usize) -> bool {
        (0..self.mesh.num_cells()).all(|j| self.unclipped(i, j))
    }

    fn rule(&self, cell: usize, degree: usize) -> Result<MappedRule> {
        map_triangle(&triangle_rule(degree)?, &self.mesh.triangle(cell))
    }

    fn tensor(&self, ri: &MappedRule, rj: &MappedRule, f: impl Fn(Point, Point) -> f64) -> f64 {
        ri.integrate(|x| rj.integrate(|y| f(x, y)))
    }

    /// `(1/δ²) ∫_Ω φ_a(x) ∫_Ω R_δ(x, y) (φ_b(x) - φ_b(y)) dy dx`.
    pub fn diffusion_entry(&self, a: Dof, b: Dof, mode: OracleMode) -> Result<Estimate> {
        let (i, j) = (a.0, b.0);
        let inv_d2 = 1.0 / (self.kernel.delta() * self.kernel.delta());
        let r = |x, y| self.kernel.eval_scaled(Tier::R, x, y);
        if i != j && triangle_distance(&self.mesh.triangle(i), &self.mesh.triangle(j)) >= self.rho() {
            return Ok(exact(0.0));
        }
        match mode {
            OracleMode::Tensor { degree } => {
                let ri = self.rule(i, degree)?;
                if i != j {
                    if !self.unclipped(i, j) {
                        return Err(Error::RegimeError);
                    }
                    let rj = self.rule(j, degree)?;
                    let v = self.tensor(&ri, &rj, |x, y| r(x, y) * self.phi(a, x) * self.phi(b, y));
                    return Ok(exact(-inv_d2 * v));
                }
                if !self.unclipped_everywhere(i) {
                    return Err(Error::RegimeError);
                }
                let mut mass = 0.0;
                for c in 0..self.mesh.num_cells() {
                    let rc = self.rule(c, degree)?;
                    mass += self.tensor(&ri, &rc, |x, y| r(x, y) * self.phi(a, x) * self.phi(b, x));
                }
                let self_part = self.tensor(&ri, &ri, |x, y| r(x, y) * self.phi(a, x) * self.phi(b, y));
                Ok(exact(inv_d2 * (mass - self_part)))
            }
            OracleMode::MonteCarlo { samples, seed } => {
                let ti = self.mesh.triangle(i);
                if i != j {
                    let tj = self.mesh.triangle(j);
                    let scale = -inv_d2 * self.mesh.area(i) * self.mesh.area(j);
                    return Ok(monte_carlo(samples, seed, |rng| {
                        let x = sample_triangle(rng, &ti);
                        let y = sample_triangle(rng, &tj);
                        scale * r(x, y) * self.phi(a, x) * self.phi(b, y)
                    }));
                }
                // x uniform in T_i, y uniform in the horizon disk around x.
                let scale = inv_d2 * self.mesh.area(i) * std::f64::consts::PI * self.rho() * self.rho();
                Ok(monte_carlo(samples, seed, |rng| {
                    let x = sample_triangle(rng, &ti);
                    let y = sample_disk(rng, x, self.rho());
                    let w = match self.mesh.locate(&self.index, y) {
                        None => return 0.0,
                        Some(c) if c == i => {
                            0.5 * (self.phi(a, x) - self.phi(a, y)) * (self.phi(b, x) - self.phi(b, y))
                        }
                        Some(_) => self.phi(a, x) * self.phi(b, x),
                    };
                    scale * r(x, y) * w
                }))
            }
        }
    }

    /// `∫_Ω φ_a(x) ∫_Ω R̄_δ(x, y) φ_b(y) dy dx`.
    pub fn zero_order_entry(&self, a: Dof, b: Dof, mode: OracleMode) -> Result<Estimate> {
        let (i, j) = (a.0, b.0);
        if triangle_distance(&self.mesh.triangle(i), &self.mesh.triangle(j)) >= self.rho() {
            return Ok(exact(0.0));
        }
        let rb = |x, y| self.kernel.eval_scaled(Tier::Rbar, x, y);
        match mode {
            OracleMode::Tensor { degree } => {
                if !self.unclipped(i, j) {
                    return Err(Error::RegimeError);
                }
                let (ri, rj) = (self.rule(i, degree)?, self.rule(j, degree)?);
                Ok(exact(self.tensor(&ri, &rj, |x, y| rb(x, y) * self.phi(a, x) * self.phi(b, y))))
            }
            OracleMode::MonteCarlo { samples, seed } => {
                let (ti, tj) = (self.mesh.triangle(i), self.mesh.triangle(j));
                let scale = self.mesh.area(i) * self.mesh.area(j);
                Ok(monte_carlo(samples, seed, |rng| {
                    let x = sample_triangle(rng, &ti);
                    let y = sample_triangle(rng, &tj);
                    scale * rb(x, y) * self.phi(a, x) * self.phi(b, y)
                }))
            }
        }
    }

    /// `∫_Ω φ_a(x) ∫_Ω R̄_δ(x, y) f_h(y) dy dx + 2 ∫_Ω φ_a(x) ∫_{∂Ω} R̄_δ(x, y) g(y) dτ_y dx`,
    /// with `f_h` the vertex interpolant of `f`.
    pub fn rhs_entry(&self, a: Dof, f: ScalarField, g: ScalarField, mode: OracleMode) -> Result<Estimate> {
        let i = a.0;
        let rb = |x, y| self.kernel.eval_scaled(Tier::Rbar, x, y);
        let verts = self.mesh.vertices();
        let fvals: Vec<[f64; 3]> = (0..self.mesh.num_cells())
            .map(|c| self.mesh.triangle(c).map(f))
            .collect();
        let f_h = |c: usize, y: Point| -> f64 { (0..3).map(|l| fvals[c][l] * self.basis[c][l].eval(y)).sum() };
        match mode {
            OracleMode::Tensor { degree } => {
                if !self.unclipped_everywhere(i) {
                    return Err(Error::RegimeError);
                }
                let ri = self.rule(i, degree)?;
                let mut total = 0.0;
                for c in 0..self.mesh.num_cells() {
                    let rc = self.rule(c, degree)?;
                    total += self.tensor(&ri, &rc, |x, y| rb(x, y) * self.phi(a, x) * f_h(c, y));
                }
                let seg = gauss_segment(MAX_SEGMENT_POINTS)?;
                for e in self.mesh.boundary_edges() {
                    let rs = map_segment(&seg, verts[e.v[0]], verts[e.v[1]])?;
                    total += 2.0 * self.tensor(&ri, &rs, |x, y| rb(x, y) * self.phi(a, x) * g(y));
                }
                Ok(exact(total))
            }
            OracleMode::MonteCarlo { samples, seed } => {
                let ti = self.mesh.triangle(i);
                let area = self.mesh.area(i);
                let disk = std::f64::consts::PI * self.rho() * self.rho();
                let source = monte_carlo(samples, seed, |rng| {
                    let x = sample_triangle(rng, &ti);
                    let y = sample_disk(rng, x, self.rho());
                    match self.mesh.locate(&self.index, y) {
                        Some(c) => area * disk * rb(x, y) * self.phi(a, x) * f_h(c, y),
                        None => 0.0,
                    }
                });
                let edges = self.mesh.boundary_edges();
                let mut cumulative = Vec::with_capacity(edges.len());
                let mut length = 0.0;
                for e in edges {
                    length += (verts[e.v[1]] - verts[e.v[0]]).norm();
                    cumulative.push(length);
                }
                let boundary = monte_carlo(samples, seed ^ 0x9e37_79b9_7f4a_7c15, |rng| {
                    let x = sample_triangle(rng, &ti);
                    let s = rng.gen::<f64>() * length;
                    let k = cumulative.partition_point(|&c| c < s).min(edges.len() - 1);
                    let y = verts[edges[k].v[0]].lerp(verts[edges[k].v[1]], rng.gen::<f64>());
                    2.0 * area * length * rb(x, y) * self.phi(a, x) * g(y)
                });
                Ok(Estimate {
                    value: source.value + boundary.value,
                    std_error: source.std_error.hypot(boundary.std_error),
                })
            }
        }
    }
}

pub fn brute_force_diffusion_entry(m: &Mesh, kf: &KernelFamily, a: Dof, b: Dof, mode: OracleMode) -> Result<Estimate> {
    Oracle::new(m, kf)?.diffusion_entry(a, b, mode)
}

pub fn brute_force_zero_order_entry(m: &Mesh, kf: &KernelFamily, a: Dof, b: Dof, mode: OracleMode) -> Result<Estimate> {
    Oracle::new(m, kf)?.zero_order_entry(a, b, mode)
}

pub fn brute_force_rhs_entry(m: &Mesh, kf: &KernelFamily, a: Dof, f: ScalarField, g: ScalarField, mode: OracleMode) -> Result<Estimate> {
    Oracle::new(m, kf)?.rhs_entry(a, f, g, mode)
}

fn exact(value: f64) -> Estimate {
    Estimate { value, std_error: 0.0 }
}

/// Mean and standard error of `sample` over `samples` draws. Batches use
/// independent ChaCha streams of one root seed and are reduced in order, so
/// the result does not depend on the worker count.
pub fn monte_carlo(samples: u64, seed: u64, sample: impl Fn(&mut ChaCha8Rng) -> f64 + Sync) -> Estimate {
    let batches = samples.div_ceil(BATCH).max(1);
    let sums: Vec<(f64, f64, u64)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = BATCH.min(samples.saturating_sub(b * BATCH)).max(1);
            let (mut s, mut s2) = (0.0, 0.0);
            for _ in 0..count {
                let v = sample(&mut rng);
                s += v;
                s2 += v * v;
            }
            (s, s2, count)
        })
        .collect();
    let (mut s, mut s2, mut n) = (0.0, 0.0, 0u64);
    for (a, b, c) in sums {
        s += a;
        s2 += b;
        n += c;
    }
    let nf = n as f64;
    let mean = s / nf;
    let var = ((s2 / nf - mean * mean) * nf / (nf - 1.0).max(1.0)).max(0.0);
    Estimate {
        value: mean,
        std_error: (var / nf).sqrt(),
    }
}

pub fn sample_triangle(rng: &mut impl Rng, t: &Triangle) -> Point {
    let (mut u, mut v): (f64, f64) = (rng.gen(), rng.gen());
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    t[0] + u * (t[1] - t[0]) + v * (t[2] - t[0])
}

pub fn sample_disk(rng: &mut impl Rng, center: Point, radius: f64) -> Point {
    let r = radius * rng.gen::<f64>().sqrt();
    let theta = std::f64::consts::TAU * rng.gen::<f64>();
    center + Point::new(r * theta.cos(), r * theta.sin())
}

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn step(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            return left + right + diff / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}
