//! Browser bindings for the `nlfem` demo page.

use nlfem::exact_integrate::triangle_disk_poly;
use nlfem::solver::error_norms;
use nlfem::study::{Problem, ERROR_RULE_DEGREE};
use nlfem::{assemble_system, conjugate_gradient, CgOptions, KernelFamily, KernelPreset, Mesh, Point, QuadConfig, Tier};
use wasm_bindgen::prelude::*;

fn js(e: nlfem::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn kernel(spec: &str, delta: f64) -> Result<KernelFamily, nlfem::Error> {
    let preset: KernelPreset = spec.parse()?;
    KernelFamily::new(&preset.0, delta)
}

/// `R`, `R̄`, `R̄̄` sampled at `samples` evenly spaced `s ∈ [0, 1]`, one
/// profile after the other.
#[wasm_bindgen]
pub fn kernel_profiles(spec: &str, samples: usize) -> Result<Vec<f64>, JsError> {
    let kf = kernel(spec, 1.0).map_err(js)?;
    let samples = samples.max(2);
    let mut out = Vec::with_capacity(3 * samples);
    for tier in [Tier::R, Tier::Rbar, Tier::Rbarbar] {
        for k in 0..samples {
            let s = k as f64 / (samples - 1) as f64;
            out.push(kf.c_delta() * kf.poly(tier).eval(s));
        }
    }
    Ok(out)
}

/// Exact `∫_{T ∩ B(c, 2δ)} R_δ(c, y) dy` for the triangle `[x0, y0, x1, y1, x2, y2]`.
#[wasm_bindgen]
pub fn triangle_disk_integral(spec: &str, delta: f64, cx: f64, cy: f64, tri: &[f64]) -> Result<f64, JsError> {
    if tri.len() != 6 {
        return Err(JsError::new("expected six triangle coordinates"));
    }
    let kf = kernel(spec, delta).map_err(js)?;
    let mut t = [0, 1, 2].map(|k| Point::new(tri[2 * k], tri[2 * k + 1]));
    if nlfem::geometry::signed_area2(&t) < 0.0 {
        t.swap(1, 2);
    }
    let value = triangle_disk_poly(kf.poly(Tier::R), delta, Point::new(cx, cy), &t).map_err(js)?;
    Ok(kf.c_delta() * value)
}

#[wasm_bindgen]
pub struct Solution {
    coords: Vec<f64>,
    values: Vec<f64>,
    pub l2: f64,
    pub linf: f64,
    pub iterations: usize,
}

#[wasm_bindgen]
impl Solution {
    /// Cell corner coordinates, six per cell.
    #[wasm_bindgen(getter)]
    pub fn coords(&self) -> Vec<f64> {
        self.coords.clone()
    }

    /// Discrete solution at the cell corners, three per cell.
    #[wasm_bindgen(getter)]
    pub fn values(&self) -> Vec<f64> {
        self.values.clone()
    }
}

/// Solves `problem` (`constant` or `cosine`) on the n×n unit square with `δ = ratio / n`.
#[wasm_bindgen]
pub fn solve(n: usize, ratio: f64, spec: &str, problem: &str) -> Result<Solution, JsError> {
    let problem: Problem = problem.parse().map_err(js)?;
    let mesh = Mesh::unit_square(n).map_err(js)?;
    let kf = kernel(spec, ratio / n as f64).map_err(js)?;
    let f = move |p: Point| problem.source(p);
    let g = move |p: Point| problem.flux(p);
    let sys = assemble_system(&mesh, &kf, &f, &g, QuadConfig::default()).map_err(js)?;
    let cg = conjugate_gradient(&sys.matrix, &sys.rhs, CgOptions::default()).map_err(js)?;
    let rule = nlfem::quadrature::triangle_rule(ERROR_RULE_DEGREE).map_err(js)?;
    let norms = error_norms(&cg.solution, |p| problem.exact(p), &mesh, &rule);
    let coords = (0..mesh.num_cells()).flat_map(|c| mesh.triangle(c)).flat_map(|p| [p.x, p.y]).collect();
    Ok(Solution { coords, values: cg.solution.0, l2: norms.l2, linf: norms.linf, iterations: cg.iterations })
}
