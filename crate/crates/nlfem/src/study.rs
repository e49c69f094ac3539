//! Model problems on the unit square and the solve / convergence drivers
//! behind the command line.

use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

use crate::assembly::{assemble_system, QuadConfig};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::kernel::KernelFamily;
use crate::mesh::Mesh;
use crate::quadrature::triangle_rule;
use crate::solver::{conjugate_gradient, error_norms, CgOptions};
use crate::sparse::{CsrMatrix, DofVector};

/// Triangle degree used for the L2 error.
pub const ERROR_RULE_DEGREE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// `f ≡ 1`, `g ≡ 0`, exact `u ≡ 1`.
    Constant,
    /// `u = cos(πx) cos(πy)`, `f = (2π² + 1) u`, `g ≡ 0`.
    Cosine,
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constant" => Ok(Self::Constant),
            "cosine" => Ok(Self::Cosine),
            _ => Err(Error::UnknownProblem(s.to_string())),
        }
    }
}

impl Problem {
    pub fn exact(self, p: Point) -> f64 {
        match self {
            Self::Constant => 1.0,
            Self::Cosine => (PI * p.x).cos() * (PI * p.y).cos(),
        }
    }

    pub fn source(self, p: Point) -> f64 {
        match self {
            Self::Constant => 1.0,
            Self::Cosine => (2.0 * PI * PI + 1.0) * self.exact(p),
        }
    }

    pub fn flux(self, _p: Point) -> f64 {
        0.0
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub solution: DofVector,
    pub matrix: CsrMatrix,
    pub rhs: DofVector,
    pub l2: f64,
    pub linf: f64,
    pub assembly_seconds: f64,
    pub cg_iterations: usize,
}

pub fn solve_problem(mesh: &Mesh, kernel: &KernelFamily, problem: Problem, quad: QuadConfig, cg: CgOptions) -> Result<SolveReport> {
    let start = Instant::now();
    let f = move |p: Point| problem.source(p);
    let g = move |p: Point| problem.flux(p);
    let sys = assemble_system(mesh, kernel, &f, &g, quad)?;
    let assembly_seconds = start.elapsed().as_secs_f64();
    let cg = conjugate_gradient(&sys.matrix, &sys.rhs, cg)?;
    let norms = error_norms(&cg.solution, |p| problem.exact(p), mesh, &triangle_rule(ERROR_RULE_DEGREE)?);
    Ok(SolveReport {
        solution: cg.solution,
        matrix: sys.matrix,
        rhs: sys.rhs,
        l2: norms.l2,
        linf: norms.linf,
        assembly_seconds,
        cg_iterations: cg.iterations,
    })
}

/// `cell,local,x,y,value` with 17 significant digits.
pub fn solution_csv(mesh: &Mesh, c: &DofVector) -> String {
    let mut s = String::from("cell,local,x,y,value\n");
    for cell in 0..mesh.num_cells() {
        for (k, p) in mesh.triangle(cell).iter().enumerate() {
            writeln!(s, "{cell},{k},{:.16e},{:.16e},{:.16e}", p.x, p.y, c.get(cell, k)).unwrap();
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub level: usize,
    pub n: usize,
    pub h: f64,
    pub delta: f64,
    pub l2: f64,
    pub linf: f64,
    pub assembly_seconds: f64,
    pub cg_iterations: usize,
}

/// Levels `ℓ = 0..levels` on the `n = 4·2^ℓ` unit square with `δ = ratio·h`.
pub fn convergence_study(
    levels: usize,
    ratio: f64,
    problem: Problem,
    kernel: &[f64],
    quad: QuadConfig,
    cg: CgOptions,
    mut progress: impl FnMut(&ConvergenceRow),
) -> Result<Vec<ConvergenceRow>> {
    let mut rows = Vec::with_capacity(levels);
    for level in 0..levels {
        let n = 4usize << level;
        let h = 1.0 / n as f64;
        let mesh = Mesh::unit_square(n)?;
        let kf = KernelFamily::new(kernel, ratio * h)?;
        let r = solve_problem(&mesh, &kf, problem, quad, cg)?;
        let row = ConvergenceRow {
            level,
            n,
            h,
            delta: kf.delta(),
            l2: r.l2,
            linf: r.linf,
            assembly_seconds: r.assembly_seconds,
            cg_iterations: r.cg_iterations,
        };
        progress(&row);
        rows.push(row);
    }
    Ok(rows)
}

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut s = String::from("level,n,h,delta,l2,linf,assembly_seconds,cg_iters\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
            r.level, r.n, r.h, r.delta, r.l2, r.linf, r.assembly_seconds, r.cg_iterations
        )
        .unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problems_parse() {
        assert_eq!("constant".parse::<Problem>().unwrap(), Problem::Constant);
        assert_eq!("cosine".parse::<Problem>().unwrap(), Problem::Cosine);
        assert!("sine".parse::<Problem>().is_err());
    }

    #[test]
    fn cosine_has_no_normal_flux() {
        let u = |x: f64, y: f64| Problem::Cosine.exact(Point::new(x, y));
        let eps = 1e-6;
        for t in [0.1, 0.37, 0.8] {
            for (x, y, dx, dy) in [(0.0, t, 1.0, 0.0), (1.0, t, 1.0, 0.0), (t, 0.0, 0.0, 1.0), (t, 1.0, 0.0, 1.0)] {
                let d = (u(x + eps * dx, y + eps * dy) - u(x - eps * dx, y - eps * dy)) / (2.0 * eps);
                assert!(d.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn csv_layout() {
        let mesh = Mesh::unit_square(1).unwrap();
        let c = DofVector(vec![0.5; 6]);
        let csv = solution_csv(&mesh, &c);
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.starts_with("cell,local,x,y,value\n0,0,"));
        let row = ConvergenceRow { level: 0, n: 4, h: 0.25, delta: 0.5, l2: 0.1, linf: 0.2, assembly_seconds: 0.0, cg_iterations: 3 };
        let csv = convergence_csv(&[row]);
        assert_eq!(csv.lines().nth(1).unwrap().split(',').count(), 8);
    }
}
