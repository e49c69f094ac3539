//! Jacobi-preconditioned conjugate gradients and discrete error norms.

use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::quadrature::{map_triangle, TriangleRule};
use crate::sparse::{CsrMatrix, DofVector};

#[derive(Clone, Copy, Debug)]
pub struct CgOptions {
    pub tol: f64,
    /// `None` means `20 · dim`.
    pub maxiter: Option<usize>,
    pub verbose: bool,
}

impl Default for CgOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            maxiter: None,
            verbose: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CgResult {
    pub solution: DofVector,
    pub iterations: usize,
    pub relative_residual: f64,
    /// Relative residual after each iteration (entry 0 is the initial guess).
    pub history: Vec<f64>,
}

const SYMMETRY_TOL: f64 = 1e-10;

pub fn conjugate_gradient(s: &CsrMatrix, b: &DofVector, opts: CgOptions) -> Result<CgResult> {
    conjugate_gradient_with(s, b, opts, |_, _| {})
}

/// Same as [`conjugate_gradient`], calling `observe(k, x_k)` after every iterate.
pub fn conjugate_gradient_with(
    s: &CsrMatrix,
    b: &DofVector,
    opts: CgOptions,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<CgResult> {
    let n = s.dim();
    assert_eq!(b.0.len(), n);
    let asym = s.max_asymmetry();
    if asym > SYMMETRY_TOL * s.max_abs() {
        return Err(Error::NonSymmetric(asym));
    }
    let diag = s.diagonal();
    if let Some(i) = diag.iter().position(|&d| !(d > 0.0)) {
        return Err(Error::ZeroDiagonal(i));
    }
    let maxiter = opts.maxiter.unwrap_or(20 * n);

    let bnorm = b.norm();
    let mut x = vec![0.0; n];
    if bnorm == 0.0 {
        return Ok(CgResult {
            solution: DofVector(x),
            iterations: 0,
            relative_residual: 0.0,
            history: vec![0.0],
        });
    }
    let mut r = b.0.clone();
    let mut z: Vec<f64> = r.iter().zip(&diag).map(|(ri, d)| ri / d).collect();
    let mut p = z.clone();
    let mut sp = vec![0.0; n];
    let mut rz = dot(&r, &z);
    let mut history = vec![1.0];
    observe(0, &x);

    for k in 1..=maxiter {
        s.mul_vec(&p, &mut sp);
        let alpha = rz / dot(&p, &sp);
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * sp[i];
        }
        let relres = dot(&r, &r).sqrt() / bnorm;
        history.push(relres);
        observe(k, &x);
        if opts.verbose {
            eprintln!("iter {k} relres {relres:.6e}");
        }
        if relres <= opts.tol {
            return Ok(CgResult {
                solution: DofVector(x),
                iterations: k,
                relative_residual: relres,
                history,
            });
        }
        for i in 0..n {
            z[i] = r[i] / diag[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::NotConverged {
        maxiter,
        residual: *history.last().unwrap(),
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorNorms {
    pub l2: f64,
    pub linf: f64,
}

/// `L2` by triangle quadrature of the discontinuous field, `Linf` over the
/// degree-of-freedom vertex values.
pub fn error_norms(c: &DofVector, exact: impl Fn(crate::geometry::Point) -> f64, mesh: &Mesh, rule: &TriangleRule) -> ErrorNorms {
    let mut l2 = 0.0;
    let mut linf: f64 = 0.0;
    for cell in 0..mesh.num_cells() {
        let t = mesh.triangle(cell);
        let basis = mesh.basis_functions(cell).expect("mesh cells are nondegenerate");
        let mapped = map_triangle(rule, &t).expect("mesh cells are nondegenerate");
        l2 += mapped.integrate(|x| {
            let uh: f64 = (0..3).map(|k| c.get(cell, k) * basis[k].eval(x)).sum();
            let e = uh - exact(x);
            e * e
        });
        for (k, v) in t.iter().enumerate() {
            linf = linf.max((c.get(cell, k) - exact(*v)).abs());
        }
    }
    ErrorNorms { l2: l2.sqrt(), linf }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
        // Gaussian elimination with partial pivoting
        let n = b.len();
        for col in 0..n {
            let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
            a.swap(col, piv);
            b.swap(col, piv);
            for row in col + 1..n {
                let f = a[row][col] / a[col][col];
                for k in col..n {
                    a[row][k] -= f * a[col][k];
                }
                b[row] -= f * b[col];
            }
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
            x[i] = (b[i] - s) / a[i][i];
        }
        x
    }

    fn random_spd(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
        let g: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = (0..n).map(|k| g[i][k] * g[j][k]).sum::<f64>();
            }
            a[i][i] += n as f64 * 0.1;
        }
        a
    }

    #[test]
    fn identity_converges_in_one_step() {
        let s = CsrMatrix::identity(6);
        let b = DofVector(vec![1.0, -2.0, 3.0, 0.5, 0.0, 7.0]);
        let r = conjugate_gradient(&s, &b, CgOptions::default()).unwrap();
        assert_eq!(r.iterations, 1);
        assert_eq!(r.solution, b);
    }

    #[test]
    fn zero_rhs() {
        let s = CsrMatrix::identity(3);
        let r = conjugate_gradient(&s, &DofVector(vec![0.0; 3]), CgOptions::default()).unwrap();
        assert_eq!(r.solution.0, vec![0.0; 3]);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn matches_dense_direct_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_spd(50, &mut rng);
        let b: Vec<f64> = (0..50).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let want = dense_solve(a.clone(), b.clone());
        let opts = CgOptions {
            tol: 1e-14,
            ..Default::default()
        };
        let got = conjugate_gradient(&CsrMatrix::from_dense(&a), &DofVector(b), opts).unwrap();
        for (g, w) in got.solution.0.iter().zip(&want) {
            assert!((g - w).abs() <= 1e-8 * (1.0 + w.abs()));
        }
    }

    #[test]
    fn energy_error_never_increases() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_spd(40, &mut rng);
        let xs: Vec<f64> = (0..40).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let s = CsrMatrix::from_dense(&a);
        let mut b = vec![0.0; 40];
        s.mul_vec(&xs, &mut b);
        let mut energies = Vec::new();
        let mut tmp = vec![0.0; 40];
        conjugate_gradient_with(&s, &DofVector(b), CgOptions { tol: 1e-13, ..Default::default() }, |_, x| {
            let e: Vec<f64> = x.iter().zip(&xs).map(|(a, b)| a - b).collect();
            s.mul_vec(&e, &mut tmp);
            energies.push(dot(&e, &tmp));
        })
        .unwrap();
        assert!(energies.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12)));
    }

    #[test]
    fn error_paths() {
        let nonsym = CsrMatrix::from_dense(&[vec![1.0, 2.0], vec![0.0, 1.0]]);
        assert!(matches!(
            conjugate_gradient(&nonsym, &DofVector(vec![1.0, 1.0]), CgOptions::default()),
            Err(Error::NonSymmetric(_))
        ));
        let zero_diag = CsrMatrix::from_dense(&[vec![0.0, 1.0], vec![1.0, 1.0]]);
        assert!(matches!(
            conjugate_gradient(&zero_diag, &DofVector(vec![1.0, 1.0]), CgOptions::default()),
            Err(Error::ZeroDiagonal(0))
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_spd(30, &mut rng);
        let opts = CgOptions {
            tol: 1e-14,
            maxiter: Some(2),
            verbose: false,
        };
        assert!(matches!(
            conjugate_gradient(&CsrMatrix::from_dense(&a), &DofVector(vec![1.0; 30]), opts),
            Err(Error::NotConverged { maxiter: 2, .. })
        ));
    }
}
