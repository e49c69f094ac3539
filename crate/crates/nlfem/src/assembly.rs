//! Reduced-dimension assembly of the nonlocal Neumann system.
//!
//! Integration by parts trades every 4D integral for boundary and area
//! integrals whose inner factor is one of the closed-form triangle integrals
//! `U_i(x) = ∫_{T_i} R_δ(x, y) dy`, `P_i(x)` (for `R̄_δ`) and `Q_i(x)` (for
//! `R̄̄_δ`). Only the outer 1D/2D integrals use quadrature.
//!
//! With `φ_{i,k}(x) = a_{i,k}·x + b_{i,k}` on `T_i`, the assembled entries are
//!
//! * diffusion, `i ≠ j`:
//!   `D = -2 ∮_{∂T_j} (a_{i,k}·n) φ_{j,l} P_i + 2 (a_{i,k}·a_{j,l}) ∫_{T_j} P_i - δ⁻² ∫_{T_j} φ̄_{i,k} φ_{j,l} U_i`
//! * diffusion, `i = j`:
//!   `D = -2δ² ∮∮ (a_k·n_x)(a_l·n_y) R̄̄_δ + (a_k·a_l) ∫_{T_i} P_i + δ⁻² ∫_{T_i} W_i φ_k φ_l`,
//!   with `W_i = Σ_{j ≠ i} U_j`, evaluated as the integral over
//!   `Ω ∩ B(x, 2δ)` minus `U_i`
//! * zero order (any `i, j`):
//!   `M = 2δ² ∮_{∂T_j} (a_{i,k}·n) φ_{j,l} Q_i - 2δ² (a_{i,k}·a_{j,l}) ∫_{T_j} Q_i + ∫_{T_j} P_i φ̄_{i,k} φ_{j,l}`
//! * Neumann data:
//!   `-2δ² ∫_{∂Ω} g ∮_{∂T_i} (a_k·n_x) R̄̄_δ + ∫_{∂Ω} g φ̄_k P_i`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_integrate::{domain_tier_integrals, tier_integrals_unchecked, TierIntegrals};
use crate::geometry::{diameter, segment_triangle_distance, triangle_distance, Point, Triangle};
use crate::kernel::{KernelFamily, Tier};
use crate::kinks::KinkSet;
use crate::mesh::{AffineBasis, CellIndex, Mesh};
use crate::quadrature::{gauss_segment, map_triangle, triangle_rule, MappedRule, SegmentRule};
use crate::sparse::{dof, CsrMatrix, DofVector};

pub type Block = [[f64; 3]; 3];

/// Outer quadrature orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadConfig {
    pub edge_points: usize,
    pub tri_degree: usize,
    /// Worker threads for assembly; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            edge_points: 10,
            tri_degree: 6,
            threads: None,
        }
    }
}

/// Evaluation callback for `f`, `g` and exact solutions.
pub type ScalarField<'a> = &'a (dyn Fn(Point) -> f64 + Sync);

struct CellGeom {
    tri: Triangle,
    basis: [AffineBasis; 3],
    /// Outward unit normal of edge `e` (from local vertex `e` to `e + 1`).
    normals: [Point; 3],
    nodes: MappedRule,
    kinks: KinkSet,
    /// Boundary edges of the domain closer than `2δ`, domain on the left.
    near_boundary: Vec<(Point, Point)>,
    /// maximal straight pieces of the boundary within reach
    near_walls: Vec<(Point, Point)>,
    /// Kinks of `∫_{Ω ∩ B(x, 2δ)} - U_i` for `x` in this cell.
    wall_kinks: KinkSet,
}

pub struct Assembler<'a> {
    mesh: &'a Mesh,
    kernel: &'a KernelFamily,
    /// Gauss rules with 1..=edge_points nodes.
    seg: SegmentRule,
    cells: Vec<CellGeom>,
    neighbors: Vec<Vec<usize>>,
    config: QuadConfig,
}

/// Diffusion and zero-order operators plus the right-hand side.
#[derive(Clone, Debug)]
pub struct System {
    pub diffusion: CsrMatrix,
    pub zero_order: CsrMatrix,
    pub matrix: CsrMatrix,
    pub rhs: DofVector,
}

impl<'a> Assembler<'a> {
    pub fn new(mesh: &'a Mesh, kernel: &'a KernelFamily, config: QuadConfig) -> Result<Self> {
        let two_delta = kernel.support_radius();
        let min_diameter = mesh.min_cell_diameter();
        if two_delta < 0.1 * min_diameter {
            return Err(Error::HorizonTooSmall { two_delta, min_diameter });
        }
        let seg = gauss_segment(config.edge_points)?;
        let tri_rule = triangle_rule(config.tri_degree)?;
        let verts = mesh.vertices();
        let walls = straight_walls(mesh);
        let mut cells = Vec::with_capacity(mesh.num_cells());
        for c in 0..mesh.num_cells() {
            let tri = mesh.triangle(c);
            let basis = mesh.basis_functions(c)?;
            let normals = std::array::from_fn(|e| {
                let d = tri[(e + 1) % 3] - tri[e];
                (1.0 / d.norm()) * d.perp_cw()
            });
            let near_boundary: Vec<(Point, Point)> = mesh
                .boundary_edges()
                .iter()
                .map(|be| (verts[be.v[0]], verts[be.v[1]]))
                .filter(|&(a, b)| segment_triangle_distance(a, b, &tri) < two_delta)
                .collect();
            let near_walls: Vec<(Point, Point)> = walls
                .iter()
                .copied()
                .filter(|&(a, b)| segment_triangle_distance(a, b, &tri) < two_delta)
                .collect();
            let mut wall_kinks = KinkSet::new(two_delta);
            for &(a, b) in &near_walls {
                wall_kinks.add_vertex(a);
                wall_kinks.add_edge(a, b);
            }
            if two_delta < diameter(&tri) {
                wall_kinks.add_triangle(&tri);
            }
            let wall_kinks = wall_kinks.restricted_to(&tri);
            cells.push(CellGeom {
                tri,
                basis,
                normals,
                nodes: map_triangle(&tri_rule, &tri)?,
                kinks: KinkSet::of_triangle(&tri, two_delta),
                near_boundary,
                near_walls,
                wall_kinks,
            });
        }
        let index = CellIndex::new(mesh, two_delta);
        let neighbors = (0..mesh.num_cells())
            .map(|i| {
                index
                    .cells_within(mesh, i, two_delta)
                    .into_iter()
                    .filter(|&j| j == i || triangle_distance(&cells[i].tri, &cells[j].tri) < two_delta)
                    .collect()
            })
            .collect();
        Ok(Self {
            mesh,
            kernel,
            seg,
            cells,
            neighbors,
            config,
        })
    }

    /// Cells interacting with `cell` (distance below `2δ`), sorted, including itself.
    pub fn neighbors(&self, cell: usize) -> &[usize] {
        &self.neighbors[cell]
    }

    fn tiers(&self, x: Point, cell: usize) -> TierIntegrals {
        tier_integrals_unchecked(self.kernel, x, &self.cells[cell].tri)
    }

    fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.config.threads {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::Io(std::io::Error::other(e)))?;
                Ok(pool.install(f))
            }
            None => Ok(f()),
        }
    }

    /// Visits Gauss nodes on `[a, b]`, split where the segment crosses a
    /// curve of `kinks`. `breaks` is scratch space.
    fn segment_nodes(&self, a: Point, b: Point, kinks: &KinkSet, breaks: &mut Vec<f64>, mut visit: impl FnMut(Point, f64)) {
        kinks.segment_breaks(a, b, breaks);
        let ends = [kinks.touches(a), kinks.touches(b)];
        let len = (b - a).norm();
        self.panel_nodes(0.0, 1.0, breaks, ends, |t, w| visit(a.lerp(b, t), w * len));
    }

    /// Gauss nodes on `[lo, hi]` split at `breaks`. Next to a break, or an
    /// end flagged in `ends`, the integrand may behave like `d^{m + 1/2}`;
    /// panels are graded towards such points by `t ~ u²`, which turns these
    /// terms into polynomials in `u`.
    fn panel_nodes(&self, lo: f64, hi: f64, breaks: &[f64], ends: [bool; 2], mut visit: impl FnMut(f64, f64)) {
        let rule = &self.seg;
        let mut left = lo;
        let mut left_graded = ends[0];
        for (k, &right) in breaks.iter().chain(std::iter::once(&hi)).enumerate() {
            let right_graded = k < breaks.len() || ends[1];
            let len = right - left;
            for (node, w) in rule.nodes.iter().zip(&rule.weights) {
                let u = 0.5 * (node[0] + 1.0);
                let w = 0.5 * w;
                let (s, ds) = match (left_graded, right_graded) {
                    (false, false) => (u, 1.0),
                    (true, false) => (u * u, 2.0 * u),
                    (false, true) => (1.0 - (1.0 - u) * (1.0 - u), 2.0 * (1.0 - u)),
                    (true, true) => (u * u * (3.0 - 2.0 * u), 6.0 * u * (1.0 - u)),
                };
                visit(left + len * s, w * len * ds);
            }
            left = right;
            left_graded = true;
        }
    }

    /// Visits quadrature nodes on the triangle `t`. When any curve of
    /// `kinks` crosses `t`, the triangle is swept by chords orthogonal to the
    /// x axis: the sweep is split where the chord/curve crossing pattern
    /// changes and each chord is split at its crossings, so every Gauss
    /// panel sees a smooth integrand.
    fn area_nodes(&self, t: &Triangle, nodes: &MappedRule, kinks: &KinkSet, mut visit: impl FnMut(Point, f64)) {
        let active = kinks.restricted_to(t);
        if active.is_empty() {
            for (&x, &w) in nodes.points.iter().zip(&nodes.weights) {
                visit(x, w);
            }
            return;
        }
        let dir = Point::new(1.0, 0.0);
        let mut sweep = Vec::new();
        active.sweep_breaks(t, dir, &mut sweep);
        let mut breaks = Vec::new();
        let (lo, hi) = (sweep[0], sweep[sweep.len() - 1]);
        let ends = [lo, hi].map(|xs| sweep_end(t, xs).iter().any(|&p| active.touches(p)));
        self.panel_nodes(lo, hi, &sweep[1..sweep.len() - 1], ends, |xs, wo| {
            if let Some((a, b)) = chord(t, xs) {
                self.segment_nodes(a, b, &active, &mut breaks, |x, w| visit(x, wo * w));
            }
        });
    }

    /// `∫_{[a,b]} R̄̄_δ(x, y) dS_y` for a fixed `x`.
    /// `∫_{[a,b]} R̄̄_δ(x, y) dS_y` for a fixed `x`.
    fn rbarbar_on_segment(&self, x: Point, a: Point, b: Point) -> f64 {
        let mut point = KinkSet::new(self.kernel.support_radius());
        point.add_vertex(x);
        let mut breaks = Vec::new();
        let mut acc = 0.0;
        self.segment_nodes(a, b, &point, &mut breaks, |y, w| {
            acc += w * self.kernel.eval_scaled(Tier::Rbarbar, x, y);
        });
        acc
    }

    /// Diffusion and zero-order blocks coupling test functions of `inner`
    /// with trial functions of `outer` (`inner` may equal `outer` for the
    /// zero-order part).
    fn coupling_blocks(&self, inner: usize, outer: usize) -> (Block, Block) {
        let gi = &self.cells[inner];
        let gj = &self.cells[outer];
        let delta2 = self.kernel.delta() * self.kernel.delta();

        let mut int_p = 0.0;
        let mut int_q = 0.0;
        let mut tu = [[0.0; 3]; 3];
        let mut tp = [[0.0; 3]; 3];
        self.area_nodes(&gj.tri, &gj.nodes, &gi.kinks, |x, w| {
            let t = self.tiers(x, inner);
            if t == TierIntegrals::default() {
                return;
            }
            int_p += w * t.p;
            int_q += w * t.q;
            let phi_j = gj.basis.map(|f| f.eval(x));
            let phibar_i = gi.basis.map(|f| f.eval(x));
            for k in 0..3 {
                for l in 0..3 {
                    let pp = w * phibar_i[k] * phi_j[l];
                    tu[k][l] += pp * t.u;
                    tp[k][l] += pp * t.p;
                }
            }
        });

        let mut ep = [[0.0; 3]; 3];
        let mut eq = [[0.0; 3]; 3];
        let mut breaks = Vec::new();
        for e in 0..3 {
            let a = gj.tri[e];
            let b = gj.tri[(e + 1) % 3];
                        self.segment_nodes(a, b, &gi.kinks, &mut breaks, |x, w| {
                let t = self.tiers(x, inner);
                for l in 0..3 {
                    let phi = gj.basis[l].eval(x);
                    ep[e][l] += w * phi * t.p;
                    eq[e][l] += w * phi * t.q;
                }
            });
        }

        let mut d = [[0.0; 3]; 3];
        let mut m = [[0.0; 3]; 3];
        for k in 0..3 {
            let ak = gi.basis[k].gradient;
            let an: [f64; 3] = std::array::from_fn(|e| ak.dot(gj.normals[e]));
            for l in 0..3 {
                let aa = ak.dot(gj.basis[l].gradient);
                let bp: f64 = (0..3).map(|e| an[e] * ep[e][l]).sum();
                let bq: f64 = (0..3).map(|e| an[e] * eq[e][l]).sum();
                d[k][l] = -2.0 * bp + 2.0 * aa * int_p - tu[k][l] / delta2;
                m[k][l] = 2.0 * delta2 * bq - 2.0 * delta2 * aa * int_q + tp[k][l];
            }
        }
        (d, m)
    }

    fn diagonal_blocks(&self, i: usize) -> (Block, Block) {
        let g = &self.cells[i];
        let delta2 = self.kernel.delta() * self.kernel.delta();

        // double edge integral of R̄̄ over ∂T_i × ∂T_i
        let mut ee = [[0.0; 3]; 3];
        let mut breaks = Vec::new();
        for e in 0..3 {
            for f in e..3 {
                let (a, b) = (g.tri[e], g.tri[(e + 1) % 3]);
                let (c, d) = (g.tri[f], g.tri[(f + 1) % 3]);
                let mut acc = 0.0;
                self.segment_nodes(a, b, &g.kinks, &mut breaks, |x, w| {
                    acc += w * self.rbarbar_on_segment(x, c, d);
                });
                ee[e][f] = acc;
                ee[f][e] = acc;
            }
        }

        let mut int_p = 0.0;
        let mut wt = [[0.0; 3]; 3];
        self.area_nodes(&g.tri, &g.nodes, &g.wall_kinks, |x, w| {
            let own = self.tiers(x, i);
            int_p += w * own.p;
            let outside = domain_tier_integrals(self.kernel, x, &g.near_walls).u - own.u;
            let phi = g.basis.map(|f| f.eval(x));
            for k in 0..3 {
                for l in 0..3 {
                    wt[k][l] += w * outside * phi[k] * phi[l];
                }
            }
        });

        let (_, m_raw) = self.coupling_blocks(i, i);
        let mut d = [[0.0; 3]; 3];
        for k in 0..3 {
            let ak = g.basis[k].gradient;
            for l in 0..3 {
                let al = g.basis[l].gradient;
                let mut edge_term = 0.0;
                for e in 0..3 {
                    for f in 0..3 {
                        edge_term += ak.dot(g.normals[e]) * al.dot(g.normals[f]) * ee[e][f];
                    }
                }
                d[k][l] = -2.0 * delta2 * edge_term + ak.dot(al) * int_p + wt[k][l] / delta2;
            }
        }
        (symmetrize(d), symmetrize(m_raw))
    }

    /// Diffusion `D` and zero-order `M` operators.
    pub fn operators(&self) -> Result<(CsrMatrix, CsrMatrix)> {
        let n = self.mesh.num_cells();
        type CellRow = ((Block, Block), Vec<(usize, Block, Block)>);
        let per_cell: Vec<CellRow> = self.in_pool(|| {
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let diag = self.diagonal_blocks(i);
                    let pairs = self.neighbors[i]
                        .iter()
                        .filter(|&&j| j > i)
                        .map(|&j| {
                            let (d, m) = self.coupling_blocks(i, j);
                            (j, d, m)
                        })
                        .collect();
                    (diag, pairs)
                })
                .collect()
        })?;

        let mut d_rows: Vec<Vec<(usize, Block)>> = vec![Vec::new(); n];
        let mut m_rows: Vec<Vec<(usize, Block)>> = vec![Vec::new(); n];
        for (i, ((dd, md), pairs)) in per_cell.into_iter().enumerate() {
            d_rows[i].push((i, dd));
            m_rows[i].push((i, md));
            for (j, d, m) in pairs {
                d_rows[i].push((j, d));
                m_rows[i].push((j, m));
                d_rows[j].push((i, transpose(d)));
                m_rows[j].push((i, transpose(m)));
            }
        }
        Ok((blocks_to_csr(d_rows), blocks_to_csr(m_rows)))
    }

    /// `∫_Ω φ_{i,k}(x) ∫_{∂Ω} R̄_δ(x, y) g(y) dτ_y dx` for every dof.
    pub fn boundary_vector(&self, g: ScalarField) -> Result<DofVector> {
        let n = self.mesh.num_cells();
        let delta2 = self.kernel.delta() * self.kernel.delta();
        let blocks: Vec<[f64; 3]> = self.in_pool(|| {
            (0..n)
                .into_par_iter()
                .map(|i| {
                    let gi = &self.cells[i];
                    let mut grad_term = [0.0; 3];
                    let mut value_term = [0.0; 3];
                    let mut breaks = Vec::new();
                    for &(a, b) in &gi.near_boundary {
                                                self.segment_nodes(a, b, &gi.kinks, &mut breaks, |y, w| {
                            let gy = g(y);
                            if gy == 0.0 {
                                return;
                            }
                            let p = self.tiers(y, i).p;
                            let inner: [f64; 3] = std::array::from_fn(|e| {
                                self.rbarbar_on_segment(y, gi.tri[e], gi.tri[(e + 1) % 3])
                            });
                            for k in 0..3 {
                                let ak = gi.basis[k].gradient;
                                let s: f64 = (0..3).map(|e| ak.dot(gi.normals[e]) * inner[e]).sum();
                                grad_term[k] += w * gy * s;
                                value_term[k] += w * gy * gi.basis[k].eval(y) * p;
                            }
                        });
                    }
                    std::array::from_fn(|k| -2.0 * delta2 * grad_term[k] + value_term[k])
                })
                .collect()
        })?;
        Ok(DofVector(blocks.into_iter().flatten().collect()))
    }

    /// `S = D + M` and `b = M·I(f) + 2·boundary(g)`.
    pub fn system(&self, f: ScalarField, g: ScalarField) -> Result<System> {
        let (diffusion, zero_order) = self.operators()?;
        let rhs = rhs_from(&zero_order, &interpolate(f, self.mesh), &self.boundary_vector(g)?);
        Ok(System {
            matrix: diffusion.add(&zero_order),
            diffusion,
            zero_order,
            rhs,
        })
    }
}

/// Chord of `t` on the vertical line through `x = xs`.
/// Boundary edges merged across vertices where the boundary runs straight on.
fn straight_walls(mesh: &Mesh) -> Vec<(Point, Point)> {
    let verts = mesh.vertices();
    let edges = mesh.boundary_edges();
    let mut starting = vec![Vec::new(); verts.len()];
    let mut ending = vec![0usize; verts.len()];
    for (k, be) in edges.iter().enumerate() {
        starting[be.v[0]].push(k);
        ending[be.v[1]] += 1;
    }
    let straight = |k: usize, l: usize| {
        let (a, b) = (verts[edges[k].v[0]], verts[edges[k].v[1]]);
        let c = verts[edges[l].v[1]];
        let (u, v) = (b - a, c - b);
        u.cross(v).abs() <= 1e-12 * u.norm() * v.norm() && u.dot(v) > 0.0
    };
    // the edge following `k` when the boundary does not turn at its end
    let onward = |k: usize| {
        let v = edges[k].v[1];
        match starting[v][..] {
            [l] if ending[v] == 1 && straight(k, l) => Some(l),
            _ => None,
        }
    };
    let mut continues = vec![false; edges.len()];
    for k in 0..edges.len() {
        if let Some(l) = onward(k) {
            continues[l] = true;
        }
    }
    let mut walls = Vec::new();
    for k in (0..edges.len()).filter(|&k| !continues[k]) {
        let mut last = k;
        while let Some(l) = onward(last) {
            last = l;
        }
        walls.push((verts[edges[k].v[0]], verts[edges[last].v[1]]));
    }
    walls
}

/// Points of `t` on the line `x = xs` when that line only touches `t`.
fn sweep_end(t: &Triangle, xs: f64) -> Vec<Point> {
    let on: Vec<Point> = t.iter().copied().filter(|p| p.x == xs).collect();
    match on[..] {
        [p, q] => vec![p, p.lerp(q, 0.5), q],
        _ => on,
    }
}

fn chord(t: &Triangle, xs: f64) -> Option<(Point, Point)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for e in 0..3 {
        let (p, q) = (t[e], t[(e + 1) % 3]);
        let (a, b) = if p.x <= q.x { (p, q) } else { (q, p) };
        if xs < a.x || xs > b.x || a.x == b.x {
            continue;
        }
        let y = a.y + (b.y - a.y) * (xs - a.x) / (b.x - a.x);
        lo = lo.min(y);
        hi = hi.max(y);
    }
    (hi > lo).then(|| (Point::new(xs, lo), Point::new(xs, hi)))
}

fn rhs_from(zero_order: &CsrMatrix, f_interp: &DofVector, boundary: &DofVector) -> DofVector {
    let mut b = zero_order.apply(f_interp);
    for (bi, gi) in b.0.iter_mut().zip(&boundary.0) {
        *bi += 2.0 * gi;
    }
    b
}

fn symmetrize(b: Block) -> Block {
    std::array::from_fn(|k| std::array::from_fn(|l| 0.5 * (b[k][l] + b[l][k])))
}

fn transpose(b: Block) -> Block {
    std::array::from_fn(|k| std::array::from_fn(|l| b[l][k]))
}

fn blocks_to_csr(rows: Vec<Vec<(usize, Block)>>) -> CsrMatrix {
    let n = rows.len();
    let mut out = vec![Vec::new(); 3 * n];
    for (i, row) in rows.into_iter().enumerate() {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        for k in 0..3 {
            let dst = &mut out[dof(i, k)];
            for (j, blk) in &row {
                for l in 0..3 {
                    dst.push((dof(*j, l), blk[k][l]));
                }
            }
        }
    }
    CsrMatrix::from_rows(3 * n, out)
}

/// Vertex values of `field` in the discontinuous space.
pub fn interpolate(field: ScalarField, mesh: &Mesh) -> DofVector {
    DofVector(
        (0..mesh.num_cells())
            .flat_map(|c| mesh.triangle(c).map(field))
            .collect(),
    )
}

pub fn assemble_diffusion(mesh: &Mesh, kernel: &KernelFamily, q: QuadConfig) -> Result<CsrMatrix> {
    Ok(Assembler::new(mesh, kernel, q)?.operators()?.0)
}

pub fn assemble_zero_order(mesh: &Mesh, kernel: &KernelFamily, q: QuadConfig) -> Result<CsrMatrix> {
    Ok(Assembler::new(mesh, kernel, q)?.operators()?.1)
}

pub fn assemble_rhs(mesh: &Mesh, kernel: &KernelFamily, f: ScalarField, g: ScalarField, q: QuadConfig) -> Result<DofVector> {
    let asm = Assembler::new(mesh, kernel, q)?;
    let (_, m) = asm.operators()?;
    Ok(rhs_from(&m, &interpolate(f, mesh), &asm.boundary_vector(g)?))
}

pub fn assemble_system(mesh: &Mesh, kernel: &KernelFamily, f: ScalarField, g: ScalarField, q: QuadConfig) -> Result<System> {
    Assembler::new(mesh, kernel, q)?.system(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_boundary_merges_into_four_walls() {
        let mesh = Mesh::unit_square(5).unwrap();
        let walls = straight_walls(&mesh);
        assert_eq!(walls.len(), 4);
        for (a, b) in walls {
            assert!(((b - a).norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn corners_of_a_notched_domain_stay_separate() {
        // unit square with the top-right quarter cut away
        let p = |x: f64, y: f64| Point::new(x, y);
        let verts = vec![p(0.0, 0.0), p(0.5, 0.0), p(1.0, 0.0), p(0.0, 0.5), p(0.5, 0.5), p(1.0, 0.5), p(0.0, 1.0), p(0.5, 1.0)];
        let cells = vec![[0, 1, 4], [0, 4, 3], [1, 2, 5], [1, 5, 4], [3, 4, 7], [3, 7, 6]];
        let mesh = Mesh::new(verts, cells).unwrap();
        let walls = straight_walls(&mesh);
        assert_eq!(walls.len(), 6);
        let perimeter: f64 = walls.iter().map(|&(a, b)| (b - a).norm()).sum();
        assert!((perimeter - 4.0).abs() < 1e-14);
    }
}
