//! Triangular meshes: generation, text I/O, boundary extraction, the
//! discontinuous linear basis, and a centroid grid for horizon queries.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{centroid, diameter, signed_area2, Point, Triangle};

const DEGENERACY: f64 = 1e-14;

/// `φ̄(x) = a·x + b`, the affine extension of one local basis function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineBasis {
    pub gradient: Point,
    pub offset: f64,
}

impl AffineBasis {
    pub fn eval(&self, x: Point) -> f64 {
        self.gradient.dot(x) + self.offset
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryEdge {
    /// Ordered so that the owning cell lies to the left of `v[0] -> v[1]`.
    pub v: [usize; 2],
    pub cell: usize,
    /// Local index of the edge inside the cell (edge `e` joins local vertices `e` and `e + 1`).
    pub local: usize,
    pub normal: Point,
}

#[derive(Clone, Debug)]
pub struct Mesh {
    vertices: Vec<Point>,
    cells: Vec<[usize; 3]>,
    boundary: Vec<BoundaryEdge>,
    centroids: Vec<Point>,
    radii: Vec<f64>,
    n_edges: usize,
}

impl Mesh {
    /// Validates orientation, degeneracy and edge manifoldness, then derives
    /// boundary edges.
    pub fn new(vertices: Vec<Point>, cells: Vec<[usize; 3]>) -> Result<Self> {
        let (lo, hi) = bbox(&vertices);
        let diag2 = (hi - lo).norm2();
        for (c, cell) in cells.iter().enumerate() {
            if cell.iter().any(|&v| v >= vertices.len()) {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("cell {c} references a missing vertex"),
                });
            }
            let t = [vertices[cell[0]], vertices[cell[1]], vertices[cell[2]]];
            let area = 0.5 * signed_area2(&t);
            if area <= 0.0 {
                return Err(Error::Orientation { cell: c, area });
            }
            if area < DEGENERACY * diag2 {
                return Err(Error::DegenerateTriangle { area });
            }
        }

        // directed edge -> owner; an interior edge is seen once in each direction
        let mut directed: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for (c, cell) in cells.iter().enumerate() {
            for e in 0..3 {
                let key = (cell[e], cell[(e + 1) % 3]);
                if directed.insert(key, (c, e)).is_some() {
                    return Err(Error::NonManifold(key.0.min(key.1), key.0.max(key.1)));
                }
            }
        }
        let mut boundary = Vec::new();
        let mut n_edges = 0;
        for (c, cell) in cells.iter().enumerate() {
            for e in 0..3 {
                let (a, b) = (cell[e], cell[(e + 1) % 3]);
                if directed.contains_key(&(b, a)) {
                    if a < b {
                        n_edges += 1;
                    }
                    continue;
                }
                n_edges += 1;
                let d = vertices[b] - vertices[a];
                boundary.push(BoundaryEdge {
                    v: [a, b],
                    cell: c,
                    local: e,
                    normal: (1.0 / d.norm()) * d.perp_cw(),
                });
            }
        }

        let centroids: Vec<Point> = cells
            .iter()
            .map(|c| centroid(&[vertices[c[0]], vertices[c[1]], vertices[c[2]]]))
            .collect();
        let radii = cells
            .iter()
            .zip(&centroids)
            .map(|(c, &g)| c.iter().map(|&v| (vertices[v] - g).norm()).fold(0.0, f64::max))
            .collect();
        Ok(Self {
            vertices,
            cells,
            boundary,
            centroids,
            radii,
            n_edges,
        })
    }

    /// `[0, 1]^2` split into `n × n` squares, each cut along its main diagonal.
    pub fn unit_square(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                msg: "mesh resolution must be at least 1".into(),
            });
        }
        let h = 1.0 / n as f64;
        let idx = |i: usize, j: usize| j * (n + 1) + i;
        let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
        for j in 0..=n {
            for i in 0..=n {
                let x = if i == n { 1.0 } else { i as f64 * h };
                let y = if j == n { 1.0 } else { j as f64 * h };
                vertices.push(Point::new(x, y));
            }
        }
        let mut cells = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for i in 0..n {
                let (v00, v10, v11, v01) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
                cells.push([v00, v10, v11]);
                cells.push([v00, v11, v01]);
            }
        }
        Self::new(vertices, cells)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn cells(&self) -> &[[usize; 3]] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn num_edges(&self) -> usize {
        self.n_edges
    }

    pub fn boundary_edges(&self) -> &[BoundaryEdge] {
        &self.boundary
    }

    pub fn triangle(&self, cell: usize) -> Triangle {
        let c = self.cells[cell];
        [self.vertices[c[0]], self.vertices[c[1]], self.vertices[c[2]]]
    }

    pub fn area(&self, cell: usize) -> f64 {
        0.5 * signed_area2(&self.triangle(cell))
    }

    pub fn centroid(&self, cell: usize) -> Point {
        self.centroids[cell]
    }

    /// Distance from the centroid to the farthest vertex.
    pub fn bounding_radius(&self, cell: usize) -> f64 {
        self.radii[cell]
    }

    pub fn cell_diameter(&self, cell: usize) -> f64 {
        diameter(&self.triangle(cell))
    }

    pub fn min_cell_diameter(&self) -> f64 {
        (0..self.num_cells()).map(|c| self.cell_diameter(c)).fold(f64::INFINITY, f64::min)
    }

    pub fn mean_cell_diameter(&self) -> f64 {
        (0..self.num_cells()).map(|c| self.cell_diameter(c)).sum::<f64>() / self.num_cells().max(1) as f64
    }

    /// Diagonal of the vertex bounding box.
    pub fn domain_diameter(&self) -> f64 {
        let (lo, hi) = bbox(&self.vertices);
        (hi - lo).norm()
    }

    /// Barycentric coordinate functions of `cell`, in local vertex order.
    pub fn basis_functions(&self, cell: usize) -> Result<[AffineBasis; 3]> {
        let t = self.triangle(cell);
        basis_for(&t)
    }

    /// Cells whose distance to `cell` may be below `radius` (a superset).
    pub fn cells_within(&self, cell: usize, radius: f64) -> Vec<usize> {
        CellIndex::new(self, radius).cells_within(self, cell, radius)
    }

    /// Index of a cell containing `p`, if any.
    pub fn locate(&self, index: &CellIndex, p: Point) -> Option<usize> {
        index.locate(self, p)
    }
}

fn bbox(points: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if points.is_empty() {
        (Point::default(), Point::default())
    } else {
        (lo, hi)
    }
}

pub fn basis_for(t: &Triangle) -> Result<[AffineBasis; 3]> {
    let area2 = signed_area2(t);
    let scale = diameter(t);
    if !(area2.abs() > 2.0 * DEGENERACY * scale * scale) {
        return Err(Error::DegenerateTriangle { area: 0.5 * area2.abs() });
    }
    Ok(std::array::from_fn(|k| {
        let a = t[(k + 1) % 3];
        let b = t[(k + 2) % 3];
        let e = b - a;
        let gradient = (1.0 / area2) * Point::new(-e.y, e.x);
        AffineBasis {
            gradient,
            offset: -gradient.dot(a),
        }
    }))
}

/// Uniform bucket grid over cell centroids.
#[derive(Clone, Debug)]
pub struct CellIndex {
    origin: Point,
    size: f64,
    nx: usize,
    ny: usize,
    buckets: Vec<Vec<usize>>,
    max_radius: f64,
}

impl CellIndex {
    /// Bucket size is `max(horizon, mean cell diameter)`.
    pub fn new(mesh: &Mesh, horizon: f64) -> Self {
        let (lo, hi) = bbox(&mesh.centroids);
        let size = horizon.max(mesh.mean_cell_diameter()).max(f64::MIN_POSITIVE);
        let nx = (((hi.x - lo.x) / size).floor() as usize + 1).max(1);
        let ny = (((hi.y - lo.y) / size).floor() as usize + 1).max(1);
        let mut buckets = vec![Vec::new(); nx * ny];
        let mut index = Self {
            origin: lo,
            size,
            nx,
            ny,
            buckets: Vec::new(),
            max_radius: mesh.radii.iter().copied().fold(0.0, f64::max),
        };
        for (c, &g) in mesh.centroids.iter().enumerate() {
            let (i, j) = index.bucket_of(g);
            buckets[j * nx + i].push(c);
        }
        index.buckets = buckets;
        index
    }

    fn bucket_of(&self, p: Point) -> (usize, usize) {
        let i = ((p.x - self.origin.x) / self.size).floor().clamp(0.0, (self.nx - 1) as f64) as usize;
        let j = ((p.y - self.origin.y) / self.size).floor().clamp(0.0, (self.ny - 1) as f64) as usize;
        (i, j)
    }

    fn candidates(&self, center: Point, reach: f64, mut visit: impl FnMut(usize)) {
        let lo = self.bucket_of(center - Point::new(reach, reach));
        let hi = self.bucket_of(center + Point::new(reach, reach));
        for j in lo.1..=hi.1 {
            for i in lo.0..=hi.0 {
                for &c in &self.buckets[j * self.nx + i] {
                    visit(c);
                }
            }
        }
    }

    /// Sorted superset of the cells within `radius` of `cell`, filtered by
    /// centroid distance padded with both bounding radii.
    pub fn cells_within(&self, mesh: &Mesh, cell: usize, radius: f64) -> Vec<usize> {
        let g = mesh.centroids[cell];
        let ri = mesh.radii[cell];
        let mut out = Vec::new();
        self.candidates(g, radius + ri + self.max_radius, |c| {
            if (mesh.centroids[c] - g).norm() <= radius + ri + mesh.radii[c] {
                out.push(c);
            }
        });
        out.sort_unstable();
        out
    }

    pub fn locate(&self, mesh: &Mesh, p: Point) -> Option<usize> {
        let mut found = None;
        self.candidates(p, self.max_radius, |c| {
            if found.is_none() && crate::geometry::contains(&mesh.triangle(c), p) {
                found = Some(c);
            }
        });
        found
    }
}

// ---- text format ---------------------------------------------------------

const MAGIC: &str = "nlfem-mesh 1";

pub fn save_mesh(mesh: &Mesh) -> String {
    let mut s = String::new();
    writeln!(s, "{MAGIC}").unwrap();
    writeln!(s, "{} {} {}", mesh.vertices.len(), mesh.cells.len(), mesh.boundary.len()).unwrap();
    for p in &mesh.vertices {
        writeln!(s, "{:?} {:?}", p.x, p.y).unwrap();
    }
    for c in &mesh.cells {
        writeln!(s, "{} {} {}", c[0], c[1], c[2]).unwrap();
    }
    for b in &mesh.boundary {
        writeln!(s, "{} {}", b.v[0], b.v[1]).unwrap();
    }
    s
}

pub fn load_mesh(text: &str) -> Result<Mesh> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count() + 1,
            msg: format!("unexpected end of file, expected {what}"),
        })
    };

    let (ln, header) = next("header")?;
    if header.split_whitespace().collect::<Vec<_>>() != ["nlfem-mesh", "1"] {
        return Err(Error::Parse {
            line: ln,
            msg: format!("expected `{MAGIC}`"),
        });
    }
    let (ln, counts) = next("counts")?;
    let [nv, nt, nb] = parse_fields::<usize, 3>(ln, counts)?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, l) = next("vertex")?;
        let [x, y] = parse_fields::<f64, 2>(ln, l)?;
        vertices.push(Point::new(x, y));
    }
    let mut cells = Vec::with_capacity(nt);
    let mut cell_lines = Vec::with_capacity(nt);
    for _ in 0..nt {
        let (ln, l) = next("cell")?;
        let c = parse_fields::<usize, 3>(ln, l)?;
        if let Some(&bad) = c.iter().find(|&&v| v >= nv) {
            return Err(Error::Parse {
                line: ln,
                msg: format!("vertex index {bad} out of range"),
            });
        }
        cells.push(c);
        cell_lines.push(ln);
    }
    let mut listed = Vec::with_capacity(nb);
    for _ in 0..nb {
        let (ln, l) = next("boundary edge")?;
        listed.push((ln, parse_fields::<usize, 2>(ln, l)?));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            msg: "trailing content after the declared records".into(),
        });
    }

    let mesh = Mesh::new(vertices, cells)?;
    if nb > 0 {
        let mut derived: Vec<[usize; 2]> = mesh.boundary.iter().map(|b| b.v).collect();
        derived.sort_unstable();
        let mut given: Vec<[usize; 2]> = listed.iter().map(|&(_, v)| v).collect();
        given.sort_unstable();
        if derived != given {
            let ln = listed
                .iter()
                .find(|(_, v)| derived.binary_search(v).is_err())
                .map_or(listed[0].0, |&(ln, _)| ln);
            return Err(Error::Parse {
                line: ln,
                msg: "boundary edge list does not match the cell connectivity".into(),
            });
        }
    }
    Ok(mesh)
}

fn parse_fields<T: std::str::FromStr, const N: usize>(line: usize, text: &str) -> Result<[T; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(Error::Parse {
            line,
            msg: format!("expected {N} fields, found {}", parts.len()),
        });
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(p.parse::<T>().map_err(|_| Error::Parse {
            line,
            msg: format!("cannot parse `{p}`"),
        })?);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::triangle_distance;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_square_counts() {
        let m1 = Mesh::unit_square(1).unwrap();
        assert_eq!((m1.vertices().len(), m1.num_cells(), m1.boundary_edges().len()), (4, 2, 4));
        let m2 = Mesh::unit_square(2).unwrap();
        assert_eq!((m2.vertices().len(), m2.num_cells(), m2.boundary_edges().len()), (9, 8, 8));
        for n in [1, 3, 7] {
            let m = Mesh::unit_square(n).unwrap();
            let total: f64 = (0..m.num_cells()).map(|c| m.area(c)).sum();
            assert_relative_eq!(total, 1.0, max_relative = 1e-14);
            assert_eq!(m.boundary_edges().len(), 4 * n);
            // V - E + F = 1
            assert_eq!(m.vertices().len() as i64 - m.num_edges() as i64 + m.num_cells() as i64, 1);
        }
        assert!(Mesh::unit_square(0).is_err());
    }

    #[test]
    fn normals_point_outward() {
        let m = Mesh::unit_square(4).unwrap();
        for b in m.boundary_edges() {
            assert_relative_eq!(b.normal.norm(), 1.0, max_relative = 1e-15);
            let mid = m.vertices()[b.v[0]].lerp(m.vertices()[b.v[1]], 0.5);
            assert!(b.normal.dot(mid - m.centroid(b.cell)) > 0.0);
        }
    }

    #[test]
    fn reference_basis() {
        let m = Mesh::new(
            vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let b = m.basis_functions(0).unwrap();
        assert_eq!(b[0].gradient, Point::new(-1.0, -1.0));
        assert_eq!(b[0].offset, 1.0);
    }

    #[test]
    fn basis_partition_and_lagrange() {
        let m = Mesh::unit_square(3).unwrap();
        for c in 0..m.num_cells() {
            let b = m.basis_functions(c).unwrap();
            let t = m.triangle(c);
            let gsum = b[0].gradient + b[1].gradient + b[2].gradient;
            assert!(gsum.norm() < 1e-12);
            assert_relative_eq!(b.iter().map(|f| f.offset).sum::<f64>(), 1.0, epsilon = 1e-13);
            for k in 0..3 {
                for l in 0..3 {
                    let want = if k == l { 1.0 } else { 0.0 };
                    assert!((b[k].eval(t[l]) - want).abs() < 1e-13);
                }
            }
            let longest = m.cell_diameter(c);
            for f in &b {
                assert!(f.gradient.norm() <= longest / (2.0 * m.area(c)) * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn neighbor_query_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [3, 6] {
            // jittered interior vertices
            let base = Mesh::unit_square(n).unwrap();
            let h = 1.0 / n as f64;
            let verts: Vec<Point> = base
                .vertices()
                .iter()
                .map(|p| {
                    let interior = p.x > 0.0 && p.x < 1.0 && p.y > 0.0 && p.y < 1.0;
                    if interior {
                        *p + Point::new(rng.gen_range(-0.2..0.2) * h, rng.gen_range(-0.2..0.2) * h)
                    } else {
                        *p
                    }
                })
                .collect();
            let m = Mesh::new(verts, base.cells().to_vec()).unwrap();
            for radius in [0.0, 0.1, 0.37, 2.0] {
                let idx = CellIndex::new(&m, radius);
                for c in 0..m.num_cells() {
                    let got = idx.cells_within(&m, c, radius);
                    assert!(got.contains(&c));
                    for other in 0..m.num_cells() {
                        if triangle_distance(&m.triangle(c), &m.triangle(other)) < radius {
                            assert!(got.binary_search(&other).is_ok(), "missed {other} from {c}");
                        }
                    }
                    if radius >= m.domain_diameter() {
                        assert_eq!(got.len(), m.num_cells());
                    }
                }
            }
        }
    }

    #[test]
    fn round_trip() {
        let m = Mesh::unit_square(3).unwrap();
        let text = save_mesh(&m);
        let back = load_mesh(&text).unwrap();
        assert_eq!(back.vertices(), m.vertices());
        assert_eq!(back.cells(), m.cells());
        assert_eq!(save_mesh(&back), text);
    }

    #[test]
    fn comments_and_missing_boundary() {
        let text = "# a comment\nnlfem-mesh 1\n3 1 0 # counts\n0 0\n1 0\n\n0 1\n0 1 2\n";
        let m = load_mesh(text).unwrap();
        assert_eq!(m.boundary_edges().len(), 3);
    }

    #[test]
    fn clockwise_cell_rejected() {
        let text = "nlfem-mesh 1\n3 1 0\n0 0\n1 0\n0 1\n0 2 1\n";
        assert!(matches!(load_mesh(text), Err(Error::Orientation { cell: 0, .. })));
    }

    #[test]
    fn duplicated_cell_rejected() {
        let text = "nlfem-mesh 1\n4 3 0\n0 0\n1 0\n1 1\n0 1\n0 1 2\n0 2 3\n0 1 2\n";
        assert!(matches!(load_mesh(text), Err(Error::NonManifold(..))));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "nlfem-mesh 1\n3 1 0\n0 0\n1 zero\n0 1\n0 1 2\n";
        match load_mesh(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load_mesh("nlfem-mesh 2\n"), Err(Error::Parse { line: 1, .. })));
        let bad_boundary = "nlfem-mesh 1\n3 1 3\n0 0\n1 0\n0 1\n0 1 2\n0 1\n1 2\n0 2\n";
        assert!(matches!(load_mesh(bad_boundary), Err(Error::Parse { line: 9, .. })));
    }

    #[test]
    fn locate_points() {
        let m = Mesh::unit_square(4).unwrap();
        let idx = CellIndex::new(&m, 0.1);
        for c in 0..m.num_cells() {
            assert_eq!(m.locate(&idx, m.centroid(c)), Some(c));
        }
        assert_eq!(m.locate(&idx, Point::new(1.5, 0.5)), None);
    }
}
