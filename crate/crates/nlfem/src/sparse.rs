//! Compressed-row storage for the 3N × 3N operators and their degree-of-freedom vectors.

use std::fmt::Write as _;

/// Degree of freedom `(cell, local vertex)` flattened as `3 * cell + local`.
pub fn dof(cell: usize, local: usize) -> usize {
    3 * cell + local
}

/// Coefficients indexed by `(cell, local vertex)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DofVector(pub Vec<f64>);

impl DofVector {
    pub fn zeros(num_cells: usize) -> Self {
        Self(vec![0.0; 3 * num_cells])
    }

    pub fn get(&self, cell: usize, local: usize) -> f64 {
        self.0[dof(cell, local)]
    }

    pub fn num_cells(&self) -> usize {
        self.0.len() / 3
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// One value per line under a `# dof (cell,local)` header.
    pub fn to_text(&self) -> String {
        let mut s = String::from("# dof (cell,local)\n");
        for v in &self.0 {
            writeln!(s, "{v:.16e}").unwrap();
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CsrMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Builds from per-row `(column, value)` lists; columns must be strictly
    /// increasing within a row.
    pub fn from_rows(n: usize, rows: Vec<Vec<(usize, f64)>>) -> Self {
        assert_eq!(rows.len(), n);
        let mut row_ptr = Vec::with_capacity(n + 1);
        let nnz = rows.iter().map(Vec::len).sum();
        let mut col_idx = Vec::with_capacity(nnz);
        let mut values = Vec::with_capacity(nnz);
        row_ptr.push(0);
        for row in rows {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            for (c, v) in row {
                assert!(c < n);
                col_idx.push(c);
                values.push(v);
            }
            row_ptr.push(col_idx.len());
        }
        Self {
            n,
            row_ptr,
            col_idx,
            values,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows(n, (0..n).map(|i| vec![(i, 1.0)]).collect())
    }

    pub fn from_dense(a: &[Vec<f64>]) -> Self {
        let n = a.len();
        let rows = a
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0.0).map(|(j, v)| (j, *v)).collect())
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.col_idx[r.clone()].iter().copied().zip(self.values[r].iter().copied())
    }

    /// Stored value, or `None` when the entry is structurally absent.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.col_idx[r.clone()]
            .binary_search(&j)
            .ok()
            .map(|k| self.values[r.start + k])
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i).unwrap_or(0.0)).collect()
    }

    /// Row sums are accumulated in column order, independent of threading.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let mut acc = 0.0;
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.values[k] * x[self.col_idx[k]];
            }
            *yi = acc;
        }
    }

    pub fn apply(&self, x: &DofVector) -> DofVector {
        let mut y = vec![0.0; self.n];
        self.mul_vec(&x.0, &mut y);
        DofVector(y)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `max |A_ij - A_ji|`, treating absent entries as zero.
    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                worst = worst.max((v - self.get(j, i).unwrap_or(0.0)).abs());
            }
        }
        worst
    }

    /// Entrywise sum; sparsity patterns are merged.
    pub fn add(&self, other: &CsrMatrix) -> CsrMatrix {
        assert_eq!(self.n, other.n);
        let rows = (0..self.n)
            .map(|i| {
                let mut a = self.row(i).peekable();
                let mut b = other.row(i).peekable();
                let mut out = Vec::new();
                loop {
                    match (a.peek().copied(), b.peek().copied()) {
                        (Some((ja, va)), Some((jb, vb))) => {
                            if ja == jb {
                                out.push((ja, va + vb));
                                a.next();
                                b.next();
                            } else if ja < jb {
                                out.push((ja, va));
                                a.next();
                            } else {
                                out.push((jb, vb));
                                b.next();
                            }
                        }
                        (Some(e), None) => {
                            out.push(e);
                            a.next();
                        }
                        (None, Some(e)) => {
                            out.push(e);
                            b.next();
                        }
                        (None, None) => break,
                    }
                }
                out
            })
            .collect();
        CsrMatrix::from_rows(self.n, rows)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, v) in self.row(i) {
                row[j] = v;
            }
        }
        a
    }

    /// Matrix Market coordinate format with symmetric storage (lower triangle, 1-based).
    pub fn to_matrix_market(&self) -> String {
        let lower: Vec<(usize, usize, f64)> = (0..self.n)
            .flat_map(|i| self.row(i).filter(move |&(j, _)| j <= i).map(move |(j, v)| (i, j, v)))
            .collect();
        let mut s = String::from("%%MatrixMarket matrix coordinate real symmetric\n");
        writeln!(s, "{} {} {}", self.n, self.n, lower.len()).unwrap();
        for (i, j, v) in lower {
            writeln!(s, "{} {} {v:.16e}", i + 1, j + 1).unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CsrMatrix {
        CsrMatrix::from_dense(&[
            vec![4.0, 1.0, 0.0],
            vec![1.0, 3.0, -2.0],
            vec![0.0, -2.0, 5.0],
        ])
    }

    #[test]
    fn products_and_lookup() {
        let a = sample();
        assert_eq!(a.nnz(), 7);
        assert_eq!(a.get(0, 2), None);
        assert_eq!(a.get(1, 2), Some(-2.0));
        let y = a.apply(&DofVector(vec![1.0, 1.0, 1.0]));
        assert_eq!(y.0, vec![5.0, 2.0, 3.0]);
        assert_eq!(a.max_asymmetry(), 0.0);
        assert_eq!(a.diagonal(), vec![4.0, 3.0, 5.0]);
    }

    #[test]
    fn addition_merges_patterns() {
        let a = sample();
        let b = CsrMatrix::from_dense(&[vec![0.0, 0.0, 1.0], vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 1.0]]);
        let c = a.add(&b);
        assert_eq!(c.get(0, 2), Some(1.0));
        assert_eq!(c.get(2, 2), Some(6.0));
        assert_eq!(c.nnz(), 9);
    }

    #[test]
    fn matrix_market_header() {
        let mm = sample().to_matrix_market();
        let mut lines = mm.lines();
        assert_eq!(lines.next(), Some("%%MatrixMarket matrix coordinate real symmetric"));
        assert_eq!(lines.next(), Some("3 3 5"));
        assert_eq!(lines.count(), 5);
    }

    #[test]
    fn vector_text() {
        let v = DofVector(vec![0.5, -1.0, 2.0]);
        let t = v.to_text();
        assert!(t.starts_with("# dof (cell,local)\n"));
        let parsed: Vec<f64> = t.lines().skip(1).map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, v.0);
    }
}
