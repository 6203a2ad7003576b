use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// Column-compressed sparse matrix; each column holds sorted `(row, value)`
/// pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    rows: usize,
    columns: Vec<Vec<(usize, Scalar)>>,
}

/// Accumulates a sparse column in a dense scratch buffer.
pub(crate) struct Accumulator {
    values: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub(crate) fn new(_field: Field, len: usize) -> Self {
        Accumulator { values: vec![None; len], touched: Vec::new() }
    }

    pub(crate) fn add(&mut self, i: usize, v: Scalar) {
        match &mut self.values[i] {
            Some(x) => *x += &v,
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    pub(crate) fn drain(&mut self) -> Vec<(usize, Scalar)> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.values[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        self.touched.clear();
        out
    }
}

impl SparseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { field, rows, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: Field, n: usize) -> SparseMatrix {
        SparseMatrix { field, rows: n, columns: (0..n).map(|i| vec![(i, field.one())]).collect() }
    }

    /// Builds from columns given as arbitrary (possibly repeated) `(row, value)` pairs.
    pub fn from_columns(field: Field, rows: usize, columns: Vec<Vec<(usize, Scalar)>>) -> SparseMatrix {
        let mut acc = Accumulator::new(field, rows);
        let columns = columns
            .into_iter()
            .map(|col| {
                for (i, v) in col {
                    assert!(i < rows, "row index out of range");
                    acc.add(i, v);
                }
                acc.drain()
            })
            .collect();
        SparseMatrix { field, rows, columns }
    }

    pub fn from_dense(m: &Matrix) -> SparseMatrix {
        let columns = (0..m.ncols())
            .map(|j| {
                (0..m.nrows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { field: m.field(), rows: m.nrows(), columns }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.ncols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.columns[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.columns[j][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.ncols()
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.rows, "inner dimensions");
        let mut acc = Accumulator::new(self.field, self.rows);
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        acc.add(*i, a * b);
                    }
                }
                acc.drain()
            })
            .collect();
        SparseMatrix { field: self.field, rows: self.rows, columns }
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc = Accumulator::new(self.field, self.rows);
        for (k, b) in v {
            for (i, a) in &self.columns[*k] {
                acc.add(*i, a * b);
            }
        }
        acc.drain()
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.rows];
        for (k, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (i, a) in &self.columns[k] {
                out[*i] += &(a * b);
            }
        }
        out
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.linear_combination(&self.field.one(), rhs, &self.field.one())
    }

    /// `a·self + b·rhs`.
    pub fn linear_combination(&self, a: &Scalar, rhs: &SparseMatrix, b: &Scalar) -> SparseMatrix {
        assert_eq!((self.rows, self.ncols()), (rhs.rows, rhs.ncols()));
        let mut acc = Accumulator::new(self.field, self.rows);
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(x, y)| {
                for (i, v) in x {
                    acc.add(*i, a * v);
                }
                for (i, v) in y {
                    acc.add(*i, b * v);
                }
                acc.drain()
            })
            .collect();
        SparseMatrix { field: self.field, rows: self.rows, columns }
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.field, self.rows, self.ncols());
        }
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, v * s)).collect())
            .collect();
        SparseMatrix { field: self.field, rows: self.rows, columns }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { field: self.field, rows: self.ncols(), columns: cols }
    }

    /// Kronecker product; index of `(i, k)` is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.ncols() * rhs.ncols());
        for a_col in &self.columns {
            for b_col in &rhs.columns {
                let mut c = Vec::with_capacity(a_col.len() * b_col.len());
                for (i, a) in a_col {
                    for (k, b) in b_col {
                        c.push((i * rhs.rows + k, a * b));
                    }
                }
                columns.push(c);
            }
        }
        SparseMatrix { field: self.field, rows: self.rows * rhs.rows, columns }
    }

    /// Column-permutation map sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(field: Field, perm: &[usize]) -> SparseMatrix {
        SparseMatrix {
            field,
            rows: perm.len(),
            columns: perm.iter().map(|&i| vec![(i, field.one())]).collect(),
        }
    }

    /// First column where the two matrices differ.
    pub fn first_difference(&self, rhs: &SparseMatrix) -> Option<usize> {
        assert_eq!((self.rows, self.ncols()), (rhs.rows, rhs.ncols()));
        (0..self.ncols()).find(|&j| self.columns[j] != rhs.columns[j])
    }
}
