use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::linalg::{collect_sparse, dense_to_sparse, sparse_to_dense, SpanBuilder, SparseMatrix, SparseVec};
use crate::space::BasedSpace;
use crate::verdict::{Axiom, Verdict};

/// A finite-dimensional unital algebra given by structure constants.
///
/// `product(i, j)` is the sparse expansion of `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    field: Field,
    space: BasedSpace,
    mult: Vec<SparseVec>,
    unit: SparseVec,
}

impl StructAlgebra {
    /// Builds from `(i, j, k, c)` entries meaning `c·e_k` occurs in `e_i e_j`.
    ///
    /// Only shapes are validated here; the axioms are checked by [`check_algebra`].
    pub fn new(
        field: Field,
        space: BasedSpace,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
    ) -> Result<StructAlgebra> {
        let n = space.dim();
        if n == 0 {
            return Err(Error::ZeroDimensional);
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!("unit has length {} in dimension {n}", unit.len())));
        }
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidInput(format!("product index ({i},{j},{k}) outside dimension {n}")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            raw[i * n + j].push((k, c));
        }
        let mult = raw.into_iter().map(collect_sparse).collect();
        Ok(StructAlgebra { field, space, mult, unit: dense_to_sparse(&unit) })
    }

    /// Builds from a closure giving `e_i · e_j`.
    pub fn from_fn(
        field: Field,
        space: BasedSpace,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
        unit: Vec<Scalar>,
    ) -> Result<StructAlgebra> {
        let n = space.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in product(i, j) {
                    entries.push((i, j, k, c));
                }
            }
        }
        StructAlgebra::new(field, space, entries, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn unit(&self) -> &[(usize, Scalar)] {
        &self.unit
    }

    pub fn unit_dense(&self) -> Vec<Scalar> {
        crate::linalg::sparse_to_dense(self.field, self.dim(), &self.unit)
    }

    /// All nonzero `(i, j, k, c)` structure constants in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
        let mut terms = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in self.product(*i, *j) {
                    terms.push((*k, &xy * c));
                }
            }
        }
        collect_sparse(terms)
    }

    pub fn mul3(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)], c: &[(usize, Scalar)]) -> SparseVec {
        self.mul(&self.mul(a, b), c)
    }

    /// Left multiplication by `v` as a matrix (column `j` is `v · e_j`).
    pub fn left_mult(&self, v: &[(usize, Scalar)]) -> SparseMatrix {
        let n = self.dim();
        let columns = (0..n)
            .map(|j| {
                let mut col = Vec::new();
                for (i, x) in v {
                    for (k, c) in self.product(*i, j) {
                        col.push((*k, x * c));
                    }
                }
                col
            })
            .collect();
        SparseMatrix::from_columns(self.field, n, columns)
    }

    /// Right multiplication by `v` as a matrix (column `j` is `e_j · v`).
    pub fn right_mult(&self, v: &[(usize, Scalar)]) -> SparseMatrix {
        let n = self.dim();
        let columns = (0..n)
            .map(|j| {
                let mut col = Vec::new();
                for (i, x) in v {
                    for (k, c) in self.product(j, *i) {
                        col.push((*k, x * c));
                    }
                }
                col
            })
            .collect();
        SparseMatrix::from_columns(self.field, n, columns)
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        vec![(i, self.field.one())]
    }

    /// Dimension of the unital subalgebra generated by the given basis elements.
    pub fn generated_dim(&self, gens: &[usize]) -> usize {
        let n = self.dim();
        let mut span = SpanBuilder::lean(self.field, n);
        span.insert(&self.unit_dense());
        let mut queue = vec![self.unit.clone()];
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = self.mul(&v, &self.basis_vector(g));
                if span.insert(&sparse_to_dense(self.field, n, &w)) {
                    queue.push(w);
                }
            }
            if span.is_full() {
                break;
            }
        }
        span.rank()
    }

    /// A set of basis elements generating the algebra, chosen greedily by how
    /// much each one enlarges the generated subalgebra (ties go to the lower index).
    pub fn generators(&self) -> Vec<usize> {
        let n = self.dim();
        let mut gens = Vec::new();
        let mut current = self.generated_dim(&gens);
        while current < n {
            let (best, dim) = (0..n)
                .filter(|i| !gens.contains(i))
                .map(|i| {
                    let mut trial = gens.clone();
                    trial.push(i);
                    (i, self.generated_dim(&trial))
                })
                .fold((usize::MAX, current), |acc, (i, d)| if d > acc.1 { (i, d) } else { acc });
            assert!(best != usize::MAX, "the basis generates the algebra");
            gens.push(best);
            current = dim;
        }
        gens
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> StructAlgebra {
        let n = self.dim();
        let mult = (0..n * n).map(|idx| self.mult[(idx % n) * n + idx / n].clone()).collect();
        StructAlgebra { field: self.field, space: self.space.clone(), mult, unit: self.unit.clone() }
    }

    /// Same structure constants on a relabelled basis of the same dimension.
    pub fn relabel(&self, space: BasedSpace) -> Result<StructAlgebra> {
        if space.dim() != self.dim() {
            return Err(Error::DimensionMismatch("relabel".into()));
        }
        Ok(StructAlgebra { space, ..self.clone() })
    }
}

/// Checks associativity on all basis triples, then the unit law on all basis vectors.
pub fn check_algebra(a: &StructAlgebra) -> Verdict {
    check_algebra_with(a, Exec::default())
}

pub fn check_algebra_with(a: &StructAlgebra, exec: Exec) -> Verdict {
    let n = a.dim();
    let assoc = exec.find_first(n, |i| {
        let ei = a.basis_vector(i);
        for j in 0..n {
            let ij = a.product(i, j);
            for k in 0..n {
                let ek = a.basis_vector(k);
                let left = a.mul(ij, &ek);
                let right = a.mul(&ei, a.product(j, k));
                if left != right {
                    return Some(vec![i, j, k]);
                }
            }
        }
        None
    });
    Verdict::from_witness(Axiom::Associativity, assoc).and_then(|| {
        let unit = (0..n).find(|&i| {
            let ei = a.basis_vector(i);
            a.mul(a.unit(), &ei) != ei || a.mul(&ei, a.unit()) != ei
        });
        Verdict::from_witness(Axiom::Unitality, unit.map(|i| vec![i]))
    })
}
