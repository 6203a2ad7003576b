//! Dense and sparse exact linear algebra.

mod elim;
mod matrix;
mod sparse;
mod span;

pub use elim::{kernel_checks, rref_dense, rref_sparse, solve_sparse, Rref, SparseRow};
pub use matrix::Matrix;
pub use sparse::SparseMatrix;
pub use span::SpanBuilder;

use crate::field::Scalar;

/// Sorted `(index, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sorts, merges repeated indices and drops zeros.
pub fn collect_sparse(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    terms.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, v) in terms {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn sparse_to_dense(field: crate::Field, len: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (i, x) in v {
        out[*i] += x;
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}
