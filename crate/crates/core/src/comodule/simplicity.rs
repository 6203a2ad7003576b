use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, StructAlgebra};
use crate::linalg::{dense_to_sparse, rref_sparse, sparse_to_dense, SpanBuilder, SparseMatrix, SparseRow};

use super::algebra::ComoduleAlgebra;

/// Verdict of [`h_simplicity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// The operators generate all of `End(B)`.
    Simple { operator_algebra_dim: usize },
    /// A proper nonzero costable ideal, as a basis.
    NotSimple { ideal: Vec<Vec<Scalar>> },
    /// Neither test was decisive over this field.
    Inconclusive { field: Field, operator_algebra_dim: usize },
}

/// `H*` on the dual basis: `h^a h^b = Σ_l [coefficient of h_a⊗h_b in Δ(h_l)] h^l`.
fn dual_algebra(h: &HopfAlgebra) -> StructAlgebra {
    let entries: Vec<_> =
        (0..h.dim()).flat_map(|l| h.coproduct(l).iter().map(move |(a, b, c)| (*a, *b, l, c.clone()))).collect();
    StructAlgebra::new(h.field(), h.space().dual(), entries, h.counit().to_vec()).expect("indices in range")
}

/// Left and right multiplications by algebra generators of `B` and the coefficient
/// maps `b ↦ (f⊗id)δ(b)` for algebra generators `f` of `H*`. Since `f ↦ (f⊗id)δ`
/// is multiplicative, these generate the same operator algebra as all basis elements.
pub fn costable_operators(c: &ComoduleAlgebra) -> Vec<SparseMatrix> {
    let b = c.alg();
    let gens = b.generators();
    let coeff = c.coefficient_maps();
    let mut ops: Vec<SparseMatrix> = gens.iter().map(|&g| b.left_mult(&b.basis_vector(g))).collect();
    ops.extend(gens.iter().map(|&g| b.right_mult(&b.basis_vector(g))));
    ops.extend(dual_algebra(c.host()).generators().into_iter().map(|f| coeff[f].clone()));
    ops
}

fn spin(field: Field, n: usize, ops: &[SparseMatrix], seeds: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut span = SpanBuilder::new(field, n);
    let mut queue: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for s in seeds {
        if span.insert(s) {
            queue.push(dense_to_sparse(s));
        }
    }
    while let Some(v) = queue.pop() {
        if span.is_full() {
            break;
        }
        for op in ops {
            let w = op.apply(&v);
            if span.insert(&sparse_to_dense(field, n, &w)) {
                queue.push(w);
            }
        }
    }
    span.basis().to_vec()
}

/// The smallest costable two-sided ideal containing `generators`, as a basis.
pub fn costable_closure(c: &ComoduleAlgebra, generators: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    spin(c.field(), c.dim(), &costable_operators(c), generators)
}

fn flatten(m: &SparseMatrix) -> Vec<Scalar> {
    let n = m.nrows();
    let mut out = vec![m.field().zero(); n * m.ncols()];
    for j in 0..m.ncols() {
        for (i, x) in m.column(j) {
            out[j * n + i] = x.clone();
        }
    }
    out
}

fn unflatten(field: Field, n: usize, v: &[Scalar]) -> SparseMatrix {
    let columns = (0..n).map(|j| dense_to_sparse(&v[j * n..(j + 1) * n])).collect();
    SparseMatrix::from_columns(field, n, columns)
}

/// Dimension of the unital algebra generated by `ops`, by saturating with products
/// in a fixed order; stops early at `n²` and after `n² + 1` rounds.
pub fn burnside_dim(field: Field, n: usize, ops: &[SparseMatrix], exec: Exec) -> usize {
    burnside_basis(field, n, ops, exec).len()
}

fn burnside_basis(field: Field, n: usize, ops: &[SparseMatrix], exec: Exec) -> Vec<SparseMatrix> {
    let mut span = SpanBuilder::lean(field, n * n);
    let id = SparseMatrix::identity(field, n);
    span.insert(&flatten(&id));
    let mut found = vec![id.clone()];
    let mut frontier = vec![id];
    for _ in 0..=n * n {
        if frontier.is_empty() || span.is_full() {
            break;
        }
        let products: Vec<(usize, usize)> = (0..frontier.len()).flat_map(|f| (0..ops.len()).map(move |g| (f, g))).collect();
        let mut next = Vec::new();
        for chunk in products.chunks(32) {
            let candidates = exec.map(chunk, |&(f, g)| flatten(&ops[g].compose(&frontier[f])));
            for v in span.insert_batch(&candidates, exec) {
                let m = unflatten(field, n, &v);
                found.push(m.clone());
                next.push(m);
            }
            if span.is_full() {
                break;
            }
        }
        frontier = next;
    }
    found
}

fn kernel(field: Field, m: &SparseMatrix, exec: Exec) -> Vec<Vec<Scalar>> {
    let t = m.transpose();
    let rows: Vec<SparseRow> = (0..m.nrows()).map(|r| t.column(r).to_vec()).collect();
    rref_sparse(field, m.ncols(), rows, exec).kernel_basis()
}

const EIGENVALUES: [i64; 5] = [0, -1, 1, -2, 2];
const OPERATOR_CAP: usize = 64;

pub fn h_simplicity(c: &ComoduleAlgebra) -> Simplicity {
    h_simplicity_with(c, Exec::default())
}

/// Spins every basis vector, then compares the operator algebra with `End(B)`,
/// then spins the eigenvectors of operators for a few small eigenvalues.
pub fn h_simplicity_with(c: &ComoduleAlgebra, exec: Exec) -> Simplicity {
    let field = c.field();
    let n = c.dim();
    let ops = costable_operators(c);
    let proper = |seeds: &[Vec<Scalar>]| {
        let ideal = spin(field, n, &ops, seeds);
        (ideal.len() < n).then_some(ideal)
    };
    for i in 0..n {
        let seed: Vec<Scalar> = (0..n).map(|k| if k == i { field.one() } else { field.zero() }).collect();
        if let Some(ideal) = proper(&[seed]) {
            return Simplicity::NotSimple { ideal };
        }
    }
    let algebra = burnside_basis(field, n, &ops, exec);
    if algebra.len() == n * n {
        return Simplicity::Simple { operator_algebra_dim: n * n };
    }
    let candidates = ops.iter().chain(algebra.iter().take(OPERATOR_CAP));
    for op in candidates {
        for lambda in EIGENVALUES {
            let shifted = op.linear_combination(&field.one(), &SparseMatrix::identity(field, n), &-field.from_i64(lambda));
            for v in kernel(field, &shifted, exec) {
                if let Some(ideal) = proper(&[v]) {
                    return Simplicity::NotSimple { ideal };
                }
            }
        }
    }
    Simplicity::Inconclusive { field, operator_algebra_dim: algebra.len() }
}
