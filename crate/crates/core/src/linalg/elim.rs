//! Row reduction to reduced row echelon form.
//!
//! GF(p) uses plain Gauss–Jordan elimination on `u32` residues. ℚ clears
//! denominators row by row and runs fraction-free (Bareiss) forward elimination
//! over the integers; only the final back-substitution touches rationals.
//! Large, very sparse systems over ℚ (the structure-constant systems of group-like
//! data) go through a sparse Gauss–Jordan pass instead, since Bareiss rescales
//! every row at every step.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exec::Exec;
use crate::field::{denominator_lcm, inv_mod, Field, Scalar};

static KERNEL_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of kernel computations whose rank–nullity check has run in this process.
pub fn kernel_checks() -> u64 {
    KERNEL_CHECKS.load(Ordering::Relaxed)
}

/// A sparse row: `(column, value)` pairs, zero values allowed but ignored.
pub type SparseRow = Vec<(usize, Scalar)>;

/// Reduced row echelon form of a row set.
#[derive(Clone, Debug)]
pub struct Rref {
    pub field: Field,
    pub ncols: usize,
    pub pivots: Vec<usize>,
    /// Nonzero rows only; `rows[i][pivots[i]] == 1` and every other row is zero there.
    pub rows: Vec<Vec<Scalar>>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis, one vector per free column; vector `i` is 1 on free column
    /// `i` and 0 on the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let free = self.free_columns();
        let basis: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -&row[f];
                    }
                }
                v
            })
            .collect();
        assert_eq!(
            self.rank() + basis.len(),
            self.ncols,
            "rank-nullity violated"
        );
        KERNEL_CHECKS.fetch_add(1, Ordering::Relaxed);
        basis
    }
}

/// Reduces `rows` (each of length `ncols` once densified) to RREF.
pub fn rref_sparse(field: Field, ncols: usize, rows: Vec<SparseRow>, exec: Exec) -> Rref {
    match field {
        Field::Prime(p) => {
            let dense: Vec<Vec<u32>> = rows
                .into_iter()
                .filter_map(|r| {
                    let mut d = vec![0u32; ncols];
                    let mut any = false;
                    for (c, v) in r {
                        let x = v.residue().expect("GF(p) entry");
                        if x != 0 {
                            d[c] = ((d[c] as u64 + x as u64) % p as u64) as u32;
                            any = true;
                        }
                    }
                    any.then_some(d)
                })
                .collect();
            let (pivots, reduced) = rref_fp(p, ncols, dense, exec);
            let rows = reduced
                .into_iter()
                .map(|r| r.into_iter().map(|value| Scalar::Fp { value, modulus: p }).collect())
                .collect();
            Rref { field, ncols, pivots, rows }
        }
        Field::Rational if is_sparse_system(ncols, &rows) => {
            let rows = rows
                .into_iter()
                .map(|r| {
                    let terms = r.into_iter().map(|(c, v)| (c, v.as_rational().expect("rational entry").clone())).collect();
                    merge_terms(terms)
                })
                .collect();
            let (pivots, reduced) = sparse_rref_q(ncols, rows);
            let rows = reduced
                .into_iter()
                .map(|r| {
                    let mut d = vec![Scalar::Q(BigRational::zero()); ncols];
                    for (c, v) in r {
                        d[c] = Scalar::Q(v);
                    }
                    d
                })
                .collect();
            Rref { field, ncols, pivots, rows }
        }
        Field::Rational => {
            let ints: Vec<Vec<BigInt>> = rows
                .into_iter()
                .filter_map(|r| {
                    let mut d = vec![BigRational::zero(); ncols];
                    for (c, v) in r {
                        d[c] += v.as_rational().expect("rational entry");
                    }
                    if d.iter().all(Zero::is_zero) {
                        return None;
                    }
                    let l = denominator_lcm(d.iter());
                    Some(
                        d.into_iter()
                            .map(|q| (q * BigRational::from_integer(l.clone())).to_integer())
                            .collect(),
                    )
                })
                .collect();
            let (pivots, echelon) = bareiss(ncols, ints, exec);
            let rows = back_substitute_q(&pivots, echelon)
                .into_iter()
                .map(|r| r.into_iter().map(Scalar::Q).collect())
                .collect();
            Rref { field, ncols, pivots, rows }
        }
    }
}

/// Some solution of the system whose `i`-th equation is `rows[i] · x = rhs[i]`,
/// with free variables set to zero; `None` if inconsistent.
pub fn solve_sparse(field: Field, ncols: usize, rows: Vec<SparseRow>, rhs: &[Scalar], exec: Exec) -> Option<Vec<Scalar>> {
    assert_eq!(rows.len(), rhs.len());
    let augmented = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            if !b.is_zero() {
                r.push((ncols, b.clone()));
            }
            r
        })
        .collect();
    let rref = rref_sparse(field, ncols + 1, augmented, exec);
    if rref.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

pub fn rref_dense(field: Field, ncols: usize, rows: &[Vec<Scalar>], exec: Exec) -> Rref {
    let sparse = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect()
        })
        .collect();
    rref_sparse(field, ncols, sparse, exec)
}

fn rref_fp(p: u32, ncols: usize, mut rows: Vec<Vec<u32>>, exec: Exec) -> (Vec<usize>, Vec<Vec<u32>>) {
    let p64 = p as u64;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = inv_mod(rows[rank][c], p) as u64;
        for x in rows[rank][c..].iter_mut() {
            *x = (*x as u64 * inv % p64) as u32;
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| rows[rank][j] != 0).collect();
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        exec.for_each_mut(bottom, |row| {
            let f = row[c];
            if f != 0 {
                let m = (p - f) as u64;
                for &j in &support {
                    row[j] = ((row[j] as u64 + m * prow[j] as u64) % p64) as u32;
                }
            }
        });
        pivots.push(c);
        rank += 1;
        // Rows that became zero carry no information; dropping them keeps later sweeps short.
        if rank < rows.len() && rows.len() > 2 * ncols {
            let mut tail: Vec<Vec<u32>> = rows.split_off(rank);
            tail.retain(|r| r.iter().any(|&x| x != 0));
            rows.extend(tail);
        }
    }
    rows.truncate(rank);
    for i in (0..rank).rev() {
        let c = pivots[i];
        let support: Vec<usize> = (c..ncols).filter(|&j| rows[i][j] != 0).collect();
        let (top, bottom) = rows.split_at_mut(i);
        let prow = &bottom[0];
        exec.for_each_mut(top, |row| {
            let f = row[c];
            if f != 0 {
                let m = (p - f) as u64;
                for &j in &support {
                    row[j] = ((row[j] as u64 + m * prow[j] as u64) % p64) as u32;
                }
            }
        });
    }
    (pivots, rows)
}

fn is_sparse_system(ncols: usize, rows: &[SparseRow]) -> bool {
    let cells = rows.len() * ncols;
    let nnz: usize = rows.iter().map(Vec::len).sum();
    cells > 1 << 14 && nnz * 16 < cells
}

type QRow = Vec<(usize, BigRational)>;

fn merge_terms(mut terms: QRow) -> QRow {
    terms.sort_by_key(|t| t.0);
    let mut out: QRow = Vec::with_capacity(terms.len());
    for (c, v) in terms {
        match out.last_mut() {
            Some((last, acc)) if *last == c => *acc += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `row - f·pivot` on column-sorted rows.
fn axpy(row: &QRow, f: &BigRational, pivot: &QRow) -> QRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(f * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - f * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Gauss–Jordan on sparse rows, choosing the shortest row as pivot in each column.
fn sparse_rref_q(ncols: usize, rows: Vec<QRow>) -> (Vec<usize>, Vec<QRow>) {
    let mut buckets: Vec<Vec<QRow>> = vec![Vec::new(); ncols];
    for r in rows {
        if let Some(&(c, _)) = r.first() {
            buckets[c].push(r);
        }
    }
    let mut pivots = Vec::new();
    let mut reduced: Vec<QRow> = Vec::new();
    for c in 0..ncols {
        let mut candidates = std::mem::take(&mut buckets[c]);
        let Some(best) = (0..candidates.len()).min_by_key(|&i| candidates[i].len()) else {
            continue;
        };
        let mut p = candidates.swap_remove(best);
        let lead = p[0].1.clone();
        for (_, v) in p.iter_mut() {
            *v /= &lead;
        }
        for r in candidates {
            let next = axpy(&r, &r[0].1, &p);
            if let Some(&(c2, _)) = next.first() {
                buckets[c2].push(next);
            }
        }
        pivots.push(c);
        reduced.push(p);
    }
    let mut slot = vec![usize::MAX; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        slot[c] = i;
    }
    for i in (0..reduced.len()).rev() {
        // later pivot rows are already reduced, so the eliminations do not interact
        let hits: Vec<(usize, BigRational)> =
            reduced[i][1..].iter().filter(|(c, _)| slot[*c] != usize::MAX).map(|(c, v)| (slot[*c], v.clone())).collect();
        let mut row = std::mem::take(&mut reduced[i]);
        for (j, f) in hits {
            row = axpy(&row, &f, &reduced[j]);
        }
        reduced[i] = row;
    }
    (pivots, reduced)
}

/// Fraction-free forward elimination. Returns pivot columns and the echelon rows.
fn bareiss(ncols: usize, mut rows: Vec<Vec<BigInt>>, exec: Exec) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(r) = (rank..rows.len())
            .filter(|&r| !rows[r][c].is_zero())
            .min_by_key(|&r| rows[r][c].bits())
        else {
            continue;
        };
        rows.swap(rank, r);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let piv = prow[c].clone();
        let prev_ref = &prev;
        exec.for_each_mut(bottom, |row| {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let mut x = &piv * &row[j];
                if !f.is_zero() && !prow[j].is_zero() {
                    x -= &f * &prow[j];
                }
                if !prev_ref.is_one() {
                    debug_assert!((&x % prev_ref).is_zero(), "Bareiss division must be exact");
                    x /= prev_ref;
                }
                row[j] = x;
            }
        });
        prev = piv;
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    (pivots, rows)
}

fn back_substitute_q(pivots: &[usize], echelon: Vec<Vec<BigInt>>) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = echelon
        .into_iter()
        .zip(pivots)
        .map(|(r, &c)| {
            let piv = BigRational::from_integer(r[c].clone());
            r.into_iter()
                .map(|x| BigRational::from_integer(x) / &piv)
                .collect()
        })
        .collect();
    for i in (0..rows.len()).rev() {
        let c = pivots[i];
        let (top, bottom) = rows.split_at_mut(i);
        let prow = &bottom[0];
        for row in top.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..row.len() {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    row[j] -= d;
                }
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Field::Rational.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn rref_over_q_matches_hand_reduction() {
        // [[2,4,1],[1,2,3]] -> [[1,2,0],[0,0,1]]
        let r = rref_dense(Field::Rational, 3, &q(&[&[2, 4, 1], &[1, 2, 3]]), Exec::Sequential);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.rows, q(&[&[1, 2, 0], &[0, 0, 1]]));
        let k = r.kernel_basis();
        assert_eq!(k, q(&[&[-2, 1, 0]]));
    }

    #[test]
    fn rref_over_gf_p() {
        let f = Field::Prime(5);
        let rows: Vec<Vec<Scalar>> = [[1, 2, 3], [2, 4, 1], [3, 1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        // det = -25, so the rank drops in characteristic 5 only.
        let r = rref_dense(f, 3, &rows, Exec::Sequential);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.kernel_basis().len(), 1);
        let g = Field::Prime(7);
        let rows7: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|x| g.from_i64(x.residue().unwrap() as i64)).collect()).collect();
        assert_eq!(rref_dense(g, 3, &rows7, Exec::Sequential).rank(), 3);
    }

    #[test]
    fn bareiss_agrees_with_gf_p_rank_on_integer_matrix() {
        let m: Vec<Vec<i64>> = vec![
            vec![3, -1, 4, 1, 5],
            vec![9, 2, 6, 5, 3],
            vec![12, 1, 10, 6, 8],
            vec![0, 0, 0, 0, 0],
            vec![2, 7, 1, 8, 2],
        ];
        let qrows: Vec<Vec<Scalar>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Field::Rational.from_i64(x)).collect())
            .collect();
        let prow: Vec<Vec<Scalar>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Field::Prime(10007).from_i64(x)).collect())
            .collect();
        let a = rref_dense(Field::Rational, 5, &qrows, Exec::Sequential);
        let b = rref_dense(Field::Prime(10007), 5, &prow, Exec::Parallel);
        assert_eq!(a.rank(), 3);
        assert_eq!(b.rank(), 3);
        assert_eq!(a.pivots, b.pivots);
    }

    #[test]
    fn sparse_and_fraction_free_paths_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (nrows, ncols) = (rng.gen_range(5..40), rng.gen_range(5..40));
            let rows: Vec<QRow> = (0..nrows)
                .map(|_| {
                    let terms = (0..rng.gen_range(0..4))
                        .map(|_| (rng.gen_range(0..ncols), BigRational::new(rng.gen_range(-5..6).into(), rng.gen_range(1..4).into())))
                        .collect();
                    merge_terms(terms)
                })
                .collect();
            let (p1, r1) = sparse_rref_q(ncols, rows.clone());
            let dense: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|r| {
                    let mut d = vec![Field::Rational.zero(); ncols];
                    for (c, v) in r {
                        d[*c] = Scalar::Q(v.clone());
                    }
                    d
                })
                .collect();
            let r2 = rref_dense(Field::Rational, ncols, &dense, Exec::Sequential);
            assert_eq!(p1, r2.pivots);
            for (a, b) in r1.iter().zip(&r2.rows) {
                let mut d = vec![Field::Rational.zero(); ncols];
                for (c, v) in a {
                    d[*c] = Scalar::Q(v.clone());
                }
                assert_eq!(&d, b);
            }
        }
    }
}
