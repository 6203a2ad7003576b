//! Incrementally grown subspaces.
//!
//! Rows are kept in semi-echelon form: every stored row vanishes on the pivots
//! of the rows inserted before it, so a candidate is reduced by one sweep in
//! insertion order. Over ℚ the rows are primitive integer vectors and reduction
//! is fraction-free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exec::Exec;
use crate::field::{denominator_lcm, inv_mod, Field, Scalar};

#[derive(Clone, Debug)]
enum Rows {
    Fp { p: u32, rows: Vec<(usize, Vec<u32>)> },
    Z { rows: Vec<(usize, Vec<BigInt>)> },
}

#[derive(Clone, Debug)]
enum Raw {
    Fp(Vec<u32>),
    Z(Vec<BigInt>),
}

/// A subspace of `field^dim` grown one vector at a time.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Field,
    dim: usize,
    rows: Rows,
    /// Inserted vectors (as given, after reduction) in insertion order.
    basis: Vec<Vec<Scalar>>,
    keep_basis: bool,
}

impl SpanBuilder {
    pub fn new(field: Field, dim: usize) -> SpanBuilder {
        let rows = match field {
            Field::Prime(p) => Rows::Fp { p, rows: Vec::new() },
            Field::Rational => Rows::Z { rows: Vec::new() },
        };
        SpanBuilder { field, dim, rows, basis: Vec::new(), keep_basis: true }
    }

    /// Like [`SpanBuilder::new`] but without a copy of the basis; [`SpanBuilder::basis`]
    /// stays empty and accepted vectors are only handed back by [`SpanBuilder::insert_batch`].
    pub fn lean(field: Field, dim: usize) -> SpanBuilder {
        SpanBuilder { keep_basis: false, ..SpanBuilder::new(field, dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Fp { rows, .. } => rows.len(),
            Rows::Z { rows } => rows.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    /// Basis of the span: the reduced forms of the accepted vectors.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn to_raw(&self, v: &[Scalar]) -> Raw {
        assert_eq!(v.len(), self.dim, "vector length");
        match self.field {
            Field::Prime(_) => Raw::Fp(v.iter().map(|x| x.residue().expect("GF(p) entry")).collect()),
            Field::Rational => {
                let qs: Vec<&BigRational> = v.iter().map(|x| x.as_rational().expect("rational")).collect();
                let l = denominator_lcm(qs.iter().copied());
                let lq = BigRational::from_integer(l);
                Raw::Z(qs.into_iter().map(|q| (q * &lq).to_integer()).collect())
            }
        }
    }

    fn reduce_raw(&self, raw: &mut Raw, from: usize) {
        match (&self.rows, raw) {
            (Rows::Fp { p, rows }, Raw::Fp(v)) => {
                let p64 = *p as u64;
                for (piv, row) in &rows[from..] {
                    let f = v[*piv];
                    if f != 0 {
                        let m = (*p - f) as u64;
                        for (x, r) in v.iter_mut().zip(row).skip(*piv) {
                            if *r != 0 {
                                *x = ((*x as u64 + m * *r as u64) % p64) as u32;
                            }
                        }
                    }
                }
            }
            (Rows::Z { rows }, Raw::Z(v)) => {
                for (piv, row) in &rows[from..] {
                    if v[*piv].is_zero() {
                        continue;
                    }
                    let a = row[*piv].clone();
                    let b = v[*piv].clone();
                    for (x, r) in v.iter_mut().zip(row) {
                        let mut y = &a * &*x;
                        if !r.is_zero() {
                            y -= &b * r;
                        }
                        *x = y;
                    }
                    make_primitive(v);
                }
            }
            _ => unreachable!("representation mismatch"),
        }
    }

    fn leading(raw: &Raw) -> Option<usize> {
        match raw {
            Raw::Fp(v) => v.iter().position(|&x| x != 0),
            Raw::Z(v) => v.iter().position(|x| !x.is_zero()),
        }
    }

    fn push(&mut self, raw: Raw, piv: usize) -> Vec<Scalar> {
        let scalars = self.from_raw(&raw);
        match (&mut self.rows, raw) {
            (Rows::Fp { p, rows }, Raw::Fp(mut v)) => {
                let inv = inv_mod(v[piv], *p) as u64;
                for x in v.iter_mut() {
                    *x = (*x as u64 * inv % *p as u64) as u32;
                }
                rows.push((piv, v));
            }
            (Rows::Z { rows }, Raw::Z(mut v)) => {
                make_primitive(&mut v);
                rows.push((piv, v));
            }
            _ => unreachable!("representation mismatch"),
        }
        if self.keep_basis {
            self.basis.push(scalars.clone());
        }
        scalars
    }

    fn from_raw(&self, raw: &Raw) -> Vec<Scalar> {
        match raw {
            Raw::Fp(v) => v.iter().map(|&x| Scalar::Fp { value: x, modulus: self.field.characteristic() }).collect(),
            Raw::Z(v) => v.iter().map(|x| Scalar::Q(BigRational::from_integer(x.clone()))).collect(),
        }
    }

    /// Adds `v` if it is outside the current span; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut raw = self.to_raw(v);
        self.reduce_raw(&mut raw, 0);
        match Self::leading(&raw) {
            Some(piv) => {
                self.push(raw, piv);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut raw = self.to_raw(v);
        self.reduce_raw(&mut raw, 0);
        Self::leading(&raw).is_none()
    }

    /// Inserts a batch. Candidates are first reduced against the current rows
    /// (in parallel when allowed), then accepted one by one. Returns the reduced
    /// forms of the accepted vectors, in candidate order.
    pub fn insert_batch(&mut self, candidates: &[Vec<Scalar>], exec: Exec) -> Vec<Vec<Scalar>> {
        let base = self.rank();
        let this = &*self;
        let mut reduced: Vec<Raw> = exec.map(candidates, |v| {
            let mut raw = this.to_raw(v);
            this.reduce_raw(&mut raw, 0);
            raw
        });
        let mut added = Vec::new();
        for raw in reduced.iter_mut() {
            if Self::leading(raw).is_none() {
                continue;
            }
            self.reduce_raw(raw, base);
            if let Some(piv) = Self::leading(raw) {
                added.push(self.push(raw.clone(), piv));
                if self.is_full() {
                    break;
                }
            }
        }
        added
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    // Normalize the sign so the leading entry is positive.
    if let Some(lead) = v.iter().find(|x| !x.is_zero()) {
        if lead.is_negative() {
            g = -g;
        }
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vq(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Field::Rational.from_i64(x)).collect()
    }

    #[test]
    fn grows_and_detects_dependence() {
        let mut s = SpanBuilder::new(Field::Rational, 3);
        assert!(s.insert(&vq(&[1, 2, 3])));
        assert!(s.insert(&vq(&[0, 1, 1])));
        assert!(!s.insert(&vq(&[2, 5, 7])));
        assert!(s.contains(&vq(&[1, 3, 4])));
        assert!(!s.contains(&vq(&[0, 0, 1])));
        assert!(s.insert(&vq(&[0, 0, 5])));
        assert!(s.is_full());
    }

    #[test]
    fn batch_matches_sequential_over_gf_p() {
        let f = Field::Prime(7);
        let cands: Vec<Vec<Scalar>> = [[1, 2, 0, 0], [2, 4, 0, 0], [0, 1, 1, 0], [1, 3, 1, 0], [0, 0, 0, 3]]
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        let mut a = SpanBuilder::new(f, 4);
        let added = a.insert_batch(&cands, Exec::Parallel);
        assert_eq!(added.len(), 3);
        let mut b = SpanBuilder::new(f, 4);
        let n = cands.iter().filter(|c| b.insert(c)).count();
        assert_eq!(n, 3);
    }
}
