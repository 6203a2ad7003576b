use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::space::BasedSpace;
use crate::verdict::{Axiom, Verdict};

/// Sparse element of `V ⊗ V` as sorted `(a, b, c)` triples meaning `c·e_a⊗e_b`.
pub type PairVec = Vec<(usize, usize, Scalar)>;

pub(crate) fn collect_pairs(mut terms: PairVec) -> PairVec {
    terms.sort_by_key(|(a, b, _)| (*a, *b));
    let mut out: PairVec = Vec::with_capacity(terms.len());
    for (a, b, c) in terms {
        match out.last_mut() {
            Some((x, y, w)) if (*x, *y) == (a, b) => *w += &c,
            _ => out.push((a, b, c)),
        }
    }
    out.retain(|(_, _, c)| !c.is_zero());
    out
}

/// A finite-dimensional counital coalgebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructCoalgebra {
    field: Field,
    space: BasedSpace,
    comult: Vec<PairVec>,
    counit: Vec<Scalar>,
}

impl StructCoalgebra {
    /// Builds from `(i, j, k, c)` entries meaning `c·e_j⊗e_k` occurs in `Δ(e_i)`.
    pub fn new(
        field: Field,
        space: BasedSpace,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: Vec<Scalar>,
    ) -> Result<StructCoalgebra> {
        let n = space.dim();
        if n == 0 {
            return Err(Error::ZeroDimensional);
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch(format!("counit has length {} in dimension {n}", counit.len())));
        }
        let mut raw: Vec<PairVec> = vec![Vec::new(); n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidInput(format!("coproduct index ({i},{j},{k}) outside dimension {n}")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            raw[i].push((j, k, c));
        }
        Ok(StructCoalgebra { field, space, comult: raw.into_iter().map(collect_pairs).collect(), counit })
    }

    pub fn from_fn(
        field: Field,
        space: BasedSpace,
        mut coproduct: impl FnMut(usize) -> PairVec,
        counit: Vec<Scalar>,
    ) -> Result<StructCoalgebra> {
        let entries: Vec<_> = (0..space.dim())
            .flat_map(|i| coproduct(i).into_iter().map(move |(j, k, c)| (i, j, k, c)))
            .collect();
        StructCoalgebra::new(field, space, entries, counit)
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

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, d) in self.comult.iter().enumerate() {
            for (j, k, c) in d {
                out.push((i, *j, *k, c.clone()));
            }
        }
        out
    }

    /// `Δ` applied to a sparse vector.
    pub fn comult_vec(&self, v: &[(usize, Scalar)]) -> PairVec {
        let mut terms = Vec::new();
        for (i, x) in v {
            for (a, b, c) in self.coproduct(*i) {
                terms.push((*a, *b, x * c));
            }
        }
        collect_pairs(terms)
    }

    pub fn counit_vec(&self, v: &[(usize, Scalar)]) -> Scalar {
        v.iter().fold(self.field.zero(), |acc, (i, x)| acc + x * &self.counit[*i])
    }

    /// Same counit, flipped coproduct.
    pub fn co_opposite(&self) -> StructCoalgebra {
        let comult = self
            .comult
            .iter()
            .map(|d| collect_pairs(d.iter().map(|(a, b, c)| (*b, *a, c.clone())).collect()))
            .collect();
        StructCoalgebra { comult, ..self.clone() }
    }

    pub fn relabel(&self, space: BasedSpace) -> Result<StructCoalgebra> {
        if space.dim() != self.dim() {
            return Err(Error::DimensionMismatch("relabel".into()));
        }
        Ok(StructCoalgebra { space, ..self.clone() })
    }
}

pub fn check_coalgebra(c: &StructCoalgebra) -> Verdict {
    check_coalgebra_with(c, Exec::default())
}

/// Coassociativity on every basis vector, then both counit identities.
pub fn check_coalgebra_with(c: &StructCoalgebra, exec: Exec) -> Verdict {
    let n = c.dim();
    let coassoc = exec.find_first(n, |i| {
        let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (a, b, x) in c.coproduct(i) {
            for (p, q, y) in c.coproduct(*a) {
                *left.entry((*p, *q, *b)).or_insert_with(|| c.field.zero()) += &(x * y);
            }
            for (p, q, y) in c.coproduct(*b) {
                *right.entry((*a, *p, *q)).or_insert_with(|| c.field.zero()) += &(x * y);
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        (left != right).then(|| vec![i])
    });
    Verdict::from_witness(Axiom::Coassociativity, coassoc).and_then(|| {
        let bad = (0..n).find(|&i| {
            let mut left = vec![c.field.zero(); n];
            let mut right = vec![c.field.zero(); n];
            for (a, b, x) in c.coproduct(i) {
                left[*b] += &(x * &c.counit[*a]);
                right[*a] += &(x * &c.counit[*b]);
            }
            (0..n).any(|k| {
                let target = if k == i { c.field.one() } else { c.field.zero() };
                left[k] != target || right[k] != target
            })
        });
        Verdict::from_witness(Axiom::Counit, bad.map(|i| vec![i]))
    })
}
