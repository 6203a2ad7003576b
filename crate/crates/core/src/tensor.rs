//! Sparse elements of tensor products of based spaces.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::hopf::StructAlgebra;
use crate::linalg::{solve_sparse, SparseRow, SparseVec};
use crate::space::BasedSpace;

/// An element of `V_1 ⊗ … ⊗ V_n`, stored as multi-index → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    field: Field,
    factors: Vec<BasedSpace>,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl TensorElement {
    pub fn zero(field: Field, factors: Vec<BasedSpace>) -> TensorElement {
        TensorElement { field, factors, coeffs: BTreeMap::new() }
    }

    /// Sums the given terms; repeated multi-indices accumulate.
    pub fn from_terms(
        field: Field,
        factors: Vec<BasedSpace>,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<TensorElement> {
        let mut t = TensorElement::zero(field, factors);
        for (idx, c) in terms {
            if idx.len() != t.arity() {
                return Err(Error::InvalidInput(format!(
                    "multi-index of arity {} in a {}-fold tensor product",
                    idx.len(),
                    t.arity()
                )));
            }
            if let Some((leg, &i)) = idx.iter().enumerate().find(|(leg, &i)| i >= t.factors[*leg].dim()) {
                return Err(Error::InvalidInput(format!(
                    "index {i} on leg {leg} exceeds dimension {}",
                    t.factors[leg].dim()
                )));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            t.add_term(idx, c);
        }
        Ok(t)
    }

    /// Pure tensor of basis vectors.
    pub fn basis(field: Field, factors: Vec<BasedSpace>, idx: Vec<usize>) -> Result<TensorElement> {
        TensorElement::from_terms(field, factors, [(idx, field.one())])
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn factors(&self) -> &[BasedSpace] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.coeffs.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn same_shape(&self, other: &TensorElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.arity() != other.arity() {
            return Err(Error::DimensionMismatch(format!("arity {} vs {}", self.arity(), other.arity())));
        }
        for (a, b) in self.factors.iter().zip(&other.factors) {
            a.ensure_same(b)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.field, self.factors.clone());
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v * s);
        }
        out
    }

    /// First multi-index (in lexicographic order) where the two differ.
    pub fn first_difference(&self, other: &TensorElement) -> Option<Vec<usize>> {
        let keys: std::collections::BTreeSet<&Vec<usize>> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().find(|k| self.coeff(k) != other.coeff(k)).cloned()
    }

    /// Product of the units of the given algebras.
    pub fn unit(algebras: &[&StructAlgebra]) -> Result<TensorElement> {
        let field = common_field(algebras)?;
        let factors = algebras.iter().map(|a| a.space().clone()).collect();
        let mut out = TensorElement::zero(field, factors);
        for (idx, c) in cartesian(&algebras.iter().map(|a| a.unit().to_vec()).collect::<Vec<_>>(), field) {
            out.add_term(idx, c);
        }
        Ok(out)
    }

    /// Reorders legs: leg `i` of the result is leg `order[i]` of `self`.
    pub fn permute_legs(&self, order: &[usize]) -> TensorElement {
        assert_eq!(order.len(), self.arity(), "leg permutation of wrong length");
        let factors = order.iter().map(|&i| self.factors[i].clone()).collect();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (order.iter().map(|&i| k[i]).collect(), v.clone()))
            .collect();
        TensorElement { field: self.field, factors, coeffs }
    }

    /// `t_21` for a two-leg element.
    pub fn swap(&self) -> TensorElement {
        self.permute_legs(&[1, 0])
    }

    /// Applies a linear map to one leg; `image(i)` is the image of basis vector `i`.
    pub fn map_leg(&self, leg: usize, codomain: BasedSpace, image: impl Fn(usize) -> SparseVec) -> TensorElement {
        let mut factors = self.factors.clone();
        factors[leg] = codomain;
        let mut out = TensorElement::zero(self.field, factors);
        for (k, v) in &self.coeffs {
            for (j, c) in image(k[leg]) {
                let mut idx = k.clone();
                idx[leg] = j;
                out.add_term(idx, v * &c);
            }
        }
        out
    }

    /// Replaces one leg by two, using `image(i) = Σ c·(e_a ⊗ e_b)` as `(a, b, c)` triples.
    /// This is how comultiplications and coactions act on a leg.
    pub fn split_leg(
        &self,
        leg: usize,
        left: BasedSpace,
        right: BasedSpace,
        image: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
    ) -> TensorElement {
        let mut factors = self.factors.clone();
        factors.splice(leg..=leg, [left, right]);
        let mut out = TensorElement::zero(self.field, factors);
        for (k, v) in &self.coeffs {
            for (a, b, c) in image(k[leg]) {
                let mut idx = k.clone();
                idx.splice(leg..=leg, [a, b]);
                out.add_term(idx, v * &c);
            }
        }
        out
    }

    /// Removes a leg by pairing it with a functional (given by its values on the basis).
    pub fn contract_leg(&self, leg: usize, functional: &[Scalar]) -> TensorElement {
        let mut factors = self.factors.clone();
        factors.remove(leg);
        let mut out = TensorElement::zero(self.field, factors);
        for (k, v) in &self.coeffs {
            let f = &functional[k[leg]];
            if !f.is_zero() {
                let mut idx = k.clone();
                idx.remove(leg);
                out.add_term(idx, v * f);
            }
        }
        out
    }

    /// Row-major flat index of a multi-index.
    pub fn flat_index(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.factors).fold(0, |acc, (&i, s)| acc * s.dim() + i)
    }

    pub fn unflat_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.arity()];
        for leg in (0..self.arity()).rev() {
            let d = self.factors[leg].dim();
            idx[leg] = flat % d;
            flat /= d;
        }
        idx
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(BasedSpace::dim).product()
    }

    /// Coefficients as a sparse vector in the flat tensor-product basis.
    pub fn to_flat(&self) -> SparseVec {
        let mut v: SparseVec = self.coeffs.iter().map(|(k, c)| (self.flat_index(k), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_flat(field: Field, factors: Vec<BasedSpace>, v: &[(usize, Scalar)]) -> TensorElement {
        let mut out = TensorElement::zero(field, factors);
        for (i, c) in v {
            let idx = out.unflat_index(*i);
            out.add_term(idx, c.clone());
        }
        out
    }
}

fn common_field(algebras: &[&StructAlgebra]) -> Result<Field> {
    let first = algebras.first().ok_or_else(|| Error::InvalidInput("empty tensor product".into()))?;
    let field = first.field();
    if let Some(a) = algebras.iter().find(|a| a.field() != field) {
        return Err(Error::FieldMismatch(field, a.field()));
    }
    Ok(field)
}

/// Expands a list of per-leg sparse vectors into multi-index terms.
fn cartesian(legs: &[SparseVec], field: Field) -> Vec<(Vec<usize>, Scalar)> {
    let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(legs.len()), field.one())];
    for leg in legs {
        let mut next = Vec::with_capacity(acc.len() * leg.len());
        for (idx, c) in &acc {
            for (i, x) in leg {
                let mut j = idx.clone();
                j.push(*i);
                next.push((j, c * x));
            }
        }
        acc = next;
    }
    acc
}

fn check_algebras(t: &TensorElement, algebras: &[&StructAlgebra]) -> Result<()> {
    if algebras.len() != t.arity() {
        return Err(Error::InvalidInput(format!(
            "{} algebras supplied for a {}-fold tensor product",
            algebras.len(),
            t.arity()
        )));
    }
    for (a, s) in algebras.iter().zip(&t.factors) {
        s.ensure_same(a.space())?;
    }
    Ok(())
}

/// Places the legs of `t` at `slots` of `ambient`, filling the other slots with units.
pub fn leg_embed(t: &TensorElement, slots: &[usize], ambient: &[&StructAlgebra]) -> Result<TensorElement> {
    if slots.len() != t.arity() {
        return Err(Error::InvalidInput("slot count differs from arity".into()));
    }
    if slots.windows(2).any(|w| w[0] >= w[1]) || slots.last().is_some_and(|&s| s >= ambient.len()) {
        return Err(Error::InvalidInput(format!("slots {slots:?} are not increasing within {} legs", ambient.len())));
    }
    for (&s, f) in slots.iter().zip(&t.factors) {
        f.ensure_same(ambient[s].space())?;
    }
    let field = t.field;
    let factors: Vec<BasedSpace> = ambient.iter().map(|a| a.space().clone()).collect();
    let fill: Vec<usize> = (0..ambient.len()).filter(|i| !slots.contains(i)).collect();
    let units = cartesian(&fill.iter().map(|&i| ambient[i].unit().to_vec()).collect::<Vec<_>>(), field);
    let mut out = TensorElement::zero(field, factors);
    for (k, v) in &t.coeffs {
        for (u, c) in &units {
            let mut idx = vec![0; ambient.len()];
            for (&s, &i) in slots.iter().zip(k) {
                idx[s] = i;
            }
            for (&s, &i) in fill.iter().zip(u) {
                idx[s] = i;
            }
            out.add_term(idx, v * c);
        }
    }
    Ok(out)
}

/// Slotwise product `(a_1⊗…⊗a_n)(b_1⊗…⊗b_n) = a_1b_1⊗…⊗a_nb_n`.
pub fn tensor_mult(a: &TensorElement, b: &TensorElement, algebras: &[&StructAlgebra]) -> Result<TensorElement> {
    a.same_shape(b)?;
    check_algebras(a, algebras)?;
    let mut out = TensorElement::zero(a.field, a.factors.clone());
    for (ka, va) in &a.coeffs {
        for (kb, vb) in &b.coeffs {
            let legs: Vec<SparseVec> = (0..a.arity())
                .map(|l| algebras[l].product(ka[l], kb[l]).to_vec())
                .collect();
            if legs.iter().any(Vec::is_empty) {
                continue;
            }
            let vab = va * vb;
            for (idx, c) in cartesian(&legs, a.field) {
                out.add_term(idx, &vab * &c);
            }
        }
    }
    Ok(out)
}

/// Product of several elements, left to right.
pub fn tensor_product_chain(factors: &[&TensorElement], algebras: &[&StructAlgebra]) -> Result<TensorElement> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::InvalidInput("empty product".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, t| tensor_mult(&acc, t, algebras))
}

pub fn tensor_invert(t: &TensorElement, algebras: &[&StructAlgebra]) -> Result<TensorElement> {
    tensor_invert_with(t, algebras, Exec::default())
}

/// Inverse in the product algebra: solves `t·s = 1` with the left-multiplication
/// matrix of `t`, then checks `s·t = 1` as well.
pub fn tensor_invert_with(t: &TensorElement, algebras: &[&StructAlgebra], exec: Exec) -> Result<TensorElement> {
    check_algebras(t, algebras)?;
    let field = t.field;
    let n = t.total_dim();
    let mut rows: Vec<SparseRow> = vec![Vec::new(); n];
    for j in 0..n {
        let ej = TensorElement::basis(field, t.factors.clone(), t.unflat_index(j))?;
        for (i, c) in tensor_mult(t, &ej, algebras)?.to_flat() {
            rows[i].push((j, c));
        }
    }
    let unit = TensorElement::unit(algebras)?;
    let rhs = crate::linalg::sparse_to_dense(field, n, &unit.to_flat());
    let x = solve_sparse(field, n, rows, &rhs, exec).ok_or(Error::NotInvertible)?;
    let s = TensorElement::from_flat(field, t.factors.clone(), &crate::linalg::dense_to_sparse(&x));
    if tensor_mult(t, &s, algebras)? != unit || tensor_mult(&s, t, algebras)? != unit {
        return Err(Error::NotInvertible);
    }
    Ok(s)
}
