use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::linalg::{collect_sparse, solve_sparse, SparseMatrix, SparseRow, SparseVec};
use crate::space::{BasedSpace, MapMatrix};
use crate::verdict::{Axiom, Verdict};

use super::algebra::{check_algebra_with, StructAlgebra};
use super::coalgebra::{check_coalgebra_with, collect_pairs, PairVec, StructCoalgebra};

/// A finite-dimensional Hopf algebra. The antipode is stored together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: StructAlgebra,
    coalg: StructCoalgebra,
    antipode: SparseMatrix,
    antipode_inv: SparseMatrix,
}

impl HopfAlgebra {
    /// Puts the data together without checking the axioms. A missing antipode is solved for.
    pub fn assemble(alg: StructAlgebra, coalg: StructCoalgebra, antipode: Option<SparseMatrix>) -> Result<HopfAlgebra> {
        alg.space().ensure_same(coalg.space())?;
        if alg.field() != coalg.field() {
            return Err(Error::FieldMismatch(alg.field(), coalg.field()));
        }
        let n = alg.dim();
        let antipode = match antipode {
            Some(s) if s.nrows() != n || s.ncols() != n => {
                return Err(Error::DimensionMismatch(format!("antipode is {}x{}, expected {n}x{n}", s.nrows(), s.ncols())))
            }
            Some(s) => s,
            None => solve_antipode(&alg, &coalg)?,
        };
        let antipode_inv = SparseMatrix::from_dense(&antipode.to_dense().inverse().map_err(|_| Error::NoAntipode)?);
        Ok(HopfAlgebra { alg, coalg, antipode, antipode_inv })
    }

    /// Assembles and verifies with [`check_hopf`].
    pub fn new(alg: StructAlgebra, coalg: StructCoalgebra, antipode: Option<SparseMatrix>) -> Result<HopfAlgebra> {
        let h = HopfAlgebra::assemble(alg, coalg, antipode)?;
        let v = check_hopf(&h);
        if v.is_pass() {
            Ok(h)
        } else {
            Err(Error::failed("Hopf algebra", v))
        }
    }

    pub fn alg(&self) -> &StructAlgebra {
        &self.alg
    }

    pub fn coalg(&self) -> &StructCoalgebra {
        &self.coalg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn space(&self) -> &BasedSpace {
        self.alg.space()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn antipode(&self) -> MapMatrix {
        MapMatrix { domain: self.space().clone(), codomain: self.space().clone(), matrix: self.antipode.to_dense() }
    }

    pub fn antipode_inv(&self) -> MapMatrix {
        MapMatrix { domain: self.space().clone(), codomain: self.space().clone(), matrix: self.antipode_inv.to_dense() }
    }

    pub fn antipode_sparse(&self) -> &SparseMatrix {
        &self.antipode
    }

    pub fn antipode_inv_sparse(&self) -> &SparseMatrix {
        &self.antipode_inv
    }

    pub fn s(&self, v: &[(usize, Scalar)]) -> SparseVec {
        self.antipode.apply(v)
    }

    pub fn s_inv(&self, v: &[(usize, Scalar)]) -> SparseVec {
        self.antipode_inv.apply(v)
    }

    pub fn mul(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
        self.alg.mul(a, b)
    }

    pub fn unit(&self) -> &[(usize, Scalar)] {
        self.alg.unit()
    }

    pub fn counit(&self) -> &[Scalar] {
        self.coalg.counit()
    }

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, Scalar)] {
        self.coalg.coproduct(i)
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        self.alg.basis_vector(i)
    }
}

/// Product in `A ⊗ B` of two sparse pair vectors.
pub fn pair_mul(a: &StructAlgebra, b: &StructAlgebra, x: &[(usize, usize, Scalar)], y: &[(usize, usize, Scalar)]) -> PairVec {
    let mut terms = Vec::new();
    for (p, q, c) in x {
        for (r, s, d) in y {
            let cd = c * d;
            for (k, u) in a.product(*p, *r) {
                for (l, v) in b.product(*q, *s) {
                    terms.push((*k, *l, &cd * &(u * v)));
                }
            }
        }
    }
    collect_pairs(terms)
}

/// Solves `m(S⊗id)Δ = uε = m(id⊗S)Δ` for `S` as a linear system in `End(H)`.
pub fn solve_antipode(alg: &StructAlgebra, coalg: &StructCoalgebra) -> Result<SparseMatrix> {
    let field = alg.field();
    let n = alg.dim();
    // unknown k*n + a: coefficient of e_k in S(e_a); equation (side, i, l): coordinate l at e_i
    let mut rows: Vec<SparseRow> = vec![Vec::new(); 2 * n * n];
    let mut rhs = vec![field.zero(); 2 * n * n];
    let unit = alg.unit_dense();
    for i in 0..n {
        for l in 0..n {
            let target = &coalg.counit()[i] * &unit[l];
            rhs[i * n + l] = target.clone();
            rhs[n * n + i * n + l] = target;
        }
        for (a, b, c) in coalg.coproduct(i) {
            for k in 0..n {
                for (l, m) in alg.product(k, *b) {
                    rows[i * n + l].push((k * n + a, c * m));
                }
                for (l, m) in alg.product(*a, k) {
                    rows[n * n + i * n + l].push((k * n + b, c * m));
                }
            }
        }
    }
    let x = solve_sparse(field, n * n, rows, &rhs, Exec::default()).ok_or(Error::NoAntipode)?;
    let columns = (0..n)
        .map(|a| (0..n).filter(|k| !x[k * n + a].is_zero()).map(|k| (k, x[k * n + a].clone())).collect())
        .collect();
    Ok(SparseMatrix::from_columns(field, n, columns))
}

pub fn check_hopf(h: &HopfAlgebra) -> Verdict {
    check_hopf_with(h, Exec::default())
}

/// Algebra, coalgebra, bialgebra compatibility, both antipode identities, and that the
/// stored inverse is a two-sided inverse acting as the antipode of the co-opposite.
pub fn check_hopf_with(h: &HopfAlgebra, exec: Exec) -> Verdict {
    check_algebra_with(&h.alg, exec)
        .and_then(|| check_coalgebra_with(&h.coalg, exec))
        .and_then(|| check_bialgebra(&h.alg, &h.coalg, exec))
        .and_then(|| check_antipode(h, exec))
        .and_then(|| check_antipode_inverse(h, exec))
}

/// Δ and ε are unital algebra maps.
pub fn check_bialgebra(a: &StructAlgebra, c: &StructCoalgebra, exec: Exec) -> Verdict {
    let n = a.dim();
    let unit = a.unit();
    let unit_pair: PairVec =
        collect_pairs(unit.iter().flat_map(|(i, x)| unit.iter().map(move |(j, y)| (*i, *j, x * y))).collect());
    if c.comult_vec(unit) != unit_pair || !c.counit_vec(unit).is_one() {
        return Verdict::fail(Axiom::Bialgebra, Vec::new());
    }
    let bad = exec.find_first(n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        let prod = a.product(i, j);
        let lhs = c.comult_vec(prod);
        let rhs = pair_mul(a, a, c.coproduct(i), c.coproduct(j));
        let eps_ok = c.counit_vec(prod) == &c.counit()[i] * &c.counit()[j];
        (lhs != rhs || !eps_ok).then(|| vec![i, j])
    });
    Verdict::from_witness(Axiom::Bialgebra, bad)
}

fn unit_times(h: &HopfAlgebra, i: usize) -> SparseVec {
    let e = &h.counit()[i];
    collect_sparse(h.unit().iter().map(|(k, u)| (*k, u * e)).collect())
}

fn check_antipode(h: &HopfAlgebra, exec: Exec) -> Verdict {
    let bad = exec.find_first(h.dim(), |i| {
        let target = unit_times(h, i);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (a, b, c) in h.coproduct(i) {
            let sa = h.antipode.column(*a);
            let sb = h.antipode.column(*b);
            for (k, x) in h.mul(sa, &h.basis_vector(*b)) {
                left.push((k, c * &x));
            }
            for (k, x) in h.mul(&h.basis_vector(*a), sb) {
                right.push((k, c * &x));
            }
        }
        (collect_sparse(left) != target || collect_sparse(right) != target).then(|| vec![i])
    });
    Verdict::from_witness(Axiom::Antipode, bad)
}

fn check_antipode_inverse(h: &HopfAlgebra, exec: Exec) -> Verdict {
    if !h.antipode.compose(&h.antipode_inv).is_identity() || !h.antipode_inv.compose(&h.antipode).is_identity() {
        return Verdict::fail(Axiom::AntipodeInverse, Vec::new());
    }
    let bad = exec.find_first(h.dim(), |i| {
        let mut terms = Vec::new();
        for (a, b, c) in h.coproduct(i) {
            for (k, x) in h.mul(h.antipode_inv.column(*b), &h.basis_vector(*a)) {
                terms.push((k, c * &x));
            }
        }
        (collect_sparse(terms) != unit_times(h, i)).then(|| vec![i])
    });
    Verdict::from_witness(Axiom::AntipodeInverse, bad)
}

/// `H*` on the dual basis: product `Δᵀ`, coproduct `mᵀ`, unit `ε`, counit evaluation at 1, antipode `Sᵀ`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let field = h.field();
    let n = h.dim();
    let space = h.space().dual();
    let mult = h.coalg.entries().into_iter().map(|(k, i, j, c)| (i, j, k, c));
    let alg = StructAlgebra::new(field, space.clone(), mult, h.counit().to_vec())?;
    let comult = h.alg.entries().into_iter().map(|(i, j, k, c)| (k, i, j, c));
    let coalg = StructCoalgebra::new(field, space, comult, h.alg.unit_dense())?;
    let mut dual = HopfAlgebra::assemble(alg, coalg, Some(h.antipode.transpose()))?;
    dual.antipode_inv = h.antipode_inv.transpose();
    let v = check_hopf(&dual);
    if !v.is_pass() {
        return Err(Error::failed("dual Hopf algebra", v));
    }
    debug_assert_eq!(dual.dim(), n);
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_c(n: usize, field: Field) -> (StructAlgebra, StructCoalgebra) {
        let space = BasedSpace::indexed("g", n);
        let alg = StructAlgebra::from_fn(field, space.clone(), |i, j| vec![((i + j) % n, field.one())], {
            let mut u = vec![field.zero(); n];
            u[0] = field.one();
            u
        })
        .unwrap();
        let coalg = StructCoalgebra::from_fn(field, space, |i| vec![(i, i, field.one())], vec![field.one(); n]).unwrap();
        (alg, coalg)
    }

    #[test]
    fn solved_antipode_of_cyclic_group_is_inversion() {
        let f = Field::Rational;
        let (a, c) = group_c(5, f);
        let h = HopfAlgebra::new(a, c, None).unwrap();
        for i in 0..5 {
            assert_eq!(h.s(&h.basis_vector(i)), h.basis_vector((5 - i) % 5));
        }
        assert!(h.antipode().matrix.mul(&h.antipode().matrix).unwrap().is_identity());
    }

    #[test]
    fn wrong_antipode_is_reported_with_witness() {
        let f = Field::Rational;
        let (a, c) = group_c(3, f);
        let h = HopfAlgebra::assemble(a, c, Some(SparseMatrix::identity(f, 3))).unwrap();
        assert_eq!(check_hopf(&h), Verdict::fail(Axiom::Antipode, vec![1]));
    }

    #[test]
    fn missing_antipode_is_reported() {
        // The bialgebra k[x]/(x²-x) with x grouplike has no antipode: x·S(x) = 1 is impossible.
        let f = Field::Rational;
        let space = BasedSpace::new(["1", "x"]).unwrap();
        let a = StructAlgebra::from_fn(f, space.clone(), |i, j| vec![(if i + j == 0 { 0 } else { 1 }, f.one())], vec![f.one(), f.zero()])
            .unwrap();
        let c = StructCoalgebra::from_fn(f, space, |i| vec![(i, i, f.one())], vec![f.one(), f.one()]).unwrap();
        assert!(check_bialgebra(&a, &c, Exec::Sequential).is_pass());
        assert!(matches!(HopfAlgebra::assemble(a, c, None), Err(Error::NoAntipode)));
    }

    #[test]
    fn dual_of_dual_has_the_same_structure_constants() {
        let f = Field::Prime(7);
        let (a, c) = group_c(4, f);
        let h = HopfAlgebra::new(a, c, None).unwrap();
        let dd = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
        assert_eq!(dd.alg.entries(), h.alg.entries());
        assert_eq!(dd.coalg.entries(), h.coalg.entries());
        assert_eq!(dd.antipode, h.antipode);
        assert_eq!(dd.space().label(1), "g1**");
    }
}
