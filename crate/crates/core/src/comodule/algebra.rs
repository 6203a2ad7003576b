use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::hopf::{collect_pairs, pair_mul, HopfAlgebra, Module, PairVec, StructAlgebra};
use crate::linalg::{Matrix, SparseMatrix};
use crate::space::{BasedSpace, MapMatrix};
use crate::verdict::{Axiom, Verdict};

/// A left `H`-comodule algebra `(B, δ)`; `coaction(i)` lists `(a, s, c)` for `c·h_a⊗b_s` in `δ(b_i)`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    host: HopfAlgebra,
    alg: StructAlgebra,
    coaction: Vec<PairVec>,
}

impl ComoduleAlgebra {
    /// Shape checks only; see [`check_comodule_algebra`].
    pub fn assemble(
        host: HopfAlgebra,
        alg: StructAlgebra,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<ComoduleAlgebra> {
        if host.field() != alg.field() {
            return Err(Error::FieldMismatch(host.field(), alg.field()));
        }
        let (nh, nb) = (host.dim(), alg.dim());
        let mut raw: Vec<PairVec> = vec![Vec::new(); nb];
        for (b, h, s, c) in entries {
            if b >= nb || s >= nb || h >= nh {
                return Err(Error::InvalidInput(format!("coaction index ({b},{h},{s}) out of range")));
            }
            if c.field() != alg.field() {
                return Err(Error::FieldMismatch(alg.field(), c.field()));
            }
            raw[b].push((h, s, c));
        }
        Ok(ComoduleAlgebra { host, alg, coaction: raw.into_iter().map(collect_pairs).collect() })
    }

    /// Assembles and verifies.
    pub fn new(
        host: HopfAlgebra,
        alg: StructAlgebra,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<ComoduleAlgebra> {
        let c = ComoduleAlgebra::assemble(host, alg, entries)?;
        let v = check_comodule_algebra(&c);
        if v.is_pass() {
            Ok(c)
        } else {
            Err(Error::failed("comodule algebra", v))
        }
    }

    /// `(H, Δ)`.
    pub fn coregular(host: &HopfAlgebra) -> Result<ComoduleAlgebra> {
        let entries: Vec<_> = (0..host.dim())
            .flat_map(|i| host.coproduct(i).iter().map(move |(a, b, c)| (i, *a, *b, c.clone())))
            .collect();
        ComoduleAlgebra::new(host.clone(), host.alg().clone(), entries)
    }

    /// An algebra with `δ(b) = 1 ⊗ b`.
    pub fn trivial_coaction(host: &HopfAlgebra, alg: StructAlgebra) -> Result<ComoduleAlgebra> {
        let unit = host.unit().to_vec();
        let entries: Vec<_> = (0..alg.dim())
            .flat_map(|b| unit.iter().map(move |(h, c)| (b, *h, b, c.clone())))
            .collect();
        ComoduleAlgebra::new(host.clone(), alg, entries)
    }

    /// The base field as a one-dimensional comodule algebra.
    pub fn base_field(host: &HopfAlgebra) -> Result<ComoduleAlgebra> {
        let field = host.field();
        let alg = StructAlgebra::new(field, BasedSpace::new(["1"])?, [(0, 0, 0, field.one())], vec![field.one()])?;
        ComoduleAlgebra::trivial_coaction(host, alg)
    }

    pub fn host(&self) -> &HopfAlgebra {
        &self.host
    }

    pub fn alg(&self) -> &StructAlgebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn coaction(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.coaction[i]
    }

    pub fn coaction_vec(&self, v: &[(usize, Scalar)]) -> PairVec {
        let mut terms = Vec::new();
        for (i, x) in v {
            for (a, s, c) in &self.coaction[*i] {
                terms.push((*a, *s, x * c));
            }
        }
        collect_pairs(terms)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (b, d) in self.coaction.iter().enumerate() {
            for (h, s, c) in d {
                out.push((b, *h, *s, c.clone()));
            }
        }
        out
    }

    /// `δ` as a matrix `B → H ⊗ B`.
    pub fn coaction_map(&self) -> MapMatrix {
        let nb = self.dim();
        let mut m = Matrix::zeros(self.field(), self.host.dim() * nb, nb);
        for (b, d) in self.coaction.iter().enumerate() {
            for (h, s, c) in d {
                m.add_to(h * nb + s, b, c);
            }
        }
        MapMatrix { domain: self.alg.space().clone(), codomain: self.host.space().tensor(self.alg.space()), matrix: m }
    }

    /// Coefficient maps `b ↦ (h^j ⊗ id)δ(b)`, one per basis functional of `H*`.
    pub fn coefficient_maps(&self) -> Vec<SparseMatrix> {
        let nb = self.dim();
        let mut columns: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![Vec::new(); nb]; self.host.dim()];
        for (b, d) in self.coaction.iter().enumerate() {
            for (h, s, c) in d {
                columns[*h][b].push((*s, c.clone()));
            }
        }
        columns.into_iter().map(|cols| SparseMatrix::from_columns(self.field(), nb, cols)).collect()
    }

    /// `Y ▷ M` for an `H`-module `Y` and a `B`-module `M`: `b` acts by `b_[-1]·y ⊗ b_[0]·m`.
    pub fn act_on(&self, y: &Module, m: &Module) -> Module {
        let field = self.field();
        let d = y.dim() * m.dim();
        let actions = self
            .coaction
            .iter()
            .map(|terms| {
                terms.iter().fold(SparseMatrix::zeros(field, d, d), |acc, (h, s, c)| {
                    acc.linear_combination(&field.one(), &y.action(*h).kron(m.action(*s)), c)
                })
            })
            .collect();
        Module::new(field, y.carrier().tensor(m.carrier()), actions).expect("shapes agree")
    }
}

pub fn check_comodule_algebra(c: &ComoduleAlgebra) -> Verdict {
    check_comodule_algebra_with(c, Exec::default())
}

/// Coassociativity and counit of `δ`, then `δ(1) = 1⊗1` and multiplicativity.
pub fn check_comodule_algebra_with(c: &ComoduleAlgebra, exec: Exec) -> Verdict {
    let field = c.field();
    let h = &c.host;
    let nb = c.dim();
    let coassoc = exec.find_first(nb, |b| {
        let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (a, s, x) in c.coaction(b) {
            for (p, q, y) in h.coproduct(*a) {
                *left.entry((*p, *q, *s)).or_insert_with(|| field.zero()) += &(x * y);
            }
            for (p, q, y) in c.coaction(*s) {
                *right.entry((*a, *p, *q)).or_insert_with(|| field.zero()) += &(x * y);
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        (left != right).then(|| vec![b])
    });
    Verdict::from_witness(Axiom::CoactionCoassociativity, coassoc)
        .and_then(|| {
            let bad = (0..nb).find(|&b| {
                let mut v = vec![field.zero(); nb];
                for (a, s, x) in c.coaction(b) {
                    v[*s] += &(x * &h.counit()[*a]);
                }
                v.iter().enumerate().any(|(s, x)| *x != if s == b { field.one() } else { field.zero() })
            });
            Verdict::from_witness(Axiom::CoactionCounit, bad.map(|b| vec![b]))
        })
        .and_then(|| {
            let unit = c.alg.unit();
            let expected: PairVec = collect_pairs(
                h.unit().iter().flat_map(|(i, x)| unit.iter().map(move |(j, y)| (*i, *j, x * y))).collect(),
            );
            if c.coaction_vec(unit) == expected {
                Verdict::Pass
            } else {
                Verdict::fail(Axiom::CoactionUnit, Vec::new())
            }
        })
        .and_then(|| {
            let bad = exec.find_first(nb * nb, |idx| {
                let (i, j) = (idx / nb, idx % nb);
                let lhs = c.coaction_vec(c.alg.product(i, j));
                let rhs = pair_mul(h.alg(), &c.alg, c.coaction(i), c.coaction(j));
                (lhs != rhs).then(|| vec![i, j])
            });
            Verdict::from_witness(Axiom::CoactionMultiplicativity, bad)
        })
}
