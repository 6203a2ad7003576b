use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::linalg::{collect_sparse, Matrix, SparseMatrix};
use crate::space::{BasedSpace, MapMatrix, SparseMap};
use crate::tensor::TensorElement;
use crate::verdict::{Axiom, Verdict};

use super::algebra::StructAlgebra;
use super::hopf_algebra::HopfAlgebra;

/// A finite-dimensional left module over a structure-constant algebra, given by
/// the action matrix of every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    carrier: BasedSpace,
    actions: Vec<SparseMatrix>,
}

/// Modules over a Hopf algebra.
pub type HModule = Module;
/// Modules over a comodule algebra.
pub type BModule = Module;

impl Module {
    pub fn new(field: Field, carrier: BasedSpace, actions: Vec<SparseMatrix>) -> Result<Module> {
        let d = carrier.dim();
        if let Some(m) = actions.iter().find(|m| m.nrows() != d || m.ncols() != d) {
            return Err(Error::DimensionMismatch(format!("{}x{} action on a {d}-dimensional carrier", m.nrows(), m.ncols())));
        }
        if let Some(m) = actions.iter().find(|m| m.field() != field) {
            return Err(Error::FieldMismatch(field, m.field()));
        }
        Ok(Module { carrier, actions })
    }

    /// Left multiplication.
    pub fn regular(a: &StructAlgebra) -> Module {
        let actions = (0..a.dim()).map(|i| a.left_mult(&a.basis_vector(i))).collect();
        Module { carrier: a.space().clone(), actions }
    }

    /// The one-dimensional module where `h` acts by `ε(h)`.
    pub fn trivial(h: &HopfAlgebra) -> Module {
        let field = h.field();
        let actions = h
            .counit()
            .iter()
            .map(|e| SparseMatrix::from_columns(field, 1, vec![vec![(0, e.clone())]]))
            .collect();
        Module { carrier: BasedSpace::new(["1"]).expect("single label"), actions }
    }

    pub fn carrier(&self) -> &BasedSpace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    pub fn action_map(&self, i: usize) -> SparseMap {
        SparseMap { domain: self.carrier.clone(), codomain: self.carrier.clone(), matrix: self.actions[i].clone() }
    }

    /// Action of a linear combination of basis elements.
    pub fn act(&self, field: Field, v: &[(usize, Scalar)]) -> SparseMatrix {
        v.iter().fold(SparseMatrix::zeros(field, self.dim(), self.dim()), |acc, (i, c)| {
            acc.linear_combination(&field.one(), &self.actions[*i], c)
        })
    }
}

/// `ρ(1) = id` and `ρ(e_i)ρ(e_j) = ρ(e_ie_j)` for all basis pairs.
pub fn check_module(a: &StructAlgebra, x: &Module) -> Verdict {
    check_module_with(a, x, Exec::default())
}

pub fn check_module_with(a: &StructAlgebra, x: &Module, exec: Exec) -> Verdict {
    let field = a.field();
    if x.actions.len() != a.dim() {
        return Verdict::fail(Axiom::ModuleUnit, Vec::new());
    }
    if !x.act(field, a.unit()).is_identity() {
        return Verdict::fail(Axiom::ModuleUnit, Vec::new());
    }
    let n = a.dim();
    let bad = exec.find_first(n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        (x.actions[i].compose(&x.actions[j]) != x.act(field, a.product(i, j))).then(|| vec![i, j])
    });
    Verdict::from_witness(Axiom::ModuleMultiplicativity, bad)
}

/// Action of a tensor element on a tensor product of modules, one module per leg.
pub fn act_legwise(t: &TensorElement, modules: &[&Module], exec: Exec) -> SparseMatrix {
    assert_eq!(t.arity(), modules.len(), "one module per leg");
    let field = t.field();
    let dims: Vec<usize> = modules.iter().map(|m| m.dim()).collect();
    let total: usize = dims.iter().product();
    let terms: Vec<(&[usize], &Scalar)> = t.terms().collect();
    let columns = exec.map_range(total, |col| {
        let mut rem = col;
        let mut idx = vec![0; dims.len()];
        for leg in (0..dims.len()).rev() {
            idx[leg] = rem % dims[leg];
            rem /= dims[leg];
        }
        let mut acc = Vec::new();
        for (k, c) in &terms {
            let mut partial: Vec<(usize, Scalar)> = vec![(0, (*c).clone())];
            for leg in 0..dims.len() {
                let column = modules[leg].actions[k[leg]].column(idx[leg]);
                if column.is_empty() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * column.len());
                for (r, x) in &partial {
                    for (s, y) in column {
                        next.push((r * dims[leg] + s, x * y));
                    }
                }
                partial = next;
            }
            acc.extend(partial);
        }
        collect_sparse(acc)
    });
    SparseMatrix::from_columns(field, total, columns)
}

/// `X ⊗ Y` with `h` acting through `Δ(h)`.
pub fn module_tensor(h: &HopfAlgebra, x: &Module, y: &Module) -> Module {
    let field = h.field();
    let actions = (0..h.dim())
        .map(|i| {
            h.coproduct(i).iter().fold(SparseMatrix::zeros(field, x.dim() * y.dim(), x.dim() * y.dim()), |acc, (a, b, c)| {
                acc.linear_combination(&field.one(), &x.actions[*a].kron(&y.actions[*b]), c)
            })
        })
        .collect();
    Module { carrier: x.carrier.tensor(&y.carrier), actions }
}

/// Left dual `X*` with `⟨h·f, x⟩ = ⟨f, S(h)·x⟩`.
pub fn module_dual(h: &HopfAlgebra, x: &Module) -> Module {
    let field = h.field();
    let actions = (0..h.dim())
        .map(|i| x.act(field, h.antipode_sparse().column(i)).transpose())
        .collect();
    Module { carrier: x.carrier.dual(), actions }
}

/// The unit object's carrier.
pub fn unit_space() -> BasedSpace {
    BasedSpace::new(["1"]).expect("single label")
}

/// `ev: X* ⊗ X → 𝕜`, `f ⊗ x ↦ f(x)`.
pub fn evaluation(field: Field, x: &BasedSpace) -> MapMatrix {
    let n = x.dim();
    let m = Matrix::from_fn(field, 1, n * n, |_, c| if c / n == c % n { field.one() } else { field.zero() });
    MapMatrix { domain: x.dual().tensor(x), codomain: unit_space(), matrix: m }
}

/// `coev: 𝕜 → X ⊗ X*`, `1 ↦ Σ x_i ⊗ x^i`.
pub fn coevaluation(field: Field, x: &BasedSpace) -> MapMatrix {
    let n = x.dim();
    let m = Matrix::from_fn(field, n * n, 1, |r, _| if r / n == r % n { field.one() } else { field.zero() });
    MapMatrix { domain: unit_space(), codomain: x.tensor(&x.dual()), matrix: m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{StructCoalgebra};

    /// 𝕜S3 with basis the permutations of {0,1,2}, listed as images.
    fn s3(field: Field) -> (HopfAlgebra, Vec<[usize; 3]>) {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let space = BasedSpace::indexed("p", 6);
        let pc = perms.clone();
        let alg = StructAlgebra::from_fn(
            field,
            space.clone(),
            |i, j| vec![(idx([pc[i][pc[j][0]], pc[i][pc[j][1]], pc[i][pc[j][2]]]), field.one())],
            (0..6).map(|i| if i == 0 { field.one() } else { field.zero() }).collect(),
        )
        .unwrap();
        let coalg = StructCoalgebra::from_fn(field, space, |i| vec![(i, i, field.one())], vec![field.one(); 6]).unwrap();
        (HopfAlgebra::new(alg, coalg, None).unwrap(), perms)
    }

    fn one_dim(field: Field, signs: &[i64]) -> Module {
        let actions = signs.iter().map(|&s| SparseMatrix::from_columns(field, 1, vec![vec![(0, field.from_i64(s))]])).collect();
        Module::new(field, BasedSpace::new(["v"]).unwrap(), actions).unwrap()
    }

    #[test]
    fn regular_trivial_and_sign_modules() {
        let f = Field::Rational;
        let (h, _) = s3(f);
        assert!(check_module(h.alg(), &Module::regular(h.alg())).is_pass());
        assert!(check_module(h.alg(), &Module::trivial(&h)).is_pass());
        // transpositions are indices 1..=3
        assert!(check_module(h.alg(), &one_dim(f, &[1, -1, -1, -1, 1, 1])).is_pass());
        // (01)(02) is a 3-cycle; giving a 3-cycle sign -1 breaks multiplicativity
        let broken = one_dim(f, &[1, -1, -1, -1, -1, 1]);
        assert_eq!(check_module(h.alg(), &broken).failed_axiom(), Some(Axiom::ModuleMultiplicativity));
    }

    #[test]
    fn trivial_module_is_a_tensor_unit_and_self_dual() {
        let f = Field::Rational;
        let (h, _) = s3(f);
        let x = Module::regular(h.alg());
        let one = Module::trivial(&h);
        assert_eq!(module_tensor(&h, &one, &x).actions, x.actions);
        assert_eq!(module_tensor(&h, &x, &one).actions, x.actions);
        assert_eq!(module_dual(&h, &one).actions, one.actions);
    }

    #[test]
    fn tensor_and_dual_are_modules_and_tensor_is_strict() {
        let f = Field::Prime(5);
        let (h, _) = s3(f);
        let x = Module::regular(h.alg());
        let s = one_dim(f, &[1, -1, -1, -1, 1, 1]);
        let xs = module_tensor(&h, &x, &s);
        assert!(check_module(h.alg(), &xs).is_pass());
        assert!(check_module(h.alg(), &module_dual(&h, &x)).is_pass());
        let left = module_tensor(&h, &module_tensor(&h, &s, &x), &s);
        let right = module_tensor(&h, &s, &module_tensor(&h, &x, &s));
        assert_eq!(left, right);
    }

    #[test]
    fn evaluation_and_coevaluation_are_module_maps() {
        let f = Field::Rational;
        let (h, _) = s3(f);
        let x = Module::regular(h.alg());
        let xd = module_dual(&h, &x);
        let ev = evaluation(f, x.carrier());
        let coev = coevaluation(f, x.carrier());
        let dx = module_tensor(&h, &xd, &x);
        let xdx = module_tensor(&h, &x, &xd);
        for i in 0..h.dim() {
            let eps = &h.counit()[i];
            assert_eq!(ev.matrix.mul(&dx.action(i).to_dense()).unwrap(), ev.matrix.scale(eps));
            assert_eq!(xdx.action(i).to_dense().mul(&coev.matrix).unwrap(), coev.matrix.scale(eps));
        }
        // zigzag: (id_X ⊗ ev)(coev ⊗ id_X) = id_X
        let n = x.dim();
        let left = Matrix::identity(f, n).kron(&ev.matrix);
        let right = coev.matrix.kron(&Matrix::identity(f, n));
        assert!(left.mul(&right).unwrap().is_identity());
    }

    #[test]
    fn regular_tensor_regular_of_c2_by_hand() {
        let f = Field::Rational;
        let space = BasedSpace::new(["e", "g"]).unwrap();
        let alg = StructAlgebra::from_fn(f, space.clone(), |i, j| vec![((i + j) % 2, f.one())], vec![f.one(), f.zero()]).unwrap();
        let coalg = StructCoalgebra::from_fn(f, space, |i| vec![(i, i, f.one())], vec![f.one(); 2]).unwrap();
        let h = HopfAlgebra::new(alg, coalg, None).unwrap();
        let r = Module::regular(h.alg());
        let rr = module_tensor(&h, &r, &r);
        assert!(rr.action(0).is_identity());
        // g acts diagonally: e⊗e↔g⊗g, e⊗g↔g⊗e
        let g = Matrix::from_i64(f, &[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(rr.action(1).to_dense(), g);
    }

    #[test]
    fn legwise_action_matches_tensor_of_actions() {
        let f = Field::Rational;
        let (h, _) = s3(f);
        let x = Module::regular(h.alg());
        let t = TensorElement::from_terms(f, vec![h.space().clone(), h.space().clone()], [(vec![1, 4], f.from_i64(3)), (vec![0, 2], f.one())])
            .unwrap();
        let direct = x.action(1).kron(x.action(4)).scale(&f.from_i64(3)).add(&x.action(0).kron(x.action(2)));
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(act_legwise(&t, &[&x, &x], exec), direct);
        }
    }
}
