use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hopf::{act_legwise, module_tensor, HopfAlgebra, Module};
use crate::quasitri::{braiding_matrix, braiding_inverse, RMatrix};
use crate::space::SparseMap;
use crate::tensor::{leg_embed, tensor_invert, tensor_mult, TensorElement};
use crate::verdict::{Axiom, Verdict};

use super::algebra::ComoduleAlgebra;

/// A verified K-matrix `K = K_i ⊗ K^i ∈ H ⊗ B` for `(B, δ)` over `(H, R)`.
#[derive(Clone, Debug)]
pub struct KMatrix {
    comodule: ComoduleAlgebra,
    rmatrix: RMatrix,
    element: TensorElement,
    inverse: TensorElement,
}

impl KMatrix {
    pub fn new(comodule: ComoduleAlgebra, rmatrix: RMatrix, element: TensorElement) -> Result<KMatrix> {
        let (v, inverse) = check_k_matrix_inner(&comodule, &rmatrix, &element, Exec::default())?;
        if !v.is_pass() {
            return Err(Error::failed("K-matrix", v));
        }
        Ok(KMatrix { comodule, rmatrix, element, inverse })
    }

    /// `1_H ⊗ 1_B`.
    pub fn trivial(comodule: ComoduleAlgebra, rmatrix: RMatrix) -> Result<KMatrix> {
        let one = TensorElement::unit(&[comodule.host().alg(), comodule.alg()])?;
        KMatrix::new(comodule, rmatrix, one)
    }

    /// `K = R_21 R` on `(H, Δ)`.
    pub fn coregular(rmatrix: RMatrix) -> Result<KMatrix> {
        let comodule = ComoduleAlgebra::coregular(rmatrix.host())?;
        let k = rmatrix.monodromy();
        KMatrix::new(comodule, rmatrix, k)
    }

    pub fn comodule(&self) -> &ComoduleAlgebra {
        &self.comodule
    }

    pub fn rmatrix(&self) -> &RMatrix {
        &self.rmatrix
    }

    pub fn host(&self) -> &HopfAlgebra {
        self.comodule.host()
    }

    pub fn element(&self) -> &TensorElement {
        &self.element
    }

    pub fn inverse(&self) -> &TensorElement {
        &self.inverse
    }
}

pub fn check_k_matrix(c: &ComoduleAlgebra, r: &RMatrix, k: &TensorElement) -> Result<Verdict> {
    Ok(check_k_matrix_inner(c, r, k, Exec::default())?.0)
}

pub fn check_k_matrix_with(c: &ComoduleAlgebra, r: &RMatrix, k: &TensorElement, exec: Exec) -> Result<Verdict> {
    Ok(check_k_matrix_inner(c, r, k, exec)?.0)
}

fn check_k_matrix_inner(c: &ComoduleAlgebra, r: &RMatrix, k: &TensorElement, exec: Exec) -> Result<(Verdict, TensorElement)> {
    let h = c.host();
    if r.host().alg().entries() != h.alg().entries() || r.host().coalg().entries() != h.coalg().entries() {
        return Err(Error::InvalidInput("R-matrix and comodule algebra live over different Hopf algebras".into()));
    }
    let expected = [h.space().clone(), c.alg().space().clone()];
    if k.factors() != expected {
        return Err(Error::DimensionMismatch("K must live in H ⊗ B".into()));
    }
    let (ha, ba) = (h.alg(), c.alg());
    let pair = [ha, ba];
    let triple = [ha, ha, ba];
    let inverse = tensor_invert(k, &pair)?;
    let r21 = leg_embed(&r.swapped(), &[0, 1], &triple)?;
    let r21_inv = leg_embed(&r.swapped_inverse(), &[0, 1], &triple)?;
    let r12 = leg_embed(r.element(), &[0, 1], &triple)?;
    let k13 = leg_embed(k, &[0, 2], &triple)?;
    let k23 = leg_embed(k, &[1, 2], &triple)?;
    let chain = |xs: &[&TensorElement]| -> TensorElement {
        xs[1..].iter().fold(xs[0].clone(), |acc, x| tensor_mult(&acc, x, &triple).expect("legs line up"))
    };
    let lhs1 = k.split_leg(0, h.space().clone(), h.space().clone(), |i| h.coproduct(i).to_vec());
    let v = Verdict::from_witness(Axiom::KMatrixI, lhs1.first_difference(&chain(&[&k23, &r21, &k13, &r21_inv])))
        .and_then(|| {
            let lhs2 = k.split_leg(1, h.space().clone(), ba.space().clone(), |i| c.coaction(i).to_vec());
            Verdict::from_witness(Axiom::KMatrixII, lhs2.first_difference(&chain(&[&r21, &k13, &r12])))
        })
        .and_then(|| {
            let bad = exec.find_first(c.dim(), |b| {
                let d = TensorElement::from_terms(
                    h.field(),
                    expected.to_vec(),
                    c.coaction(b).iter().map(|(p, q, x)| (vec![*p, *q], x.clone())),
                )
                .expect("coaction indices are in range");
                let lhs = tensor_mult(k, &d, &pair).expect("shapes match");
                let rhs = tensor_mult(&d, k, &pair).expect("shapes match");
                (lhs != rhs).then(|| vec![b])
            });
            Verdict::from_witness(Axiom::KMatrixIII, bad)
        });
    Ok((v, inverse))
}

/// `e_{X,M}: x⊗m ↦ K_i·x ⊗ K^i·m`.
pub fn module_braiding(k: &KMatrix, x: &Module, m: &Module) -> SparseMap {
    module_braiding_with(k, x, m, Exec::default())
}

pub fn module_braiding_with(k: &KMatrix, x: &Module, m: &Module, exec: Exec) -> SparseMap {
    let space = x.carrier().tensor(m.carrier());
    SparseMap { domain: space.clone(), codomain: space, matrix: act_legwise(&k.element, &[x, m], exec) }
}

fn compare(axiom: Axiom, lhs: &SparseMap, rhs: &SparseMap) -> Verdict {
    Verdict::from_witness(axiom, lhs.matrix.first_difference(&rhs.matrix).map(|c| vec![c]))
}

fn compose_all(maps: &[SparseMap]) -> SparseMap {
    maps[1..].iter().fold(maps[0].clone(), |acc, m| acc.compose(m).expect("spaces line up"))
}

/// Checks `e_{𝟙,M} = id` and both braided-module identities on `(X, Y, M)`:
/// `e_{X⊗Y,M} = (id_X⊗e_{Y,M})(c_{Y,X}⊗id_M)(id_Y⊗e_{X,M})(c_{Y,X}⁻¹⊗id_M)` and
/// `e_{X,Y▷M} = (c_{Y,X}⊗id_M)(id_Y⊗e_{X,M})(c_{X,Y}⊗id_M)`.
pub fn check_braided_module(k: &KMatrix, x: &Module, y: &Module, m: &Module) -> Verdict {
    let h = k.host();
    let r = &k.rmatrix;
    let field = h.field();
    let id = |a: &Module| SparseMap::identity(field, a.carrier());
    let one = Module::trivial(h);
    let unit = module_braiding(k, &one, m);
    let v = if unit.is_identity() { Verdict::Pass } else { Verdict::fail(Axiom::BraidedModuleUnit, Vec::new()) };
    v.and_then(|| {
        let lhs = module_braiding(k, &module_tensor(h, x, y), m);
        let rhs = compose_all(&[
            id(x).tensor(&module_braiding(k, y, m)),
            braiding_matrix(r, y, x).tensor(&id(m)),
            id(y).tensor(&module_braiding(k, x, m)),
            braiding_inverse(r, y, x).tensor(&id(m)),
        ]);
        compare(Axiom::BraidedModule1, &lhs, &rhs)
    })
    .and_then(|| {
        let lhs = module_braiding(k, x, &k.comodule.act_on(y, m));
        let rhs = compose_all(&[
            braiding_matrix(r, y, x).tensor(&id(m)),
            id(y).tensor(&module_braiding(k, x, m)),
            braiding_matrix(r, x, y).tensor(&id(m)),
        ]);
        compare(Axiom::BraidedModule2, &lhs, &rhs)
    })
}

/// Whether `e_{X,B} = id` on the regular `B`-module, which by naturality
/// decides `e_{X,M} = id` for every finite-dimensional `M`.
pub fn z2_membership(k: &KMatrix, x: &Module) -> bool {
    module_braiding(k, x, &Module::regular(k.comodule.alg())).is_identity()
}
