//! R-matrices, the braiding they induce on modules, and the Drinfeld map.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::Field;
use crate::hopf::{act_legwise, module_tensor, HopfAlgebra, Module};
use crate::linalg::{Matrix, SparseMatrix};
use crate::space::{flip, MapMatrix, SparseMap};
use crate::tensor::{leg_embed, tensor_invert, tensor_mult, TensorElement};
use crate::verdict::{Axiom, Verdict};

/// A verified R-matrix `R = R_i ⊗ R^i` together with its inverse.
#[derive(Clone, Debug)]
pub struct RMatrix {
    host: HopfAlgebra,
    element: TensorElement,
    inverse: TensorElement,
}

impl RMatrix {
    pub fn new(host: HopfAlgebra, element: TensorElement) -> Result<RMatrix> {
        let (v, inverse) = check_r_matrix_inner(&host, &element, Exec::default())?;
        if !v.is_pass() {
            return Err(Error::failed("R-matrix", v));
        }
        Ok(RMatrix { host, element, inverse })
    }

    /// `1 ⊗ 1`, an R-matrix exactly when the host is cocommutative.
    pub fn trivial(host: HopfAlgebra) -> Result<RMatrix> {
        let one = TensorElement::unit(&[host.alg(), host.alg()])?;
        RMatrix::new(host, one)
    }

    pub fn host(&self) -> &HopfAlgebra {
        &self.host
    }

    pub fn element(&self) -> &TensorElement {
        &self.element
    }

    pub fn inverse(&self) -> &TensorElement {
        &self.inverse
    }

    pub fn field(&self) -> Field {
        self.host.field()
    }

    /// `R_21`.
    pub fn swapped(&self) -> TensorElement {
        self.element.swap()
    }

    /// `R_21^{-1}`, the swap of the stored inverse.
    pub fn swapped_inverse(&self) -> TensorElement {
        self.inverse.swap()
    }

    /// `R_21 R = R^i R_j ⊗ R_i R^j`.
    pub fn monodromy(&self) -> TensorElement {
        let a = self.host.alg();
        tensor_mult(&self.swapped(), &self.element, &[a, a]).expect("legs live in the host")
    }
}

pub fn check_r_matrix(h: &HopfAlgebra, r: &TensorElement) -> Result<Verdict> {
    Ok(check_r_matrix_inner(h, r, Exec::default())?.0)
}

pub fn check_r_matrix_with(h: &HopfAlgebra, r: &TensorElement, exec: Exec) -> Result<Verdict> {
    Ok(check_r_matrix_inner(h, r, exec)?.0)
}

fn comult_leg(h: &HopfAlgebra, t: &TensorElement, leg: usize) -> TensorElement {
    t.split_leg(leg, h.space().clone(), h.space().clone(), |i| h.coproduct(i).to_vec())
}

fn compare(axiom: Axiom, lhs: &TensorElement, rhs: &TensorElement) -> Verdict {
    Verdict::from_witness(axiom, lhs.first_difference(rhs))
}

fn check_r_matrix_inner(h: &HopfAlgebra, r: &TensorElement, exec: Exec) -> Result<(Verdict, TensorElement)> {
    let a = h.alg();
    let pair = [a, a];
    let triple = [a, a, a];
    let inverse = tensor_invert(r, &pair)?;
    let r12 = leg_embed(r, &[0, 1], &triple)?;
    let r13 = leg_embed(r, &[0, 2], &triple)?;
    let r23 = leg_embed(r, &[1, 2], &triple)?;
    let first = compare(Axiom::RMatrixI, &comult_leg(h, r, 0), &tensor_mult(&r13, &r23, &triple)?);
    let v = first
        .and_then(|| compare(Axiom::RMatrixII, &comult_leg(h, r, 1), &tensor_mult(&r13, &r12, &triple).expect("shapes match")))
        .and_then(|| {
            let bad = exec.find_first(h.dim(), |i| {
                let d = TensorElement::from_terms(
                    h.field(),
                    vec![h.space().clone(), h.space().clone()],
                    h.coproduct(i).iter().map(|(p, q, c)| (vec![*p, *q], c.clone())),
                )
                .expect("coproduct indices are in range");
                let lhs = tensor_mult(r, &d, &pair).expect("shapes match");
                let rhs = tensor_mult(&d.swap(), r, &pair).expect("shapes match");
                (lhs != rhs).then(|| vec![i])
            });
            Verdict::from_witness(Axiom::RMatrixIII, bad)
        });
    Ok((v, inverse))
}

/// `(ε⊗id)R = 1` and `(id⊗ε)R = 1`.
pub fn counit_normalized(r: &RMatrix) -> bool {
    let h = &r.host;
    let unit = TensorElement::from_terms(h.field(), vec![h.space().clone()], h.unit().iter().map(|(i, c)| (vec![*i], c.clone())))
        .expect("unit in range");
    r.element.contract_leg(0, h.counit()) == unit && r.element.contract_leg(1, h.counit()) == unit
}

/// `c_{X,Y}: x⊗y ↦ (R^i·y) ⊗ (R_i·x)`.
pub fn braiding_matrix(r: &RMatrix, x: &Module, y: &Module) -> SparseMap {
    braiding_matrix_with(r, x, y, Exec::default())
}

pub fn braiding_matrix_with(r: &RMatrix, x: &Module, y: &Module, exec: Exec) -> SparseMap {
    let act = act_legwise(&r.element, &[x, y], exec);
    let f = flip(r.field(), x.carrier(), y.carrier());
    SparseMap { domain: f.domain, codomain: f.codomain, matrix: f.matrix.compose(&act) }
}

/// `c_{X,Y}⁻¹: Y⊗X → X⊗Y`, `v ↦ τ(R_21⁻¹·v)`.
pub fn braiding_inverse(r: &RMatrix, x: &Module, y: &Module) -> SparseMap {
    let act = act_legwise(&r.swapped_inverse(), &[y, x], Exec::default());
    let f = flip(r.field(), y.carrier(), x.carrier());
    SparseMap { domain: f.domain, codomain: f.codomain, matrix: f.matrix.compose(&act) }
}

fn id_map(field: Field, m: &Module) -> SparseMap {
    SparseMap::identity(field, m.carrier())
}

fn compare_maps(axiom: Axiom, lhs: &SparseMap, rhs: &SparseMap) -> Verdict {
    if lhs.domain != rhs.domain || lhs.codomain != rhs.codomain {
        return Verdict::fail(axiom, Vec::new());
    }
    Verdict::from_witness(axiom, lhs.matrix.first_difference(&rhs.matrix).map(|c| vec![c]))
}

/// Both hexagon identities on a concrete triple; the witness is the first differing column.
pub fn check_hexagon(r: &RMatrix, x: &Module, y: &Module, z: &Module) -> Verdict {
    let h = &r.host;
    let f = r.field();
    let xy = module_tensor(h, x, y);
    let yz = module_tensor(h, y, z);
    let lhs1 = braiding_matrix(r, &xy, z);
    let rhs1 = braiding_matrix(r, x, z)
        .tensor(&id_map(f, y))
        .compose(&id_map(f, x).tensor(&braiding_matrix(r, y, z)))
        .expect("spaces line up");
    compare_maps(Axiom::Hexagon1, &lhs1, &rhs1).and_then(|| {
        let lhs2 = braiding_matrix(r, x, &yz);
        let rhs2 = id_map(f, y)
            .tensor(&braiding_matrix(r, x, z))
            .compose(&braiding_matrix(r, x, y).tensor(&id_map(f, z)))
            .expect("spaces line up");
        compare_maps(Axiom::Hexagon2, &lhs2, &rhs2)
    })
}

/// `c_{𝟙,X} = c_{X,𝟙} = id_X`.
pub fn check_braid_unit(r: &RMatrix, x: &Module) -> Verdict {
    let one = Module::trivial(&r.host);
    let ok = braiding_matrix(r, &one, x).matrix.is_identity() && braiding_matrix(r, x, &one).matrix.is_identity();
    if ok {
        Verdict::Pass
    } else {
        Verdict::fail(Axiom::BraidUnit, Vec::new())
    }
}

/// The Drinfeld map `H* → H`, `f ↦ f(R^iR_j) R_iR^j`, with its monodromy.
#[derive(Clone, Debug)]
pub struct DrinfeldMap {
    pub matrix: MapMatrix,
    pub monodromy: TensorElement,
}

pub fn drinfeld_map(r: &RMatrix) -> DrinfeldMap {
    let h = &r.host;
    let n = h.dim();
    let monodromy = r.monodromy();
    let mut m = Matrix::zeros(h.field(), n, n);
    for (idx, c) in monodromy.terms() {
        m.add_to(idx[1], idx[0], c);
    }
    DrinfeldMap {
        matrix: MapMatrix { domain: h.space().dual(), codomain: h.space().clone(), matrix: m },
        monodromy,
    }
}

pub fn is_factorizable_hopf(r: &RMatrix) -> bool {
    drinfeld_map(r).matrix.rank() == r.host.dim()
}

/// `R_21 = R^{-1}`.
pub fn is_triangular(r: &RMatrix) -> bool {
    r.swapped() == r.inverse
}

/// The R-matrix `R_21^{-1}`.
pub fn mirror(r: &RMatrix) -> Result<RMatrix> {
    RMatrix::new(r.host.clone(), r.swapped_inverse())
}

/// Action of the monodromy on `X ⊗ Y`.
pub fn monodromy_action(r: &RMatrix, x: &Module, y: &Module) -> SparseMatrix {
    act_legwise(&r.monodromy(), &[x, y], Exec::default())
}
