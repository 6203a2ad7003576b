use std::collections::BTreeMap;

use crate::comodule::{ComoduleAlgebra, KMatrix};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{check_algebra, check_coalgebra, HopfAlgebra, StructAlgebra, StructCoalgebra};
use crate::linalg::{collect_sparse, SparseVec};
use crate::quasitri::RMatrix;
use crate::space::BasedSpace;
use crate::tensor::TensorElement;

/// `R_H(A) = A ⋊ (Ĥ*)ᵒᵖ` together with its ingredients.
#[derive(Clone, Debug)]
pub struct ReflectiveAlgebraData {
    pub base: ComoduleAlgebra,
    /// `Ĥ`: the space of `H` with `Δ̂(h) = R^j h_(1) R^i ⊗ h_(2) R_i S⁻¹(R_j)`.
    pub hat_coalgebra: StructCoalgebra,
    /// Basis `a_s ⊗ h^k` at index `s·dim H + k`.
    pub crossed: ComoduleAlgebra,
    /// `K_ref = h_k ⊗ (1_A ⊗ h^k)`.
    pub kmatrix: KMatrix,
}

/// `R` grouped by its first leg: `R = Σ_p h_p ⊗ v_p`.
fn grouped(r: &RMatrix) -> Vec<(usize, SparseVec)> {
    let mut groups: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (idx, c) in r.element().terms() {
        groups.entry(idx[0]).or_default().push((idx[1], c.clone()));
    }
    groups.into_iter().map(|(p, v)| (p, collect_sparse(v))).collect()
}

fn hat_coproduct(h: &HopfAlgebra, r: &[(usize, SparseVec)]) -> Result<StructCoalgebra> {
    let a = h.alg();
    let mut entries = Vec::new();
    for l in 0..h.dim() {
        for (p, q, c) in h.coproduct(l) {
            for (i, ri) in r {
                for (j, rj) in r {
                    // R^j h_(1) R^i ⊗ h_(2) R_i S⁻¹(R_j)
                    let left = a.mul3(rj, &h.basis_vector(*p), ri);
                    let right = a.mul3(&h.basis_vector(*q), &h.basis_vector(*i), &h.s_inv(&h.basis_vector(*j)));
                    for (x, u) in &left {
                        for (y, v) in &right {
                            entries.push((l, *x, *y, &(c * u) * v));
                        }
                    }
                }
            }
        }
    }
    StructCoalgebra::new(h.field(), h.space().clone(), entries, h.counit().to_vec())
}

/// `h^k ↼ ℓ = Σ_m [ℓ_(2) h_m S⁻¹(ℓ_(1))]_k h^m`, as `(k, ℓ) ↦ sparse vector in H*`.
fn harpoon_table(h: &HopfAlgebra) -> Vec<Vec<SparseVec>> {
    let n = h.dim();
    let mut table = vec![vec![Vec::new(); n]; n];
    for l in 0..n {
        for m in 0..n {
            let mut moved = Vec::new();
            for (p, q, c) in h.coproduct(l) {
                for (k, x) in h.alg().mul3(&h.basis_vector(*q), &h.basis_vector(m), &h.s_inv(&h.basis_vector(*p))) {
                    moved.push((k, c * &x));
                }
            }
            for (k, x) in collect_sparse(moved) {
                table[k][l].push((m, x));
            }
        }
    }
    table
}

/// The reflective algebra of a left `H`-comodule algebra `A`. Associativity, the
/// comodule-algebra axioms and the K-matrix axioms are all verified.
pub fn reflective_algebra(r: &RMatrix, a: &ComoduleAlgebra) -> Result<ReflectiveAlgebraData> {
    let h = r.host();
    let field = h.field();
    let (nh, na) = (h.dim(), a.dim());
    let rg = grouped(r);
    let hat = hat_coproduct(h, &rg)?;
    let v = check_coalgebra(&hat);
    if !v.is_pass() {
        return Err(Error::failed("Ĥ", v));
    }
    // f^x ·ᵒᵖ f^y = f^y f^x in Ĥ*, whose h^l-coefficient is the (y, x)-coefficient of Δ̂(h_l)
    let mut dual_op: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (l, y, x, c) in hat.entries() {
        dual_op.entry((x, y)).or_default().push((l, c));
    }
    let harpoon = harpoon_table(h);
    let idx = |s: usize, k: usize| s * nh + k;

    let mut mult = Vec::new();
    for s in 0..na {
        for k in 0..nh {
            for s2 in 0..na {
                for (t, s0, c) in a.coaction(s2) {
                    let left = a.alg().product(s, *s0);
                    for (m, x) in &harpoon[k][*t] {
                        for k2 in 0..nh {
                            let Some(fp) = dual_op.get(&(*m, k2)) else { continue };
                            for (u, y) in left {
                                for (l, z) in fp {
                                    mult.push((idx(s, k), idx(s2, k2), idx(*u, *l), &(&(c * x) * y) * z));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = (0..na * nh).map(|i| format!("{}⊗{}", a.alg().space().label(i / nh), h.space().dual().label(i % nh)));
    let space = BasedSpace::new(labels.collect::<Vec<_>>())?;
    let mut unit = vec![field.zero(); na * nh];
    for (s, x) in a.alg().unit() {
        for (k, e) in h.counit().iter().enumerate() {
            unit[idx(*s, k)] += &(x * e);
        }
    }
    let alg = StructAlgebra::new(field, space, mult, unit)?;
    let v = check_algebra(&alg);
    if !v.is_pass() {
        return Err(Error::failed("reflective algebra", v));
    }

    // δ_ref(h^m) = Σ_k ⟨h^m, R^j h_k R_i⟩ R_j R^i ⊗ h^k
    let mut delta_f: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); nh];
    for k in 0..nh {
        for (i, ri) in &rg {
            for (j, rj) in &rg {
                let pairing = h.alg().mul3(rj, &h.basis_vector(k), &h.basis_vector(*i));
                let image = h.alg().mul(&h.basis_vector(*j), ri);
                for (m, x) in &pairing {
                    for (u, y) in &image {
                        delta_f[*m].push((*u, k, x * y));
                    }
                }
            }
        }
    }
    let mut coaction = Vec::new();
    for s in 0..na {
        for m in 0..nh {
            for (t, s0, c) in a.coaction(s) {
                for (u, k, d) in &delta_f[m] {
                    for (w, x) in h.alg().product(*t, *u) {
                        coaction.push((idx(s, m), *w, idx(*s0, *k), &(c * d) * x));
                    }
                }
            }
        }
    }
    let crossed = ComoduleAlgebra::new(h.clone(), alg, coaction)?;
    let k_terms: Vec<(Vec<usize>, Scalar)> =
        (0..nh).flat_map(|k| a.alg().unit().iter().map(move |(s, x)| (vec![k, idx(*s, k)], x.clone()))).collect();
    let k = TensorElement::from_terms(field, vec![h.space().clone(), crossed.alg().space().clone()], k_terms)?;
    let kmatrix = KMatrix::new(crossed.clone(), r.clone(), k)?;
    Ok(ReflectiveAlgebraData { base: a.clone(), hat_coalgebra: hat, crossed, kmatrix })
}
