use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{Field, Scalar};
use crate::hopf::{check_module, module_tensor, HopfAlgebra, Module};
use crate::linalg::{rref_sparse, Matrix, SparseMatrix, SparseRow};
use crate::space::{BasedSpace, MapMatrix};
use crate::tensor::TensorElement;

use super::algebra::ComoduleAlgebra;
use super::kmatrix::KMatrix;

/// `E(H,B) = {ξ: H → B | ξ(b_[-1]h)b_[0] = bξ(h)}` with the action `(h·ξ)(h') = ξ(h'h)`.
///
/// A map `ξ` is stored flat, entry `k·dim H + l` being the `b_k`-coefficient of `ξ(h_l)`.
#[derive(Clone, Debug)]
pub struct EndSpace {
    field: Field,
    h_dim: usize,
    b_dim: usize,
    basis: Vec<Vec<Scalar>>,
    /// Flat positions at which the basis is the identity.
    free: Vec<usize>,
    module: Module,
}

impl EndSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn carrier(&self) -> &BasedSpace {
        self.module.carrier()
    }

    /// The basis maps `ξ_j: H → B`.
    pub fn basis_maps(&self, h: &HopfAlgebra, c: &ComoduleAlgebra) -> Vec<MapMatrix> {
        self.basis.iter().map(|v| self.to_map(h, c, v)).collect()
    }

    fn to_map(&self, h: &HopfAlgebra, c: &ComoduleAlgebra, flat: &[Scalar]) -> MapMatrix {
        let m = Matrix::from_fn(h.field(), self.b_dim, self.h_dim, |k, l| flat[k * self.h_dim + l].clone());
        MapMatrix { domain: h.space().clone(), codomain: c.alg().space().clone(), matrix: m }
    }

    /// The `H`-module structure on `E(H,B)`.
    pub fn module(&self) -> &Module {
        &self.module
    }

    /// Coordinates of a flat map in the basis; fails if the map is not in `E(H,B)`.
    pub fn coordinates(&self, flat: &[Scalar]) -> Result<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.free.iter().map(|&f| flat[f].clone()).collect();
        let field = self.field;
        let mut rebuilt = vec![field.zero(); flat.len()];
        for (x, v) in coords.iter().zip(&self.basis) {
            if x.is_zero() {
                continue;
            }
            for (r, y) in rebuilt.iter_mut().zip(v) {
                if !y.is_zero() {
                    *r += &(x * y);
                }
            }
        }
        if rebuilt == flat {
            Ok(coords)
        } else {
            Err(Error::ImageEscapesEndSpace)
        }
    }

    /// `ξ ↦ ξ(1_H)`, as a map `E(H,B) → B`.
    pub fn unit_evaluation(&self, h: &HopfAlgebra, c: &ComoduleAlgebra) -> MapMatrix {
        let field = h.field();
        let m = Matrix::from_fn(field, self.b_dim, self.dim(), |k, j| {
            h.unit().iter().fold(field.zero(), |acc, (u, x)| acc + &(x * &self.basis[j][k * self.h_dim + u]))
        });
        MapMatrix { domain: self.carrier().clone(), codomain: c.alg().space().clone(), matrix: m }
    }
}

pub fn compute_end_space(c: &ComoduleAlgebra) -> Result<EndSpace> {
    compute_end_space_with(c, Exec::default())
}

/// Solves the defining system for `b` ranging over algebra generators of `B`,
/// which suffices because the constraint is multiplicative in `b`.
pub fn compute_end_space_with(c: &ComoduleAlgebra, exec: Exec) -> Result<EndSpace> {
    end_space_from(c, &c.alg().generators(), exec)
}

pub(crate) fn end_space_from(c: &ComoduleAlgebra, gens: &[usize], exec: Exec) -> Result<EndSpace> {
    let h = c.host();
    let b = c.alg();
    let field = h.field();
    let (nh, nb) = (h.dim(), b.dim());
    let blocks: Vec<Vec<SparseRow>> = exec.map_range(gens.len() * nh, |idx| {
        let (g, l) = (gens[idx / nh], idx % nh);
        let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (t, s, x) in c.coaction(g) {
            for (mu, y) in h.alg().product(*t, l) {
                let xy = x * y;
                for k in 0..nb {
                    for (q, z) in b.product(k, *s) {
                        rows.entry(*q).or_default().push((k * nh + mu, &xy * z));
                    }
                }
            }
        }
        for k in 0..nb {
            for (q, z) in b.product(g, k) {
                rows.entry(*q).or_default().push((k * nh + l, -z));
            }
        }
        rows.into_values().collect()
    });
    let rref = rref_sparse(field, nh * nb, blocks.into_iter().flatten().collect(), exec);
    let basis = rref.kernel_basis();
    let free = rref.free_columns();
    let d = basis.len();
    let mut space = EndSpace {
        field,
        h_dim: nh,
        b_dim: nb,
        basis,
        free,
        module: Module::new(field, BasedSpace::indexed("ξ", d), Vec::new())?,
    };
    let actions = (0..nh)
        .map(|i| {
            let columns = space
                .basis
                .iter()
                .map(|xi| {
                    // (h_i·ξ)(h_l) = Σ_t m[l][i][t] ξ(h_t)
                    let mut moved = vec![field.zero(); nh * nb];
                    for l in 0..nh {
                        for (t, y) in h.alg().product(l, i) {
                            for k in 0..nb {
                                let v = &xi[k * nh + t];
                                if !v.is_zero() {
                                    moved[k * nh + l] += &(y * v);
                                }
                            }
                        }
                    }
                    let coords = space.coordinates(&moved)?;
                    Ok(coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SparseMatrix::from_columns(field, d, columns))
        })
        .collect::<Result<Vec<_>>>()?;
    space.module = Module::new(field, BasedSpace::indexed("ξ", d), actions)?;
    let v = check_module(h.alg(), &space.module);
    if !v.is_pass() {
        return Err(Error::Inconsistent(format!("action on E(H,B): {v}")));
    }
    Ok(space)
}

/// `h ↦ Σ ⟨f, X(h)⟩ K^i` for each dual-basis `f`, where `X(h) = S(h_(1))K_ih_(2)`,
/// or its image under `S` when `twisted`. Returns flat maps, one per `f`.
fn theta_maps(k: &KMatrix, twisted: bool) -> Vec<Vec<Scalar>> {
    let h = k.host();
    let field = h.field();
    let (nh, nb) = (h.dim(), k.comodule().dim());
    let mut maps = vec![vec![field.zero(); nh * nb]; nh];
    for l in 0..nh {
        for (a, b, x) in h.coproduct(l) {
            let s_a = h.s(&h.basis_vector(*a));
            for (idx, y) in k.element().terms() {
                let (p, q) = (idx[0], idx[1]);
                let mut first = h.alg().mul3(&s_a, &h.basis_vector(p), &h.basis_vector(*b));
                if twisted {
                    first = h.s(&first);
                }
                let xy = x * y;
                for (j, z) in first {
                    maps[j][q * nh + l] += &(&xy * &z);
                }
            }
        }
    }
    maps
}

fn coordinate_matrix(e: &EndSpace, h: &HopfAlgebra, maps: &[Vec<Scalar>]) -> Result<MapMatrix> {
    let cols = maps.iter().map(|m| e.coordinates(m)).collect::<Result<Vec<_>>>()?;
    Ok(MapMatrix { domain: h.space().dual(), codomain: e.carrier().clone(), matrix: Matrix::from_columns(h.field(), e.dim(), &cols) })
}

/// `θ_B: H* → E(H,B)`, `f ↦ [h ↦ ⟨f, S(h_(1))K_ih_(2)⟩K^i]`, in the dual basis and the `E(H,B)` basis.
pub fn theta_comodule(k: &KMatrix, e: &EndSpace) -> Result<MapMatrix> {
    coordinate_matrix(e, k.host(), &theta_maps(k, false))
}

/// `S_{H*}: f ↦ f∘S` on the dual basis.
pub fn dual_antipode(h: &HopfAlgebra) -> MapMatrix {
    let s = h.antipode().matrix.transpose();
    MapMatrix { domain: h.space().dual(), codomain: h.space().dual(), matrix: s }
}

/// `θ_{B-FdMod}: f ↦ [h ↦ ⟨f, S(S(h_(1))K_ih_(2))⟩K^i]`, computed directly and
/// required to agree with `θ_B ∘ S_{H*}`.
pub fn theta_module_category(k: &KMatrix, e: &EndSpace) -> Result<MapMatrix> {
    let h = k.host();
    let direct = coordinate_matrix(e, h, &theta_maps(k, true))?;
    let composed = theta_comodule(k, e)?.compose(&dual_antipode(h))?;
    if direct.matrix != composed.matrix {
        return Err(Error::Inconsistent("θ_{B-FdMod} differs from θ_B ∘ S_{H*}".into()));
    }
    Ok(direct)
}

/// `θ_B` followed by `ξ ↦ ξ(1)`; for `B = H`, `K = R_21R` this is the Drinfeld map.
pub fn theta_at_unit(k: &KMatrix, e: &EndSpace) -> Result<MapMatrix> {
    e.unit_evaluation(k.host(), k.comodule()).compose(&theta_comodule(k, e)?)
}

/// Whether `θ_B: H* → E(H,B)` is bijective.
pub fn is_factorizable_comodule(k: &KMatrix) -> Result<bool> {
    let e = compute_end_space(k.comodule())?;
    Ok(e.dim() == k.host().dim() && theta_comodule(k, &e)?.rank() == e.dim())
}

/// `H` under `h·h' = h_(1)h'S(h_(2))`.
pub fn adjoint_module(h: &HopfAlgebra) -> Module {
    let field = h.field();
    let n = h.dim();
    let actions = (0..n)
        .map(|i| {
            h.coproduct(i).iter().fold(SparseMatrix::zeros(field, n, n), |acc, (p, q, d)| {
                let term = h.alg().left_mult(&h.basis_vector(*p)).compose(&h.alg().right_mult(&h.s(&h.basis_vector(*q))));
                acc.linear_combination(&field.one(), &term, d)
            })
        })
        .collect();
    Module::new(field, h.space().clone(), actions).expect("square actions")
}

/// `ω_B = Σ h_i ⊗ θ_{B-FdMod}(h^i) ∈ H ⊗ E(H,B)`, checked to be `H`-invariant.
pub fn omega_copairing(k: &KMatrix, e: &EndSpace) -> Result<TensorElement> {
    let h = k.host();
    let theta = theta_module_category(k, e)?;
    let terms = (0..h.dim()).flat_map(|i| {
        let theta = &theta;
        (0..e.dim()).filter_map(move |j| {
            let c = theta.matrix.get(j, i);
            (!c.is_zero()).then(|| (vec![i, j], c.clone()))
        })
    });
    let omega = TensorElement::from_terms(h.field(), vec![h.space().clone(), e.carrier().clone()], terms.collect::<Vec<_>>())?;
    if !omega_is_invariant(h, e, &omega) {
        return Err(Error::Inconsistent("ω_B is not H-invariant".into()));
    }
    Ok(omega)
}

/// `h·ω = ε(h)ω` for every basis `h`, with `H` acting adjointly on the first leg.
pub fn omega_is_invariant(h: &HopfAlgebra, e: &EndSpace, omega: &TensorElement) -> bool {
    let both = module_tensor(h, &adjoint_module(h), e.module());
    let flat = omega.to_flat();
    (0..h.dim()).all(|i| {
        let moved = both.action(i).apply(&flat);
        let eps = &h.counit()[i];
        let expected: Vec<(usize, Scalar)> =
            flat.iter().map(|(j, x)| (*j, eps * x)).filter(|(_, x)| !x.is_zero()).collect();
        moved == expected
    })
}

/// Outcome of the weak factorizability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakFactorizability {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub bijective: bool,
}

/// Common kernel of `A_i - ε_i` (or of their transposes) over the given generators.
fn invariants(module: &Module, h: &HopfAlgebra, transpose: bool, exec: Exec) -> Vec<Vec<Scalar>> {
    let field = h.field();
    let d = module.dim();
    let mut rows: Vec<SparseRow> = Vec::new();
    for i in h.alg().generators() {
        let a = if transpose { module.action(i).transpose() } else { module.action(i).clone() };
        let shifted = a.linear_combination(&field.one(), &SparseMatrix::identity(field, d), &-&h.counit()[i]);
        let t = shifted.transpose();
        for r in 0..d {
            rows.push(t.column(r).to_vec());
        }
    }
    rref_sparse(field, d, rows, exec).kernel_basis()
}

/// `Ω: Hom_H(H_ad, 𝕜) → Hom_H(𝕜, E(H,B))`, `f ↦ (f⊗id)ω_B`.
pub fn weak_factorizability(k: &KMatrix, e: &EndSpace) -> Result<WeakFactorizability> {
    weak_factorizability_with(k, e, Exec::default())
}

pub fn weak_factorizability_with(k: &KMatrix, e: &EndSpace, exec: Exec) -> Result<WeakFactorizability> {
    let h = k.host();
    let field = h.field();
    let theta = theta_module_category(k, e)?;
    let source = invariants(&adjoint_module(h), h, true, exec);
    let target = invariants(e.module(), h, false, exec);
    let images: Vec<Vec<Scalar>> = source.iter().map(|f| theta.apply(f)).collect();
    let mut check = target.clone();
    let target_rank = Matrix::from_rows(field, e.dim(), target.clone()).rank();
    for v in &images {
        check.push(v.clone());
        if Matrix::from_rows(field, e.dim(), check.clone()).rank() != target_rank {
            return Err(Error::Inconsistent("Ω leaves the invariants of E(H,B)".into()));
        }
        check.pop();
    }
    let rank = Matrix::from_rows(field, e.dim(), images).rank();
    Ok(WeakFactorizability {
        source_dim: source.len(),
        target_dim: target.len(),
        rank,
        bijective: rank == source.len() && rank == target.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{drinfeld_double_group, group_algebra_with_r, FiniteGroup};
    use crate::quasitri::drinfeld_map;

    fn c2_trivial() -> (HopfAlgebra, crate::quasitri::RMatrix) {
        group_algebra_with_r(&FiniteGroup::cyclic(2).unwrap(), Field::Rational).unwrap()
    }

    #[test]
    fn end_space_of_the_regular_comodule() {
        let (h, _) = group_algebra_with_r(&FiniteGroup::symmetric(3).unwrap(), Field::Rational).unwrap();
        let c = ComoduleAlgebra::coregular(&h).unwrap();
        let e = compute_end_space(&c).unwrap();
        assert_eq!(e.dim(), 6);
        assert_eq!(e.unit_evaluation(&h, &c).rank(), 6);
        let full = end_space_from(&c, &(0..6).collect::<Vec<_>>(), Exec::Sequential).unwrap();
        assert_eq!(full.basis, e.basis);
        // every basis map really satisfies ξ(b_[-1]h)b_[0] = bξ(h)
        for xi in e.basis_maps(&h, &c) {
            for b in 0..6 {
                for l in 0..6 {
                    let lhs = c.coaction(b).iter().fold(vec![Field::Rational.zero(); 6], |mut acc, (t, s, x)| {
                        let hl = h.alg().mul(&h.basis_vector(*t), &h.basis_vector(l));
                        for (mu, y) in hl {
                            for (kk, z) in c.alg().mul(&xi.matrix.column(mu).iter().cloned().enumerate().collect::<Vec<_>>(), &c.alg().basis_vector(*s)) {
                                acc[kk] += &(&(x * &y) * &z);
                            }
                        }
                        acc
                    });
                    let img: Vec<(usize, Scalar)> = xi.matrix.column(l).into_iter().enumerate().collect();
                    let rhs = crate::linalg::sparse_to_dense(Field::Rational, 6, &c.alg().mul(&c.alg().basis_vector(b), &img));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn base_field_gives_the_dual() {
        let (h, _) = c2_trivial();
        let c = ComoduleAlgebra::base_field(&h).unwrap();
        assert_eq!(compute_end_space(&c).unwrap().dim(), 2);
    }

    #[test]
    fn trivial_k_collapses_theta_to_rank_one() {
        let (h, r) = c2_trivial();
        let k = KMatrix::trivial(ComoduleAlgebra::base_field(&h).unwrap(), r).unwrap();
        let e = compute_end_space(k.comodule()).unwrap();
        let theta = theta_comodule(&k, &e).unwrap();
        assert_eq!(theta.rank(), 1);
        assert_eq!(theta_module_category(&k, &e).unwrap().rank(), 1);
        // θ(f)(h) = ε(h) f(1) 1_B: the functional δ_e maps to ε, δ_g to zero
        let maps = e.basis_maps(&h, k.comodule());
        let image: Vec<Scalar> = (0..2)
            .map(|l| maps.iter().zip(theta.matrix.column(0)).fold(Field::Rational.zero(), |acc, (m, c)| acc + &(&c * m.matrix.get(0, l))))
            .collect();
        assert_eq!(image, vec![Field::Rational.one(), Field::Rational.one()]);
        assert!(theta.matrix.column(1).iter().all(Scalar::is_zero));
        assert!(!is_factorizable_comodule(&k).unwrap());
        let w = weak_factorizability(&k, &e).unwrap();
        assert_eq!((w.source_dim, w.target_dim, w.bijective), (2, 1, false));
        omega_copairing(&k, &e).unwrap();
    }

    #[test]
    fn regular_c2_is_not_weakly_factorizable() {
        let (_, r) = c2_trivial();
        let k = KMatrix::coregular(r).unwrap();
        let e = compute_end_space(k.comodule()).unwrap();
        let w = weak_factorizability(&k, &e).unwrap();
        assert_eq!(w, WeakFactorizability { source_dim: 2, target_dim: 2, rank: 1, bijective: false });
    }

    #[test]
    fn theta_of_the_double_is_the_drinfeld_map() {
        let (_, r) = drinfeld_double_group(&FiniteGroup::cyclic(2).unwrap(), Field::Rational).unwrap();
        let k = KMatrix::coregular(r.clone()).unwrap();
        let e = compute_end_space(k.comodule()).unwrap();
        assert_eq!(theta_at_unit(&k, &e).unwrap().matrix, drinfeld_map(&r).matrix.matrix);
        assert!(is_factorizable_comodule(&k).unwrap());
        let omega = omega_copairing(&k, &e).unwrap();
        assert!(omega_is_invariant(k.host(), &e, &omega));
        assert!(weak_factorizability(&k, &e).unwrap().bijective);
    }

    #[test]
    fn one_dimensional_host_is_weakly_factorizable() {
        let (h, r) = group_algebra_with_r(&FiniteGroup::cyclic(1).unwrap(), Field::Prime(5)).unwrap();
        let k = KMatrix::trivial(ComoduleAlgebra::base_field(&h).unwrap(), r).unwrap();
        let e = compute_end_space(k.comodule()).unwrap();
        assert!(weak_factorizability(&k, &e).unwrap().bijective);
        assert!(is_factorizable_comodule(&k).unwrap());
    }
}
