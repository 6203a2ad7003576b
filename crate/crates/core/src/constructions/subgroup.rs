use crate::comodule::{ComoduleAlgebra, KMatrix};
use crate::error::Result;
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::quasitri::RMatrix;

use super::group::{subgroup_embedding, FiniteGroup};
use super::hopf_examples::{group_algebra, group_algebra_with_r};

/// `𝕜G'` as a left `𝕜G`-comodule algebra through `δ(x) = ι(x) ⊗ x`.
pub fn subgroup_comodule(h: &HopfAlgebra, g: &FiniteGroup, sub: &FiniteGroup) -> Result<ComoduleAlgebra> {
    let field = h.field();
    let iota = subgroup_embedding(sub, g)?;
    let b = group_algebra(sub, field)?;
    ComoduleAlgebra::new(h.clone(), b.alg().clone(), (0..sub.order()).map(|x| (x, iota[x], x, field.one())))
}

/// `(𝕜G, 1⊗1)` with the coideal subalgebra `𝕜G'` and `K = 1⊗1`.
pub fn subgroup_example(g: &FiniteGroup, sub: &FiniteGroup, field: Field) -> Result<(HopfAlgebra, RMatrix, KMatrix)> {
    let (h, r) = group_algebra_with_r(g, field)?;
    let c = subgroup_comodule(&h, g, sub)?;
    let k = KMatrix::trivial(c, r.clone())?;
    Ok((h, r, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::{h_simplicity, is_factorizable_comodule, Simplicity};

    #[test]
    fn coideal_subalgebras_of_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for (name, dim) in [("C1", 1), ("C2", 2), ("C3", 3)] {
            let sub = FiniteGroup::from_name(name).unwrap();
            let (_, _, k) = subgroup_example(&s3, &sub, Field::Rational).unwrap();
            assert_eq!(k.comodule().dim(), dim);
            assert!(!is_factorizable_comodule(&k).unwrap());
            assert!(matches!(h_simplicity(k.comodule()), Simplicity::Simple { .. }));
        }
    }
}
