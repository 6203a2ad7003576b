use crate::comodule::{ComoduleAlgebra, KMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::quasitri::RMatrix;

use super::group::FiniteGroup;
use super::hopf_examples::{drinfeld_double_group, dual_group_algebra, group_algebra_with_r, r_lambda, sweedler_h4};
use super::reflective::reflective_algebra;
use super::subgroup::subgroup_example;

/// A fully checked quasitriangular Hopf algebra with a quasitriangular comodule algebra over it.
#[derive(Clone, Debug)]
pub struct ExampleBundle {
    pub name: String,
    pub hopf: HopfAlgebra,
    pub rmatrix: RMatrix,
    pub kmatrix: KMatrix,
}

impl ExampleBundle {
    pub fn comodule(&self) -> &ComoduleAlgebra {
        self.kmatrix.comodule()
    }
}

/// Registry entries with their argument shape.
pub const EXAMPLE_KINDS: &[&str] = &[
    "regular:<G>",
    "double:<G>",
    "dual:<G>",
    "reflective-trivial:<G>",
    "subgroup:<G>:<G'>",
    "sweedler:<λ>",
    "trivial-coaction:<G>",
    "base-field:<G>",
];

/// Builds a registry example. Groups are `C<n>` or `S<n>`.
///
/// - `regular:G`: `𝕜G` with `R = 1⊗1`, `B = 𝕜G` coregular, `K = R_21R`
/// - `double:G`: `D(G)` with its canonical `R`, `B = D(G)` coregular, `K = R_21R`
/// - `dual:G`: `(𝕜G)*` for abelian `G` with `R = 1⊗1`, coregular
/// - `reflective-trivial:G`: `R_{D(G)}(𝕜)` with `K_ref`
/// - `subgroup:G:G'`: `𝕜G' ⊆ 𝕜G` with `K = 1⊗1`
/// - `sweedler:λ`: `H₄` with `R_λ`, coregular
/// - `trivial-coaction:G`: `B = 𝕜G` with `δ(b) = 1⊗b` over `(𝕜G, 1⊗1)`, `K = 1⊗1`
/// - `base-field:G`: `B = 𝕜` over `(𝕜G, 1⊗1)`, `K = 1⊗1`
pub fn named_example(name: &str, field: Field) -> Result<ExampleBundle> {
    let parts: Vec<&str> = name.split(':').collect();
    let group = |s: &str| FiniteGroup::from_name(s);
    let (hopf, rmatrix, kmatrix) = match parts.as_slice() {
        ["regular", g] => {
            let (h, r) = group_algebra_with_r(&group(g)?, field)?;
            (h, r.clone(), KMatrix::coregular(r)?)
        }
        ["double", g] => {
            let (h, r) = drinfeld_double_group(&group(g)?, field)?;
            (h, r.clone(), KMatrix::coregular(r)?)
        }
        ["dual", g] => {
            let g = group(g)?;
            if !g.is_abelian() {
                return Err(Error::UnknownExample(format!("{name} (the dual needs an abelian group)")));
            }
            let r = RMatrix::trivial(dual_group_algebra(&g, field)?)?;
            (r.host().clone(), r.clone(), KMatrix::coregular(r)?)
        }
        ["reflective-trivial", g] => {
            let (h, r) = drinfeld_double_group(&group(g)?, field)?;
            let data = reflective_algebra(&r, &ComoduleAlgebra::base_field(&h)?)?;
            (h, r, data.kmatrix)
        }
        ["subgroup", g, sub] => subgroup_example(&group(g)?, &group(sub)?, field)?,
        ["sweedler", lambda] => {
            let h = sweedler_h4(field)?;
            let r = r_lambda(&h, &field.parse(lambda)?)?;
            (h, r.clone(), KMatrix::coregular(r)?)
        }
        ["trivial-coaction", g] => {
            let (h, r) = group_algebra_with_r(&group(g)?, field)?;
            let c = ComoduleAlgebra::trivial_coaction(&h, h.alg().clone())?;
            (h, r.clone(), KMatrix::trivial(c, r)?)
        }
        ["base-field", g] => {
            let (h, r) = group_algebra_with_r(&group(g)?, field)?;
            let c = ComoduleAlgebra::base_field(&h)?;
            (h, r.clone(), KMatrix::trivial(c, r)?)
        }
        _ => return Err(Error::UnknownExample(format!("{name} (known: {})", EXAMPLE_KINDS.join(", ")))),
    };
    Ok(ExampleBundle { name: name.to_string(), hopf, rmatrix, kmatrix })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_entries_build() {
        for name in ["regular:C2", "double:C2", "dual:C3", "reflective-trivial:C2", "subgroup:S3:C2", "sweedler:1", "trivial-coaction:C2", "base-field:C3"] {
            let b = named_example(name, Field::Rational).unwrap();
            assert_eq!(b.name, name);
        }
        assert_eq!(named_example("subgroup:S3:C2", Field::Rational).unwrap().comodule().dim(), 2);
        assert!(matches!(named_example("dual:S3", Field::Rational), Err(Error::UnknownExample(_))));
        assert!(matches!(named_example("torus:C2", Field::Rational), Err(Error::UnknownExample(_))));
        assert!(named_example("double:X9", Field::Rational).is_err());
    }
}
