use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{HopfAlgebra, StructAlgebra, StructCoalgebra};
use crate::linalg::SparseMatrix;
use crate::quasitri::RMatrix;
use crate::space::BasedSpace;
use crate::tensor::TensorElement;

use super::group::FiniteGroup;

fn one_hot(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { field.one() } else { field.zero() }).collect()
}

fn group_space(g: &FiniteGroup) -> BasedSpace {
    BasedSpace::new(g.labels().to_vec()).expect("group labels are distinct")
}

/// `𝕜G` with grouplike basis and `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup, field: Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let space = group_space(g);
    let alg = StructAlgebra::from_fn(field, space.clone(), |a, b| vec![(g.mul(a, b), field.one())], one_hot(field, n, g.identity()))?;
    let coalg = StructCoalgebra::from_fn(field, space, |a| vec![(a, a, field.one())], vec![field.one(); n])?;
    let s = SparseMatrix::permutation(field, &(0..n).map(|a| g.inv(a)).collect::<Vec<_>>());
    HopfAlgebra::new(alg, coalg, Some(s))
}

/// `𝕜G` with `R = 1⊗1`.
pub fn group_algebra_with_r(g: &FiniteGroup, field: Field) -> Result<(HopfAlgebra, RMatrix)> {
    let h = group_algebra(g, field)?;
    let r = RMatrix::trivial(h.clone())?;
    Ok((h, r))
}

/// `(𝕜G)*` on the basis `δ_x`: `δ_xδ_y = [x=y]δ_x`, `Δ(δ_x) = Σ_{ab=x} δ_a⊗δ_b`, `S(δ_x) = δ_{x⁻¹}`.
pub fn dual_group_algebra(g: &FiniteGroup, field: Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let space = BasedSpace::new(g.labels().iter().map(|l| format!("δ_{l}"))).expect("distinct labels");
    let alg = StructAlgebra::from_fn(
        field,
        space.clone(),
        |a, b| if a == b { vec![(a, field.one())] } else { Vec::new() },
        vec![field.one(); n],
    )?;
    let coalg = StructCoalgebra::from_fn(
        field,
        space,
        |x| (0..n).map(|a| (a, g.mul(g.inv(a), x), field.one())).collect(),
        one_hot(field, n, g.identity()),
    )?;
    let s = SparseMatrix::permutation(field, &(0..n).map(|a| g.inv(a)).collect::<Vec<_>>());
    HopfAlgebra::new(alg, coalg, Some(s))
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`. The antipode is solved for.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidInput("Sweedler's algebra needs characteristic ≠ 2".into()));
    }
    let space = BasedSpace::new(["1", "g", "x", "gx"]).expect("distinct labels");
    // basis index 2b + a for g^a x^b
    let alg = StructAlgebra::from_fn(
        field,
        space.clone(),
        |i, j| {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d >= 2 {
                return Vec::new();
            }
            let sign = if b * c == 1 { -field.one() } else { field.one() };
            vec![(2 * (b + d) + (a + c) % 2, sign)]
        },
        one_hot(field, 4, 0),
    )?;
    let one = field.one();
    let coalg = StructCoalgebra::from_fn(
        field,
        space,
        |i| match i {
            0 => vec![(0, 0, one.clone())],
            1 => vec![(1, 1, one.clone())],
            2 => vec![(2, 0, one.clone()), (1, 2, one.clone())],
            _ => vec![(3, 1, one.clone()), (0, 3, one.clone())],
        },
        vec![one.clone(), one.clone(), field.zero(), field.zero()],
    )?;
    HopfAlgebra::new(alg, coalg, None)
}

/// `R_λ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + λ/2(x⊗x − x⊗gx + gx⊗x + gx⊗gx)`.
pub fn r_lambda(h4: &HopfAlgebra, lambda: &Scalar) -> Result<RMatrix> {
    let field = h4.field();
    let half = field.from_i64(2).inv().ok_or_else(|| Error::InvalidInput("2 is not invertible".into()))?;
    let l = lambda * &half;
    let terms = [
        (0, 0, half.clone()),
        (0, 1, half.clone()),
        (1, 0, half.clone()),
        (1, 1, -&half),
        (2, 2, l.clone()),
        (2, 3, -&l),
        (3, 2, l.clone()),
        (3, 3, l.clone()),
    ];
    let r = TensorElement::from_terms(
        field,
        vec![h4.space().clone(), h4.space().clone()],
        terms.into_iter().map(|(a, b, c)| (vec![a, b], c)),
    )?;
    RMatrix::new(h4.clone(), r)
}

/// Label of the D(G) basis element `δ_x·y`, index `x·|G| + y`.
pub fn double_label(g: &FiniteGroup, x: usize, y: usize) -> String {
    format!("δ_{}·{}", g.label(x), g.label(y))
}

/// `D(G)` on `δ_x·y` with
/// `(δ_x y)(δ_x' y') = [x = y x' y⁻¹] δ_x (yy')`, `Δ(δ_x y) = Σ_{ab=x} δ_a y ⊗ δ_b y`,
/// `S(δ_x y) = δ_{y⁻¹x⁻¹y} y⁻¹`, and `R = Σ_g δ_g ⊗ g` where `g = Σ_x δ_x g`.
pub fn drinfeld_double_group(g: &FiniteGroup, field: Field) -> Result<(HopfAlgebra, RMatrix)> {
    let n = g.order();
    let e = g.identity();
    let idx = |x: usize, y: usize| x * n + y;
    let space = BasedSpace::new((0..n * n).map(|i| double_label(g, i / n, i % n))).expect("distinct labels");
    let alg = StructAlgebra::from_fn(
        field,
        space.clone(),
        |i, j| {
            let (x, y, x2, y2) = (i / n, i % n, j / n, j % n);
            if x == g.mul3(y, x2, g.inv(y)) {
                vec![(idx(x, g.mul(y, y2)), field.one())]
            } else {
                Vec::new()
            }
        },
        (0..n * n).map(|i| if i % n == e { field.one() } else { field.zero() }).collect(),
    )?;
    let coalg = StructCoalgebra::from_fn(
        field,
        space,
        |i| {
            let (x, y) = (i / n, i % n);
            (0..n).map(|a| (idx(a, y), idx(g.mul(g.inv(a), x), y), field.one())).collect()
        },
        (0..n * n).map(|i| if i / n == e { field.one() } else { field.zero() }).collect(),
    )?;
    let perm: Vec<usize> = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            let yi = g.inv(y);
            idx(g.mul3(yi, g.inv(x), y), yi)
        })
        .collect();
    let h = HopfAlgebra::new(alg, coalg, Some(SparseMatrix::permutation(field, &perm)))?;
    let terms = (0..n).flat_map(|a| (0..n).map(move |x| (vec![idx(a, e), idx(x, a)], field.one())));
    let r = TensorElement::from_terms(field, vec![h.space().clone(), h.space().clone()], terms)?;
    let r = RMatrix::new(h.clone(), r)?;
    Ok((h, r))
}
