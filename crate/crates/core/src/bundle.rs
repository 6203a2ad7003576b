//! JSON bundles: a Hopf algebra with optional R-matrix, comodule algebra and K-matrix,
//! all as sparse structure constants. See `docs/bundle.schema.json`.

use serde::{Deserialize, Serialize};

use crate::comodule::{check_comodule_algebra, check_k_matrix, ComoduleAlgebra};
use crate::constructions::ExampleBundle;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{check_algebra, check_coalgebra, check_hopf, HopfAlgebra, StructAlgebra, StructCoalgebra};
use crate::linalg::SparseMatrix;
use crate::quasitri::{check_r_matrix, RMatrix};
use crate::space::BasedSpace;
use crate::tensor::TensorElement;
use crate::verdict::{Axiom, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    GFp(u32),
}

/// An integer, or a string `"a"` / `"a/b"` for anything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

pub type Quad = (usize, usize, usize, Coeff);
pub type Triple = (usize, usize, Coeff);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSection {
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[i, j, k, c]`: `c·e_k` occurs in `e_i e_j`.
    pub mult: Vec<Quad>,
    /// `[i, c]` pairs.
    pub unit: Vec<(usize, Coeff)>,
    /// `[i, j, k, c]`: `c·e_j⊗e_k` occurs in `Δ(e_i)`.
    pub comult: Vec<Quad>,
    pub counit: Vec<(usize, Coeff)>,
    /// `[j, i, c]`: `c·e_i` occurs in `S(e_j)`. Solved for when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Triple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSection {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Quad>,
    pub unit: Vec<(usize, Coeff)>,
    /// `[b, h, b', c]`: `c·h⊗b'` occurs in `δ(b)`.
    pub coaction: Vec<Quad>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub field: FieldSpec,
    pub hopf: HopfSection,
    /// `[i, j, c]`: `c·h_i⊗h_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule: Option<ComoduleSection>,
    /// `[i, s, c]`: `c·h_i⊗b_s`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kmatrix: Option<Vec<Triple>>,
}

/// Parsed bundle data; only shapes have been validated.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub hopf: HopfAlgebra,
    pub rmatrix: Option<TensorElement>,
    pub comodule: Option<ComoduleAlgebra>,
    pub kmatrix: Option<TensorElement>,
}

fn coeff(s: &Scalar) -> Coeff {
    let text = s.to_string();
    text.parse::<i64>().map(Coeff::Int).unwrap_or(Coeff::Text(text))
}

fn scalar(field: Field, c: &Coeff) -> Result<Scalar> {
    match c {
        Coeff::Int(n) => Ok(field.from_i64(*n)),
        Coeff::Text(t) => field.parse(t),
    }
}

fn quads(entries: Vec<(usize, usize, usize, Scalar)>) -> Vec<Quad> {
    entries.into_iter().map(|(a, b, c, x)| (a, b, c, coeff(&x))).collect()
}

fn pairs(v: &[(usize, Scalar)]) -> Vec<(usize, Coeff)> {
    v.iter().map(|(i, x)| (*i, coeff(x))).collect()
}

fn triples(t: &TensorElement) -> Vec<Triple> {
    t.terms().map(|(idx, c)| (idx[0], idx[1], coeff(c))).collect()
}

fn parse_quads(field: Field, v: &[Quad]) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    v.iter().map(|(a, b, c, x)| Ok((*a, *b, *c, scalar(field, x)?))).collect()
}

fn dense(field: Field, dim: usize, v: &[(usize, Coeff)], what: &str) -> Result<Vec<Scalar>> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in v {
        let slot = out.get_mut(*i).ok_or_else(|| Error::InvalidInput(format!("{what} index {i} outside dimension {dim}")))?;
        *slot += &scalar(field, c)?;
    }
    Ok(out)
}

fn space(dim: usize, basis: &[String], what: &str) -> Result<BasedSpace> {
    if basis.len() != dim {
        return Err(Error::DimensionMismatch(format!("{what}: {} basis labels for dimension {dim}", basis.len())));
    }
    BasedSpace::new(basis.to_vec())
}

fn two_leg(field: Field, factors: Vec<BasedSpace>, v: &[Triple]) -> Result<TensorElement> {
    let terms: Result<Vec<_>> = v.iter().map(|(i, j, c)| Ok((vec![*i, *j], scalar(field, c)?))).collect();
    TensorElement::from_terms(field, factors, terms?)
}

impl BundleFile {
    pub fn from_json(text: &str) -> Result<BundleFile> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bundle: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }

    pub fn field(&self) -> Result<Field> {
        match self.field {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::GFp(p) => Field::prime(p),
        }
    }

    pub fn from_parts(
        h: &HopfAlgebra,
        rmatrix: Option<&TensorElement>,
        comodule: Option<&ComoduleAlgebra>,
        kmatrix: Option<&TensorElement>,
    ) -> BundleFile {
        let field = match h.field() {
            Field::Rational => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::GFp(p),
        };
        let s = h.antipode_sparse();
        let antipode = (0..h.dim()).flat_map(|j| s.column(j).iter().map(move |(i, c)| (j, *i, coeff(c)))).collect();
        let hopf = HopfSection {
            dim: h.dim(),
            basis: h.space().labels().to_vec(),
            mult: quads(h.alg().entries()),
            unit: pairs(h.unit()),
            comult: quads(h.coalg().entries()),
            counit: h.counit().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, coeff(c))).collect(),
            antipode: Some(antipode),
        };
        let comodule = comodule.map(|c| ComoduleSection {
            dim: c.dim(),
            basis: c.alg().space().labels().to_vec(),
            mult: quads(c.alg().entries()),
            unit: pairs(c.alg().unit()),
            coaction: quads(c.entries()),
        });
        BundleFile { field, hopf, rmatrix: rmatrix.map(triples), comodule, kmatrix: kmatrix.map(triples) }
    }

    pub fn from_example(e: &ExampleBundle) -> BundleFile {
        BundleFile::from_parts(&e.hopf, Some(e.rmatrix.element()), Some(e.comodule()), Some(e.kmatrix.element()))
    }

    /// Builds the structures, validating indices and shapes but no axioms.
    pub fn load(&self) -> Result<Bundle> {
        let field = self.field()?;
        let hs = &self.hopf;
        let hspace = space(hs.dim, &hs.basis, "hopf")?;
        let alg = StructAlgebra::new(field, hspace.clone(), parse_quads(field, &hs.mult)?, dense(field, hs.dim, &hs.unit, "unit")?)?;
        let coalg = StructCoalgebra::new(field, hspace.clone(), parse_quads(field, &hs.comult)?, dense(field, hs.dim, &hs.counit, "counit")?)?;
        let antipode = match &hs.antipode {
            None => None,
            Some(entries) => {
                let mut columns = vec![Vec::new(); hs.dim];
                for (j, i, c) in entries {
                    if *i >= hs.dim || *j >= hs.dim {
                        return Err(Error::InvalidInput(format!("antipode index ({j},{i}) outside dimension {}", hs.dim)));
                    }
                    columns[*j].push((*i, scalar(field, c)?));
                }
                Some(SparseMatrix::from_columns(field, hs.dim, columns))
            }
        };
        let hopf = HopfAlgebra::assemble(alg, coalg, antipode)?;
        let rmatrix = self.rmatrix.as_ref().map(|r| two_leg(field, vec![hspace.clone(), hspace.clone()], r)).transpose()?;
        let comodule = match &self.comodule {
            None => None,
            Some(cs) => {
                let bspace = space(cs.dim, &cs.basis, "comodule")?;
                let alg = StructAlgebra::new(field, bspace, parse_quads(field, &cs.mult)?, dense(field, cs.dim, &cs.unit, "comodule unit")?)?;
                Some(ComoduleAlgebra::assemble(hopf.clone(), alg, parse_quads(field, &cs.coaction)?)?)
            }
        };
        let kmatrix = match (&self.kmatrix, &comodule) {
            (None, _) => None,
            (Some(_), None) => return Err(Error::InvalidInput("kmatrix given without a comodule section".into())),
            (Some(k), Some(c)) => Some(two_leg(field, vec![hspace.clone(), c.alg().space().clone()], k)?),
        };
        Ok(Bundle { hopf, rmatrix, comodule, kmatrix })
    }
}

/// Which parts of a bundle to verify.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckSelection {
    pub hopf: bool,
    pub rmatrix: bool,
    pub comodule: bool,
    pub kmatrix: bool,
}

impl CheckSelection {
    pub fn all() -> CheckSelection {
        CheckSelection { hopf: true, rmatrix: true, comodule: true, kmatrix: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub verdict: Verdict,
}

fn invertible(v: Result<Verdict>) -> Result<Verdict> {
    match v {
        Err(Error::NotInvertible) => Ok(Verdict::fail(Axiom::Invertibility, Vec::new())),
        other => other,
    }
}

/// Runs the selected checkers in a fixed order. A K-matrix is checked only against an
/// R-matrix that passes its own axioms.
pub fn check_bundle(b: &Bundle, sel: CheckSelection) -> Result<Vec<CheckOutcome>> {
    let missing = |what: &str| Error::InvalidInput(format!("bundle has no {what} section"));
    let mut out = Vec::new();
    if sel.hopf {
        out.push(CheckOutcome { check: "algebra", verdict: check_algebra(b.hopf.alg()) });
        out.push(CheckOutcome { check: "coalgebra", verdict: check_coalgebra(b.hopf.coalg()) });
        out.push(CheckOutcome { check: "hopf", verdict: check_hopf(&b.hopf) });
    }
    if sel.rmatrix || sel.kmatrix {
        let r = b.rmatrix.as_ref().ok_or_else(|| missing("rmatrix"))?;
        let v = invertible(check_r_matrix(&b.hopf, r))?;
        if sel.rmatrix {
            out.push(CheckOutcome { check: "rmatrix", verdict: v.clone() });
        }
        if sel.kmatrix && !v.is_pass() && !sel.rmatrix {
            out.push(CheckOutcome { check: "rmatrix", verdict: v.clone() });
        }
    }
    if sel.comodule || sel.kmatrix {
        let c = b.comodule.as_ref().ok_or_else(|| missing("comodule"))?;
        let v = check_comodule_algebra(c);
        if sel.comodule || !v.is_pass() {
            out.push(CheckOutcome { check: "comodule", verdict: v });
        }
    }
    if sel.kmatrix && out.iter().all(|o| o.verdict.is_pass()) {
        let k = b.kmatrix.as_ref().ok_or_else(|| missing("kmatrix"))?;
        let c = b.comodule.as_ref().expect("checked above");
        let r = RMatrix::new(b.hopf.clone(), b.rmatrix.clone().expect("checked above"))?;
        out.push(CheckOutcome { check: "kmatrix", verdict: invertible(check_k_matrix(c, &r, k))? });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named_example;

    #[test]
    fn round_trip_preserves_the_structures() {
        let e = named_example("double:C2", Field::Rational).unwrap();
        let file = BundleFile::from_example(&e);
        let parsed = BundleFile::from_json(&file.to_json()).unwrap();
        assert_eq!(parsed, file);
        let b = parsed.load().unwrap();
        assert_eq!(b.hopf, e.hopf);
        assert_eq!(b.kmatrix.as_ref(), Some(e.kmatrix.element()));
        assert!(check_bundle(&b, CheckSelection::all()).unwrap().iter().all(|o| o.verdict.is_pass()));
    }

    #[test]
    fn coefficients_accept_integers_and_fractions() {
        let f = Field::Rational;
        assert_eq!(scalar(f, &Coeff::Int(-3)).unwrap(), f.from_i64(-3));
        assert_eq!(scalar(f, &Coeff::Text("1/2".into())).unwrap(), f.from_i64(2).inv().unwrap());
        assert_eq!(coeff(&f.from_i64(2).inv().unwrap()), Coeff::Text("1/2".into()));
        assert!(scalar(f, &Coeff::Text("x".into())).is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let e = named_example("regular:C2", Field::Prime(5)).unwrap();
        let mut v: serde_json::Value = serde_json::from_str(&BundleFile::from_example(&e).to_json()).unwrap();
        v["hopf"]["extra"] = serde_json::json!(1);
        assert!(BundleFile::from_json(&v.to_string()).is_err());
    }

    #[test]
    fn perturbed_antipode_is_reported() {
        let e = named_example("regular:C3", Field::Rational).unwrap();
        let mut file = BundleFile::from_example(&e);
        let s = file.hopf.antipode.as_mut().unwrap();
        s.push((1, 0, Coeff::Int(1)));
        let b = file.load().unwrap();
        let out = check_bundle(&b, CheckSelection { hopf: true, ..Default::default() }).unwrap();
        assert_eq!(out[2].verdict.failed_axiom(), Some(Axiom::Antipode));
    }
}
