use std::fmt;

use serde::Serialize;

/// The axiom a checker found violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unitality,
    Coassociativity,
    Counit,
    Bialgebra,
    Antipode,
    AntipodeInverse,
    ModuleUnit,
    ModuleMultiplicativity,
    RMatrixI,
    RMatrixII,
    RMatrixIII,
    CoactionMultiplicativity,
    CoactionUnit,
    CoactionCoassociativity,
    CoactionCounit,
    KMatrixI,
    KMatrixII,
    KMatrixIII,
    Hexagon1,
    Hexagon2,
    BraidUnit,
    BraidedModule1,
    BraidedModule2,
    BraidedModuleUnit,
    Invertibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit identity",
            Axiom::Bialgebra => "bialgebra compatibility",
            Axiom::Antipode => "antipode identity",
            Axiom::AntipodeInverse => "antipode invertibility",
            Axiom::ModuleUnit => "module unit law",
            Axiom::ModuleMultiplicativity => "module multiplicativity",
            Axiom::RMatrixI => "R-matrix axiom (i)",
            Axiom::RMatrixII => "R-matrix axiom (ii)",
            Axiom::RMatrixIII => "R-matrix axiom (iii)",
            Axiom::CoactionMultiplicativity => "coaction multiplicativity",
            Axiom::CoactionUnit => "coaction unit law",
            Axiom::CoactionCoassociativity => "coaction coassociativity",
            Axiom::CoactionCounit => "coaction counit law",
            Axiom::KMatrixI => "K-matrix axiom (i)",
            Axiom::KMatrixII => "K-matrix axiom (ii)",
            Axiom::KMatrixIII => "K-matrix axiom (iii)",
            Axiom::Hexagon1 => "hexagon c_{X⊗Y,Z}",
            Axiom::Hexagon2 => "hexagon c_{X,Y⊗Z}",
            Axiom::BraidUnit => "braiding unit law",
            Axiom::BraidedModule1 => "braided-module axiom e_{X⊗Y,M}",
            Axiom::BraidedModule2 => "braided-module axiom e_{X,Y▷M}",
            Axiom::BraidedModuleUnit => "braided-module unit law",
            Axiom::Invertibility => "invertibility",
        };
        f.write_str(s)
    }
}

/// Outcome of an axiom check: pass, or the first failure found with its basis witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { axiom: Axiom, witness: Vec<usize> },
}

impl Verdict {
    pub fn fail(axiom: Axiom, witness: impl Into<Vec<usize>>) -> Verdict {
        Verdict::Fail { axiom, witness: witness.into() }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failed_axiom(&self) -> Option<Axiom> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { axiom, .. } => Some(*axiom),
        }
    }

    /// Runs `next` only if this verdict passed.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    pub(crate) fn from_witness(axiom: Axiom, witness: Option<Vec<usize>>) -> Verdict {
        match witness {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail { axiom, witness: w },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail { axiom, witness } => {
                let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
                write!(f, "{axiom} fails at basis index ({})", w.join(", "))
            }
        }
    }
}
