use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use hopf_factor::bundle::{check_bundle, Bundle, BundleFile, CheckSelection};
use hopf_factor::comodule::{
    compute_end_space, h_simplicity, theta_comodule, weak_factorizability, ComoduleAlgebra, KMatrix, Simplicity,
};
use hopf_factor::constructions::{named_example, EXAMPLE_KINDS};
use hopf_factor::quasitri::{drinfeld_map, RMatrix};
use hopf_factor::Field;

use crate::report::{json, CheckReport, FactorizableReport, SimpleReport};
use crate::{Input, Kind, Level};

struct Loaded {
    source: String,
    bundle: Bundle,
}

fn load(input: &Input) -> Result<Loaded> {
    if let Some(name) = &input.example {
        let field = match &input.field {
            Some(f) => Field::from_name(f)?,
            None => Field::Rational,
        };
        let e = named_example(name, field)?;
        let bundle = Bundle {
            hopf: e.hopf.clone(),
            rmatrix: Some(e.rmatrix.element().clone()),
            comodule: Some(e.comodule().clone()),
            kmatrix: Some(e.kmatrix.element().clone()),
        };
        return Ok(Loaded { source: format!("example {name}"), bundle });
    }
    let path = input.path.as_ref().expect("clap requires a path or an example");
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = BundleFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let bundle = file.load().with_context(|| format!("loading {}", path.display()))?;
    Ok(Loaded { source: path.display().to_string(), bundle })
}

fn emit(text: String) -> ExitCode {
    print!("{text}");
    ExitCode::SUCCESS
}

fn rmatrix(l: &Loaded) -> Result<RMatrix> {
    let Some(r) = &l.bundle.rmatrix else { bail!("{} has no rmatrix section", l.source) };
    RMatrix::new(l.bundle.hopf.clone(), r.clone()).context("the R-matrix does not verify")
}

fn comodule(l: &Loaded) -> Result<ComoduleAlgebra> {
    let Some(c) = &l.bundle.comodule else { bail!("{} has no comodule section", l.source) };
    let v = hopf_factor::comodule::check_comodule_algebra(c);
    if !v.is_pass() {
        bail!("the comodule algebra does not verify: {v}");
    }
    Ok(c.clone())
}

fn kmatrix(l: &Loaded) -> Result<KMatrix> {
    let Some(k) = &l.bundle.kmatrix else { bail!("{} has no kmatrix section", l.source) };
    KMatrix::new(comodule(l)?, rmatrix(l)?, k.clone()).context("the K-matrix does not verify")
}

pub fn check(input: &Input, sel: CheckSelection, as_json: bool) -> Result<ExitCode> {
    let l = load(input)?;
    let b = &l.bundle;
    let sel = if sel == CheckSelection::default() {
        CheckSelection {
            hopf: true,
            rmatrix: b.rmatrix.is_some(),
            comodule: b.comodule.is_some(),
            kmatrix: b.kmatrix.is_some(),
        }
    } else {
        sel
    };
    let checks = check_bundle(b, sel)?;
    let passed = checks.iter().all(|c| c.verdict.is_pass());
    let report = CheckReport { source: l.source, field: b.hopf.field().to_string(), checks, passed };
    print!("{}", if as_json { json(&report) } else { report.text() });
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn factorizable(input: &Input, level: Level, as_json: bool) -> Result<ExitCode> {
    let l = load(input)?;
    let h = &l.bundle.hopf;
    let mut report = FactorizableReport {
        source: l.source.clone(),
        field: h.field().to_string(),
        level: "",
        dim_h: h.dim(),
        dim_end_space: None,
        source_dim: None,
        target_dim: None,
        rank: 0,
        factorizable: false,
    };
    match level {
        Level::Hopf => {
            report.level = "hopf";
            report.rank = drinfeld_map(&rmatrix(&l)?).matrix.rank();
            report.factorizable = report.rank == h.dim();
        }
        Level::Comodule => {
            let k = kmatrix(&l)?;
            let e = compute_end_space(k.comodule())?;
            report.level = "comodule";
            report.dim_end_space = Some(e.dim());
            report.rank = theta_comodule(&k, &e)?.rank();
            report.factorizable = report.rank == h.dim() && e.dim() == h.dim();
        }
        Level::Weak => {
            let k = kmatrix(&l)?;
            let e = compute_end_space(k.comodule())?;
            let w = weak_factorizability(&k, &e)?;
            report.level = "weak";
            report.dim_end_space = Some(e.dim());
            report.source_dim = Some(w.source_dim);
            report.target_dim = Some(w.target_dim);
            report.rank = w.rank;
            report.factorizable = w.bijective;
        }
    }
    Ok(emit(if as_json { json(&report) } else { report.text() }))
}

pub fn simple(input: &Input, as_json: bool) -> Result<ExitCode> {
    let l = load(input)?;
    let c = comodule(&l)?;
    let field = c.field().to_string();
    let report = match h_simplicity(&c) {
        Simplicity::Simple { operator_algebra_dim } => SimpleReport {
            source: l.source,
            field,
            verdict: "simple",
            operator_algebra_dim: Some(operator_algebra_dim),
            ideal: None,
        },
        Simplicity::NotSimple { ideal } => SimpleReport {
            source: l.source,
            field,
            verdict: "not-simple",
            operator_algebra_dim: None,
            ideal: Some(ideal.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()),
        },
        Simplicity::Inconclusive { operator_algebra_dim, .. } => SimpleReport {
            source: l.source,
            field,
            verdict: "inconclusive",
            operator_algebra_dim: Some(operator_algebra_dim),
            ideal: None,
        },
    };
    Ok(emit(if as_json { json(&report) } else { report.text() }))
}

pub fn construct(kind: Kind, group: Option<&str>, lambda: &str, field: &str, out: &Path) -> Result<ExitCode> {
    let field = Field::from_name(field)?;
    let group = || group.context("--group is required for this kind");
    let name = match kind {
        Kind::Double => format!("double:{}", group()?),
        Kind::Reflective => format!("reflective-trivial:{}", group()?),
        Kind::Group => format!("regular:{}", group()?),
        Kind::Dual => format!("dual:{}", group()?),
        Kind::Sweedler => format!("sweedler:{lambda}"),
    };
    let e = named_example(&name, field)?;
    let file = BundleFile::from_example(&e);
    fs::write(out, file.to_json() + "\n").with_context(|| format!("writing {}", out.display()))?;
    println!("wrote {name} over {field} ({}-dim Hopf algebra, {}-dim comodule algebra) to {}", e.hopf.dim(), e.comodule().dim(), out.display());
    Ok(ExitCode::SUCCESS)
}

pub fn list() -> Result<ExitCode> {
    for k in EXAMPLE_KINDS {
        println!("{k}");
    }
    Ok(ExitCode::SUCCESS)
}
