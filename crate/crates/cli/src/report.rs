use std::fmt::Write as _;

use hopf_factor::bundle::CheckOutcome;
use serde::Serialize;

#[derive(Serialize)]
pub struct CheckReport {
    pub source: String,
    pub field: String,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct FactorizableReport {
    pub source: String,
    pub field: String,
    pub level: &'static str,
    pub dim_h: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_end_space: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_dim: Option<usize>,
    pub rank: usize,
    pub factorizable: bool,
}

#[derive(Serialize)]
pub struct SimpleReport {
    pub source: String,
    pub field: String,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator_algebra_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Vec<String>>>,
}

pub fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn header(out: &mut String, source: &str, field: &str) {
    writeln!(out, "{:<10} {source}", "input").unwrap();
    writeln!(out, "{:<10} {field}", "field").unwrap();
}

impl CheckReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.field);
        for c in &self.checks {
            writeln!(out, "{:<10} {}", c.check, c.verdict).unwrap();
        }
        writeln!(out, "{:<10} {}", "result", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

impl FactorizableReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.field);
        writeln!(out, "{:<10} {}", "level", self.level).unwrap();
        writeln!(out, "{:<10} {}", "dim H", self.dim_h).unwrap();
        if let Some(d) = self.dim_end_space {
            writeln!(out, "{:<10} {d}", "dim E(H,B)").unwrap();
        }
        match (self.source_dim, self.target_dim) {
            (Some(s), Some(t)) => {
                let verdict = if self.factorizable { "WEAKLY FACTORIZABLE" } else { "NOT weakly factorizable" };
                writeln!(out, "source dim {s}, target dim {t}, rank {}: {verdict}", self.rank).unwrap();
            }
            _ => {
                let verdict = if self.factorizable { "FACTORIZABLE" } else { "NOT factorizable" };
                writeln!(out, "rank {} / dim {}: {verdict}", self.rank, self.dim_h).unwrap();
            }
        }
        out
    }
}

impl SimpleReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        header(&mut out, &self.source, &self.field);
        match self.verdict {
            "simple" => writeln!(out, "Simple (operator algebra dim {})", self.operator_algebra_dim.unwrap_or(0)).unwrap(),
            "not-simple" => {
                let ideal = self.ideal.as_deref().unwrap_or_default();
                writeln!(out, "NotSimple: costable ideal of dim {}", ideal.len()).unwrap();
                for v in ideal {
                    writeln!(out, "  [{}]", v.join(", ")).unwrap();
                }
            }
            _ => writeln!(
                out,
                "Inconclusive over {} (operator algebra dim {})",
                self.field,
                self.operator_algebra_dim.unwrap_or(0)
            )
            .unwrap(),
        }
        out
    }
}
