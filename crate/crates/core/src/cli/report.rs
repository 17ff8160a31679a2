//! Scenario reports and their JSON and text renderings.
//!
//! Both renderings are functions of the report alone, so a fixed config
//! and seed give identical bytes. Wall-clock timing is only included on
//! request.

use serde::Serialize;
use serde_json::Value;

use super::config::Windows;
use crate::deform::StabilizationReport;
use crate::ideals::{BruteForceSummary, HypothesisReport, SimplicityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub algebra: String,
    pub field: String,
    pub ring: String,
    pub seed: u64,
    pub windows: Windows,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_unit_factor: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    /// Entries `x -> σ(x)`.
    pub sigma: Vec<String>,
    pub g: String,
    pub g_provenance: String,
    pub delta: String,
    pub stabilization: StabilizationReport,
}

/// Inputs and value of the first nonzero residual of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualWitness {
    pub inputs: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualCheck {
    pub name: &'static str,
    pub identity: &'static str,
    /// A nonzero residual in a mandatory suite is a contract violation.
    pub mandatory: bool,
    pub samples: usize,
    pub nonzero: usize,
    pub all_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ResidualWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractedRow {
    pub term: String,
    pub eigenvalue: String,
    /// Coefficients of `σ⁰(p), σ¹(p), …`.
    pub combination: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleEcho {
    pub multiplier: String,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "operation", rename_all = "snake_case")]
pub enum OperationResult {
    Bracket {
        a: String,
        b: String,
        bracket: String,
    },
    Partial {
        a: String,
        partial: String,
    },
    IdealStable {
        generator: String,
        proper: bool,
        stable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        quotient: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<CounterexampleEcho>,
        criterion: &'static str,
        brute_force: BruteForceSummary,
        oracle_agrees: bool,
    },
    ExtractMonomials {
        p: String,
        terms: Vec<ExtractedRow>,
        reconstructed: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub total_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: ConfigEcho,
    pub algebra: AlgebraSummary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<ResidualCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<OperationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<SimplicityVerdict>,
    /// Contract violations; nonempty means exit status 1.
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Indented `key: value` rendering of the JSON tree, after a status line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.ok() { "ok" } else { "VIOLATION" };
        out.push_str(&format!(
            "witt {} [{}]: {status}",
            self.command, self.config.algebra
        ));
        if let Some(v) = &self.verdicts {
            out.push_str(&format!(", verdict {:?}", v.verdict));
        }
        out.push('\n');
        let tree = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = tree {
            for (k, v) in map {
                if k != "command" {
                    render(&mut out, &k, &v, 0);
                }
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(
            a.iter()
                .map(|x| scalar(x).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", "),
        ),
        _ => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                render(out, k, x, depth + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                render(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
