//! JSON and text forms of the command outputs.

use std::fmt::Write as _;

use braidc_core::search::{matrix_to_json, SearchBudget, SearchResult, TargetGate};
use braidc_core::{BraidWord, Unitary2};
use serde::Serialize;

pub const TOOL: &str = "braidc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CONVENTION: &str = "temporal-order";
/// Bumped whenever a report changes shape; matches the files in `schemas/`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct TargetReport {
    pub name: String,
    pub matrix: serde_json::Value,
}

impl From<&TargetGate> for TargetReport {
    fn from(t: &TargetGate) -> Self {
        Self { name: t.name.clone(), matrix: matrix_to_json(&t.matrix) }
    }
}

#[derive(Debug, Serialize)]
pub struct BudgetReport {
    pub max_exchanges: u32,
    pub max_slots: u32,
    pub threads: usize,
}

#[derive(Debug, Serialize)]
pub struct CompileReport {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub convention: &'static str,
    pub target: TargetReport,
    pub method: String,
    pub budget: BudgetReport,
    pub word: String,
    pub crossings: u64,
    pub matrix: serde_json::Value,
    pub error: f64,
    pub nodes_visited: u64,
    pub wall_time_ms: f64,
}

impl CompileReport {
    pub fn new(target: &TargetGate, budget: &SearchBudget, result: &SearchResult) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: TOOL,
            version: VERSION,
            convention: CONVENTION,
            target: target.into(),
            method: result.method.to_string(),
            budget: BudgetReport {
                max_exchanges: budget.max_exchanges,
                max_slots: budget.max_slots,
                threads: budget.threads,
            },
            word: result.word.to_string(),
            crossings: result.word.crossings(),
            matrix: matrix_to_json(&result.matrix),
            error: result.error,
            nodes_visited: result.nodes_visited,
            wall_time_ms: result.wall_time.as_secs_f64() * 1e3,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "target:    {}", self.target.name);
        let _ = writeln!(s, "method:    {}", self.method);
        let _ = writeln!(
            s,
            "budget:    {} crossings, {} slots, {} threads",
            self.budget.max_exchanges, self.budget.max_slots, self.budget.threads
        );
        let _ = writeln!(s, "word:      {}  (temporal order, {} crossings)", display_word(&self.word), self.crossings);
        let _ = writeln!(s, "error:     {:.17}", self.error);
        let _ = writeln!(s, "nodes:     {}", self.nodes_visited);
        let _ = writeln!(s, "wall time: {:.1} ms", self.wall_time_ms);
        s
    }
}

#[derive(Debug, Serialize)]
pub struct EvaluateReport {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub convention: &'static str,
    pub word: String,
    pub crossings: u64,
    pub matrix: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
}

impl EvaluateReport {
    pub fn new(word: &BraidWord, matrix: &Unitary2, target: Option<(&TargetGate, f64)>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: TOOL,
            version: VERSION,
            convention: CONVENTION,
            word: word.to_string(),
            crossings: word.crossings(),
            matrix: matrix_to_json(matrix),
            target: target.map(|(t, _)| t.into()),
            error: target.map(|(_, e)| e),
        }
    }

    pub fn to_text(&self, matrix: &Unitary2) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "word:   {}  (temporal order)", display_word(&self.word));
        s.push_str(&matrix_text(matrix));
        if let (Some(t), Some(e)) = (&self.target, self.error) {
            let _ = writeln!(s, "target: {}", t.name);
            let _ = writeln!(s, "error:  {e:.17}");
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ModelCheckReport {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub pentagon_residual: f64,
    pub hexagon_residual: f64,
    pub sigma_period_residual: f64,
    pub braid_relation_residual: f64,
    pub f_involution_residual: f64,
    pub threshold: f64,
    pub ok: bool,
}

impl ModelCheckReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let rows = [
            ("pentagon", self.pentagon_residual),
            ("hexagon", self.hexagon_residual),
            ("sigma^10 = I", self.sigma_period_residual),
            ("braid relation", self.braid_relation_residual),
            ("F^2 = I", self.f_involution_residual),
        ];
        for (name, r) in rows {
            let mark = if r < self.threshold { "ok" } else { "VIOLATED" };
            let _ = writeln!(s, "{name:<15} {r:.3e}  {mark}");
        }
        let _ = writeln!(s, "{}", if self.ok { "all identities hold" } else { "model check failed" });
        s
    }
}

fn display_word(w: &str) -> &str {
    if w.is_empty() {
        "(empty)"
    } else {
        w
    }
}

pub fn matrix_text(m: &Unitary2) -> String {
    let mut s = String::new();
    for r in 0..2 {
        let z0 = m.get(r, 0);
        let z1 = m.get(r, 1);
        let _ = writeln!(s, "[ {:+.10}{:+.10}i  {:+.10}{:+.10}i ]", z0.re, z0.im, z1.re, z1.im);
    }
    s
}
