//! The `check-rh` run report and its table rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use codezeta::enumerator::EnumeratorJson;
use codezeta::zeta::ZetaJson;
use codezeta::{QuadExt, RhVerdict};
use serde::Serialize;

use crate::decimal::truncated;
use crate::source::Inputs;

/// Digits kept in JSON approximations.
pub const JSON_DIGITS: usize = 12;
/// Digits shown in table mode.
pub const TABLE_DIGITS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    pub exact: String,
    pub approx: String,
}

impl Coefficient {
    pub fn new(x: &QuadExt) -> Self {
        Coefficient {
            exact: x.to_string(),
            approx: truncated(x, JSON_DIGITS).text,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub inputs: Inputs,
    pub enumerator: Option<EnumeratorJson>,
    pub zeta: ZetaJson,
    pub normalized_coeffs: Vec<Coefficient>,
    pub verdict: RhVerdict,
    /// Milliseconds per stage; present only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

fn describe(inputs: &Inputs) -> String {
    let mut parts = vec![inputs.family.clone()];
    let mut push = |name: &str, v: Option<String>| {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    };
    push("n", inputs.n.map(|v| v.to_string()));
    push("d", inputs.d.map(|v| v.to_string()));
    push("r", inputs.r.map(|v| v.to_string()));
    push("q", inputs.q.map(|v| v.to_string()));
    push("which", inputs.which.clone());
    push("file", inputs.file.clone());
    parts.join(" ")
}

/// Table of normalized coefficients `a_i`, one per line, `=` marking exact values.
pub fn render_table(report: &RunReport, table: &[QuadExt]) -> String {
    let mut out = String::new();
    let deg = table.len().saturating_sub(1);
    writeln!(out, "{}", describe(&report.inputs)).unwrap();
    writeln!(out, "deg {deg}, genus {}", report.zeta.genus).unwrap();
    let palindromic = (0..table.len()).all(|i| table[i] == table[deg - i]);
    let shown = if palindromic { deg / 2 + 1 } else { table.len() };
    for (i, a) in table.iter().take(shown).enumerate() {
        let dec = truncated(a, TABLE_DIGITS);
        let rel = if dec.exact { "=" } else { "≈" };
        writeln!(out, "a_{i:<4} {rel} {:<16} {a}", dec.text).unwrap();
    }
    if palindromic && shown < table.len() {
        writeln!(out, "a_i = a_{deg}-i for i > {}", shown - 1).unwrap();
    }
    writeln!(out, "status {}", report.verdict.status).unwrap();
    match report.verdict.max_deviation {
        Some(dev) => writeln!(out, "max_deviation {dev:.3e}").unwrap(),
        None => writeln!(out, "max_deviation -").unwrap(),
    }
    for t in &report.verdict.trace {
        writeln!(out, "  {}: {}", t.method, t.outcome).unwrap();
    }
    if let Some(timings) = &report.timings {
        for (stage, ms) in timings {
            writeln!(out, "time {stage} {ms:.1} ms").unwrap();
        }
    }
    out
}
