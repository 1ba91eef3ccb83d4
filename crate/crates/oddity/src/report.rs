//! Rendering judgments as tables, JSON and step-by-step explanations.

use std::fmt::Write as _;

use oddity_core::judge::Step;
use oddity_core::{Judgment, TheoryVerdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub reading: String,
    pub aggregate: String,
    pub theories: Vec<TheoryReport>,
    pub continuations: Vec<ContinuationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoryReport {
    pub name: String,
    pub verdict: String,
    pub mechanism: String,
    pub trace: Vec<StepReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub rule: String,
    pub inputs: Vec<String>,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuationReport {
    pub form: String,
    pub verdict: String,
}

impl From<&Step> for StepReport {
    fn from(step: &Step) -> Self {
        StepReport {
            rule: step.rule.name().into(),
            inputs: step.inputs.iter().map(ToString::to_string).collect(),
            output: step.output.to_string(),
        }
    }
}

impl From<&TheoryVerdict> for TheoryReport {
    fn from(v: &TheoryVerdict) -> Self {
        TheoryReport {
            name: v.theory.name().into(),
            verdict: v.verdict().name().into(),
            mechanism: v.mechanism.name().into(),
            trace: v.trace.iter().map(StepReport::from).collect(),
        }
    }
}

impl From<&Judgment> for Report {
    fn from(j: &Judgment) -> Self {
        Report {
            scenario: j.scenario.clone(),
            reading: j.reading.name().into(),
            aggregate: j.aggregate.name().into(),
            theories: j.theories.iter().map(TheoryReport::from).collect(),
            continuations: j
                .continuations
                .iter()
                .map(|c| ContinuationReport { form: c.form.to_string(), verdict: c.verdict.name().into() })
                .collect(),
        }
    }
}

impl Report {
    pub fn fired(&self) -> impl Iterator<Item = &TheoryReport> {
        self.theories.iter().filter(|t| t.mechanism != "none")
    }
}

/// One row per theory, `theory | verdict | mechanism`.
pub fn render_table(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", r.scenario);
    let _ = writeln!(out, "reading: {}", r.reading);
    for t in &r.theories {
        let _ = writeln!(out, "{} | {} | {}", t.name, t.verdict, t.mechanism);
    }
    let _ = writeln!(out, "aggregate: {}", r.aggregate);
    for c in &r.continuations {
        let _ = writeln!(out, "continuation {} | {}", c.form, c.verdict);
    }
    out
}

/// A single line of JSON.
pub fn render_json(r: &Report) -> String {
    let mut out = serde_json::to_string(r).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Table => render_table(r),
        Format::Json => render_json(r),
    }
}

/// Every theory's derivation, step by step.
pub fn render_explain(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", r.scenario);
    let _ = writeln!(out, "reading: {}", r.reading);
    for t in &r.theories {
        let _ = writeln!(out, "\n[{}] {} ({})", t.name, t.verdict, t.mechanism);
        for (i, step) in t.trace.iter().enumerate() {
            if step.inputs.is_empty() {
                let _ = writeln!(out, "  {:>2}. {}: {}", i + 1, step.rule, step.output);
            } else {
                let _ = writeln!(out, "  {:>2}. {} {} => {}", i + 1, step.rule, step.inputs.join(" "), step.output);
            }
        }
    }
    out.push('\n');
    if r.fired().next().is_none() {
        out.push_str("no mechanism fired\n");
    } else {
        let names: Vec<String> = r.fired().map(|t| format!("{} ({})", t.name, t.mechanism)).collect();
        let _ = writeln!(out, "fired: {}", names.join(", "));
    }
    let _ = writeln!(out, "aggregate: {}", r.aggregate);
    for c in &r.continuations {
        let _ = writeln!(out, "continuation {} | {}", c.form, c.verdict);
    }
    out
}
