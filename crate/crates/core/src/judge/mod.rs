//! Oddness predictors and their aggregation.

mod reading;
mod theories;
pub mod trace;

use alloc::string::String;
use alloc::vec::Vec;

use crate::checker::ModelChecker;
use crate::context::ContextState;
use crate::formula::LogicalForm;
use crate::model::Signature;
use crate::scale::ScaleRegistry;
use crate::{Error, Result};

pub use reading::{analyze_reading, Reading};
pub use theories::predict;
pub use trace::{Rule, Step, StepOutput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Felicitous,
    Odd,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Felicitous => "felicitous",
            Verdict::Odd => "odd",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "felicitous" => Some(Verdict::Felicitous),
            "odd" => Some(Verdict::Odd),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    MagriBlind,
    PresupposedIgnorance,
    LogicalIntegrity,
    DelPinal,
    IndirectContextualContradiction,
}

impl Theory {
    pub const ALL: [Theory; 5] = [
        Theory::MagriBlind,
        Theory::PresupposedIgnorance,
        Theory::LogicalIntegrity,
        Theory::DelPinal,
        Theory::IndirectContextualContradiction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theory::MagriBlind => "magri-blind",
            Theory::PresupposedIgnorance => "presupposed-ignorance",
            Theory::LogicalIntegrity => "logical-integrity",
            Theory::DelPinal => "del-pinal",
            Theory::IndirectContextualContradiction => "indirect-contextual-contradiction",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Theory::ALL.into_iter().find(|t| t.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mechanism {
    MismatchingSi,
    DirectContextualContradiction,
    PresupposedIgnorance,
    LogicalIntegrity,
    PresuppositionUpdateClash,
    IndirectContextualContradiction,
    None,
}

impl Mechanism {
    pub const ALL: [Mechanism; 7] = [
        Mechanism::MismatchingSi,
        Mechanism::DirectContextualContradiction,
        Mechanism::PresupposedIgnorance,
        Mechanism::LogicalIntegrity,
        Mechanism::PresuppositionUpdateClash,
        Mechanism::IndirectContextualContradiction,
        Mechanism::None,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mechanism::MismatchingSi => "mismatching-SI",
            Mechanism::DirectContextualContradiction => "direct-contextual-contradiction",
            Mechanism::PresupposedIgnorance => "presupposed-ignorance",
            Mechanism::LogicalIntegrity => "logical-integrity",
            Mechanism::PresuppositionUpdateClash => "presupposition-update-clash",
            Mechanism::IndirectContextualContradiction => "indirect-contextual-contradiction",
            Mechanism::None => "none",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Mechanism::ALL.into_iter().find(|m| m.name() == name)
    }
}

/// One predictor's outcome. The verdict is odd exactly when a mechanism
/// other than `none` fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryVerdict {
    pub theory: Theory,
    pub mechanism: Mechanism,
    pub trace: Vec<Step>,
}

impl TheoryVerdict {
    pub fn new(theory: Theory, fired: Option<Mechanism>, trace: Vec<Step>) -> Self {
        TheoryVerdict { theory, mechanism: fired.unwrap_or(Mechanism::None), trace }
    }

    pub fn verdict(&self) -> Verdict {
        if self.mechanism == Mechanism::None {
            Verdict::Felicitous
        } else {
            Verdict::Odd
        }
    }

    pub fn fired(&self) -> bool {
        self.verdict() == Verdict::Odd
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuationVerdict {
    pub form: LogicalForm,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgment {
    pub scenario: String,
    pub reading: Reading,
    pub theories: Vec<TheoryVerdict>,
    pub aggregate: Verdict,
    pub continuations: Vec<ContinuationVerdict>,
}

impl Judgment {
    pub fn firing(&self) -> impl Iterator<Item = &TheoryVerdict> {
        self.theories.iter().filter(|t| t.fired())
    }

    pub fn theory(&self, theory: Theory) -> Option<&TheoryVerdict> {
        self.theories.iter().find(|t| t.theory == theory)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JudgeOptions {
    /// Clash-check every unsettled disjunct in the indirect predictor rather
    /// than only the `all` disjunct.
    pub all_disjuncts: bool,
}

impl Default for JudgeOptions {
    fn default() -> Self {
        JudgeOptions { all_disjuncts: true }
    }
}

/// A target sentence in a context, with the theories to consult.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub signature: Signature,
    pub scales: ScaleRegistry,
    pub max_universe: usize,
    pub common_knowledge: Vec<LogicalForm>,
    pub discourse: Vec<LogicalForm>,
    pub target: LogicalForm,
    pub continuations: Vec<LogicalForm>,
    pub enabled: Vec<Theory>,
    pub expect: Option<Verdict>,
}

impl Scenario {
    pub const DEFAULT_MAX_UNIVERSE: usize = 4;

    /// Default scale, bound 4, empty context, every theory enabled.
    pub fn new(name: impl Into<String>, signature: Signature, target: LogicalForm) -> Self {
        Scenario {
            name: name.into(),
            signature,
            scales: ScaleRegistry::default(),
            max_universe: Self::DEFAULT_MAX_UNIVERSE,
            common_knowledge: Vec::new(),
            discourse: Vec::new(),
            target,
            continuations: Vec::new(),
            enabled: Theory::ALL.to_vec(),
            expect: None,
        }
    }

    pub fn checker(&self) -> ModelChecker {
        ModelChecker::new(self.signature.clone(), self.scales.clone(), self.max_universe)
    }

    pub fn context(&self) -> Result<ContextState> {
        ContextState::new(self.common_knowledge.clone(), self.discourse.clone(), self.checker())
    }

    pub fn is_enabled(&self, theory: Theory) -> bool {
        self.enabled.contains(&theory)
    }
}

pub fn judge(scenario: &Scenario) -> Result<Judgment> {
    judge_with(scenario, &JudgeOptions::default())
}

/// Runs every enabled predictor, in canonical theory order, then the
/// continuations.
pub fn judge_with(scenario: &Scenario, options: &JudgeOptions) -> Result<Judgment> {
    let ctx = scenario.context()?;
    let target = &scenario.target;
    if !target.is_epistemic_free() {
        return Err(Error::UnsupportedNesting(target.clone()));
    }
    let mut theories = Vec::new();
    for theory in Theory::ALL.into_iter().filter(|t| scenario.is_enabled(*t)) {
        theories.push(predict(theory, target, &ctx, options)?);
    }
    let aggregate = if theories.iter().any(TheoryVerdict::fired) { Verdict::Odd } else { Verdict::Felicitous };
    let mut continuations = Vec::new();
    for form in &scenario.continuations {
        let verdict = ctx.continuation_felicity(target, form)?;
        continuations.push(ContinuationVerdict { form: form.clone(), verdict });
    }
    Ok(Judgment { scenario: scenario.name.clone(), reading: analyze_reading(target), theories, aggregate, continuations })
}
