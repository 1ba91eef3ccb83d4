//! Derivation traces.
//!
//! Each step names a rule, the forms it consumed and what it produced.
//! Steps can be replayed against the scenario context; a replay must give
//! back the recorded output.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::alternatives::{prune_settled, strengthen, substitution_alternatives, Alternative, AlternativeSet};
use crate::context::ContextState;
use crate::formula::{LogicalForm, Quantifier};
use crate::implicature::{disjunction_ignorance, primary_implicatures, secondary_implicatures, ImplicatureSet};
use crate::judge::reading::{analyze_reading, Reading};
use crate::presupposition::{presup_strictly_stronger, presupposition, Presup, PresupVariant};
use crate::scale::expand_qi;
use crate::syntax::render_all;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Reading,
    Alternatives,
    PruneSettled,
    Exh,
    PrimaryImplicatures,
    SecondaryImplicatures,
    Consistency,
    Entailment,
    PresuppositionWeak,
    PresuppositionExhaustified,
    PresupStrictlyStronger,
    ExpandQi,
    DisjunctionIgnorance,
    KHolds,
    ContextualEntailment,
    Note,
}

impl Rule {
    pub const ALL: [Rule; 16] = [
        Rule::Reading,
        Rule::Alternatives,
        Rule::PruneSettled,
        Rule::Exh,
        Rule::PrimaryImplicatures,
        Rule::SecondaryImplicatures,
        Rule::Consistency,
        Rule::Entailment,
        Rule::PresuppositionWeak,
        Rule::PresuppositionExhaustified,
        Rule::PresupStrictlyStronger,
        Rule::ExpandQi,
        Rule::DisjunctionIgnorance,
        Rule::KHolds,
        Rule::ContextualEntailment,
        Rule::Note,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Reading => "reading",
            Rule::Alternatives => "alternatives",
            Rule::PruneSettled => "prune-settled",
            Rule::Exh => "exh",
            Rule::PrimaryImplicatures => "primary-implicatures",
            Rule::SecondaryImplicatures => "secondary-implicatures",
            Rule::Consistency => "consistency",
            Rule::Entailment => "entailment",
            Rule::PresuppositionWeak => "presupposition-weak",
            Rule::PresuppositionExhaustified => "presupposition-exhaustified",
            Rule::PresupStrictlyStronger => "presup-strictly-stronger",
            Rule::ExpandQi => "expand-qi",
            Rule::DisjunctionIgnorance => "disjunction-ignorance",
            Rule::KHolds => "k-holds",
            Rule::ContextualEntailment => "contextual-entailment",
            Rule::Note => "note",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutput {
    Form(LogicalForm),
    Forms(Vec<LogicalForm>),
    Tagged(Vec<Alternative>),
    Truth(bool),
    Reading(Reading),
    Text(String),
}

impl fmt::Display for StepOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepOutput::Form(lf) => write!(f, "{lf}"),
            StepOutput::Forms(forms) if forms.is_empty() => f.write_str("none"),
            StepOutput::Forms(forms) => f.write_str(&render_all(forms)),
            StepOutput::Tagged(alts) if alts.is_empty() => f.write_str("none"),
            StepOutput::Tagged(alts) => {
                for (i, a) in alts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{} [{}]", a.form, a.strength.name())?;
                }
                Ok(())
            }
            StepOutput::Truth(b) => write!(f, "{b}"),
            StepOutput::Reading(r) => f.write_str(r.name()),
            StepOutput::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub inputs: Vec<LogicalForm>,
    pub output: StepOutput,
}

fn malformed(rule: Rule) -> Error {
    Error::IllFormed(alloc::format!("malformed `{}` step", rule.name()))
}

fn first(rule: Rule, inputs: &[LogicalForm]) -> Result<&LogicalForm> {
    inputs.first().ok_or_else(|| malformed(rule))
}

impl Step {
    /// Re-derives the output from the recorded inputs.
    pub fn replay(&self, ctx: &ContextState) -> Result<StepOutput> {
        let checker = ctx.checker();
        let inputs = &self.inputs;
        let rule = self.rule;
        Ok(match rule {
            Rule::Reading => StepOutput::Reading(analyze_reading(first(rule, inputs)?)),
            Rule::Alternatives => {
                StepOutput::Tagged(substitution_alternatives(first(rule, inputs)?, checker)?.members().to_vec())
            }
            Rule::PruneSettled => {
                let mut kept = Vec::new();
                for m in inputs.get(1..).ok_or_else(|| malformed(rule))? {
                    if !ctx.settled_by_discourse(m)? {
                        kept.push(m.clone());
                    }
                }
                StepOutput::Forms(kept)
            }
            Rule::Exh => StepOutput::Form(strengthen(first(rule, inputs)?, &inputs[1..], checker)?),
            Rule::PrimaryImplicatures => StepOutput::Forms(
                inputs.iter().map(|m| LogicalForm::not(LogicalForm::know(m.clone()))).collect(),
            ),
            Rule::SecondaryImplicatures => {
                let lf = first(rule, inputs)?;
                let prim = ImplicatureSet {
                    primary: inputs[1..].iter().map(|m| LogicalForm::not(LogicalForm::know(m.clone()))).collect(),
                    secondary: Vec::new(),
                };
                StepOutput::Forms(secondary_implicatures(lf, &prim, checker)?.secondary)
            }
            Rule::Consistency => StepOutput::Truth(checker.consistent(inputs)?),
            Rule::Entailment => {
                let (conclusion, premises) = inputs.split_last().ok_or_else(|| malformed(rule))?;
                StepOutput::Truth(checker.entails(premises, conclusion)?)
            }
            Rule::PresuppositionWeak => {
                StepOutput::Form(presupposition(first(rule, inputs)?, PresupVariant::Weak, checker)?.content)
            }
            Rule::PresuppositionExhaustified => {
                StepOutput::Form(presupposition(first(rule, inputs)?, PresupVariant::Exhaustified, checker)?.content)
            }
            Rule::PresupStrictlyStronger => {
                let [p1, p2] = inputs.as_slice() else { return Err(malformed(rule)) };
                let wrap = |lf: &LogicalForm| Presup { content: lf.clone(), variant: PresupVariant::Weak };
                StepOutput::Truth(presup_strictly_stronger(&wrap(p1), &wrap(p2), checker)?)
            }
            Rule::ExpandQi => {
                let LogicalForm::Quant { restrictor, scope, .. } = first(rule, inputs)? else {
                    return Err(malformed(rule));
                };
                let scale = checker.scales().expansion_scale().ok_or(Error::NoSomeInScale)?;
                StepOutput::Form(expand_qi(restrictor, scope, scale)?)
            }
            Rule::DisjunctionIgnorance => StepOutput::Forms(disjunction_ignorance(first(rule, inputs)?, ctx)?),
            Rule::KHolds => StepOutput::Truth(ctx.k_holds(first(rule, inputs)?)?),
            Rule::ContextualEntailment => {
                let (conclusion, hypotheses) = inputs.split_last().ok_or_else(|| malformed(rule))?;
                StepOutput::Truth(checker.entails(ctx.facts().chain(hypotheses), conclusion)?)
            }
            Rule::Note => self.output.clone(),
        })
    }
}

/// Runs library operations and records each one as a step.
pub(crate) struct Tracer<'c> {
    ctx: &'c ContextState,
    steps: Vec<Step>,
}

impl<'c> Tracer<'c> {
    pub fn new(ctx: &'c ContextState) -> Self {
        Tracer { ctx, steps: Vec::new() }
    }

    pub fn ctx(&self) -> &'c ContextState {
        self.ctx
    }

    pub fn finish(self) -> Vec<Step> {
        self.steps
    }

    fn record(&mut self, rule: Rule, inputs: Vec<LogicalForm>, output: StepOutput) {
        self.steps.push(Step { rule, inputs, output });
    }

    pub fn note(&mut self, text: impl ToString) {
        self.record(Rule::Note, Vec::new(), StepOutput::Text(text.to_string()));
    }

    pub fn reading(&mut self, lf: &LogicalForm) -> Reading {
        let r = analyze_reading(lf);
        self.record(Rule::Reading, alloc::vec![lf.clone()], StepOutput::Reading(r));
        r
    }

    pub fn alternatives(&mut self, lf: &LogicalForm) -> Result<AlternativeSet> {
        let alts = substitution_alternatives(lf, self.ctx.checker())?;
        self.record(Rule::Alternatives, alloc::vec![lf.clone()], StepOutput::Tagged(alts.members().to_vec()));
        Ok(alts)
    }

    pub fn prune(&mut self, alts: &AlternativeSet) -> Result<AlternativeSet> {
        let kept = prune_settled(alts, self.ctx)?;
        let inputs = core::iter::once(alts.origin().clone()).chain(alts.forms().cloned()).collect();
        self.record(Rule::PruneSettled, inputs, StepOutput::Forms(kept.forms().cloned().collect()));
        Ok(kept)
    }

    pub fn exh(&mut self, alts: &AlternativeSet) -> Result<LogicalForm> {
        let out = crate::alternatives::exh(alts.origin(), alts, self.ctx.checker())?;
        let inputs = core::iter::once(alts.origin().clone()).chain(alts.stronger().cloned()).collect();
        self.record(Rule::Exh, inputs, StepOutput::Form(out.clone()));
        Ok(out)
    }

    pub fn primary(&mut self, alts: &AlternativeSet) -> ImplicatureSet {
        let set = primary_implicatures(alts);
        self.record(Rule::PrimaryImplicatures, alts.stronger().cloned().collect(), StepOutput::Forms(set.primary.clone()));
        set
    }

    pub fn secondary(&mut self, lf: &LogicalForm, primaries: &ImplicatureSet) -> Result<ImplicatureSet> {
        let set = secondary_implicatures(lf, primaries, self.ctx.checker())?;
        let inputs = core::iter::once(lf.clone()).chain(primaries.primary_targets().into_iter().cloned()).collect();
        self.record(Rule::SecondaryImplicatures, inputs, StepOutput::Forms(set.secondary.clone()));
        Ok(set)
    }

    pub fn consistent(&mut self, forms: Vec<LogicalForm>) -> Result<bool> {
        let b = self.ctx.checker().consistent(&forms)?;
        self.record(Rule::Consistency, forms, StepOutput::Truth(b));
        Ok(b)
    }

    pub fn entails(&mut self, premises: Vec<LogicalForm>, conclusion: &LogicalForm) -> Result<bool> {
        let b = self.ctx.checker().entails(&premises, conclusion)?;
        let mut inputs = premises;
        inputs.push(conclusion.clone());
        self.record(Rule::Entailment, inputs, StepOutput::Truth(b));
        Ok(b)
    }

    pub fn presupposition(&mut self, lf: &LogicalForm, variant: PresupVariant) -> Result<Presup> {
        let p = presupposition(lf, variant, self.ctx.checker())?;
        let rule = match variant {
            PresupVariant::Weak => Rule::PresuppositionWeak,
            PresupVariant::Exhaustified => Rule::PresuppositionExhaustified,
        };
        self.record(rule, alloc::vec![lf.clone()], StepOutput::Form(p.content.clone()));
        Ok(p)
    }

    pub fn strictly_stronger(&mut self, p1: &Presup, p2: &Presup) -> Result<bool> {
        let b = presup_strictly_stronger(p1, p2, self.ctx.checker())?;
        self.record(
            Rule::PresupStrictlyStronger,
            alloc::vec![p1.content.clone(), p2.content.clone()],
            StepOutput::Truth(b),
        );
        Ok(b)
    }

    /// Expands `(qi A C)` into its disjunction of scale-mates.
    pub fn expand_qi(&mut self, restrictor: &str, conjunct: &crate::formula::PredExpr) -> Result<LogicalForm> {
        let scale = self.ctx.checker().scales().expansion_scale().ok_or(Error::NoSomeInScale)?;
        let disj = expand_qi(restrictor, conjunct, scale)?;
        let qi = LogicalForm::quant(Quantifier::Qi, restrictor, conjunct.clone());
        self.record(Rule::ExpandQi, alloc::vec![qi], StepOutput::Form(disj.clone()));
        Ok(disj)
    }

    pub fn ignorance(&mut self, disj: &LogicalForm) -> Result<Vec<LogicalForm>> {
        let out = disjunction_ignorance(disj, self.ctx)?;
        self.record(Rule::DisjunctionIgnorance, alloc::vec![disj.clone()], StepOutput::Forms(out.clone()));
        Ok(out)
    }

    pub fn k_holds(&mut self, lf: &LogicalForm) -> Result<bool> {
        let b = self.ctx.k_holds(lf)?;
        self.record(Rule::KHolds, alloc::vec![lf.clone()], StepOutput::Truth(b));
        Ok(b)
    }

    /// Whether the context, extended with `hypotheses`, entails `lf`.
    pub fn contextually_entails(&mut self, hypotheses: Vec<LogicalForm>, lf: &LogicalForm) -> Result<bool> {
        let b = self.ctx.checker().entails(self.ctx.facts().chain(&hypotheses), lf)?;
        let mut inputs = hypotheses;
        inputs.push(lf.clone());
        self.record(Rule::ContextualEntailment, inputs, StepOutput::Truth(b));
        Ok(b)
    }
}
