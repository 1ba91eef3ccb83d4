//! Two-tier conversational context.
//!
//! Background common knowledge and the explicit discourse record together
//! determine the worlds the participants consider live. Certainty and
//! possibility are evaluated over those worlds. Relevance (whether a question
//! is already settled) reads the discourse tier only.

use alloc::vec::Vec;

use crate::checker::ModelChecker;
use crate::eval::eval;
use crate::formula::LogicalForm;
use crate::judge::Verdict;
use crate::model::{enumerate_models, Model};
use crate::presupposition::existence_presuppositions;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextState {
    common_knowledge: Vec<LogicalForm>,
    discourse: Vec<LogicalForm>,
    checker: ModelChecker,
}

/// The models up to the bound that satisfy the whole context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorldSet {
    models: Vec<Model>,
}

impl WorldSet {
    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Model> {
        self.models.iter()
    }
}

fn require_epistemic_free(lf: &LogicalForm) -> Result<()> {
    if lf.is_epistemic_free() {
        Ok(())
    } else {
        Err(Error::UnsupportedNesting(lf.clone()))
    }
}

impl ContextState {
    /// Fails with a minimal inconsistent subset when the two tiers admit no
    /// model within the bound.
    pub fn new(
        common_knowledge: Vec<LogicalForm>,
        discourse: Vec<LogicalForm>,
        checker: ModelChecker,
    ) -> Result<Self> {
        for lf in common_knowledge.iter().chain(&discourse) {
            require_epistemic_free(lf)?;
        }
        let ctx = ContextState { common_knowledge, discourse, checker };
        if !ctx.checker.consistent(ctx.facts())? {
            let all: Vec<LogicalForm> = ctx.facts().cloned().collect();
            return Err(Error::InconsistentContext(ctx.checker.minimal_inconsistent_subset(&all)?));
        }
        Ok(ctx)
    }

    pub fn common_knowledge(&self) -> &[LogicalForm] {
        &self.common_knowledge
    }

    pub fn discourse(&self) -> &[LogicalForm] {
        &self.discourse
    }

    pub fn checker(&self) -> &ModelChecker {
        &self.checker
    }

    /// Same discourse, different background.
    pub fn with_common_knowledge(&self, common_knowledge: Vec<LogicalForm>) -> Result<Self> {
        ContextState::new(common_knowledge, self.discourse.clone(), self.checker.clone())
    }

    pub fn facts(&self) -> impl Iterator<Item = &LogicalForm> + Clone {
        self.common_knowledge.iter().chain(&self.discourse)
    }

    /// Every model over the full declared signature, up to the bound, that
    /// satisfies common knowledge and discourse.
    pub fn worlds(&self) -> Result<WorldSet> {
        let preds = self.checker.signature().predicates();
        let mut models = Vec::new();
        'models: for m in enumerate_models(preds, self.checker.bound(), self.checker.budget())? {
            for lf in self.facts() {
                if !eval(lf, &m, self.checker.scales())? {
                    continue 'models;
                }
            }
            models.push(m);
        }
        Ok(WorldSet { models })
    }

    /// `K lf`: true in every live world.
    pub fn k_holds(&self, lf: &LogicalForm) -> Result<bool> {
        require_epistemic_free(lf)?;
        self.checker.entails(self.facts(), lf)
    }

    /// `P lf`: true in some live world.
    pub fn p_holds(&self, lf: &LogicalForm) -> Result<bool> {
        require_epistemic_free(lf)?;
        self.checker.consistent(self.facts().chain([lf]))
    }

    pub fn contextually_entails(&self, lf: &LogicalForm) -> Result<bool> {
        self.k_holds(lf)
    }

    /// Appends an utterance to the discourse record.
    pub fn update_discourse(&self, lf: &LogicalForm) -> Result<ContextState> {
        require_epistemic_free(lf)?;
        if !self.checker.consistent(self.facts().chain([lf]))? {
            return Err(Error::UpdateContradiction(lf.clone()));
        }
        let mut next = self.clone();
        next.discourse.push(lf.clone());
        Ok(next)
    }

    /// Whether the discourse alone decides `lf` one way or the other.
    ///
    /// Utterances in the discourse carry their restrictors' existence
    /// presuppositions. Common knowledge is never consulted.
    pub fn settled_by_discourse(&self, lf: &LogicalForm) -> Result<bool> {
        require_epistemic_free(lf)?;
        let mut record: Vec<LogicalForm> = self.discourse.clone();
        record.extend(existence_presuppositions(&self.discourse));
        if !self.checker.consistent(&record)? {
            record.truncate(self.discourse.len());
        }
        Ok(self.checker.entails(&record, lf)? || self.checker.entails(&record, &LogicalForm::not(lf.clone()))?)
    }

    /// Adds `prior`, then asks whether `continuation` can follow it.
    pub fn continuation_felicity(&self, prior: &LogicalForm, continuation: &LogicalForm) -> Result<Verdict> {
        let after_prior = match self.update_discourse(prior) {
            Ok(ctx) => ctx,
            Err(Error::UpdateContradiction(_)) => return Ok(Verdict::Odd),
            Err(e) => return Err(e),
        };
        match after_prior.update_discourse(continuation) {
            Ok(_) => Ok(Verdict::Felicitous),
            Err(Error::UpdateContradiction(_)) => Ok(Verdict::Odd),
            Err(e) => Err(e),
        }
    }
}
