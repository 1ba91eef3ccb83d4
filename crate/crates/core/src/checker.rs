//! Bounded entailment and consistency by brute-force model enumeration.
//!
//! The fragment is monadic, so a formula's truth depends only on the universe
//! size and the extensions of the predicates it mentions. Each query
//! enumerates models over exactly those predicates, for every universe size
//! from 0 up to the bound.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::eval::eval;
use crate::formula::LogicalForm;
use crate::model::{Model, Models, Signature, DEFAULT_BUDGET_BITS};
use crate::scale::ScaleRegistry;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelChecker {
    signature: Signature,
    scales: ScaleRegistry,
    bound: usize,
    budget: u32,
}

impl ModelChecker {
    pub fn new(signature: Signature, scales: ScaleRegistry, bound: usize) -> Self {
        ModelChecker { signature, scales, bound, budget: DEFAULT_BUDGET_BITS }
    }

    pub fn with_budget(mut self, budget: u32) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_bound(&self, bound: usize) -> Self {
        ModelChecker { bound, ..self.clone() }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn scales(&self) -> &ScaleRegistry {
        &self.scales
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn budget(&self) -> u32 {
        self.budget
    }

    fn space(&self, forms: &[&LogicalForm]) -> Result<Models> {
        if self.bound == 0 {
            return Err(Error::IllFormed("model-size bound must be at least 1".into()));
        }
        let mut names = BTreeSet::new();
        for lf in forms {
            lf.predicates(&mut names);
        }
        let sub = self.signature.restrict(&names)?;
        Models::sized(sub.predicates(), 0..=self.bound, self.budget)
    }

    fn holds_all(&self, forms: &[&LogicalForm], m: &Model) -> Result<bool> {
        for lf in forms {
            if !eval(lf, m, &self.scales)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A model of size at most the bound satisfying every form.
    pub fn witness<'a>(&self, forms: impl IntoIterator<Item = &'a LogicalForm>) -> Result<Option<Model>> {
        let forms: Vec<&LogicalForm> = forms.into_iter().collect();
        for m in self.space(&forms)? {
            if self.holds_all(&forms, &m)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    pub fn consistent<'a>(&self, forms: impl IntoIterator<Item = &'a LogicalForm>) -> Result<bool> {
        Ok(self.witness(forms)?.is_some())
    }

    /// A model satisfying every premise and falsifying the conclusion.
    pub fn countermodel<'a>(
        &self,
        premises: impl IntoIterator<Item = &'a LogicalForm>,
        conclusion: &LogicalForm,
    ) -> Result<Option<Model>> {
        let mut forms: Vec<&LogicalForm> = premises.into_iter().collect();
        let premise_count = forms.len();
        forms.push(conclusion);
        for m in self.space(&forms)? {
            if self.holds_all(&forms[..premise_count], &m)? && !eval(conclusion, &m, &self.scales)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    pub fn entails<'a>(
        &self,
        premises: impl IntoIterator<Item = &'a LogicalForm>,
        conclusion: &LogicalForm,
    ) -> Result<bool> {
        Ok(self.countermodel(premises, conclusion)?.is_none())
    }

    pub fn equivalent(&self, a: &LogicalForm, b: &LogicalForm) -> Result<bool> {
        Ok(self.entails([a], b)? && self.entails([b], a)?)
    }

    /// Shrinks an inconsistent set to an irreducible inconsistent subset by
    /// deleting members that are not needed for the inconsistency.
    pub fn minimal_inconsistent_subset(&self, forms: &[LogicalForm]) -> Result<Vec<LogicalForm>> {
        let mut core: Vec<LogicalForm> = forms.to_vec();
        let mut i = 0;
        while i < core.len() {
            let without: Vec<&LogicalForm> =
                core.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, lf)| lf).collect();
            if self.consistent(without)? {
                i += 1;
            } else {
                core.remove(i);
            }
        }
        Ok(core)
    }
}
