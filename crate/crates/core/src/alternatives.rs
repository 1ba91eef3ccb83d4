//! Substitution alternatives, relevance pruning and blind exhaustification.

use alloc::vec;
use alloc::vec::Vec;

use crate::checker::ModelChecker;
use crate::context::ContextState;
use crate::formula::{LogicalForm, Quantifier};
use crate::presupposition::existence_presuppositions;
use crate::scale::ScaleRegistry;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strength {
    Stronger,
    Weaker,
    Incomparable,
}

impl Strength {
    pub fn name(self) -> &'static str {
        match self {
            Strength::Stronger => "stronger",
            Strength::Weaker => "weaker",
            Strength::Incomparable => "incomparable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternative {
    pub form: LogicalForm,
    pub strength: Strength,
}

/// Alternatives of `origin`, strongest substitutions first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeSet {
    origin: LogicalForm,
    members: Vec<Alternative>,
}

impl AlternativeSet {
    pub fn empty(origin: LogicalForm) -> Self {
        AlternativeSet { origin, members: Vec::new() }
    }

    pub fn origin(&self) -> &LogicalForm {
        &self.origin
    }

    pub fn members(&self) -> &[Alternative] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn forms(&self) -> impl Iterator<Item = &LogicalForm> {
        self.members.iter().map(|a| &a.form)
    }

    pub fn stronger(&self) -> impl Iterator<Item = &LogicalForm> {
        self.members.iter().filter(|a| a.strength == Strength::Stronger).map(|a| &a.form)
    }

    pub fn contains(&self, lf: &LogicalForm) -> bool {
        self.members.iter().any(|a| &a.form == lf)
    }
}

/// Candidates for one quantifier position: every mate at most as complex,
/// strongest first, the quantifier itself included.
fn candidates(q: Quantifier, scales: &ScaleRegistry) -> Vec<Quantifier> {
    let mut out = Vec::new();
    for s in scales.scales().iter().filter(|s| s.contains(q)) {
        for &m in s.members().iter().rev() {
            if m.complexity_rank() <= q.complexity_rank() && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    if out.is_empty() {
        out.push(q);
    }
    out
}

/// Strength of `alt` relative to `origin`, with both restrictors assumed
/// nonempty.
pub fn strength(origin: &LogicalForm, alt: &LogicalForm, checker: &ModelChecker) -> Result<Strength> {
    let exists = existence_presuppositions([origin, alt]);
    let alt_to_origin = checker.entails(exists.iter().chain([alt]), origin)?;
    let origin_to_alt = checker.entails(exists.iter().chain([origin]), alt)?;
    Ok(match (alt_to_origin, origin_to_alt) {
        (true, false) => Strength::Stronger,
        (false, true) => Strength::Weaker,
        _ => Strength::Incomparable,
    })
}

/// Every form obtained by replacing each quantifier, independently, with a
/// scale-mate of no greater complexity. A form without scalar items has no
/// alternatives.
pub fn substitution_alternatives(lf: &LogicalForm, checker: &ModelChecker) -> Result<AlternativeSet> {
    let slots: Vec<Vec<Quantifier>> =
        lf.quantifiers().into_iter().map(|q| candidates(q, checker.scales())).collect();
    let mut members: Vec<Alternative> = Vec::new();
    if slots.iter().all(|c| c.len() < 2) {
        return Ok(AlternativeSet::empty(lf.clone()));
    }
    let mut index = vec![0usize; slots.len()];
    'product: loop {
        let choice: Vec<Quantifier> = index.iter().zip(&slots).map(|(&i, c)| c[i]).collect();
        let form = lf.with_quantifiers(&choice);
        if &form != lf && !members.iter().any(|a| a.form == form) {
            let strength = strength(lf, &form, checker)?;
            members.push(Alternative { form, strength });
        }
        for pos in (0..slots.len()).rev() {
            index[pos] += 1;
            if index[pos] < slots[pos].len() {
                continue 'product;
            }
            index[pos] = 0;
        }
        break;
    }
    Ok(AlternativeSet { origin: lf.clone(), members })
}

/// Drops alternatives the discourse has already settled.
pub fn prune_settled(alts: &AlternativeSet, ctx: &ContextState) -> Result<AlternativeSet> {
    let mut members = Vec::new();
    for a in &alts.members {
        if !ctx.settled_by_discourse(&a.form)? {
            members.push(a.clone());
        }
    }
    Ok(AlternativeSet { origin: alts.origin.clone(), members })
}

/// Conjoins `lf` with the negation of each form whose negation is consistent
/// with `lf`.
pub fn strengthen<'a>(
    lf: &LogicalForm,
    stronger: impl IntoIterator<Item = &'a LogicalForm>,
    checker: &ModelChecker,
) -> Result<LogicalForm> {
    let mut negations = Vec::new();
    for m in stronger {
        let neg = LogicalForm::not(m.clone());
        if checker.consistent([lf, &neg])? {
            negations.push(neg);
        }
    }
    Ok(LogicalForm::conjoin(lf.clone(), negations))
}

/// Blind exhaustification: negates every stronger alternative whose negation
/// is consistent with the prejacent. No context is consulted.
pub fn exh(lf: &LogicalForm, alts: &AlternativeSet, checker: &ModelChecker) -> Result<LogicalForm> {
    if alts.origin() != lf {
        return Err(Error::IllFormed(alloc::format!(
            "alternatives of {} cannot exhaustify {lf}",
            alts.origin()
        )));
    }
    strengthen(lf, alts.stronger(), checker)
}
