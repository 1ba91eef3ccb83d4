//! Presuppositions of quantified clauses.
//!
//! A clause `Q(A)(S)` presupposes that there are `A`s. The weak presupposition
//! conjoins that existence claim with the clause itself; the exhaustified
//! variant of a `some`/`most`/`qi` clause further conjoins "but not all".

use alloc::vec::Vec;

use crate::checker::ModelChecker;
use crate::formula::{LogicalForm, Quantifier};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresupVariant {
    Weak,
    Exhaustified,
}

impl PresupVariant {
    pub fn name(self) -> &'static str {
        match self {
            PresupVariant::Weak => "weak",
            PresupVariant::Exhaustified => "exhaustified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presup {
    pub content: LogicalForm,
    pub variant: PresupVariant,
}

/// `(some R true)` for every restrictor in the forms, in order of first
/// appearance.
pub fn existence_presuppositions<'a>(forms: impl IntoIterator<Item = &'a LogicalForm>) -> Vec<LogicalForm> {
    let mut seen: Vec<&str> = Vec::new();
    for lf in forms {
        for r in lf.restrictors() {
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
    }
    seen.into_iter().map(LogicalForm::exists).collect()
}

/// Presupposition of a clause or `only`-clause; `only` is stripped first.
///
/// The "but not all" conjunct of the exhaustified variant is only added when
/// it is consistent with the weak presupposition.
pub fn presupposition(lf: &LogicalForm, variant: PresupVariant, checker: &ModelChecker) -> Result<Presup> {
    let Some(LogicalForm::Quant { quantifier, restrictor, scope }) = lf.prejacent() else {
        return Err(Error::PresuppositionUndefined(lf.clone()));
    };
    let clause = LogicalForm::quant(*quantifier, restrictor.clone(), scope.clone());
    let weak = LogicalForm::and(LogicalForm::exists(restrictor.clone()), clause);
    let content = match (variant, quantifier) {
        (PresupVariant::Exhaustified, Quantifier::Some | Quantifier::Most | Quantifier::Qi) => {
            let not_all = LogicalForm::not(LogicalForm::all(restrictor.clone(), scope.clone()));
            let strengthened = LogicalForm::and(weak.clone(), not_all);
            if checker.consistent([&strengthened])? {
                strengthened
            } else {
                weak
            }
        }
        _ => weak,
    };
    Ok(Presup { content, variant })
}

/// `p1` entails `p2` and not conversely.
pub fn presup_strictly_stronger(p1: &Presup, p2: &Presup, checker: &ModelChecker) -> Result<bool> {
    Ok(checker.entails([&p1.content], &p2.content)? && !checker.entails([&p2.content], &p1.content)?)
}
