//! Primary and secondary implicatures, and ignorance inferences from
//! disjunctions.

use alloc::vec::Vec;

use crate::alternatives::AlternativeSet;
use crate::checker::ModelChecker;
use crate::context::ContextState;
use crate::formula::LogicalForm;
use crate::presupposition::existence_presuppositions;
use crate::{Error, Result};

/// `primary` holds `¬K m` forms, `secondary` holds `K ¬m` forms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ImplicatureSet {
    pub primary: Vec<LogicalForm>,
    pub secondary: Vec<LogicalForm>,
}

fn not_known(m: &LogicalForm) -> LogicalForm {
    LogicalForm::not(LogicalForm::know(m.clone()))
}

fn known_false(m: &LogicalForm) -> LogicalForm {
    LogicalForm::know(LogicalForm::not(m.clone()))
}

impl ImplicatureSet {
    /// The alternatives the primary implicatures are about.
    pub fn primary_targets(&self) -> Vec<&LogicalForm> {
        self.primary
            .iter()
            .filter_map(|lf| match lf {
                LogicalForm::Not(k) => match &**k {
                    LogicalForm::Know(m) => Some(&**m),
                    _ => None,
                },
                _ => None,
            })
            .collect()
    }

    pub fn secondary_targets(&self) -> Vec<&LogicalForm> {
        self.secondary
            .iter()
            .filter_map(|lf| match lf {
                LogicalForm::Know(n) => match &**n {
                    LogicalForm::Not(m) => Some(&**m),
                    _ => None,
                },
                _ => None,
            })
            .collect()
    }
}

/// `¬K m` for every stronger alternative. Context plays no role.
pub fn primary_implicatures(alts: &AlternativeSet) -> ImplicatureSet {
    ImplicatureSet { primary: alts.stronger().map(not_known).collect(), secondary: Vec::new() }
}

/// Strengthens each primary `¬K m` to `K ¬m`, strongest first, whenever `¬m`
/// stays consistent with `lf` and the secondaries already admitted.
pub fn secondary_implicatures(
    lf: &LogicalForm,
    primaries: &ImplicatureSet,
    checker: &ModelChecker,
) -> Result<ImplicatureSet> {
    let mut accepted: Vec<LogicalForm> = Vec::new();
    for m in primaries.primary_targets() {
        let neg = LogicalForm::not(m.clone());
        if checker.consistent(accepted.iter().chain([lf, &neg]))? {
            accepted.push(neg);
        }
    }
    let secondary = accepted
        .iter()
        .map(|neg| match neg {
            LogicalForm::Not(m) => known_false(m),
            _ => unreachable!("only negations are admitted"),
        })
        .collect();
    Ok(ImplicatureSet { primary: primaries.primary.clone(), secondary })
}

/// `¬K d` for each disjunct the disjunction does not already entail and the
/// discourse has not settled.
pub fn disjunction_ignorance(disj: &LogicalForm, ctx: &ContextState) -> Result<Vec<LogicalForm>> {
    let LogicalForm::Or(disjuncts) = disj else {
        return Err(Error::NotADisjunction(disj.clone()));
    };
    if disjuncts.len() < 2 {
        return Err(Error::NotADisjunction(disj.clone()));
    }
    let premises: Vec<LogicalForm> = existence_presuppositions([disj]).into_iter().chain([disj.clone()]).collect();
    let mut out = Vec::new();
    for d in disjuncts {
        if ctx.checker().entails(&premises, d)? || ctx.settled_by_discourse(d)? {
            continue;
        }
        out.push(not_known(d));
    }
    Ok(out)
}
