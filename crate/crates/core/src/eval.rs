//! Truth of predicate expressions and epistemic-free logical forms in a model.

use crate::formula::{LogicalForm, PredExpr, Quantifier};
use crate::model::Model;
use crate::scale::ScaleRegistry;
use crate::{Error, Result};

/// Extension of a predicate expression as a bitset over the universe.
pub fn extension(p: &PredExpr, m: &Model) -> Result<u64> {
    Ok(match p {
        PredExpr::Atom(name) => m.extension(name).ok_or_else(|| Error::Undeclared(name.clone()))?,
        PredExpr::True => m.universe_mask(),
        PredExpr::Not(p) => m.universe_mask() & !extension(p, m)?,
        // Sequencing is not modelled in extensions; both conjunctions intersect.
        PredExpr::AndConc(a, b) | PredExpr::AndSeq(a, b) => extension(a, m)? & extension(b, m)?,
    })
}

pub fn eval_pexpr(p: &PredExpr, m: &Model, x: usize) -> Result<bool> {
    if x >= m.size() {
        return Err(Error::IllFormed(alloc::format!("individual e{x} is outside the universe")));
    }
    Ok(extension(p, m)? >> x & 1 == 1)
}

/// Truth of a quantifier given its restrictor and scope extensions.
pub fn quantifier_holds(q: Quantifier, restrictor: u64, scope: u64) -> bool {
    let inside = (restrictor & scope).count_ones();
    let outside = (restrictor & !scope).count_ones();
    match q {
        Quantifier::Some | Quantifier::Qi => inside >= 1,
        Quantifier::All => outside == 0,
        Quantifier::Most => inside > outside,
        Quantifier::No => inside == 0,
    }
}

pub fn eval(lf: &LogicalForm, m: &Model, scales: &ScaleRegistry) -> Result<bool> {
    match lf {
        LogicalForm::Quant { quantifier, restrictor, scope } => {
            let r = m.extension(restrictor).ok_or_else(|| Error::Undeclared(restrictor.clone()))?;
            Ok(quantifier_holds(*quantifier, r, extension(scope, m)?))
        }
        LogicalForm::Only(inner) => {
            let LogicalForm::Quant { quantifier, restrictor, scope } = &**inner else {
                return Err(Error::OnlyNeedsClause(lf.clone()));
            };
            if !scales.contains(*quantifier) {
                return Err(Error::NotInScale(*quantifier));
            }
            let r = m.extension(restrictor).ok_or_else(|| Error::Undeclared(restrictor.clone()))?;
            let s = extension(scope, m)?;
            Ok(quantifier_holds(*quantifier, r, s)
                && scales.stronger_mates(*quantifier).into_iter().all(|q| !quantifier_holds(q, r, s)))
        }
        LogicalForm::Not(inner) => Ok(!eval(inner, m, scales)?),
        LogicalForm::And(a, b) => Ok(eval(a, m, scales)? && eval(b, m, scales)?),
        LogicalForm::Or(ds) => {
            for d in ds {
                if eval(d, m, scales)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        LogicalForm::Know(_) | LogicalForm::Poss(_) => Err(Error::EpistemicContextRequired),
    }
}
