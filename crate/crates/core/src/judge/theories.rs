//! The five predictors.
//!
//! Each predictor records every operation it performs in a trace. A
//! conjunction of two clauses (distributive reading) is judged clause by
//! clause by all predictors except the indirect one, which needs a single
//! existential clause with a concurrent conjunction in its scope.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::reading::Reading;
use super::trace::Tracer;
use super::{JudgeOptions, Mechanism, Theory, TheoryVerdict};
use crate::context::ContextState;
use crate::formula::{LogicalForm, Quantifier};
use crate::presupposition::{existence_presuppositions, PresupVariant};
use crate::{Error, Result};

pub fn predict(theory: Theory, lf: &LogicalForm, ctx: &ContextState, options: &JudgeOptions) -> Result<TheoryVerdict> {
    if !lf.is_epistemic_free() {
        return Err(Error::UnsupportedNesting(lf.clone()));
    }
    let mut t = Tracer::new(ctx);
    let fired = match theory {
        Theory::MagriBlind => magri_blind(&mut t, lf)?,
        Theory::PresupposedIgnorance => presupposed_ignorance(&mut t, lf)?,
        Theory::LogicalIntegrity => logical_integrity(&mut t, lf)?,
        Theory::DelPinal => del_pinal(&mut t, lf)?,
        Theory::IndirectContextualContradiction => indirect(&mut t, lf, options)?,
    };
    if fired.is_none() {
        t.note("no mechanism fired");
    }
    Ok(TheoryVerdict::new(theory, fired, t.finish()))
}

/// The clauses a predictor judges separately.
fn units<'a>(t: &mut Tracer<'_>, lf: &'a LogicalForm) -> Vec<&'a LogicalForm> {
    match (t.reading(lf), lf) {
        (Reading::DistributiveSentential, LogicalForm::And(a, b)) => vec![&**a, &**b],
        _ => vec![lf],
    }
}

fn with_ck(ctx: &ContextState, extra: &[&LogicalForm]) -> Vec<LogicalForm> {
    ctx.common_knowledge().iter().chain(extra.iter().copied()).cloned().collect()
}

fn magri_blind(t: &mut Tracer<'_>, lf: &LogicalForm) -> Result<Option<Mechanism>> {
    let mut fired = None;
    for u in units(t, lf) {
        let alts = t.alternatives(u)?;
        let relevant = t.prune(&alts)?;
        let strengthened = t.exh(&relevant)?;
        let primaries = t.primary(&alts);
        t.secondary(u, &primaries)?;
        if t.consistent(with_ck(t.ctx(), &[&strengthened]))? {
            continue;
        }
        let mechanism = if t.consistent(with_ck(t.ctx(), &[u]))? {
            Mechanism::MismatchingSi
        } else {
            Mechanism::DirectContextualContradiction
        };
        t.note(format!("{}: {strengthened} contradicts common knowledge", mechanism.name()));
        fired.get_or_insert(mechanism);
    }
    Ok(fired)
}

fn presupposed_ignorance(t: &mut Tracer<'_>, lf: &LogicalForm) -> Result<Option<Mechanism>> {
    let mut fired = None;
    for u in units(t, lf) {
        let own = match t.presupposition(u, PresupVariant::Weak) {
            Ok(p) => p,
            Err(Error::PresuppositionUndefined(_)) => {
                t.note(format!("no presupposition for {u}: skipped"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let alts = t.alternatives(u)?;
        for m in alts.forms() {
            let theirs = t.presupposition(m, PresupVariant::Weak)?;
            if t.strictly_stronger(&theirs, &own)? && t.contextually_entails(Vec::new(), &theirs.content)? {
                t.note(format!("presupposed-ignorance: the context already settles {}", theirs.content));
                fired.get_or_insert(Mechanism::PresupposedIgnorance);
            }
        }
    }
    if fired.is_none() {
        t.note("no strictly stronger presupposition is contextually entailed");
    }
    Ok(fired)
}

fn logical_integrity(t: &mut Tracer<'_>, lf: &LogicalForm) -> Result<Option<Mechanism>> {
    let mut fired = None;
    for u in units(t, lf) {
        let alts = t.alternatives(u)?;
        if alts.is_empty() {
            continue;
        }
        let mut updated: Vec<LogicalForm> = t.ctx().facts().cloned().collect();
        updated.push(u.clone());
        if !t.consistent(updated)? {
            t.note(format!("{u} contradicts the context: not applicable"));
            continue;
        }
        let exists = existence_presuppositions([u]);
        for m in alts.forms() {
            let premises = exists.iter().chain([u]).cloned().collect();
            if t.entails(premises, m)? {
                continue;
            }
            if t.contextually_entails(vec![u.clone()], m)? {
                t.note(format!("logical-integrity: {u} contextually but not logically entails {m}"));
                fired.get_or_insert(Mechanism::LogicalIntegrity);
            }
        }
    }
    Ok(fired)
}

fn del_pinal(t: &mut Tracer<'_>, lf: &LogicalForm) -> Result<Option<Mechanism>> {
    let mut fired = None;
    for u in units(t, lf) {
        let presup = match t.presupposition(u, PresupVariant::Exhaustified) {
            Ok(p) => p.content,
            Err(Error::PresuppositionUndefined(_)) => {
                t.note(format!("no presupposition for {u}: skipped"));
                continue;
            }
            Err(e) => return Err(e),
        };
        if !t.consistent(with_ck(t.ctx(), &[u]))? {
            t.note(format!("{u} contradicts common knowledge: not applicable"));
            continue;
        }
        if t.consistent(with_ck(t.ctx(), &[&presup, u]))? {
            continue;
        }
        let case = if t.consistent(with_ck(t.ctx(), &[&presup]))? { "proper" } else { "degenerate" };
        t.note(format!("presupposition-update-clash ({case}): {presup} cannot join {u}"));
        fired.get_or_insert(Mechanism::PresuppositionUpdateClash);
    }
    Ok(fired)
}

fn indirect(t: &mut Tracer<'_>, lf: &LogicalForm, options: &JudgeOptions) -> Result<Option<Mechanism>> {
    let reading = t.reading(lf);
    if reading != Reading::ConcurrentCollective {
        t.note(format!("{}: predictor skipped", reading.name()));
        return Ok(None);
    }
    let Some(LogicalForm::Quant { quantifier: Quantifier::Some, restrictor, scope }) = lf.prejacent() else {
        t.note("not an existential clause: predictor skipped");
        return Ok(None);
    };
    let conjuncts = scope.conc_conjuncts();
    if conjuncts.len() < 2 {
        t.note("scope is not a concurrent conjunction: predictor skipped");
        return Ok(None);
    }
    if t.ctx().checker().scales().expansion_scale().is_none() {
        t.note("no scale contains some: predictor skipped");
        return Ok(None);
    }
    let mut fired = None;
    for c in conjuncts {
        let qi = LogicalForm::quant(Quantifier::Qi, restrictor.clone(), c.clone());
        if !t.entails(vec![lf.clone()], &qi)? {
            continue;
        }
        let disj = t.expand_qi(restrictor, c)?;
        for ignorance in t.ignorance(&disj)? {
            let LogicalForm::Not(known) = &ignorance else { continue };
            let LogicalForm::Know(d) = &**known else { continue };
            if !options.all_disjuncts && !matches!(**d, LogicalForm::Quant { quantifier: Quantifier::All, .. }) {
                continue;
            }
            if t.k_holds(d)? {
                t.note(format!("clash: {ignorance} against {}", LogicalForm::know((**d).clone())));
                fired.get_or_insert(Mechanism::IndirectContextualContradiction);
            }
        }
    }
    Ok(fired)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::ModelChecker;
    use crate::formula::{LogicalForm as Lf, PredExpr, PredicateSym};
    use crate::judge::trace::Rule;
    use crate::judge::Verdict;
    use crate::model::Signature;
    use crate::scale::ScaleRegistry;

    fn italians(discourse: Vec<Lf>) -> ContextState {
        let sig = Signature::stative(["italian", "warm", "blond"]).unwrap();
        let ck = vec![Lf::all("italian", "warm"), Lf::exists("italian")];
        ContextState::new(ck, discourse, ModelChecker::new(sig, ScaleRegistry::default(), 4)).unwrap()
    }

    fn portugal() -> ContextState {
        let sig = Signature::new([
            PredicateSym::stative("portugal"),
            PredicateSym::stative("tall"),
            PredicateSym::eventive("won"),
            PredicateSym::eventive("left"),
        ])
        .unwrap();
        let ck = vec![Lf::all("portugal", "won"), Lf::exists("portugal")];
        ContextState::new(ck, vec![], ModelChecker::new(sig, ScaleRegistry::default(), 4)).unwrap()
    }

    fn mechanisms(lf: &Lf, ctx: &ContextState) -> Vec<Mechanism> {
        Theory::ALL
            .into_iter()
            .map(|th| predict(th, lf, ctx, &JudgeOptions::default()).unwrap().mechanism)
            .collect()
    }

    fn wb() -> PredExpr {
        PredExpr::and_conc("warm", "blond")
    }

    use Mechanism::*;

    #[test]
    fn bare_indefinite_clashes_with_background() {
        assert_eq!(
            mechanisms(&Lf::some("italian", "warm"), &italians(vec![])),
            [MismatchingSi, PresupposedIgnorance, LogicalIntegrity, PresuppositionUpdateClash, None]
        );
    }

    #[test]
    fn only_indefinite_contradicts_background() {
        assert_eq!(
            mechanisms(&Lf::only(Lf::some("italian", "warm")), &italians(vec![])),
            [DirectContextualContradiction, PresupposedIgnorance, None, None, None]
        );
    }

    #[test]
    fn conjoined_scope_is_odd_only_indirectly() {
        assert_eq!(
            mechanisms(&Lf::only(Lf::some("italian", wb())), &italians(vec![])),
            [None, None, None, None, IndirectContextualContradiction]
        );
        assert_eq!(
            mechanisms(&Lf::some("italian", wb()), &italians(vec![])),
            [None, None, None, None, IndirectContextualContradiction]
        );
    }

    #[test]
    fn discourse_repairs() {
        let said = italians(vec![Lf::all("italian", "warm")]);
        assert!(mechanisms(&Lf::some("italian", wb()), &said).iter().all(|m| *m == None));
        assert!(mechanisms(&Lf::only(Lf::some("italian", wb())), &said).iter().all(|m| *m == None));
    }

    #[test]
    fn distributive_conjunctions() {
        let fourteen = Lf::and(Lf::some("italian", "warm"), Lf::some("italian", "blond"));
        let got = mechanisms(&fourteen, &italians(vec![]));
        assert_eq!(got[0], MismatchingSi);
        assert_eq!(got[4], None);

        let fifteen = Lf::and(Lf::all("italian", "warm"), Lf::only(Lf::some("italian", "blond")));
        assert!(mechanisms(&fifteen, &italians(vec![])).iter().all(|m| *m == None));
    }

    #[test]
    fn portugal_players() {
        let sixteen = Lf::some("portugal", PredExpr::and_conc("won", "tall"));
        assert_eq!(mechanisms(&sixteen, &portugal())[4], IndirectContextualContradiction);

        let seventeen = Lf::some("portugal", PredExpr::and_seq("won", "left"));
        assert!(mechanisms(&seventeen, &portugal()).iter().all(|m| *m == None));
        let v = predict(Theory::IndirectContextualContradiction, &seventeen, &portugal(), &JudgeOptions::default())
            .unwrap();
        assert_eq!(v.verdict(), Verdict::Felicitous);
        assert!(v.trace.iter().any(|s| s.output.to_string() == "sequenced-split: predictor skipped"));
    }

    #[test]
    fn all_disjunct_option() {
        let only_all = JudgeOptions { all_disjuncts: false };
        let v = predict(Theory::IndirectContextualContradiction, &Lf::some("italian", wb()), &italians(vec![]), &only_all)
            .unwrap();
        assert_eq!(v.mechanism, IndirectContextualContradiction);
    }

    #[test]
    fn traces_replay() {
        let ctx = italians(vec![]);
        for lf in [Lf::some("italian", "warm"), Lf::only(Lf::some("italian", wb()))] {
            for th in Theory::ALL {
                let v = predict(th, &lf, &ctx, &JudgeOptions::default()).unwrap();
                assert!(!v.trace.is_empty());
                for step in &v.trace {
                    assert_eq!(step.replay(&ctx).unwrap(), step.output, "{}", step.rule.name());
                }
            }
        }
    }

    #[test]
    fn indirect_chain_is_recorded() {
        let v = predict(
            Theory::IndirectContextualContradiction,
            &Lf::only(Lf::some("italian", wb())),
            &italians(vec![]),
            &JudgeOptions::default(),
        )
        .unwrap();
        let rules: Vec<Rule> = v.trace.iter().map(|s| s.rule).collect();
        let pos = |r: Rule| rules.iter().position(|x| *x == r).unwrap();
        assert!(pos(Rule::Entailment) < pos(Rule::ExpandQi));
        assert!(pos(Rule::ExpandQi) < pos(Rule::DisjunctionIgnorance));
        assert!(pos(Rule::DisjunctionIgnorance) < pos(Rule::KHolds));
        let clash = v.trace.iter().find(|s| s.output.to_string().starts_with("clash")).unwrap();
        assert_eq!(
            clash.output.to_string(),
            "clash: (not (know (all italian warm))) against (know (all italian warm))"
        );
    }
}
