mod common;

use common::{checker, context, lf, literal, pred, scalar_clause, scalar_quantifier};
use oddity_core::alternatives::strengthen;
use oddity_core::judge::{predict, Rule, StepOutput};
use oddity_core::{
    enumerate_models, eval, exh, judge, primary_implicatures, secondary_implicatures, substitution_alternatives,
    ContextState, JudgeOptions, LogicalForm as Lf, Mechanism, PredExpr, PredicateSym, Scenario,
    Signature, Strength, Theory, Verdict,
};
use proptest::prelude::*;

fn clause_steps(ctx: &ContextState, target: &Lf, rule: Rule) -> Vec<StepOutput> {
    predict(Theory::MagriBlind, target, ctx, &JudgeOptions::default())
        .unwrap()
        .trace
        .into_iter()
        .filter(|s| s.rule == rule)
        .map(|s| s.output)
        .collect()
}

/// Contexts whose background only constrains how the restrictor `a` relates
/// to `b` and `c`, and which presuppose that there are `a`s.
fn restrictor_literal() -> BoxedStrategy<Lf> {
    (scalar_quantifier(), prop::sample::select(&["b", "c"][..]), any::<bool>())
        .prop_map(|(q, s, neg)| {
            let c = Lf::quant(q, "a", s);
            if neg {
                Lf::not(c)
            } else {
                c
            }
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exh_strengthens(f in lf(2)) {
        let c = checker(3);
        let alts = substitution_alternatives(&f, &c).unwrap();
        let e = exh(&f, &alts, &c).unwrap();
        prop_assert!(c.entails([&e], &f).unwrap());
    }

    #[test]
    fn exh_is_idempotent(f in lf(2)) {
        let c = checker(3);
        let alts = substitution_alternatives(&f, &c).unwrap();
        let once = exh(&f, &alts, &c).unwrap();
        let twice = strengthen(&once, alts.stronger(), &c).unwrap();
        prop_assert!(c.equivalent(&once, &twice).unwrap());
    }

    #[test]
    fn only_matches_exhaustification(q in scalar_quantifier(), r in pred(), s in pred()) {
        let c = checker(4);
        let clause = Lf::quant(q, r, s);
        let mates: Vec<Lf> = c.scales().stronger_mates(q).into_iter().map(|m| Lf::quant(m, r, s)).collect();
        let guarded = mates.iter().all(|m| c.consistent([&clause, &Lf::not(m.clone())]).unwrap());
        let e = strengthen(&clause, &mates, &c).unwrap();
        let only = Lf::only(clause.clone());
        if guarded {
            for m in enumerate_models(c.signature().predicates(), 4, 24).unwrap() {
                prop_assert_eq!(eval(&only, &m, c.scales()).unwrap(), eval(&e, &m, c.scales()).unwrap());
            }
        } else {
            prop_assert!(!c.consistent([&only]).unwrap());
        }
    }

    #[test]
    fn alternatives_are_well_formed(f in lf(2)) {
        let c = checker(3);
        let alts = substitution_alternatives(&f, &c).unwrap();
        prop_assert!(!alts.contains(&f));
        let origin_ranks: Vec<u8> = f.quantifiers().iter().map(|q| q.complexity_rank()).collect();
        for a in alts.members() {
            let ranks: Vec<u8> = a.form.quantifiers().iter().map(|q| q.complexity_rank()).collect();
            prop_assert_eq!(ranks.len(), origin_ranks.len());
            prop_assert!(ranks.iter().zip(&origin_ranks).all(|(r, o)| r <= o));
            let exists = oddity_core::presupposition::existence_presuppositions([&f]);
            let down = c.entails(exists.iter().chain([&a.form]), &f).unwrap();
            let up = c.entails(exists.iter().chain([&f]), &a.form).unwrap();
            let expected = match (down, up) {
                (true, false) => Strength::Stronger,
                (false, true) => Strength::Weaker,
                _ => Strength::Incomparable,
            };
            prop_assert_eq!(a.strength, expected);
        }
    }

    #[test]
    fn secondaries_have_primaries(f in lf(2)) {
        let c = checker(3);
        let prim = primary_implicatures(&substitution_alternatives(&f, &c).unwrap());
        let set = secondary_implicatures(&f, &prim, &c).unwrap();
        let targets = set.primary_targets();
        for s in set.secondary_targets() {
            prop_assert!(targets.contains(&s));
        }
    }

    #[test]
    fn exhaustification_is_blind(
        target in prop_oneof![scalar_clause(1), lf(2)],
        first in prop::collection::vec(literal(), 0..3),
        second in prop::collection::vec(literal(), 0..3),
    ) {
        let a = context(first, vec![], 3);
        let b = context(second, vec![], 3);
        for rule in [Rule::Alternatives, Rule::Exh, Rule::PrimaryImplicatures, Rule::SecondaryImplicatures] {
            prop_assert_eq!(clause_steps(&a, &target, rule), clause_steps(&b, &target, rule));
        }
    }

    #[test]
    fn traces_replay(
        target in lf(2),
        ck in prop::collection::vec(literal(), 0..3),
        discourse in prop::collection::vec(literal(), 0..2),
    ) {
        let ctx = context(ck, discourse, 3);
        for theory in Theory::ALL {
            let v = predict(theory, &target, &ctx, &JudgeOptions::default()).unwrap();
            for step in &v.trace {
                prop_assert_eq!(&step.replay(&ctx).unwrap(), &step.output, "{}", step.rule.name());
            }
        }
    }

    #[test]
    fn sequencing_blocks_the_indirect_route(
        q in scalar_quantifier(),
        x in pred(),
        y in pred(),
        only in any::<bool>(),
        ck in prop::collection::vec(literal(), 0..4),
    ) {
        let clause = Lf::quant(q, "a", PredExpr::and_conc(PredExpr::and_seq(x, y), "c"));
        let target = if only { Lf::only(clause) } else { clause };
        let ctx = context(ck, vec![], 3);
        let v = predict(Theory::IndirectContextualContradiction, &target, &ctx, &JudgeOptions::default()).unwrap();
        prop_assert_eq!(v.verdict(), Verdict::Felicitous);
        prop_assert!(v.trace.iter().any(|s| s.output.to_string() == "sequenced-split: predictor skipped"));
    }

    #[test]
    fn settling_discourse_never_creates_oddness(
        only in any::<bool>(),
        ck in prop::collection::vec(restrictor_literal(), 0..3),
        more in prop::collection::vec(restrictor_literal(), 1..3),
    ) {
        let clause = Lf::some("a", PredExpr::and_conc("b", "c"));
        let target = if only { Lf::only(clause) } else { clause };
        let mut ck = ck;
        ck.insert(0, Lf::exists("a"));
        let before = context(ck, vec![], 3);
        let after = context(before.common_knowledge().to_vec(), more, 3);
        prop_assume!(after.common_knowledge() == before.common_knowledge());
        let opts = JudgeOptions::default();
        let theory = Theory::IndirectContextualContradiction;
        if !predict(theory, &target, &before, &opts).unwrap().fired() {
            prop_assert!(!predict(theory, &target, &after, &opts).unwrap().fired());
        }
    }
}

fn italians(target: Lf) -> Scenario {
    let mut s = Scenario::new("italians", Signature::stative(["italian", "warm", "blond"]).unwrap(), target);
    s.common_knowledge = vec![Lf::all("italian", "warm"), Lf::exists("italian")];
    s
}

fn portugal(target: Lf) -> Scenario {
    let sig = Signature::new([
        PredicateSym::stative("portugal"),
        PredicateSym::stative("tall"),
        PredicateSym::eventive("won"),
        PredicateSym::eventive("left"),
    ])
    .unwrap();
    let mut s = Scenario::new("portugal", sig, target);
    s.common_knowledge = vec![Lf::all("portugal", "won"), Lf::exists("portugal")];
    s
}

#[test]
fn judgments_are_stable_across_bounds() {
    let wb = PredExpr::and_conc("warm", "blond");
    let scenarios = [
        italians(Lf::some("italian", "warm")),
        italians(Lf::only(Lf::some("italian", "warm"))),
        italians(Lf::only(Lf::some("italian", wb.clone()))),
        italians(Lf::and(Lf::some("italian", "warm"), Lf::some("italian", "blond"))),
        italians(Lf::and(Lf::all("italian", "warm"), Lf::only(Lf::some("italian", "blond")))),
        portugal(Lf::some("portugal", PredExpr::and_conc("won", "tall"))),
        portugal(Lf::some("portugal", PredExpr::and_seq("won", "left"))),
    ];
    for base in scenarios {
        let outcomes: Vec<(Verdict, Vec<Mechanism>)> = [3, 4, 5]
            .into_iter()
            .map(|bound| {
                let mut s = base.clone();
                s.max_universe = bound;
                let j = judge(&s).unwrap();
                (j.aggregate, j.theories.iter().map(|t| t.mechanism).collect())
            })
            .collect();
        assert!(outcomes.windows(2).all(|w| w[0] == w[1]), "{}: {outcomes:?}", base.target);
    }
}

#[test]
fn core_contrast() {
    let one = judge(&italians(Lf::some("italian", "warm"))).unwrap();
    assert!(one.theory(Theory::MagriBlind).unwrap().fired());

    let four = judge(&italians(Lf::only(Lf::some("italian", PredExpr::and_conc("warm", "blond"))))).unwrap();
    assert_eq!(four.aggregate, Verdict::Odd);
    let firing: Vec<Theory> = four.firing().map(|t| t.theory).collect();
    assert_eq!(firing, [Theory::IndirectContextualContradiction]);
}

#[test]
fn discourse_can_expose_background_knowledge() {
    // Every warm Italian is blond: once the discourse says all Italians are
    // warm, "all Italians are blond" becomes certain without being settled.
    let target = Lf::some("italian", PredExpr::and_conc("warm", "blond"));
    let mut s = italians(target.clone());
    s.common_knowledge =
        vec![Lf::exists("italian"), Lf::no("italian", PredExpr::and_conc("warm", PredExpr::not("blond")))];
    let before = s.context().unwrap();
    let after = before.update_discourse(&Lf::all("italian", "warm")).unwrap();
    let theory = Theory::IndirectContextualContradiction;
    let opts = JudgeOptions::default();
    assert!(!predict(theory, &target, &before, &opts).unwrap().fired());
    assert!(predict(theory, &target, &after, &opts).unwrap().fired());
}
