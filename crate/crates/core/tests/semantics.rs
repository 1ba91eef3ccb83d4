mod common;

use common::{checker, lf, pexpr, pred, quantifier};
use oddity_core::formula::PredicateSym;
use oddity_core::{enumerate_models, eval, expand_qi, LogicalForm as Lf, PredExpr, Quantifier, Scale, ScaleRegistry};
use proptest::prelude::*;

fn stative(names: &[&str]) -> Vec<PredicateSym> {
    names.iter().map(|n| PredicateSym::stative(*n)).collect()
}

#[test]
fn quantifiers_are_conservative() {
    let reg = ScaleRegistry::default();
    let mut checked = 0;
    for m in enumerate_models(&stative(&["a", "b"]), 4, 24).unwrap() {
        for q in [Quantifier::Some, Quantifier::All, Quantifier::Most, Quantifier::No] {
            let plain = eval(&Lf::quant(q, "a", "b"), &m, &reg).unwrap();
            let restricted = eval(&Lf::quant(q, "a", PredExpr::and_conc("a", "b")), &m, &reg).unwrap();
            assert_eq!(plain, restricted, "{} on {m}", q.keyword());
            checked += 1;
        }
    }
    assert_eq!(checked, (1 + 4 + 16 + 64 + 256) * 4);
}

#[test]
fn scale_is_monotone_on_nonempty_restrictors() {
    let reg = ScaleRegistry::default();
    for m in enumerate_models(&stative(&["a", "b"]), 4, 24).unwrap() {
        if m.extension("a").unwrap() == 0 {
            continue;
        }
        let holds = |q| eval(&Lf::quant(q, "a", "b"), &m, &reg).unwrap();
        assert!(!holds(Quantifier::All) || holds(Quantifier::Most), "{m}");
        assert!(!holds(Quantifier::Most) || holds(Quantifier::Some), "{m}");
    }
}

#[test]
fn conjunction_entails_each_indefinite_conjunct() {
    let c = checker(4);
    let four = Lf::some("a", PredExpr::and_conc("b", "c"));
    assert!(c.entails([&four], &Lf::qi("a", "b")).unwrap());
    assert!(c.entails([&four], &Lf::qi("a", "c")).unwrap());
    let disj = expand_qi("a", &PredExpr::atom("b"), &Scale::some_most_all()).unwrap();
    let qi = Lf::qi("a", "b");
    assert!(c.entails([&qi], &disj).unwrap());
    assert!(c.entails([&Lf::exists("a"), &disj], &qi).unwrap());
    assert!(!c.entails([&disj], &qi).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concurrent_conjunction_commutes(q in quantifier(), r in pred(), x in pexpr(1), y in pexpr(1)) {
        let c = checker(4);
        let xy = Lf::quant(q, r, PredExpr::and_conc(x.clone(), y.clone()));
        let yx = Lf::quant(q, r, PredExpr::and_conc(y, x));
        prop_assert!(c.equivalent(&xy, &yx).unwrap());
    }

    #[test]
    fn entailment_is_reflexive(f in lf(2)) {
        prop_assert!(checker(3).entails([&f], &f).unwrap());
    }

    #[test]
    fn entailment_is_transitive(f in lf(2), g in lf(2), h in lf(2)) {
        let c = checker(3);
        if c.entails([&f], &g).unwrap() && c.entails([&g], &h).unwrap() {
            prop_assert!(c.entails([&f], &h).unwrap());
        }
    }

    #[test]
    fn entailment_matches_inconsistency_of_the_negation(f in lf(3), g in lf(3)) {
        let c = checker(3);
        let negated = Lf::not(g.clone());
        prop_assert_eq!(c.entails([&f], &g).unwrap(), !c.consistent([&f, &negated]).unwrap());
    }

    #[test]
    fn countermodels_refute(f in lf(2), g in lf(2)) {
        let c = checker(3);
        if let Some(m) = c.countermodel([&f], &g).unwrap() {
            prop_assert!(eval(&f, &m, c.scales()).unwrap());
            prop_assert!(!eval(&g, &m, c.scales()).unwrap());
        }
    }
}
