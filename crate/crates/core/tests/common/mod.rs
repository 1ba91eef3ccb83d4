#![allow(dead_code)]

use oddity_core::{
    ContextState, LogicalForm, ModelChecker, PredExpr, Quantifier, ScaleRegistry, Signature,
};
use proptest::prelude::*;

pub const PREDS: [&str; 3] = ["a", "b", "c"];

pub fn signature() -> Signature {
    Signature::stative(PREDS).unwrap()
}

pub fn checker(bound: usize) -> ModelChecker {
    ModelChecker::new(signature(), ScaleRegistry::default(), bound)
}

pub fn pred() -> impl Strategy<Value = &'static str> {
    prop::sample::select(&PREDS[..])
}

pub fn quantifier() -> impl Strategy<Value = Quantifier> {
    prop::sample::select(&Quantifier::ALL[..])
}

pub fn scalar_quantifier() -> impl Strategy<Value = Quantifier> {
    prop::sample::select(&[Quantifier::Some, Quantifier::Most, Quantifier::All][..])
}

pub fn pexpr(depth: u32) -> BoxedStrategy<PredExpr> {
    let leaf = prop_oneof![4 => pred().prop_map(PredExpr::atom), 1 => Just(PredExpr::True)];
    leaf.prop_recursive(depth, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(PredExpr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PredExpr::and_conc(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| PredExpr::and_seq(a, b)),
        ]
    })
    .boxed()
}

pub fn clause(scope_depth: u32) -> BoxedStrategy<LogicalForm> {
    (quantifier(), pred(), pexpr(scope_depth)).prop_map(|(q, r, s)| LogicalForm::quant(q, r, s)).boxed()
}

/// A clause whose quantifier sits on the default scale.
pub fn scalar_clause(scope_depth: u32) -> BoxedStrategy<LogicalForm> {
    (scalar_quantifier(), pred(), pexpr(scope_depth)).prop_map(|(q, r, s)| LogicalForm::quant(q, r, s)).boxed()
}

/// Epistemic-free forms of bounded depth.
pub fn lf(depth: u32) -> BoxedStrategy<LogicalForm> {
    let leaf = prop_oneof![
        4 => clause(1),
        1 => scalar_clause(1).prop_map(LogicalForm::only),
    ];
    leaf.prop_recursive(depth, 12, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(LogicalForm::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| LogicalForm::and(a, b)),
            prop::collection::vec(inner, 2..=3).prop_map(LogicalForm::or),
        ]
    })
    .boxed()
}

/// Quantified literals over atomic scopes.
pub fn literal() -> BoxedStrategy<LogicalForm> {
    (quantifier(), pred(), pred(), any::<bool>())
        .prop_map(|(q, r, s, neg)| {
            let c = LogicalForm::quant(q, r, s);
            if neg {
                LogicalForm::not(c)
            } else {
                c
            }
        })
        .boxed()
}

/// Keeps the forms that are jointly consistent with what came before.
pub fn consistent_prefix(forms: Vec<LogicalForm>, checker: &ModelChecker) -> Vec<LogicalForm> {
    let mut kept: Vec<LogicalForm> = Vec::new();
    for f in forms {
        kept.push(f);
        if !checker.consistent(&kept).unwrap() {
            kept.pop();
        }
    }
    kept
}

pub fn context(ck: Vec<LogicalForm>, discourse: Vec<LogicalForm>, bound: usize) -> ContextState {
    let c = checker(bound);
    let ck = consistent_prefix(ck, &c);
    let mut all = ck.clone();
    let mut kept_discourse = Vec::new();
    for d in discourse {
        all.push(d.clone());
        if c.consistent(&all).unwrap() {
            kept_discourse.push(d);
        } else {
            all.pop();
        }
    }
    ContextState::new(ck, kept_discourse, c).unwrap()
}
