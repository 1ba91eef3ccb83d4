mod common;

use common::{pexpr, quantifier};
use oddity_core::{parse_lf, LogicalForm as Lf, PredExpr};
use proptest::prelude::*;

fn ident() -> impl Strategy<Value = String> {
    "[a-zA-Z_][a-zA-Z0-9_'-]{0,7}".prop_filter("reserved", |s| oddity_core::syntax::is_identifier(s))
}

fn scope(depth: u32) -> BoxedStrategy<PredExpr> {
    let leaf = prop_oneof![4 => ident().prop_map(PredExpr::atom), 1 => Just(PredExpr::True)];
    leaf.prop_recursive(depth, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(PredExpr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PredExpr::and_conc(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| PredExpr::and_seq(a, b)),
        ]
    })
    .boxed()
}

/// Forms of depth at most five with arbitrary identifiers.
fn any_lf() -> BoxedStrategy<Lf> {
    let clause = (quantifier(), ident(), scope(2)).prop_map(|(q, r, s)| Lf::quant(q, r, s));
    clause
        .prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(Lf::only),
                inner.clone().prop_map(Lf::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Lf::and(a, b)),
                prop::collection::vec(inner.clone(), 1..=3).prop_map(Lf::or),
                inner.clone().prop_map(Lf::know),
                inner.prop_map(Lf::poss),
            ]
        })
        .prop_filter("depth", |f| f.depth() <= 5)
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn render_then_parse_is_identity(f in any_lf()) {
        let text = f.to_string();
        prop_assert_eq!(parse_lf(&text).unwrap(), f);
        prop_assert!(!text.contains("  "));
        prop_assert_eq!(text.trim(), text.as_str());
    }

    #[test]
    fn scopes_survive_whitespace(p in pexpr(3)) {
        let f = Lf::some("a", p);
        let spaced = f.to_string().replace(' ', "\n  \t").replace('(', "( ");
        prop_assert_eq!(parse_lf(&spaced).unwrap(), f);
    }

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,40}") {
        let _ = parse_lf(&text);
    }

    #[test]
    fn near_misses_never_panic(f in any_lf(), cut in 0usize..64) {
        let text = f.to_string();
        let cut = cut.min(text.len());
        let _ = parse_lf(&text[..cut]);
        let _ = parse_lf(&text.replacen(')', "", 1));
    }
}
