//! Scenario files.
//!
//! ```text
//! (scenario NAME
//!   (individuals N)
//!   (predicates (IDENT :stative|:eventive) ...)
//!   (scales (QUANT ...) ...)
//!   (common-knowledge LF ...)
//!   (discourse LF ...)
//!   (target LF)
//!   (continuations LF ...)
//!   (theories THEORY ...)
//!   (expect odd|felicitous))
//! ```
//!
//! Only `predicates` and `target` are required. Sections may come in any
//! order but at most once each.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use oddity_core::sexp::{self, Pos, Sexp};
use oddity_core::syntax::{lf_from_sexp, ParseErrorKind};
use oddity_core::{
    Error as CoreError, LogicalForm, ParseError, PredicateSym, Quantifier, Scale, ScaleRegistry, Scenario,
    Signature, TemporalClass, Theory, Verdict,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("{pos}: {message}")]
    Invalid { pos: Pos, message: String },
    #[error("{pos}: predicate `{name}` declared twice")]
    DuplicatePredicate { pos: Pos, name: String },
    #[error("{pos}: section `{section}` appears twice")]
    DuplicateSection { pos: Pos, section: String },
    #[error("{pos}: missing `({section} ...)` section")]
    MissingSection { pos: Pos, section: &'static str },
    #[error("{pos}: `only` needs a clause whose quantifier is on a declared scale: {form}")]
    OnlyNeedsScalarClause { pos: Pos, form: LogicalForm },
    #[error("{pos}: `know`/`poss` may not appear in a scenario: {form}")]
    Epistemic { pos: Pos, form: LogicalForm },
    #[error("{pos}: {source}")]
    Scale { pos: Pos, source: CoreError },
    #[error("inconsistent common knowledge and discourse; minimal inconsistent subset: {}", render_forms(.core))]
    Inconsistent { core: Vec<LogicalForm> },
    #[error(transparent)]
    Core(CoreError),
}

impl ScenarioError {
    pub fn pos(&self) -> Option<Pos> {
        match self {
            ScenarioError::Syntax(e) => Some(e.pos),
            ScenarioError::Invalid { pos, .. }
            | ScenarioError::DuplicatePredicate { pos, .. }
            | ScenarioError::DuplicateSection { pos, .. }
            | ScenarioError::MissingSection { pos, .. }
            | ScenarioError::OnlyNeedsScalarClause { pos, .. }
            | ScenarioError::Epistemic { pos, .. }
            | ScenarioError::Scale { pos, .. } => Some(*pos),
            ScenarioError::Inconsistent { .. } | ScenarioError::Core(_) => None,
        }
    }
}

impl From<CoreError> for ScenarioError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InconsistentContext(core) => ScenarioError::Inconsistent { core },
            other => ScenarioError::Core(other),
        }
    }
}

fn render_forms(forms: &[LogicalForm]) -> String {
    oddity_core::syntax::render_all(forms)
}

fn invalid(pos: Pos, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid { pos, message: message.into() }
}

const SECTIONS: [&str; 9] = [
    "individuals",
    "predicates",
    "scales",
    "common-knowledge",
    "discourse",
    "target",
    "continuations",
    "theories",
    "expect",
];

fn atom<'a>(s: &'a Sexp, what: &str) -> Result<&'a str, ScenarioError> {
    s.as_atom().ok_or_else(|| invalid(s.pos(), format!("expected {what}")))
}

fn single<'a>(pos: Pos, section: &str, args: &'a [Sexp]) -> Result<&'a Sexp, ScenarioError> {
    match args {
        [one] => Ok(one),
        _ => Err(invalid(pos, format!("`{section}` takes exactly one argument, found {}", args.len()))),
    }
}

fn predicates(args: &[Sexp]) -> Result<Signature, ScenarioError> {
    let mut syms: Vec<PredicateSym> = Vec::new();
    for decl in args {
        let parts = decl.as_list().ok_or_else(|| invalid(decl.pos(), "expected `(NAME :stative|:eventive)`"))?;
        let [name, class] = parts else {
            return Err(invalid(decl.pos(), "expected `(NAME :stative|:eventive)`"));
        };
        let name_text = atom(name, "a predicate name")?;
        if !oddity_core::syntax::is_identifier(name_text) {
            return Err(invalid(name.pos(), format!("`{name_text}` is not a valid predicate name")));
        }
        let temporal = match atom(class, "`:stative` or `:eventive`")? {
            ":stative" => TemporalClass::Stative,
            ":eventive" => TemporalClass::Eventive,
            other => return Err(invalid(class.pos(), format!("unknown temporal class `{other}`"))),
        };
        if syms.iter().any(|s| s.name == name_text) {
            return Err(ScenarioError::DuplicatePredicate { pos: name.pos(), name: name_text.into() });
        }
        syms.push(PredicateSym::new(name_text, temporal));
    }
    Ok(Signature::new(syms)?)
}

fn scales(args: &[Sexp]) -> Result<ScaleRegistry, ScenarioError> {
    let mut out = Vec::new();
    for decl in args {
        let items = decl.as_list().ok_or_else(|| invalid(decl.pos(), "expected a list of quantifiers"))?;
        let mut members = Vec::new();
        for item in items {
            let word = atom(item, "a quantifier")?;
            let q = Quantifier::from_keyword(word)
                .ok_or_else(|| invalid(item.pos(), format!("unknown quantifier `{word}`")))?;
            members.push(q);
        }
        out.push(Scale::new(members).map_err(|source| ScenarioError::Scale { pos: decl.pos(), source })?);
    }
    Ok(ScaleRegistry::new(out))
}

fn check_only(lf: &LogicalForm, scales: &ScaleRegistry, pos: Pos) -> Result<(), ScenarioError> {
    match lf {
        LogicalForm::Quant { .. } => Ok(()),
        LogicalForm::Only(inner) => match &**inner {
            LogicalForm::Quant { quantifier, .. } if scales.contains(*quantifier) => Ok(()),
            _ => Err(ScenarioError::OnlyNeedsScalarClause { pos, form: lf.clone() }),
        },
        LogicalForm::Not(inner) => check_only(inner, scales, pos),
        LogicalForm::And(a, b) => {
            check_only(a, scales, pos)?;
            check_only(b, scales, pos)
        }
        LogicalForm::Or(ds) => ds.iter().try_for_each(|d| check_only(d, scales, pos)),
        LogicalForm::Know(_) | LogicalForm::Poss(_) => Err(ScenarioError::Epistemic { pos, form: lf.clone() }),
    }
}

fn formula(s: &Sexp, sig: &Signature, scales: &ScaleRegistry) -> Result<LogicalForm, ScenarioError> {
    let lf = lf_from_sexp(s, Some(sig))?;
    check_only(&lf, scales, s.pos())?;
    Ok(lf)
}

/// Parses and validates one `(scenario ...)` form.
///
/// The context is checked for consistency at the declared bound; an
/// inconsistent one is rejected with a minimal inconsistent subset.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let top = sexp::read_one(text)?;
    let items = top.as_list().ok_or_else(|| invalid(top.pos(), "expected `(scenario NAME ...)`"))?;
    let (head, rest) = items.split_first().ok_or_else(|| invalid(top.pos(), "expected `(scenario NAME ...)`"))?;
    if head.as_atom() != Some("scenario") {
        return Err(invalid(head.pos(), "expected `(scenario NAME ...)`"));
    }
    let (name, sections) = rest.split_first().ok_or_else(|| invalid(top.pos(), "missing scenario name"))?;
    let name = atom(name, "a scenario name")?.to_string();

    let mut found: BTreeMap<&str, (Pos, &[Sexp])> = BTreeMap::new();
    for section in sections {
        let parts = section.as_list().ok_or_else(|| invalid(section.pos(), "expected a `(section ...)` form"))?;
        let Some((key, args)) = parts.split_first() else {
            return Err(invalid(section.pos(), "empty section"));
        };
        let key_text = atom(key, "a section name")?;
        let Some(&key_static) = SECTIONS.iter().find(|s| **s == key_text) else {
            return Err(invalid(key.pos(), format!("unknown section `{key_text}`")));
        };
        if found.insert(key_static, (section.pos(), args)).is_some() {
            return Err(ScenarioError::DuplicateSection { pos: section.pos(), section: key_static.into() });
        }
    }

    let (pred_pos, pred_args) =
        *found.get("predicates").ok_or(ScenarioError::MissingSection { pos: top.pos(), section: "predicates" })?;
    let signature = predicates(pred_args)?;
    if signature.is_empty() {
        return Err(invalid(pred_pos, "at least one predicate must be declared"));
    }
    let registry = match found.get("scales") {
        Some((_, args)) => scales(args)?,
        None => ScaleRegistry::default(),
    };
    let forms = |key: &str| -> Result<Vec<LogicalForm>, ScenarioError> {
        match found.get(key) {
            Some((_, args)) => args.iter().map(|s| formula(s, &signature, &registry)).collect(),
            None => Ok(Vec::new()),
        }
    };
    let common_knowledge = forms("common-knowledge")?;
    let discourse = forms("discourse")?;
    let continuations = forms("continuations")?;
    let (target_pos, target_args) =
        *found.get("target").ok_or(ScenarioError::MissingSection { pos: top.pos(), section: "target" })?;
    let target = formula(single(target_pos, "target", target_args)?, &signature, &registry)?;

    let mut scenario = Scenario::new(name, signature, target);
    scenario.scales = registry;
    scenario.common_knowledge = common_knowledge;
    scenario.discourse = discourse;
    scenario.continuations = continuations;

    if let Some((pos, args)) = found.get("individuals") {
        let n = single(*pos, "individuals", args)?;
        let text = atom(n, "a positive integer")?;
        scenario.max_universe = match text.parse::<usize>() {
            Ok(k) if (1..=64).contains(&k) => k,
            _ => return Err(invalid(n.pos(), format!("`{text}` is not an individual count between 1 and 64"))),
        };
    }
    if let Some((pos, args)) = found.get("theories") {
        if args.is_empty() {
            return Err(invalid(*pos, "`theories` needs at least one theory"));
        }
        let mut enabled = Vec::new();
        for t in *args {
            let word = atom(t, "a theory name")?;
            let theory = Theory::from_name(word).ok_or_else(|| invalid(t.pos(), format!("unknown theory `{word}`")))?;
            if !enabled.contains(&theory) {
                enabled.push(theory);
            }
        }
        scenario.enabled = enabled;
    }
    if let Some((pos, args)) = found.get("expect") {
        let v = single(*pos, "expect", args)?;
        let word = atom(v, "`odd` or `felicitous`")?;
        scenario.expect =
            Some(Verdict::from_name(word).ok_or_else(|| invalid(v.pos(), format!("unknown verdict `{word}`")))?);
    }

    scenario.context()?;
    Ok(scenario)
}

/// Writes every section explicitly, defaults included.
pub fn render_scenario(s: &Scenario) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "(scenario {}", s.name);
    let _ = writeln!(out, "  (individuals {})", s.max_universe);
    out.push_str("  (predicates");
    for p in s.signature.predicates() {
        let _ = write!(out, " ({} {})", p.name, p.temporal.keyword());
    }
    out.push_str(")\n  (scales");
    for scale in s.scales.scales() {
        let words: Vec<&str> = scale.members().iter().map(|q| q.keyword()).collect();
        let _ = write!(out, " ({})", words.join(" "));
    }
    out.push_str(")\n");
    let section = |out: &mut String, key: &str, forms: &[LogicalForm]| {
        let _ = write!(out, "  ({key}");
        for f in forms {
            let _ = write!(out, "\n    {f}");
        }
        out.push_str(")\n");
    };
    section(&mut out, "common-knowledge", &s.common_knowledge);
    section(&mut out, "discourse", &s.discourse);
    let _ = writeln!(out, "  (target {})", s.target);
    if !s.continuations.is_empty() {
        section(&mut out, "continuations", &s.continuations);
    }
    let names: Vec<&str> = s.enabled.iter().map(|t| t.name()).collect();
    let _ = write!(out, "  (theories {})", names.join(" "));
    if let Some(v) = s.expect {
        let _ = write!(out, "\n  (expect {})", v.name());
    }
    out.push_str(")\n");
    out
}

/// The kind of a syntax error, if that is what `e` is.
pub fn syntax_kind(e: &ScenarioError) -> Option<&ParseErrorKind> {
    match e {
        ScenarioError::Syntax(p) => Some(&p.kind),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use oddity_core::PredExpr;

    const FOUR: &str = "
        (scenario magri-4
          (individuals 4)
          (predicates (italian :stative) (warm :stative) (blond :stative))
          (scales (some most all))
          (common-knowledge (all italian warm) (some italian true))
          (discourse)
          (target (only (some italian (and-conc warm blond))))
          (expect odd))";

    #[test]
    fn parses_a_full_scenario() {
        let s = parse_scenario(FOUR).unwrap();
        assert_eq!(s.name, "magri-4");
        assert_eq!(s.target, LogicalForm::only(LogicalForm::some("italian", PredExpr::and_conc("warm", "blond"))));
        assert_eq!(s.expect, Some(Verdict::Odd));
        assert_eq!(s.common_knowledge.len(), 2);
        assert_eq!(s.enabled, Theory::ALL);
    }

    #[test]
    fn defaults() {
        let s = parse_scenario("(scenario t (predicates (a :stative) (b :stative)) (target (some a b)))").unwrap();
        assert_eq!(s.max_universe, 4);
        assert_eq!(s.scales, ScaleRegistry::default());
        assert_eq!(s.enabled, Theory::ALL);
        assert_eq!(s.expect, None);
    }

    #[test]
    fn rendering_reparses() {
        let s = parse_scenario(FOUR).unwrap();
        assert_eq!(parse_scenario(&render_scenario(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_bad_scenarios() {
        let dup = "(scenario t (predicates (a :stative) (a :eventive)) (target (some a a)))";
        assert!(matches!(parse_scenario(dup), Err(ScenarioError::DuplicatePredicate { .. })));

        let undeclared = "(scenario t (predicates (a :stative)) (target (some a b)))";
        let err = parse_scenario(undeclared).unwrap_err();
        assert_eq!(syntax_kind(&err), Some(&ParseErrorKind::Undeclared("b".into())));
        assert_eq!(err.pos(), Some(Pos { line: 1, column: 55 }));

        let stative_seq = "(scenario t (predicates (a :stative) (b :stative)) (target (some a (and-seq a b))))";
        assert!(matches!(
            syntax_kind(&parse_scenario(stative_seq).unwrap_err()),
            Some(ParseErrorKind::SequencedStative(_))
        ));

        let only_no = "(scenario t (predicates (a :stative)) (target (only (no a a))))";
        assert!(matches!(parse_scenario(only_no), Err(ScenarioError::OnlyNeedsScalarClause { .. })));

        let know = "(scenario t (predicates (a :stative)) (target (know (some a a))))";
        assert!(matches!(parse_scenario(know), Err(ScenarioError::Epistemic { .. })));

        let no_target = "(scenario t (predicates (a :stative)))";
        assert!(matches!(parse_scenario(no_target), Err(ScenarioError::MissingSection { section: "target", .. })));

        let bad_scale = "(scenario t (predicates (a :stative)) (scales (all some)) (target (some a a)))";
        assert!(matches!(parse_scenario(bad_scale), Err(ScenarioError::Scale { .. })));
    }

    #[test]
    fn rejects_inconsistent_context_with_a_core() {
        let text = "
            (scenario t
              (predicates (italian :stative) (warm :stative))
              (common-knowledge (all italian warm) (some italian true))
              (discourse (not (some italian warm)))
              (target (some italian warm)))";
        match parse_scenario(text) {
            Err(ScenarioError::Inconsistent { core }) => assert_eq!(core.len(), 3),
            other => panic!("{other:?}"),
        }
    }
}
