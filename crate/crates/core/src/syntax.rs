//! Concrete syntax for logical forms.
//!
//! ```text
//! lf    ::= "(" quant ident pexpr ")" | "(only" lf ")" | "(not" lf ")"
//!         | "(and" lf lf ")" | "(or" lf+ ")" | "(know" lf ")" | "(poss" lf ")"
//! quant ::= "some" | "all" | "most" | "no" | "qi"
//! pexpr ::= ident | "true" | "(not" pexpr ")"
//!         | "(and-conc" pexpr pexpr ")" | "(and-seq" pexpr pexpr ")"
//! ```
//!
//! Rendering is canonical: lowercase keywords, single spaces, no operand
//! reordering. `parse_lf(&lf.to_string())` gives back `lf`.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::formula::{LogicalForm, PredExpr, Quantifier, TemporalClass};
use crate::model::Signature;
use crate::sexp::{self, Pos, Sexp};

pub const KEYWORDS: [&str; 14] = [
    "some", "all", "most", "no", "qi", "only", "not", "and", "or", "know", "poss", "true", "and-conc", "and-seq",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unclosed,
    UnexpectedClose,
    UnexpectedChar(char),
    Empty,
    TrailingInput,
    ExpectedList,
    EmptyList,
    ExpectedIdent(String),
    Reserved(String),
    Arity { operator: String, expected: &'static str, found: usize },
    UnknownQuantifier(String),
    UnknownOperator(String),
    Undeclared(String),
    /// `and-seq` with a conjunct that has no eventive predicate.
    SequencedStative(String),
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError { pos, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.pos)?;
        match &self.kind {
            ParseErrorKind::Unclosed => f.write_str("unclosed form"),
            ParseErrorKind::UnexpectedClose => f.write_str("unexpected `)`"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::Empty => f.write_str("empty input"),
            ParseErrorKind::TrailingInput => f.write_str("trailing input after form"),
            ParseErrorKind::ExpectedList => f.write_str("expected a parenthesized form"),
            ParseErrorKind::EmptyList => f.write_str("empty form `()`"),
            ParseErrorKind::ExpectedIdent(got) => write!(f, "expected an identifier, found `{got}`"),
            ParseErrorKind::Reserved(word) => write!(f, "`{word}` is a reserved word"),
            ParseErrorKind::Arity { operator, expected, found } => {
                write!(f, "`{operator}` takes {expected}, found {found}")
            }
            ParseErrorKind::UnknownQuantifier(q) => write!(f, "unknown quantifier `{q}`"),
            ParseErrorKind::UnknownOperator(op) => write!(f, "unknown predicate operator `{op}`"),
            ParseErrorKind::Undeclared(name) => write!(f, "undeclared predicate `{name}`"),
            ParseErrorKind::SequencedStative(form) => {
                write!(f, "and-seq needs an eventive predicate in each conjunct: {form}")
            }
            ParseErrorKind::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for ParseError {}

pub fn is_identifier(word: &str) -> bool {
    let mut chars = word.chars();
    let Some(first) = chars.next() else { return false };
    (first.is_ascii_alphabetic() || first == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '\''))
        && !KEYWORDS.contains(&word)
}

/// Parses a single logical form without checking predicate declarations.
pub fn parse_lf(text: &str) -> Result<LogicalForm, ParseError> {
    lf_from_sexp(&sexp::read_one(text)?, None)
}

/// Parses a single logical form, checking that every predicate is declared
/// and that sequenced conjuncts are eventive.
pub fn parse_lf_checked(text: &str, signature: &Signature) -> Result<LogicalForm, ParseError> {
    lf_from_sexp(&sexp::read_one(text)?, Some(signature))
}

fn ident(sexp: &Sexp, signature: Option<&Signature>) -> Result<String, ParseError> {
    let pos = sexp.pos();
    match sexp {
        Sexp::Atom(word, _) if is_identifier(word) => {
            if let Some(sig) = signature {
                if sig.get(word).is_none() {
                    return Err(ParseError::new(pos, ParseErrorKind::Undeclared(word.clone())));
                }
            }
            Ok(word.clone())
        }
        Sexp::Atom(word, _) if KEYWORDS.contains(&word.as_str()) => {
            Err(ParseError::new(pos, ParseErrorKind::Reserved(word.clone())))
        }
        Sexp::Atom(word, _) => Err(ParseError::new(pos, ParseErrorKind::ExpectedIdent(word.clone()))),
        Sexp::List(..) => Err(ParseError::new(pos, ParseErrorKind::ExpectedIdent("(...)".into()))),
    }
}

fn split_list(sexp: &Sexp) -> Result<(&str, &[Sexp]), ParseError> {
    match sexp {
        Sexp::Atom(..) => Err(ParseError::new(sexp.pos(), ParseErrorKind::ExpectedList)),
        Sexp::List(items, pos) => match items.split_first() {
            None => Err(ParseError::new(*pos, ParseErrorKind::EmptyList)),
            Some((Sexp::Atom(head, _), rest)) => Ok((head, rest)),
            Some((head, _)) => Err(ParseError::new(head.pos(), ParseErrorKind::ExpectedIdent("(...)".into()))),
        },
    }
}

fn arity(sexp: &Sexp, operator: &str, args: &[Sexp], expected: &'static str, ok: bool) -> Result<(), ParseError> {
    if ok {
        Ok(())
    } else {
        Err(ParseError::new(sexp.pos(), ParseErrorKind::Arity { operator: operator.into(), expected, found: args.len() }))
    }
}

pub fn lf_from_sexp(sexp: &Sexp, signature: Option<&Signature>) -> Result<LogicalForm, ParseError> {
    let (head, args) = split_list(sexp)?;
    let unary = |name: &str| -> Result<Box<LogicalForm>, ParseError> {
        arity(sexp, name, args, "one form", args.len() == 1)?;
        Ok(Box::new(lf_from_sexp(&args[0], signature)?))
    };
    Ok(match head {
        "only" => LogicalForm::Only(unary(head)?),
        "not" => LogicalForm::Not(unary(head)?),
        "know" => LogicalForm::Know(unary(head)?),
        "poss" => LogicalForm::Poss(unary(head)?),
        "and" => {
            arity(sexp, head, args, "two forms", args.len() == 2)?;
            LogicalForm::and(lf_from_sexp(&args[0], signature)?, lf_from_sexp(&args[1], signature)?)
        }
        "or" => {
            arity(sexp, head, args, "at least one form", !args.is_empty())?;
            LogicalForm::Or(args.iter().map(|a| lf_from_sexp(a, signature)).collect::<Result<_, _>>()?)
        }
        word => {
            let Some(quantifier) = Quantifier::from_keyword(word) else {
                return Err(ParseError::new(sexp.pos(), ParseErrorKind::UnknownQuantifier(word.into())));
            };
            arity(sexp, word, args, "a restrictor and a scope", args.len() == 2)?;
            LogicalForm::Quant {
                quantifier,
                restrictor: ident(&args[0], signature)?,
                scope: pexpr_from_sexp(&args[1], signature)?,
            }
        }
    })
}

pub fn pexpr_from_sexp(sexp: &Sexp, signature: Option<&Signature>) -> Result<PredExpr, ParseError> {
    if let Sexp::Atom(word, _) = sexp {
        return if word == "true" { Ok(PredExpr::True) } else { Ok(PredExpr::Atom(ident(sexp, signature)?)) };
    }
    let (head, args) = split_list(sexp)?;
    let binary = |name: &str| -> Result<(Box<PredExpr>, Box<PredExpr>), ParseError> {
        arity(sexp, name, args, "two predicate expressions", args.len() == 2)?;
        Ok((Box::new(pexpr_from_sexp(&args[0], signature)?), Box::new(pexpr_from_sexp(&args[1], signature)?)))
    };
    Ok(match head {
        "not" => {
            arity(sexp, head, args, "one predicate expression", args.len() == 1)?;
            PredExpr::Not(Box::new(pexpr_from_sexp(&args[0], signature)?))
        }
        "and-conc" => {
            let (a, b) = binary(head)?;
            PredExpr::AndConc(a, b)
        }
        "and-seq" => {
            let (a, b) = binary(head)?;
            let seq = PredExpr::AndSeq(a, b);
            if let Some(sig) = signature {
                check_sequenced(&seq, sig).map_err(|kind| ParseError::new(sexp.pos(), kind))?;
            }
            seq
        }
        other => return Err(ParseError::new(sexp.pos(), ParseErrorKind::UnknownOperator(other.into()))),
    })
}

fn has_eventive_atom(p: &PredExpr, sig: &Signature) -> bool {
    let mut atoms = alloc::collections::BTreeSet::new();
    p.atoms(&mut atoms);
    atoms.iter().any(|a| sig.temporal_class(a) == Some(TemporalClass::Eventive))
}

fn check_sequenced(p: &PredExpr, sig: &Signature) -> Result<(), ParseErrorKind> {
    if let PredExpr::AndSeq(a, b) = p {
        if !has_eventive_atom(a, sig) || !has_eventive_atom(b, sig) {
            return Err(ParseErrorKind::SequencedStative(alloc::format!("{p}")));
        }
    }
    Ok(())
}

/// Checks well-formedness of an already-built form against a signature:
/// declared predicates and eventive sequenced conjuncts.
pub fn check_against(lf: &LogicalForm, sig: &Signature) -> Result<(), ParseErrorKind> {
    let mut result = Ok(());
    lf.for_each_quant(&mut |_, restrictor, scope| {
        if result.is_err() {
            return;
        }
        let mut names = alloc::collections::BTreeSet::new();
        names.insert(restrictor);
        scope.atoms(&mut names);
        if let Some(missing) = names.iter().find(|n| sig.get(n).is_none()) {
            result = Err(ParseErrorKind::Undeclared((*missing).into()));
            return;
        }
        result = walk_sequenced(scope, sig);
    });
    result
}

fn walk_sequenced(p: &PredExpr, sig: &Signature) -> Result<(), ParseErrorKind> {
    match p {
        PredExpr::Atom(_) | PredExpr::True => Ok(()),
        PredExpr::Not(q) => walk_sequenced(q, sig),
        PredExpr::AndConc(a, b) => {
            walk_sequenced(a, sig)?;
            walk_sequenced(b, sig)
        }
        PredExpr::AndSeq(a, b) => {
            check_sequenced(p, sig)?;
            walk_sequenced(a, sig)?;
            walk_sequenced(b, sig)
        }
    }
}

impl fmt::Display for PredExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredExpr::Atom(name) => f.write_str(name),
            PredExpr::True => f.write_str("true"),
            PredExpr::Not(p) => write!(f, "(not {p})"),
            PredExpr::AndConc(a, b) => write!(f, "(and-conc {a} {b})"),
            PredExpr::AndSeq(a, b) => write!(f, "(and-seq {a} {b})"),
        }
    }
}

impl fmt::Display for LogicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicalForm::Quant { quantifier, restrictor, scope } => {
                write!(f, "({} {restrictor} {scope})", quantifier.keyword())
            }
            LogicalForm::Only(lf) => write!(f, "(only {lf})"),
            LogicalForm::Not(lf) => write!(f, "(not {lf})"),
            LogicalForm::And(a, b) => write!(f, "(and {a} {b})"),
            LogicalForm::Or(ds) => {
                f.write_str("(or")?;
                for d in ds {
                    write!(f, " {d}")?;
                }
                f.write_str(")")
            }
            LogicalForm::Know(lf) => write!(f, "(know {lf})"),
            LogicalForm::Poss(lf) => write!(f, "(poss {lf})"),
        }
    }
}

/// Renders a list of forms separated by single spaces.
pub fn render_all(forms: &[LogicalForm]) -> String {
    let mut out = String::new();
    for (i, lf) in forms.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&alloc::format!("{lf}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{LogicalForm as Lf, PredicateSym};
    use alloc::string::ToString;

    #[test]
    fn parses_basic_forms() {
        assert_eq!(
            parse_lf("(some italian (and-conc warm blond))").unwrap(),
            Lf::some("italian", PredExpr::and_conc("warm", "blond"))
        );
        assert_eq!(parse_lf("(only (some italian warm))").unwrap(), Lf::only(Lf::some("italian", "warm")));
        assert_eq!(
            parse_lf("  (or (all a b)\n (most a b) (some a true))").unwrap(),
            Lf::or(alloc::vec![Lf::all("a", "b"), Lf::most("a", "b"), Lf::exists("a")])
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_lf("(some italian").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Unclosed);
        assert_eq!(err.pos, Pos { line: 1, column: 1 });

        let err = parse_lf("(and (some a b))").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Arity { found: 1, .. }));

        let err = parse_lf("(many a b)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownQuantifier("many".into()));

        let err = parse_lf("(some a\n  (and-also b c))").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownOperator("and-also".into()));
        assert_eq!(err.pos, Pos { line: 2, column: 3 });

        assert_eq!(parse_lf("(some true b)").unwrap_err().kind, ParseErrorKind::Reserved("true".into()));
        assert_eq!(parse_lf("warm").unwrap_err().kind, ParseErrorKind::ExpectedList);
        assert_eq!(parse_lf("()").unwrap_err().kind, ParseErrorKind::EmptyList);
    }

    #[test]
    fn checked_parse_validates_declarations_and_sequencing() {
        let sig = Signature::new([
            PredicateSym::stative("portugal"),
            PredicateSym::eventive("won"),
            PredicateSym::eventive("left"),
            PredicateSym::stative("tall"),
        ])
        .unwrap();
        assert!(parse_lf_checked("(some portugal (and-seq won left))", &sig).is_ok());
        assert!(matches!(
            parse_lf_checked("(some portugal (and-seq won tall))", &sig).unwrap_err().kind,
            ParseErrorKind::SequencedStative(_)
        ));
        assert_eq!(
            parse_lf_checked("(some portugal blond)", &sig).unwrap_err().kind,
            ParseErrorKind::Undeclared("blond".into())
        );
        let unchecked = parse_lf("(some portugal (and-seq tall tall))").unwrap();
        assert!(matches!(check_against(&unchecked, &sig), Err(ParseErrorKind::SequencedStative(_))));
    }

    #[test]
    fn rendering_is_canonical() {
        let lf = Lf::and(
            Lf::not(Lf::only(Lf::some("a", PredExpr::and_conc("c", "b")))),
            Lf::know(Lf::or(alloc::vec![Lf::all("a", PredExpr::not("b"))])),
        );
        let text = lf.to_string();
        assert_eq!(text, "(and (not (only (some a (and-conc c b)))) (know (or (all a (not b)))))");
        assert_eq!(parse_lf(&text).unwrap(), lf);
    }
}
