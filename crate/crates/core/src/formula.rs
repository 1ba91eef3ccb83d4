//! Logical forms: quantified clauses over monadic predicates, combined with
//! classical connectives, `only`, and the certainty/possibility operators.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

pub type Ident = String;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemporalClass {
    Stative,
    Eventive,
}

impl TemporalClass {
    pub fn keyword(self) -> &'static str {
        match self {
            TemporalClass::Stative => ":stative",
            TemporalClass::Eventive => ":eventive",
        }
    }
}

/// A declared one-place predicate. The temporal class is fixed at
/// declaration and decides whether the predicate may be sequenced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PredicateSym {
    pub name: Ident,
    pub temporal: TemporalClass,
}

impl PredicateSym {
    pub fn new(name: impl Into<Ident>, temporal: TemporalClass) -> Self {
        PredicateSym { name: name.into(), temporal }
    }

    pub fn stative(name: impl Into<Ident>) -> Self {
        Self::new(name, TemporalClass::Stative)
    }

    pub fn eventive(name: impl Into<Ident>) -> Self {
        Self::new(name, TemporalClass::Eventive)
    }
}

/// Predicate expressions in the scope of a quantifier.
///
/// `AndConc` is intersection. `AndSeq` has the same truth conditions but is
/// not commutative at the level of readings: it marks two events that happen
/// one after the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PredExpr {
    Atom(Ident),
    True,
    Not(Box<PredExpr>),
    AndConc(Box<PredExpr>, Box<PredExpr>),
    AndSeq(Box<PredExpr>, Box<PredExpr>),
}

impl PredExpr {
    pub fn atom(name: impl Into<Ident>) -> Self {
        PredExpr::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: impl Into<PredExpr>) -> Self {
        PredExpr::Not(Box::new(p.into()))
    }

    pub fn and_conc(a: impl Into<PredExpr>, b: impl Into<PredExpr>) -> Self {
        PredExpr::AndConc(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn and_seq(a: impl Into<PredExpr>, b: impl Into<PredExpr>) -> Self {
        PredExpr::AndSeq(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn contains_and_seq(&self) -> bool {
        match self {
            PredExpr::Atom(_) | PredExpr::True => false,
            PredExpr::Not(p) => p.contains_and_seq(),
            PredExpr::AndConc(a, b) => a.contains_and_seq() || b.contains_and_seq(),
            PredExpr::AndSeq(..) => true,
        }
    }

    pub fn contains_and_conc(&self) -> bool {
        match self {
            PredExpr::Atom(_) | PredExpr::True => false,
            PredExpr::Not(p) => p.contains_and_conc(),
            PredExpr::AndConc(..) => true,
            PredExpr::AndSeq(a, b) => a.contains_and_conc() || b.contains_and_conc(),
        }
    }

    /// False iff a sequenced conjunction occurs anywhere in the expression.
    pub fn is_intersective_conjunction(&self) -> bool {
        !self.contains_and_seq()
    }

    /// Splits nested concurrent conjunctions into their conjunct list.
    pub fn conc_conjuncts(&self) -> Vec<&PredExpr> {
        match self {
            PredExpr::AndConc(a, b) => {
                let mut out = a.conc_conjuncts();
                out.extend(b.conc_conjuncts());
                out
            }
            other => alloc::vec![other],
        }
    }

    pub fn atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            PredExpr::Atom(name) => {
                out.insert(name);
            }
            PredExpr::True => {}
            PredExpr::Not(p) => p.atoms(out),
            PredExpr::AndConc(a, b) | PredExpr::AndSeq(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }
}

impl From<&str> for PredExpr {
    fn from(name: &str) -> Self {
        PredExpr::Atom(name.into())
    }
}

impl From<Ident> for PredExpr {
    fn from(name: Ident) -> Self {
        PredExpr::Atom(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Some,
    All,
    Most,
    No,
    /// An indefinite number; existential truth conditions, with its
    /// alternatives supplied by [`crate::expand_qi`].
    Qi,
}

impl Quantifier {
    pub const ALL: [Quantifier; 5] =
        [Quantifier::Some, Quantifier::All, Quantifier::Most, Quantifier::No, Quantifier::Qi];

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Some => "some",
            Quantifier::All => "all",
            Quantifier::Most => "most",
            Quantifier::No => "no",
            Quantifier::Qi => "qi",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|q| q.keyword() == word)
    }

    /// Every quantifier here is a single lexical item.
    pub fn complexity_rank(self) -> u8 {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicalForm {
    Quant { quantifier: Quantifier, restrictor: Ident, scope: PredExpr },
    Only(Box<LogicalForm>),
    Not(Box<LogicalForm>),
    And(Box<LogicalForm>, Box<LogicalForm>),
    Or(Vec<LogicalForm>),
    Know(Box<LogicalForm>),
    Poss(Box<LogicalForm>),
}

impl LogicalForm {
    pub fn quant(quantifier: Quantifier, restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        LogicalForm::Quant { quantifier, restrictor: restrictor.into(), scope: scope.into() }
    }

    pub fn some(restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        Self::quant(Quantifier::Some, restrictor, scope)
    }

    pub fn all(restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        Self::quant(Quantifier::All, restrictor, scope)
    }

    pub fn most(restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        Self::quant(Quantifier::Most, restrictor, scope)
    }

    pub fn no(restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        Self::quant(Quantifier::No, restrictor, scope)
    }

    pub fn qi(restrictor: impl Into<Ident>, scope: impl Into<PredExpr>) -> Self {
        Self::quant(Quantifier::Qi, restrictor, scope)
    }

    /// "There are R": `(some R true)`.
    pub fn exists(restrictor: impl Into<Ident>) -> Self {
        Self::quant(Quantifier::Some, restrictor, PredExpr::True)
    }

    pub fn only(lf: LogicalForm) -> Self {
        LogicalForm::Only(Box::new(lf))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(lf: LogicalForm) -> Self {
        LogicalForm::Not(Box::new(lf))
    }

    pub fn and(a: LogicalForm, b: LogicalForm) -> Self {
        LogicalForm::And(Box::new(a), Box::new(b))
    }

    pub fn or(disjuncts: Vec<LogicalForm>) -> Self {
        LogicalForm::Or(disjuncts)
    }

    pub fn know(lf: LogicalForm) -> Self {
        LogicalForm::Know(Box::new(lf))
    }

    pub fn poss(lf: LogicalForm) -> Self {
        LogicalForm::Poss(Box::new(lf))
    }

    /// Left-nested conjunction of `first` with every element of `rest`.
    pub fn conjoin(first: LogicalForm, rest: impl IntoIterator<Item = LogicalForm>) -> Self {
        rest.into_iter().fold(first, LogicalForm::and)
    }

    pub fn is_epistemic_free(&self) -> bool {
        match self {
            LogicalForm::Quant { .. } => true,
            LogicalForm::Only(lf) | LogicalForm::Not(lf) => lf.is_epistemic_free(),
            LogicalForm::And(a, b) => a.is_epistemic_free() && b.is_epistemic_free(),
            LogicalForm::Or(ds) => ds.iter().all(LogicalForm::is_epistemic_free),
            LogicalForm::Know(_) | LogicalForm::Poss(_) => false,
        }
    }

    pub fn contains_only(&self) -> bool {
        match self {
            LogicalForm::Quant { .. } => false,
            LogicalForm::Only(_) => true,
            LogicalForm::Not(lf) | LogicalForm::Know(lf) | LogicalForm::Poss(lf) => lf.contains_only(),
            LogicalForm::And(a, b) => a.contains_only() || b.contains_only(),
            LogicalForm::Or(ds) => ds.iter().any(LogicalForm::contains_only),
        }
    }

    /// A quantified clause, possibly under `only`.
    pub fn is_clause(&self) -> bool {
        match self {
            LogicalForm::Quant { .. } => true,
            LogicalForm::Only(inner) => matches!(**inner, LogicalForm::Quant { .. }),
            _ => false,
        }
    }

    /// The quantified clause under an optional `only`.
    pub fn prejacent(&self) -> Option<&LogicalForm> {
        match self {
            LogicalForm::Quant { .. } => Some(self),
            LogicalForm::Only(inner) if matches!(**inner, LogicalForm::Quant { .. }) => Some(inner),
            _ => None,
        }
    }

    /// Visits every quantified clause, left to right.
    pub fn for_each_quant<'a>(&'a self, f: &mut impl FnMut(Quantifier, &'a str, &'a PredExpr)) {
        match self {
            LogicalForm::Quant { quantifier, restrictor, scope } => f(*quantifier, restrictor, scope),
            LogicalForm::Only(lf) | LogicalForm::Not(lf) | LogicalForm::Know(lf) | LogicalForm::Poss(lf) => {
                lf.for_each_quant(f)
            }
            LogicalForm::And(a, b) => {
                a.for_each_quant(f);
                b.for_each_quant(f);
            }
            LogicalForm::Or(ds) => ds.iter().for_each(|d| d.for_each_quant(f)),
        }
    }

    /// Every predicate name mentioned, as restrictor or inside a scope.
    pub fn predicates<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        self.for_each_quant(&mut |_, restrictor, scope| {
            out.insert(restrictor);
            scope.atoms(out);
        });
    }

    /// Restrictors in order of first appearance.
    pub fn restrictors(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        self.for_each_quant(&mut |_, restrictor, _| {
            if !out.contains(&restrictor) {
                out.push(restrictor);
            }
        });
        out
    }

    pub fn scopes(&self) -> Vec<&PredExpr> {
        let mut out = Vec::new();
        self.for_each_quant(&mut |_, _, scope| out.push(scope));
        out
    }

    pub fn quantifiers(&self) -> Vec<Quantifier> {
        let mut out = Vec::new();
        self.for_each_quant(&mut |q, _, _| out.push(q));
        out
    }

    /// Rebuilds the form with its quantified clauses' quantifiers replaced,
    /// left to right, by `replacement`.
    pub fn with_quantifiers(&self, replacement: &[Quantifier]) -> LogicalForm {
        let mut iter = replacement.iter().copied();
        let out = self.substitute(&mut iter);
        debug_assert!(iter.next().is_none());
        out
    }

    fn substitute(&self, qs: &mut impl Iterator<Item = Quantifier>) -> LogicalForm {
        match self {
            LogicalForm::Quant { quantifier, restrictor, scope } => LogicalForm::Quant {
                quantifier: qs.next().unwrap_or(*quantifier),
                restrictor: restrictor.clone(),
                scope: scope.clone(),
            },
            LogicalForm::Only(lf) => LogicalForm::only(lf.substitute(qs)),
            LogicalForm::Not(lf) => LogicalForm::not(lf.substitute(qs)),
            LogicalForm::Know(lf) => LogicalForm::know(lf.substitute(qs)),
            LogicalForm::Poss(lf) => LogicalForm::poss(lf.substitute(qs)),
            LogicalForm::And(a, b) => {
                let a = a.substitute(qs);
                LogicalForm::and(a, b.substitute(qs))
            }
            LogicalForm::Or(ds) => LogicalForm::Or(ds.iter().map(|d| d.substitute(qs)).collect()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LogicalForm::Quant { .. } => 1,
            LogicalForm::Only(lf) | LogicalForm::Not(lf) | LogicalForm::Know(lf) | LogicalForm::Poss(lf) => {
                1 + lf.depth()
            }
            LogicalForm::And(a, b) => 1 + a.depth().max(b.depth()),
            LogicalForm::Or(ds) => 1 + ds.iter().map(LogicalForm::depth).max().unwrap_or(0),
        }
    }
}
