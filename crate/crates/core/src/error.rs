use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Ident, LogicalForm, Quantifier};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A formula mentions a predicate that was never declared.
    Undeclared(Ident),
    DuplicatePredicate(Ident),
    /// `eval` reached a `know`/`poss` node; those need a context.
    EpistemicContextRequired,
    /// An epistemic operator appeared where only epistemic-free forms are allowed.
    UnsupportedNesting(LogicalForm),
    NotInScale(Quantifier),
    OnlyNeedsClause(LogicalForm),
    EmptyScale,
    DuplicateScaleMember(Quantifier),
    /// Adjacent scale members are not strictly ordered by strength.
    ScaleOrder { weaker: Quantifier, stronger: Quantifier },
    NoSomeInScale,
    /// Model enumeration would need more than `budget` extension bits.
    Budget { size: usize, predicates: usize, budget: u32 },
    UniverseTooLarge(usize),
    NotAMember { predicate: Ident, individual: usize },
    /// Common knowledge and discourse admit no model; carries a minimal
    /// inconsistent subset.
    InconsistentContext(Vec<LogicalForm>),
    UpdateContradiction(LogicalForm),
    PresuppositionUndefined(LogicalForm),
    NotADisjunction(LogicalForm),
    IllFormed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Undeclared(name) => write!(f, "undeclared predicate `{name}`"),
            Error::DuplicatePredicate(name) => write!(f, "predicate `{name}` declared twice"),
            Error::EpistemicContextRequired => {
                f.write_str("epistemic operator needs a context; use k_holds/p_holds")
            }
            Error::UnsupportedNesting(lf) => {
                write!(f, "epistemic operators are not supported here: {lf}")
            }
            Error::NotInScale(q) => write!(f, "quantifier `{}` belongs to no declared scale", q.keyword()),
            Error::OnlyNeedsClause(lf) => write!(f, "`only` must apply to a quantified clause: {lf}"),
            Error::EmptyScale => f.write_str("empty scale"),
            Error::DuplicateScaleMember(q) => write!(f, "`{}` appears twice in a scale", q.keyword()),
            Error::ScaleOrder { weaker, stronger } => write!(
                f,
                "`{}` is not strictly stronger than `{}` on nonempty restrictors",
                stronger.keyword(),
                weaker.keyword()
            ),
            Error::NoSomeInScale => f.write_str("scale does not contain `some`"),
            Error::Budget { size, predicates, budget } => write!(
                f,
                "enumerating universes of size {size} over {predicates} predicates exceeds the {budget}-bit budget"
            ),
            Error::UniverseTooLarge(n) => write!(f, "universe of size {n} exceeds 64 individuals"),
            Error::NotAMember { predicate, individual } => {
                write!(f, "extension of `{predicate}` names e{individual}, outside the universe")
            }
            Error::InconsistentContext(core) => {
                f.write_str("common knowledge and discourse are inconsistent:")?;
                for lf in core {
                    write!(f, " {lf}")?;
                }
                Ok(())
            }
            Error::UpdateContradiction(lf) => write!(f, "update with {lf} contradicts the context"),
            Error::PresuppositionUndefined(lf) => write!(f, "no presupposition defined for {lf}"),
            Error::NotADisjunction(lf) => write!(f, "expected a disjunction of at least two forms: {lf}"),
            Error::IllFormed(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
