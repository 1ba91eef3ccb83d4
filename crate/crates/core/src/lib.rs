//! Finite-model semantics and oddness prediction for quantified sentences.
//!
//! The crate evaluates logical forms built from generalized quantifiers over
//! monadic predicates, decides bounded entailment by enumerating every model
//! up to a size bound, derives scalar alternatives and implicatures, and runs
//! five competing predictors of sentence oddness against a two-tier context
//! (background common knowledge vs. the explicit discourse record).
//!
//! Everything here is pure and allocation-only; file formats and the
//! command-line driver live in the `oddity` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alternatives;
pub mod checker;
pub mod context;
mod error;
pub mod eval;
pub mod formula;
pub mod implicature;
pub mod judge;
pub mod model;
pub mod presupposition;
pub mod scale;
pub mod sexp;
pub mod syntax;

pub use alternatives::{exh, prune_settled, substitution_alternatives, Alternative, AlternativeSet, Strength};
pub use checker::ModelChecker;
pub use context::{ContextState, WorldSet};
pub use error::Error;
pub use eval::{eval, eval_pexpr};
pub use formula::{Ident, LogicalForm, PredExpr, PredicateSym, Quantifier, TemporalClass};
pub use implicature::{disjunction_ignorance, primary_implicatures, secondary_implicatures, ImplicatureSet};
pub use judge::{
    judge, judge_with, JudgeOptions, Judgment, Mechanism, Reading, Scenario, Theory, TheoryVerdict,
    Verdict,
};
pub use model::{enumerate_models, Model, Models, Signature, DEFAULT_BUDGET_BITS};
pub use presupposition::{presup_strictly_stronger, presupposition, Presup, PresupVariant};
pub use scale::{expand_qi, Scale, ScaleRegistry};
pub use syntax::{parse_lf, parse_lf_checked, ParseError};

pub type Result<T, E = Error> = core::result::Result<T, E>;
