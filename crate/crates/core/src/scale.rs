//! Horn scales and the indefinite-number expansion.

use alloc::vec;
use alloc::vec::Vec;

use crate::checker::ModelChecker;
use crate::formula::{LogicalForm, PredExpr, Quantifier};
use crate::model::Signature;
use crate::{Error, Result};

/// Quantifiers ordered from weakest to strongest.
///
/// Construction checks that each member is strictly stronger than the one
/// before it on nonempty restrictors, by bounded entailment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scale {
    members: Vec<Quantifier>,
}

impl Scale {
    pub fn new(members: impl IntoIterator<Item = Quantifier>) -> Result<Self> {
        let members: Vec<Quantifier> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyScale);
        }
        for (i, q) in members.iter().enumerate() {
            if members[..i].contains(q) {
                return Err(Error::DuplicateScaleMember(*q));
            }
        }
        // Strength is checked in an abstract two-predicate vocabulary where
        // `a` is assumed nonempty.
        let checker = ModelChecker::new(
            Signature::stative(["a", "b"]).expect("distinct names"),
            ScaleRegistry::empty(),
            4,
        );
        let exists = LogicalForm::exists("a");
        for pair in members.windows(2) {
            let (weaker, stronger) = (pair[0], pair[1]);
            let w = LogicalForm::quant(weaker, "a", "b");
            let s = LogicalForm::quant(stronger, "a", "b");
            if !checker.entails([&exists, &s], &w)? || checker.entails([&exists, &w], &s)? {
                return Err(Error::ScaleOrder { weaker, stronger });
            }
        }
        Ok(Scale { members })
    }

    /// The default ⟨some, most, all⟩ scale.
    pub fn some_most_all() -> Self {
        Scale { members: vec![Quantifier::Some, Quantifier::Most, Quantifier::All] }
    }

    pub fn members(&self) -> &[Quantifier] {
        &self.members
    }

    pub fn contains(&self, q: Quantifier) -> bool {
        self.members.contains(&q)
    }

    pub fn position(&self, q: Quantifier) -> Option<usize> {
        self.members.iter().position(|&m| m == q)
    }

    /// Members strictly stronger than `q`, strongest first.
    pub fn stronger_than(&self, q: Quantifier) -> Vec<Quantifier> {
        match self.position(q) {
            Some(i) => self.members[i + 1..].iter().rev().copied().collect(),
            None => Vec::new(),
        }
    }
}

/// The scales declared for a scenario.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaleRegistry {
    scales: Vec<Scale>,
}

impl Default for ScaleRegistry {
    fn default() -> Self {
        ScaleRegistry { scales: vec![Scale::some_most_all()] }
    }
}

impl ScaleRegistry {
    pub fn new(scales: Vec<Scale>) -> Self {
        ScaleRegistry { scales }
    }

    pub fn empty() -> Self {
        ScaleRegistry { scales: Vec::new() }
    }

    pub fn scales(&self) -> &[Scale] {
        &self.scales
    }

    pub fn contains(&self, q: Quantifier) -> bool {
        self.scales.iter().any(|s| s.contains(q))
    }

    /// Strictly stronger mates of `q` across every scale containing it,
    /// strongest first per scale, without duplicates.
    pub fn stronger_mates(&self, q: Quantifier) -> Vec<Quantifier> {
        let mut out = Vec::new();
        for s in &self.scales {
            for m in s.stronger_than(q) {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Scale-mates of `q` that are at most as complex as `q`, strongest first.
    pub fn substitutes(&self, q: Quantifier) -> Vec<Quantifier> {
        let mut out = Vec::new();
        for s in self.scales.iter().filter(|s| s.contains(q)) {
            for &m in s.members().iter().rev() {
                if m != q && m.complexity_rank() <= q.complexity_rank() && !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// The scale used to expand the indefinite-number quantifier.
    pub fn expansion_scale(&self) -> Option<&Scale> {
        self.scales.iter().find(|s| s.contains(Quantifier::Some))
    }
}

/// The disjunction of every scale-mate at most as complex as `some`,
/// strongest first and including `some` itself.
pub fn expand_qi(restrictor: &str, scope: &PredExpr, scale: &Scale) -> Result<LogicalForm> {
    if scale.members().is_empty() {
        return Err(Error::EmptyScale);
    }
    if !scale.contains(Quantifier::Some) {
        return Err(Error::NoSomeInScale);
    }
    let rank = Quantifier::Some.complexity_rank();
    Ok(LogicalForm::or(
        scale
            .members()
            .iter()
            .rev()
            .filter(|q| q.complexity_rank() <= rank)
            .map(|&q| LogicalForm::quant(q, restrictor, scope.clone()))
            .collect(),
    ))
}
