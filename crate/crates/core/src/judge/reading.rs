use crate::formula::LogicalForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    ConcurrentCollective,
    SequencedSplit,
    DistributiveSentential,
    Simple,
}

impl Reading {
    pub const ALL: [Reading; 4] =
        [Reading::ConcurrentCollective, Reading::SequencedSplit, Reading::DistributiveSentential, Reading::Simple];

    pub fn name(self) -> &'static str {
        match self {
            Reading::ConcurrentCollective => "concurrent-collective",
            Reading::SequencedSplit => "sequenced-split",
            Reading::DistributiveSentential => "distributive-sentential",
            Reading::Simple => "simple",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Reading::ALL.into_iter().find(|r| r.name() == name)
    }
}

/// Sequencing anywhere wins; then a top-level conjunction of two clauses;
/// then a concurrent conjunction in some scope.
pub fn analyze_reading(lf: &LogicalForm) -> Reading {
    let scopes = lf.scopes();
    if scopes.iter().any(|s| s.contains_and_seq()) {
        return Reading::SequencedSplit;
    }
    if let LogicalForm::And(a, b) = lf {
        if a.is_clause() && b.is_clause() {
            return Reading::DistributiveSentential;
        }
    }
    if scopes.iter().any(|s| s.contains_and_conc() && s.is_intersective_conjunction()) {
        return Reading::ConcurrentCollective;
    }
    Reading::Simple
}
