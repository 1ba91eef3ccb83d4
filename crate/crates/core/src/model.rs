//! Finite models over monadic predicates and their exhaustive enumeration.
//!
//! Individuals are numbered `0..size` and labelled `e0, e1, ...`; each
//! predicate's extension is a bitset over the universe, so universes are
//! limited to 64 individuals.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::formula::{Ident, PredicateSym, TemporalClass};
use crate::{Error, Result};

/// Default cap on `size * predicates` extension bits per enumerated universe.
pub const DEFAULT_BUDGET_BITS: u32 = 24;

/// The declared predicates of a scenario, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    preds: Vec<PredicateSym>,
}

impl Signature {
    pub fn new(preds: impl IntoIterator<Item = PredicateSym>) -> Result<Self> {
        let mut sig = Signature::default();
        for p in preds {
            if sig.get(&p.name).is_some() {
                return Err(Error::DuplicatePredicate(p.name));
            }
            sig.preds.push(p);
        }
        Ok(sig)
    }

    /// All predicates stative.
    pub fn stative<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        Self::new(names.into_iter().map(PredicateSym::stative))
    }

    pub fn get(&self, name: &str) -> Option<&PredicateSym> {
        self.preds.iter().find(|p| p.name == name)
    }

    pub fn temporal_class(&self, name: &str) -> Option<TemporalClass> {
        self.get(name).map(|p| p.temporal)
    }

    pub fn predicates(&self) -> &[PredicateSym] {
        &self.preds
    }

    pub fn len(&self) -> usize {
        self.preds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preds.is_empty()
    }

    /// The sub-signature naming exactly `names`, in declaration order.
    pub fn restrict(&self, names: &BTreeSet<&str>) -> Result<Signature> {
        if let Some(missing) = names.iter().find(|n| self.get(n).is_none()) {
            return Err(Error::Undeclared((*missing).into()));
        }
        Ok(Signature { preds: self.preds.iter().filter(|p| names.contains(p.name.as_str())).cloned().collect() })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Model {
    size: usize,
    names: Arc<[Ident]>,
    extensions: Vec<u64>,
}

impl Model {
    /// Builds a model from explicit extensions given as individual indices.
    pub fn new<'a>(size: usize, extensions: impl IntoIterator<Item = (&'a str, &'a [usize])>) -> Result<Self> {
        if size > 64 {
            return Err(Error::UniverseTooLarge(size));
        }
        let mut names = Vec::new();
        let mut masks = Vec::new();
        for (name, members) in extensions {
            if names.iter().any(|n: &Ident| n == name) {
                return Err(Error::DuplicatePredicate(name.into()));
            }
            let mut mask = 0u64;
            for &x in members {
                if x >= size {
                    return Err(Error::NotAMember { predicate: name.into(), individual: x });
                }
                mask |= 1 << x;
            }
            names.push(Ident::from(name));
            masks.push(mask);
        }
        Ok(Model { size, names: names.into(), extensions: masks })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn universe_mask(&self) -> u64 {
        mask_of_size(self.size)
    }

    pub fn label(x: usize) -> String {
        format!("e{x}")
    }

    pub fn predicate_names(&self) -> &[Ident] {
        &self.names
    }

    /// Extension bitset, or `None` when the predicate is not interpreted.
    pub fn extension(&self, name: &str) -> Option<u64> {
        self.names.iter().position(|n| n == name).map(|i| self.extensions[i])
    }

    pub fn members(&self, name: &str) -> Option<Vec<usize>> {
        self.extension(name).map(|mask| (0..self.size).filter(|x| mask >> x & 1 == 1).collect())
    }
}

impl fmt::Debug for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|U|={}", self.size)?;
        for (name, mask) in self.names.iter().zip(&self.extensions) {
            write!(f, " {name}={{")?;
            let mut first = true;
            for x in (0..self.size).filter(|x| mask >> x & 1 == 1) {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                write!(f, "e{x}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

pub(crate) fn mask_of_size(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// Every model over a fixed predicate list for each universe size in a range,
/// in a canonical order: by size, then by the binary counter whose `j`-th
/// block of `size` bits is the extension of predicate `j`.
#[derive(Clone)]
pub struct Models {
    names: Arc<[Ident]>,
    size: usize,
    last_size: usize,
    counter: u64,
    exhausted: bool,
}

impl Models {
    pub fn sized(preds: &[PredicateSym], sizes: RangeInclusive<usize>, budget: u32) -> Result<Self> {
        let k = preds.len();
        let (&first, &last) = (sizes.start(), sizes.end());
        if last > 64 {
            return Err(Error::UniverseTooLarge(last));
        }
        if last.saturating_mul(k) > budget as usize {
            return Err(Error::Budget { size: last, predicates: k, budget });
        }
        Ok(Models {
            names: preds.iter().map(|p| p.name.clone()).collect(),
            size: first,
            last_size: last,
            counter: 0,
            exhausted: first > last,
        })
    }

    fn bits(&self) -> usize {
        self.size * self.names.len()
    }

    /// Number of models still to be produced.
    pub fn remaining(&self) -> u64 {
        if self.exhausted {
            return 0;
        }
        let k = self.names.len();
        let here = (1u64 << self.bits()) - self.counter;
        here + (self.size + 1..=self.last_size).map(|n| 1u64 << (n * k)).sum::<u64>()
    }
}

impl Iterator for Models {
    type Item = Model;

    fn next(&mut self) -> Option<Model> {
        if self.exhausted {
            return None;
        }
        let n = self.size;
        let mask = mask_of_size(n);
        let extensions = (0..self.names.len())
            .map(|j| if n == 0 { 0 } else { (self.counter >> (j * n)) & mask })
            .collect();
        let model = Model { size: n, names: self.names.clone(), extensions };

        self.counter += 1;
        if self.counter == 1u64 << self.bits() {
            self.counter = 0;
            if self.size == self.last_size {
                self.exhausted = true;
            } else {
                self.size += 1;
            }
        }
        Some(model)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining()).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// Every model with universe size `0..=max_universe`.
pub fn enumerate_models(preds: &[PredicateSym], max_universe: usize, budget: u32) -> Result<Models> {
    Models::sized(preds, 0..=max_universe, budget)
}
