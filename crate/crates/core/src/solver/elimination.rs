//! Exact sequential elimination with a fully reduced substitution map.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use super::constraints::ConstraintId;
use super::forms::{AffineForm, QuadraticForm, Unknown};
use crate::scalar::Rational;

/// One pivot as it was derived: `pivot = form`, with `form` in the unknowns that were free
/// at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub source: ConstraintId,
    pub pivot: Unknown,
    pub form: AffineForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageCount {
    pub stage: String,
    /// Free unknowns after the stage.
    pub free: usize,
}

/// Result of adding one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The row reduced to zero.
    Redundant,
    Pivot(Unknown),
    /// The row reduced to this nonzero constant.
    Contradiction(Rational),
}

#[derive(Clone, Debug)]
pub struct EliminationState {
    dim: usize,
    forced_zero: BTreeSet<Unknown>,
    /// Every value is expressed in free unknowns only.
    substitutions: BTreeMap<Unknown, AffineForm>,
    /// Free unknown -> substituted unknowns whose value mentions it.
    occurrences: HashMap<Unknown, BTreeSet<Unknown>>,
    trace: Vec<Step>,
    stage_counts: Vec<StageCount>,
}

impl EliminationState {
    pub fn new(dim: usize, forced_zero: BTreeSet<Unknown>) -> Self {
        EliminationState {
            dim,
            forced_zero,
            substitutions: BTreeMap::new(),
            occurrences: HashMap::new(),
            trace: Vec::new(),
            stage_counts: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unknown_count(&self) -> usize {
        self.dim.pow(3)
    }

    pub fn forced_zero(&self) -> &BTreeSet<Unknown> {
        &self.forced_zero
    }

    pub fn substitutions(&self) -> &BTreeMap<Unknown, AffineForm> {
        &self.substitutions
    }

    /// Pivots in application order.
    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    pub fn stage_counts(&self) -> &[StageCount] {
        &self.stage_counts
    }

    pub fn free_count(&self) -> usize {
        self.unknown_count() - self.forced_zero.len() - self.substitutions.len()
    }

    pub fn is_free(&self, u: &Unknown) -> bool {
        !self.forced_zero.contains(u) && !self.substitutions.contains_key(u)
    }

    /// Free unknowns in lexicographic order.
    pub fn free_unknowns(&self) -> Vec<Unknown> {
        let n = self.dim;
        let mut out = Vec::with_capacity(self.free_count());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let u = Unknown::new(i, j, k);
                    if self.is_free(&u) {
                        out.push(u);
                    }
                }
            }
        }
        out
    }

    /// Value of `u` in the free unknowns; `None` when it is zero.
    pub fn value(&self, u: &Unknown) -> Option<AffineForm> {
        if self.forced_zero.contains(u) {
            None
        } else if let Some(f) = self.substitutions.get(u) {
            (!f.is_zero()).then(|| f.clone())
        } else {
            Some(AffineForm::unknown(*u))
        }
    }

    pub fn reduce(&self, form: &AffineForm) -> AffineForm {
        form.evaluate_with(|u| {
            if self.forced_zero.contains(u) {
                Some(AffineForm::zero())
            } else {
                self.substitutions.get(u).cloned()
            }
        })
    }

    fn value_ref(&self, u: &Unknown) -> Option<Cow<'_, AffineForm>> {
        if self.forced_zero.contains(u) {
            return None;
        }
        match self.substitutions.get(u) {
            Some(f) if f.is_zero() => None,
            Some(f) => Some(Cow::Borrowed(f)),
            None => Some(Cow::Owned(AffineForm::unknown(*u))),
        }
    }

    /// `Σ c · u · v` with each unknown replaced by its value.
    pub fn reduce_products(&self, products: &[(Rational, Unknown, Unknown)]) -> QuadraticForm {
        let mut out = QuadraticForm::zero();
        for (c, u, v) in products {
            let Some(a) = self.value_ref(u) else { continue };
            let Some(b) = self.value_ref(v) else { continue };
            out.add_product(c, &a, &b);
        }
        out
    }

    /// Reduces `row` and, if something remains, pivots on its least unknown.
    pub fn insert(&mut self, source: ConstraintId, row: &AffineForm) -> Insert {
        let mut r = self.reduce(row);
        let Some((&pivot, a)) = r.leading() else {
            return if r.constant.is_zero() {
                Insert::Redundant
            } else {
                Insert::Contradiction(r.constant)
            };
        };
        let a = a.clone();
        r.take(&pivot);
        let form = r.scale(&-(Rational::one() / a));
        self.trace.push(Step {
            source,
            pivot,
            form: form.clone(),
        });
        if let Some(users) = self.occurrences.remove(&pivot) {
            for q in users {
                let value = self
                    .substitutions
                    .get_mut(&q)
                    .expect("indexed substitution");
                value.substitute(&pivot, &form);
                for w in form.terms().keys() {
                    self.occurrences.entry(*w).or_default().insert(q);
                }
            }
        }
        for w in form.terms().keys() {
            self.occurrences.entry(*w).or_default().insert(pivot);
        }
        self.substitutions.insert(pivot, form);
        Insert::Pivot(pivot)
    }

    /// Inserts rows in the given order. Stops at the first contradiction and returns it.
    pub fn run_stage<'a, I>(&mut self, stage: &str, rows: I) -> Option<(ConstraintId, Rational)>
    where
        I: IntoIterator<Item = &'a (ConstraintId, AffineForm)>,
    {
        for (id, row) in rows {
            if let Insert::Contradiction(c) = self.insert(id.clone(), row) {
                self.record_stage(stage);
                return Some((id.clone(), c));
            }
        }
        self.record_stage(stage);
        None
    }

    pub fn record_stage(&mut self, stage: &str) {
        self.stage_counts.push(StageCount {
            stage: stage.to_string(),
            free: self.free_count(),
        });
    }
}
