//! Nonexistence prover for Novikov structures on a given Lie algebra.
//!
//! The unknowns are the product coefficients `x(i,j,k)`, the coefficient of `b_k` in
//! `b_i · b_j`. The pipeline:
//!
//! 1. force the zeros implied by the lower central series grading;
//! 2. eliminate the compatibility, cyclic and operator-identity families exactly, in that
//!    order, pivoting on the least unknown of each row;
//! 3. substitute into every entry of every `[R(b_i), R(b_j)]`. A nonzero constant refutes
//!    existence and yields a [`NonexistenceCertificate`];
//! 4. optionally feed entries that became affine back into the elimination and rescan;
//! 5. otherwise set the remaining free unknowns to zero and check the resulting product;
//! 6. optionally split on residual quadratics of the form `u · A` and repeat 4 and 5 in
//!    each branch, looking for a structure.
//!
//! Constraint generation runs in parallel; elimination is sequential, so traces and
//! certificates do not depend on the thread count.

pub mod certificate;
pub mod constraints;
pub mod elimination;
pub mod forms;

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, NovikovStructure};
use crate::checks::{check_structure, CheckKind};
use crate::error::Result;
use crate::par;
use crate::scalar::Rational;

pub use certificate::{verify_certificate, Contradiction, NonexistenceCertificate};
pub use constraints::{grading_zeros, ConstraintId, Family};
pub use elimination::{EliminationState, Insert, StageCount, Step};
pub use forms::{AffineForm, QuadraticForm, Unknown};

pub const GRADING_STAGE: &str = "grading";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Shuffles the row order of each linear family. Counts are unaffected; traces change.
    pub shuffle_seed: Option<u64>,
    /// Feed right-commutation entries that reduce to affine forms back into elimination.
    pub propagate: bool,
    /// Depth of `u · A = 0` case splits tried when the zero probe fails. 0 disables them.
    pub case_split_depth: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            shuffle_seed: None,
            propagate: true,
            case_split_depth: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    /// Nonzero reduced right-commutation entries, in constraint order.
    pub quadratics: Vec<(ConstraintId, QuadraticForm)>,
    /// First check the zero-probe product failed.
    pub probe_failure: Option<CheckKind>,
    /// Case-split branches explored and how many of them ended in a contradiction.
    pub branches_explored: usize,
    pub branches_refuted: usize,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Certificate(Box<NonexistenceCertificate>),
    Structure(NovikovStructure),
    Inconclusive(Residual),
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Certificate(_) => "certificate",
            Outcome::Structure(_) => "structure",
            Outcome::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProofReport {
    pub algebra: String,
    pub grading_zeros: usize,
    pub state: EliminationState,
    pub outcome: Outcome,
}

impl ProofReport {
    pub fn stage_counts(&self) -> &[StageCount] {
        self.state.stage_counts()
    }

    pub fn certificate(&self) -> Option<&NonexistenceCertificate> {
        match &self.outcome {
            Outcome::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

/// Nonzero values of the unknowns, grouped by their first two indices.
struct ValueTable {
    by_prefix: HashMap<(usize, usize), Vec<(usize, AffineForm)>>,
    values: HashMap<Unknown, AffineForm>,
}

impl ValueTable {
    fn new(state: &EliminationState) -> Self {
        let mut values = HashMap::new();
        for u in state.free_unknowns() {
            values.insert(u, AffineForm::unknown(u));
        }
        for (u, f) in state.substitutions() {
            if !f.is_zero() {
                values.insert(*u, f.clone());
            }
        }
        let mut by_prefix: HashMap<(usize, usize), Vec<(usize, AffineForm)>> = HashMap::new();
        for (u, f) in &values {
            by_prefix
                .entry((u.i, u.j))
                .or_default()
                .push((u.k, f.clone()));
        }
        for list in by_prefix.values_mut() {
            list.sort_by_key(|(k, _)| *k);
        }
        ValueTable { by_prefix, values }
    }

    /// `Σ_q x(m,j,q) x(q,i,l) - x(m,i,q) x(q,j,l)` in the free unknowns.
    fn commutator_entry(&self, i: usize, j: usize, l: usize, m: usize) -> QuadraticForm {
        let mut out = QuadraticForm::zero();
        let one = Rational::one();
        for (a, b, sign) in [(j, i, one.clone()), (i, j, -one)] {
            for (q, left) in self.by_prefix.get(&(m, a)).map_or(&[][..], Vec::as_slice) {
                if let Some(right) = self.values.get(&Unknown::new(*q, b, l)) {
                    out.add_product(&sign, left, right);
                }
            }
        }
        out
    }
}

/// Every nonzero reduced right-commutation entry, ordered by `(i, j, row, column)`.
pub fn quadratic_scan(state: &EliminationState) -> Vec<(ConstraintId, QuadraticForm)> {
    let n = state.dim();
    let table = ValueTable::new(state);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let per_pair = par::map_slice(&pairs, |&(i, j)| {
        let mut out = Vec::new();
        for l in 0..n {
            for m in 0..n {
                let q = table.commutator_entry(i, j, l, m);
                if !q.is_zero() {
                    out.push((
                        ConstraintId::new(Family::RightCommutation, vec![i, j, l, m]),
                        q,
                    ));
                }
            }
        }
        out
    });
    per_pair.into_iter().flatten().collect()
}

/// The product obtained by setting every free unknown to zero.
pub fn zero_probe(lie: &Algebra, state: &EliminationState) -> Result<NovikovStructure> {
    let entries = state
        .substitutions()
        .iter()
        .filter(|(_, f)| !f.constant.is_zero())
        .map(|(u, f)| (u.i, u.j, u.k, f.constant.clone()));
    let product = Algebra::from_entries(lie.labels().to_vec(), entries.collect::<Vec<_>>())?;
    NovikovStructure::from_parts(lie.clone(), product)
}

enum Scan {
    Contradiction(ConstraintId, Rational),
    Residual(Vec<(ConstraintId, QuadraticForm)>),
}

/// Scans, and with `propagate` keeps eliminating affine entries until none are left.
fn scan_and_propagate(state: &mut EliminationState, propagate: bool) -> Scan {
    let mut pivoted = false;
    loop {
        let residual = quadratic_scan(state);
        if let Some((id, q)) = residual.iter().find(|(_, q)| q.is_contradiction()) {
            if pivoted {
                state.record_stage(Family::RightCommutation.name());
            }
            return Scan::Contradiction(id.clone(), q.constant.clone());
        }
        let affine: Vec<_> = residual
            .iter()
            .filter_map(|(id, q)| q.to_affine().map(|a| (id.clone(), a)))
            .collect();
        if !propagate || affine.is_empty() {
            if pivoted {
                state.record_stage(Family::RightCommutation.name());
            }
            return Scan::Residual(residual);
        }
        for (id, row) in &affine {
            match state.insert(id.clone(), row) {
                Insert::Contradiction(c) => {
                    state.record_stage(Family::RightCommutation.name());
                    return Scan::Contradiction(id.clone(), c);
                }
                Insert::Pivot(_) => pivoted = true,
                Insert::Redundant => {}
            }
        }
    }
}

fn probe(
    lie: &Algebra,
    state: &EliminationState,
) -> Result<std::result::Result<NovikovStructure, CheckKind>> {
    let s = zero_probe(lie, state)?;
    Ok(match check_structure(&s).into_iter().find(|r| !r.passed) {
        None => Ok(s),
        Some(r) => Err(r.kind),
    })
}

struct SplitSearch<'a> {
    lie: &'a Algebra,
    propagate: bool,
    explored: usize,
    refuted: usize,
}

impl SplitSearch<'_> {
    /// Looks for a structure below `state`, splitting on the first factorable quadratic.
    fn search(
        &mut self,
        state: &EliminationState,
        residual: &[(ConstraintId, QuadraticForm)],
        depth: usize,
    ) -> Result<Option<NovikovStructure>> {
        if depth == 0 {
            return Ok(None);
        }
        let Some((id, (u, a))) = residual
            .iter()
            .find_map(|(id, q)| q.factor_unknown().map(|f| (id, f)))
        else {
            return Ok(None);
        };
        for branch in [AffineForm::unknown(u), a] {
            self.explored += 1;
            let mut s = state.clone();
            if let Insert::Contradiction(_) = s.insert(id.clone(), &branch) {
                self.refuted += 1;
                continue;
            }
            match scan_and_propagate(&mut s, self.propagate) {
                Scan::Contradiction(..) => self.refuted += 1,
                Scan::Residual(rest) => {
                    if let Ok(found) = probe(self.lie, &s)? {
                        return Ok(Some(found));
                    }
                    if let Some(found) = self.search(&s, &rest, depth - 1)? {
                        return Ok(Some(found));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Runs the full pipeline on `lie`. Only the Lie bracket is consulted.
pub fn prove(lie: &Algebra, name: &str, config: &SolverConfig) -> Result<ProofReport> {
    let zeros = grading_zeros(lie)?;
    let zero_count = zeros.len();
    let mut state = EliminationState::new(lie.dim(), zeros);
    state.record_stage(GRADING_STAGE);
    let mut rng = config.shuffle_seed.map(ChaCha8Rng::seed_from_u64);

    let certify = |state: &EliminationState, source: ConstraintId, constant: Rational| {
        Outcome::Certificate(Box::new(NonexistenceCertificate {
            algebra: name.to_string(),
            lie: lie.clone(),
            stage_counts: state.stage_counts().to_vec(),
            forced_zero: state.forced_zero().iter().copied().collect(),
            steps: state.trace().to_vec(),
            contradiction: Contradiction { source, constant },
        }))
    };
    let report = |state: EliminationState, outcome: Outcome| ProofReport {
        algebra: name.to_string(),
        grading_zeros: zero_count,
        state,
        outcome,
    };

    let system = constraints::ConstraintSystem::new(lie);
    for family in Family::LINEAR {
        let mut rows = system.family(family);
        if let Some(rng) = rng.as_mut() {
            rows.shuffle(rng);
        }
        if let Some((source, constant)) = state.run_stage(family.name(), &rows) {
            let outcome = certify(&state, source, constant);
            return Ok(report(state, outcome));
        }
    }

    let residual = match scan_and_propagate(&mut state, config.propagate) {
        Scan::Contradiction(source, constant) => {
            let outcome = certify(&state, source, constant);
            return Ok(report(state, outcome));
        }
        Scan::Residual(r) => r,
    };
    let probe_failure = match probe(lie, &state)? {
        Ok(found) => return Ok(report(state, Outcome::Structure(found))),
        Err(kind) => kind,
    };
    let mut split = SplitSearch {
        lie,
        propagate: config.propagate,
        explored: 0,
        refuted: 0,
    };
    if let Some(found) = split.search(&state, &residual, config.case_split_depth)? {
        return Ok(report(state, Outcome::Structure(found)));
    }
    let outcome = Outcome::Inconclusive(Residual {
        quadratics: residual,
        probe_failure: Some(probe_failure),
        branches_explored: split.explored,
        branches_refuted: split.refuted,
    });
    Ok(report(state, outcome))
}
