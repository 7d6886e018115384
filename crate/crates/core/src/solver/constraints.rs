//! The constraint families imposed on the unknown product coefficients by a Lie bracket.
//!
//! With `c_{ij}^k` the structure constants and `x(i,j,k)` the coefficient of `b_k` in
//! `b_i · b_j`:
//!
//! - compatibility, `i < j`: `x(i,j,k) - x(j,i,k) = c_{ij}^k`;
//! - cyclic, `i < j < k`: the `b_l` coefficient of
//!   `b_i·[b_j,b_k] + b_j·[b_k,b_i] + b_k·[b_i,b_j]` vanishes;
//! - operator identity, `i < j`: the `(l, m)` entry of
//!   `L([b_i,b_j]) + ad([b_i,b_j]) - [ad b_i, L b_j] - [L b_i, ad b_j]` vanishes;
//! - right commutation, `i < j`: the `(l, m)` entry of `[R(b_i), R(b_j)]` vanishes. This is
//!   the only quadratic family.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::forms::{AffineForm, QuadraticForm, Unknown};
use crate::algebra::{Algebra, Vector};
use crate::checks::check_lie;
use crate::error::{Error, Result};
use crate::par;
use crate::scalar::Rational;
use crate::series::lower_central_series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Compatibility,
    Cyclic,
    OperatorIdentity,
    RightCommutation,
}

impl Family {
    pub const LINEAR: [Family; 3] = [
        Family::Compatibility,
        Family::Cyclic,
        Family::OperatorIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Compatibility => "compatibility",
            Family::Cyclic => "cyclic",
            Family::OperatorIdentity => "operator-identity",
            Family::RightCommutation => "right-commutation",
        }
    }

    /// Number of indices in a constraint id of this family.
    pub fn arity(self) -> usize {
        match self {
            Family::Compatibility => 3,
            Family::Cyclic | Family::OperatorIdentity | Family::RightCommutation => 4,
        }
    }
}

/// One constraint: compatibility `(i, j, k)`, cyclic `(i, j, k, l)`, operator identity
/// `(i, j, m, l)`, right commutation `(i, j, l, m)` with `l` the row and `m` the column.
/// Ordered by family, then indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstraintId {
    pub family: Family,
    pub indices: Vec<usize>,
}

impl ConstraintId {
    pub fn new(family: Family, indices: Vec<usize>) -> Self {
        ConstraintId { family, indices }
    }

    /// Checks arity, index range and the ordering conventions of the family.
    pub fn validate(&self, dim: usize) -> Result<()> {
        let bad = |why: &str| Err(Error::Certificate(format!("constraint {self}: {why}")));
        if self.indices.len() != self.family.arity() {
            return bad("wrong number of indices");
        }
        if let Some(&i) = self.indices.iter().find(|&&i| i >= dim) {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        let ix = &self.indices;
        let ordered = match self.family {
            Family::Cyclic => ix[0] < ix[1] && ix[1] < ix[2],
            _ => ix[0] < ix[1],
        };
        if !ordered {
            return bad("indices out of order");
        }
        Ok(())
    }
}

impl fmt::Display for ConstraintId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ix: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}({})", self.family.name(), ix.join(","))
    }
}

fn x(i: usize, j: usize, k: usize) -> Unknown {
    Unknown::new(i, j, k)
}

/// Constraint generator for one Lie algebra.
pub struct ConstraintSystem<'a> {
    lie: &'a Algebra,
    /// `(i, l)` -> every `(q, c)` with `c` the `b_l` coefficient of `[b_i, b_q]`.
    into: HashMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl<'a> ConstraintSystem<'a> {
    pub fn new(lie: &'a Algebra) -> Self {
        let mut into: HashMap<(usize, usize), Vec<(usize, Rational)>> = HashMap::new();
        for (i, q, l, c) in lie.entries() {
            into.entry((i, l)).or_default().push((q, c.clone()));
        }
        ConstraintSystem { lie, into }
    }

    pub fn lie(&self) -> &Algebra {
        self.lie
    }

    fn into(&self, i: usize, l: usize) -> &[(usize, Rational)] {
        self.into.get(&(i, l)).map_or(&[], Vec::as_slice)
    }

    /// The linear constraint with the given id, as an affine form that must vanish.
    pub fn linear(&self, id: &ConstraintId) -> AffineForm {
        let lie = self.lie;
        let ix = &id.indices;
        let mut row = AffineForm::zero();
        match id.family {
            Family::Compatibility => {
                let (i, j, k) = (ix[0], ix[1], ix[2]);
                row.add_term(x(i, j, k), Rational::one());
                row.add_term(x(j, i, k), -Rational::one());
                row.add_constant(&-lie.structure_constant(i, j, k));
            }
            Family::Cyclic => {
                let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, v) in lie.basis_product(b, c) {
                        row.add_term(x(a, *m, l), v.clone());
                    }
                }
            }
            Family::OperatorIdentity => {
                let (i, j, m, l) = (ix[0], ix[1], ix[2], ix[3]);
                // L([b_i,b_j]) b_m + ad([b_i,b_j]) b_m
                for (p, v) in lie.basis_product(i, j) {
                    row.add_term(x(*p, m, l), v.clone());
                    row.add_constant(&(v * lie.structure_constant(*p, m, l)));
                }
                // - [b_i, b_j b_m] + b_j [b_i, b_m]
                for (q, v) in self.into(i, l) {
                    row.add_term(x(j, m, *q), -v.clone());
                }
                for (q, v) in lie.basis_product(i, m) {
                    row.add_term(x(j, *q, l), v.clone());
                }
                // - b_i [b_j, b_m] + [b_j, b_i b_m]
                for (q, v) in lie.basis_product(j, m) {
                    row.add_term(x(i, *q, l), -v.clone());
                }
                for (q, v) in self.into(j, l) {
                    row.add_term(x(i, m, *q), v.clone());
                }
            }
            Family::RightCommutation => {
                panic!("right commutation constraints are quadratic")
            }
        }
        row
    }

    /// Any constraint as a quadratic form in the raw unknowns.
    pub fn raw(&self, id: &ConstraintId) -> Result<QuadraticForm> {
        id.validate(self.lie.dim())?;
        let mut q = QuadraticForm::zero();
        match id.family {
            Family::RightCommutation => {
                let ix = &id.indices;
                for (c, u, v) in commutator_entry(self.lie.dim(), ix[0], ix[1], ix[2], ix[3]) {
                    q.add_quadratic_term(u, v, c);
                }
            }
            _ => q.add_affine(&Rational::one(), &self.linear(id)),
        }
        Ok(q)
    }

    /// Every nonzero row of a linear family, in lexicographic id order.
    pub fn family(&self, family: Family) -> Vec<(ConstraintId, AffineForm)> {
        let ids = family_ids(self.lie.dim(), family);
        par::map_slice(&ids, |id| self.linear(id))
            .into_iter()
            .zip(ids)
            .filter(|(row, _)| !row.is_zero())
            .map(|(row, id)| (id, row))
            .collect()
    }
}

/// `Σ_q x(m,j,q) x(q,i,l) - x(m,i,q) x(q,j,l)`: the `(l, m)` entry of `[R(b_i), R(b_j)]`,
/// as signed products of unknowns.
pub fn commutator_entry(
    dim: usize,
    i: usize,
    j: usize,
    l: usize,
    m: usize,
) -> Vec<(Rational, Unknown, Unknown)> {
    let mut out = Vec::with_capacity(2 * dim);
    for q in 0..dim {
        out.push((Rational::one(), x(m, j, q), x(q, i, l)));
        out.push((-Rational::one(), x(m, i, q), x(q, j, l)));
    }
    out
}

pub fn linear_constraint(lie: &Algebra, id: &ConstraintId) -> AffineForm {
    ConstraintSystem::new(lie).linear(id)
}

pub fn raw_constraint(lie: &Algebra, id: &ConstraintId) -> Result<QuadraticForm> {
    ConstraintSystem::new(lie).raw(id)
}

/// Ids of a linear family in lexicographic order.
pub fn family_ids(dim: usize, family: Family) -> Vec<ConstraintId> {
    let per_i = par::map_collect(dim, |i| {
        let mut ids = Vec::new();
        for j in i + 1..dim {
            match family {
                Family::Compatibility => {
                    for k in 0..dim {
                        ids.push(ConstraintId::new(family, vec![i, j, k]));
                    }
                }
                Family::Cyclic => {
                    for k in j + 1..dim {
                        for l in 0..dim {
                            ids.push(ConstraintId::new(family, vec![i, j, k, l]));
                        }
                    }
                }
                Family::OperatorIdentity | Family::RightCommutation => {
                    for a in 0..dim {
                        for b in 0..dim {
                            ids.push(ConstraintId::new(family, vec![i, j, a, b]));
                        }
                    }
                }
            }
        }
        ids
    });
    per_i.into_iter().flatten().collect()
}

pub fn linear_family(lie: &Algebra, family: Family) -> Vec<(ConstraintId, AffineForm)> {
    ConstraintSystem::new(lie).family(family)
}

/// Position of each basis vector in the lower central series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    /// Largest `a` with `b_i ∈ γ_a`, capped at the index where the series stabilizes.
    pub depth: Vec<usize>,
    /// `γ_1, γ_2, ...` as sets of basis indices, ending at zero or at the stable term.
    pub terms: Vec<BTreeSet<usize>>,
}

impl Grading {
    /// Basis indices of `γ_m`, constant past the end of the series.
    pub fn term(&self, m: usize) -> &BTreeSet<usize> {
        &self.terms[(m.max(1) - 1).min(self.terms.len() - 1)]
    }
}

/// The lower central series of `lie`, which must consist of coordinate subspaces.
pub fn adapted_grading(lie: &Algebra) -> Result<Grading> {
    let report = check_lie(lie);
    if let Some(w) = report.witness {
        return Err(Error::NotLie(format!(
            "identity fails on basis indices {:?}",
            w.indices.iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    }
    let series = lower_central_series(lie);
    let mut terms = Vec::new();
    for (t, space) in series.terms.iter().enumerate() {
        if let Some(v) = space
            .basis()
            .iter()
            .find(|v| v.coords().iter().filter(|c| !c.is_zero()).count() != 1)
        {
            return Err(Error::NotAdapted {
                term: t + 1,
                vector: Vector(v.coords().to_vec()),
            });
        }
        terms.push(space.pivots().into_iter().collect::<BTreeSet<usize>>());
    }
    let depth = (0..lie.dim())
        .map(|i| terms.iter().take_while(|t| t.contains(&i)).count())
        .collect();
    Ok(Grading { depth, terms })
}

/// Unknowns forced to vanish by `γ_a · γ_b ⊆ γ_{a+b-1}`: for `b_i` of depth `a` and `b_j`
/// of depth `b`, `x(i,j,k) = 0` whenever `b_k ∉ γ_{a+b-1}`.
pub fn grading_zeros(lie: &Algebra) -> Result<BTreeSet<Unknown>> {
    let g = adapted_grading(lie)?;
    let n = lie.dim();
    let per_i = par::map_collect(n, |i| {
        let mut out = Vec::new();
        for j in 0..n {
            let target = g.term(g.depth[i] + g.depth[j] - 1);
            for k in 0..n {
                if !target.contains(&k) {
                    out.push(x(i, j, k));
                }
            }
        }
        out
    });
    Ok(per_i.into_iter().flatten().collect())
}
