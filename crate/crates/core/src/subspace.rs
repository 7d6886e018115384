//! Subspaces of `k^n` in reduced row-echelon form, and the ideal-theoretic operations built
//! on them: products and brackets of subspaces, ideal tests, centers.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{prune, Algebra, Sparse, Vector};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Incremental reduced row-echelon basis over sparse rows, keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, Sparse>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, mut v: Sparse) -> Sparse {
        let hits: Vec<usize> = v
            .keys()
            .filter(|k| self.rows.contains_key(k))
            .copied()
            .collect();
        for p in hits {
            let Some(c) = v.get(&p).cloned() else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            for (k, a) in &self.rows[&p] {
                *v.entry(*k).or_insert_with(Rational::zero) -= &c * a;
            }
        }
        prune(v)
    }

    /// Returns `true` when `v` was independent of the current rows.
    pub(crate) fn insert(&mut self, v: Sparse) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                for (k, a) in &r {
                    *row.entry(*k).or_insert_with(Rational::zero) -= &c * a;
                }
                row.retain(|_, a| !a.is_zero());
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = (&usize, &Sparse)> {
        self.rows.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut e = Echelon::default();
        for i in indices {
            e.insert(Sparse::from([(i, Rational::one())]));
        }
        Self::from_echelon(ambient, &e)
    }

    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Result<Self> {
        let mut e = Echelon::default();
        for v in vectors {
            if v.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    argument: "vectors",
                    expected: ambient,
                    found: v.dim(),
                });
            }
            e.insert(v.to_sparse());
        }
        Ok(Self::from_echelon(ambient, &e))
    }

    pub(crate) fn from_sparse_rows(ambient: usize, rows: impl IntoIterator<Item = Sparse>) -> Self {
        let mut e = Echelon::default();
        for r in rows {
            e.insert(r);
        }
        Self::from_echelon(ambient, &e)
    }

    pub(crate) fn from_echelon(ambient: usize, e: &Echelon) -> Self {
        Subspace {
            ambient,
            basis: e
                .rows()
                .map(|(_, r)| Vector::from_sparse(ambient, r))
                .collect(),
        }
    }

    pub(crate) fn echelon(&self) -> Echelon {
        let mut e = Echelon::default();
        for (p, v) in self.pivots().into_iter().zip(&self.basis) {
            e.rows.insert(p, v.to_sparse());
        }
        e
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Echelon basis, sorted by strictly increasing pivot column.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.0.iter().position(|c| !c.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// True when every basis vector is a standard unit vector.
    pub fn is_coordinate(&self) -> bool {
        self.basis
            .iter()
            .all(|v| v.0.iter().filter(|c| !c.is_zero()).count() == 1)
    }

    fn check(&self, argument: &'static str, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::DimensionMismatch {
                argument,
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        self.check("v", v.dim())?;
        Ok(Vector::from_sparse(
            self.ambient,
            &self.echelon().reduce(v.to_sparse()),
        ))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check("other", other.ambient)?;
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis))
    }

    /// Zassenhaus intersection: echelonize `[u | u]` for `u` in `self` and `[v | 0]` for `v`
    /// in `other`; rows with vanishing left half span the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check("other", other.ambient)?;
        let n = self.ambient;
        let mut e = Echelon::default();
        for u in &self.basis {
            let mut row = u.to_sparse();
            for (k, c) in u.to_sparse() {
                row.insert(k + n, c);
            }
            e.insert(row);
        }
        for v in &other.basis {
            e.insert(v.to_sparse());
        }
        let rows = e.rows().filter(|(p, _)| **p >= n).map(|(_, r)| {
            r.iter()
                .map(|(k, c)| (k - n, c.clone()))
                .collect::<Sparse>()
        });
        Ok(Subspace::from_sparse_rows(n, rows))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check("other", other.ambient)?;
        let e = other.echelon();
        Ok(self
            .basis
            .iter()
            .all(|v| e.reduce(v.to_sparse()).is_empty()))
    }
}

/// Kernel of the linear map whose coordinate functionals are `functionals`.
pub(crate) fn kernel(ambient: usize, functionals: impl IntoIterator<Item = Sparse>) -> Subspace {
    let mut e = Echelon::default();
    for f in functionals {
        e.insert(f);
        if e.rank() == ambient {
            break;
        }
    }
    let pivots: BTreeMap<usize, &Sparse> = e.rows().map(|(p, r)| (*p, r)).collect();
    let free = (0..ambient).filter(|c| !pivots.contains_key(c));
    let rows = free.map(|f| {
        let mut v = Sparse::from([(f, Rational::one())]);
        for (p, row) in &pivots {
            if let Some(c) = row.get(&f) {
                v.insert(*p, -c);
            }
        }
        v
    });
    Subspace::from_sparse_rows(ambient, rows.collect::<Vec<_>>())
}

fn check_ambient(a: &Algebra, s: &Subspace, argument: &'static str) -> Result<()> {
    if s.ambient() != a.dim() {
        return Err(Error::DimensionMismatch {
            argument,
            expected: a.dim(),
            found: s.ambient(),
        });
    }
    Ok(())
}

/// Span of all `u * v` with `u`, `v` running over the bases of `i`, `j`.
pub fn product_space(a: &Algebra, i: &Subspace, j: &Subspace) -> Result<Subspace> {
    check_ambient(a, i, "i")?;
    check_ambient(a, j, "j")?;
    let left: Vec<Sparse> = i.basis().iter().map(Vector::to_sparse).collect();
    let right: Vec<Sparse> = j.basis().iter().map(Vector::to_sparse).collect();
    let mut e = Echelon::default();
    'outer: for u in &left {
        for v in &right {
            e.insert(a.mul_sparse(u, v));
            if e.rank() == a.dim() {
                break 'outer;
            }
        }
    }
    Ok(Subspace::from_echelon(a.dim(), &e))
}

/// Span of all `[u, v]` for a Lie bracket `lie`.
pub fn bracket_space(lie: &Algebra, i: &Subspace, j: &Subspace) -> Result<Subspace> {
    product_space(lie, i, j)
}

/// A product that leaves the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealViolation {
    pub side: &'static str,
    pub basis_index: usize,
    pub element: Vector,
    pub product: Vector,
}

impl From<IdealViolation> for Error {
    fn from(v: IdealViolation) -> Self {
        Error::NotAnIdeal {
            side: v.side,
            basis_index: v.basis_index,
            element: v.element,
            product: v.product,
        }
    }
}

fn ideal_violation(a: &Algebra, s: &Subspace, left: bool) -> Option<IdealViolation> {
    let e = s.echelon();
    for u in s.basis() {
        let us = u.to_sparse();
        for b in 0..a.dim() {
            let p = if left {
                a.mul_basis_left(b, &us)
            } else {
                a.mul_basis_right(&us, b)
            };
            if !e.reduce(p.clone()).is_empty() {
                return Some(IdealViolation {
                    side: if left { "left" } else { "right" },
                    basis_index: b,
                    element: u.clone(),
                    product: Vector::from_sparse(a.dim(), &p),
                });
            }
        }
    }
    None
}

/// First escaping product `b * u` (left) or `u * b` (right), left side checked first.
pub fn ideal_witness(a: &Algebra, s: &Subspace) -> Result<Option<IdealViolation>> {
    check_ambient(a, s, "subspace")?;
    Ok(ideal_violation(a, s, true).or_else(|| ideal_violation(a, s, false)))
}

pub fn is_left_ideal(a: &Algebra, s: &Subspace) -> Result<bool> {
    check_ambient(a, s, "subspace")?;
    Ok(ideal_violation(a, s, true).is_none())
}

pub fn is_right_ideal(a: &Algebra, s: &Subspace) -> Result<bool> {
    check_ambient(a, s, "subspace")?;
    Ok(ideal_violation(a, s, false).is_none())
}

pub fn is_two_sided_ideal(a: &Algebra, s: &Subspace) -> Result<bool> {
    Ok(ideal_witness(a, s)?.is_none())
}

/// `{x : x y = y x for all y}`, the kernel of `x -> (x b_j - b_j x)_j`.
pub fn center(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut functionals = Vec::new();
    for j in 0..n {
        let mut rows: BTreeMap<usize, Sparse> = BTreeMap::new();
        for i in 0..n {
            for (k, c) in a.basis_product(i, j) {
                *rows
                    .entry(*k)
                    .or_default()
                    .entry(i)
                    .or_insert_with(Rational::zero) += c;
            }
            for (k, c) in a.basis_product(j, i) {
                *rows
                    .entry(*k)
                    .or_default()
                    .entry(i)
                    .or_insert_with(Rational::zero) -= c;
            }
        }
        functionals.extend(rows.into_values().map(prune));
    }
    kernel(n, functionals)
}
