//! Lower central, derived and upper central series, and quotient algebras.
//!
//! The series functions take the Lie bracket as an [`Algebra`]; for a Novikov structure pass
//! its Lie algebra (or the commutator algebra of its product, which is the same thing).

use serde::Serialize;

use crate::algebra::{Algebra, Sparse, Vector};
use crate::error::{Error, Result};
use crate::subspace::{bracket_space, ideal_witness, kernel, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    UpperCentral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Lower central: `γ_1 = A, γ_2, ...`; derived: `A^(0) = A, A^(1), ...`;
    /// upper central: `Z_0 = 0, Z_1, ...`. Ends at the first repeated term.
    pub terms: Vec<Subspace>,
    /// Nilpotency class, solvability class, or upper central length; `None` when the series
    /// stabilizes before reaching zero (respectively the whole algebra).
    pub class: Option<usize>,
}

impl SeriesReport {
    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::rank).collect()
    }
}

fn descending(
    lie: &Algebra,
    kind: SeriesKind,
    step: impl Fn(&Subspace) -> Subspace,
) -> SeriesReport {
    let n = lie.dim();
    let mut terms = vec![Subspace::whole(n)];
    // each proper step drops the rank, so n + 1 steps always suffice
    for _ in 0..=n {
        let last = terms.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = step(last);
        if &next == last {
            break;
        }
        terms.push(next);
    }
    let last = terms.last().expect("nonempty");
    // γ_1, ..., γ_{c+1} = 0 and A^(0), ..., A^(k) = 0 both give class = len - 1
    let class = last.is_zero().then(|| terms.len() - 1);
    SeriesReport { kind, terms, class }
}

/// `γ_1 = A`, `γ_{i+1} = [A, γ_i]`.
pub fn lower_central_series(lie: &Algebra) -> SeriesReport {
    let whole = Subspace::whole(lie.dim());
    descending(lie, SeriesKind::LowerCentral, |g| {
        bracket_space(lie, &whole, g).expect("ambient matches")
    })
}

/// `A^(0) = A`, `A^(i+1) = [A^(i), A^(i)]`.
pub fn derived_series(lie: &Algebra) -> SeriesReport {
    descending(lie, SeriesKind::Derived, |d| {
        bracket_space(lie, d, d).expect("ambient matches")
    })
}

/// `Z_0 = 0`, `Z_{i+1} = {x : [x, A] ⊆ Z_i}`.
pub fn upper_central_series(lie: &Algebra) -> SeriesReport {
    let n = lie.dim();
    let mut terms = vec![Subspace::zero(n)];
    for _ in 0..=n {
        let last = terms.last().expect("nonempty");
        if last.rank() == n {
            break;
        }
        let next = next_upper(lie, last);
        if &next == last {
            break;
        }
        terms.push(next);
    }
    let class = (terms.last().expect("nonempty").rank() == n).then(|| terms.len() - 1);
    SeriesReport {
        kind: SeriesKind::UpperCentral,
        terms,
        class,
    }
}

fn next_upper(lie: &Algebra, z: &Subspace) -> Subspace {
    let n = lie.dim();
    let e = z.echelon();
    // x -> ([x, b_j] mod Z)_j is linear because echelon reduction is a linear projection.
    let mut functionals: Vec<Sparse> = Vec::new();
    for j in 0..n {
        let images: Vec<Sparse> = (0..n)
            .map(|i| e.reduce(lie.basis_product_sparse(i, j)))
            .collect();
        let mut by_coord: std::collections::BTreeMap<usize, Sparse> = Default::default();
        for (i, img) in images.iter().enumerate() {
            for (k, c) in img {
                by_coord.entry(*k).or_default().insert(i, c.clone());
            }
        }
        functionals.extend(by_coord.into_values());
    }
    kernel(n, functionals)
}

/// Nilpotency class, or `None` when the algebra is not nilpotent.
pub fn nilpotency_class(lie: &Algebra) -> Option<usize> {
    lower_central_series(lie).class
}

pub fn solvability_class(lie: &Algebra) -> Option<usize> {
    derived_series(lie).class
}

/// `A / I` on the complement basis formed by the non-pivot coordinates of `I`, in index
/// order, together with the projection onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: Algebra,
    pub ideal: Subspace,
    /// Indices of the original basis vectors that form the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &Vector) -> Result<Vector> {
        let r = self.ideal.reduce(v)?;
        Ok(Vector(
            self.complement.iter().map(|&c| r.0[c].clone()).collect(),
        ))
    }
}

pub fn quotient(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if let Some(v) = ideal_witness(a, ideal)? {
        return Err(v.into());
    }
    let pivots = ideal.pivots();
    let complement: Vec<usize> = (0..a.dim()).filter(|c| !pivots.contains(c)).collect();
    if complement.is_empty() {
        return Err(Error::ZeroDimension);
    }
    let slot: std::collections::HashMap<usize, usize> = complement
        .iter()
        .enumerate()
        .map(|(n, &c)| (c, n))
        .collect();
    let e = ideal.echelon();
    let mut entries = Vec::new();
    for (ni, &i) in complement.iter().enumerate() {
        for (nj, &j) in complement.iter().enumerate() {
            for (k, c) in e.reduce(a.basis_product_sparse(i, j)) {
                entries.push((ni, nj, slot[&k], c));
            }
        }
    }
    let labels = complement.iter().map(|&c| a.label(c).to_string()).collect();
    Ok(Quotient {
        algebra: Algebra::from_entries(labels, entries)?,
        ideal: ideal.clone(),
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::scalar::int;

    fn heisenberg() -> Algebra {
        let mut b = AlgebraBuilder::new(vec!["x".into(), "y".into(), "z".into()]);
        b.add_antisymmetric(0, 1, 2, int(1));
        b.build().unwrap()
    }

    #[test]
    fn abelian_classes_are_one() {
        let a = Algebra::zero(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(lower_central_series(&a).class, Some(1));
        assert_eq!(derived_series(&a).class, Some(1));
        assert_eq!(upper_central_series(&a).class, Some(1));
    }

    #[test]
    fn heisenberg_series() {
        let h = heisenberg();
        let lcs = lower_central_series(&h);
        assert_eq!(lcs.ranks(), vec![3, 1, 0]);
        assert_eq!(lcs.class, Some(2));
        assert_eq!(upper_central_series(&h).ranks(), vec![0, 1, 3]);
        assert_eq!(derived_series(&h).class, Some(2));
    }

    #[test]
    fn non_nilpotent_series_reports_no_class() {
        // [a, b] = b
        let mut b = AlgebraBuilder::new(vec!["a".into(), "b".into()]);
        b.add_antisymmetric(0, 1, 1, int(1));
        let aff = b.build().unwrap();
        let lcs = lower_central_series(&aff);
        assert_eq!(lcs.class, None);
        assert_eq!(lcs.ranks(), vec![2, 1]);
        assert_eq!(upper_central_series(&aff).class, None);
        assert_eq!(derived_series(&aff).class, Some(2));
    }

    #[test]
    fn quotient_by_zero_is_identity_and_non_ideal_is_rejected() {
        let h = heisenberg();
        let q = quotient(&h, &Subspace::zero(3)).unwrap();
        assert_eq!(q.algebra, h);
        let err = quotient(&h, &Subspace::coordinate(3, [0])).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal { .. }));
        let q = quotient(&h, &Subspace::coordinate(3, [2])).unwrap();
        assert!(q.algebra.is_zero_product());
        assert_eq!(
            q.project(&Vector::from_ints(&[1, 2, 3])).unwrap(),
            Vector::from_ints(&[1, 2])
        );
    }
}
