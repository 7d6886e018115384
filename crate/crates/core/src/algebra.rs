//! Structure-constant algebras.
//!
//! An [`Algebra`] is a bilinear product on a based vector space `k^dim`, stored as the
//! sparse tensor `b_i * b_j = sum_k c[i][j][k] b_k`. Zero coefficients are never stored, so
//! two algebras are equal exactly when their stored constants are equal. Basis labels are
//! display metadata only.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

/// Sparse coordinates keyed by basis index.
pub(crate) type Sparse = BTreeMap<usize, Rational>;

pub(crate) fn axpy(acc: &mut Sparse, scale: &Rational, entries: &[(usize, Rational)]) {
    for (k, c) in entries {
        let slot = acc.entry(*k).or_insert_with(Rational::zero);
        *slot += scale * c;
    }
}

pub(crate) fn prune(mut v: Sparse) -> Sparse {
    v.retain(|_, c| !c.is_zero());
    v
}

pub(crate) fn sub_sparse(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(*k).or_insert_with(Rational::zero) -= c;
    }
    prune(out)
}

pub(crate) fn add_sparse(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(*k).or_insert_with(Rational::zero) += c;
    }
    prune(out)
}

pub(crate) fn unit(i: usize) -> Sparse {
    Sparse::from([(i, Rational::one())])
}

/// Dense coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&x| scalar::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub(crate) fn to_sparse(&self) -> Sparse {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub(crate) fn from_sparse(dim: usize, v: &Sparse) -> Self {
        let mut out = Self::zero(dim);
        for (k, c) in v {
            out.0[*k] = c.clone();
        }
        out
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, c) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", scalar::format(c))?;
        }
        write!(f, ")")
    }
}

/// Accumulates structure constants, summing repeated `(i, j, k)` keys.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    dim: usize,
    labels: Vec<String>,
    constants: BTreeMap<(usize, usize, usize), Rational>,
}

impl AlgebraBuilder {
    pub fn new(labels: Vec<String>) -> Self {
        AlgebraBuilder {
            dim: labels.len(),
            labels,
            constants: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `coeff * b_k` to `b_i * b_j`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, coeff: Rational) -> &mut Self {
        *self
            .constants
            .entry((i, j, k))
            .or_insert_with(Rational::zero) += coeff;
        self
    }

    /// Adds `coeff * b_k` to `[b_i, b_j]` and its negative to `[b_j, b_i]`.
    pub fn add_antisymmetric(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        coeff: Rational,
    ) -> &mut Self {
        self.add(j, i, k, -coeff.clone());
        self.add(i, j, k, coeff)
    }

    pub fn build(self) -> Result<Algebra> {
        Algebra::from_entries(
            self.labels,
            self.constants
                .into_iter()
                .map(|((i, j, k), c)| (i, j, k, c)),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` holds the sorted nonzero coordinates of `b_i * b_j`.
    table: Vec<Vec<(usize, Rational)>>,
}

impl Algebra {
    /// The zero product on `labels.len()` basis vectors.
    pub fn zero(labels: Vec<String>) -> Result<Self> {
        Self::from_entries(labels, std::iter::empty())
    }

    /// Builds an algebra from `(i, j, k, c)` entries. Repeated keys are summed and zero
    /// results dropped.
    pub fn from_entries<I>(labels: Vec<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut acc: Vec<Sparse> = vec![Sparse::new(); dim * dim];
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            *acc[i * dim + j].entry(k).or_insert_with(Rational::zero) += c;
        }
        let table = acc
            .into_iter()
            .map(|v| prune(v).into_iter().collect())
            .collect();
        Ok(Algebra { dim, labels, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::LabelCount {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Nonzero coordinates of `b_i * b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// All nonzero constants in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let dim = self.dim;
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, v)| v.iter().map(move |(k, c)| (ij / dim, ij % dim, *k, c)))
    }

    pub fn nnz(&self) -> usize {
        self.table.iter().map(Vec::len).sum()
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim,
            });
        }
        Ok(())
    }

    fn check_vector(&self, argument: &'static str, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                argument,
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vector("x", x)?;
        self.check_vector("y", y)?;
        let out = self.mul_sparse(&x.to_sparse(), &y.to_sparse());
        Ok(Vector::from_sparse(self.dim, &out))
    }

    /// `(x, y, z) = x(yz) - (xy)z`.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.check_vector("x", x)?;
        self.check_vector("y", y)?;
        self.check_vector("z", z)?;
        let (x, y, z) = (x.to_sparse(), y.to_sparse(), z.to_sparse());
        let out = self.associator_sparse(&x, &y, &z);
        Ok(Vector::from_sparse(self.dim, &out))
    }

    pub(crate) fn mul_sparse(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc = Sparse::new();
        for (i, a) in x {
            for (j, b) in y {
                let entries = self.basis_product(*i, *j);
                if !entries.is_empty() {
                    axpy(&mut acc, &(a * b), entries);
                }
            }
        }
        prune(acc)
    }

    pub(crate) fn mul_basis_left(&self, i: usize, y: &Sparse) -> Sparse {
        let mut acc = Sparse::new();
        for (j, b) in y {
            axpy(&mut acc, b, self.basis_product(i, *j));
        }
        prune(acc)
    }

    pub(crate) fn mul_basis_right(&self, x: &Sparse, j: usize) -> Sparse {
        let mut acc = Sparse::new();
        for (i, a) in x {
            axpy(&mut acc, a, self.basis_product(*i, j));
        }
        prune(acc)
    }

    pub(crate) fn basis_product_sparse(&self, i: usize, j: usize) -> Sparse {
        self.basis_product(i, j).iter().cloned().collect()
    }

    pub(crate) fn associator_sparse(&self, x: &Sparse, y: &Sparse, z: &Sparse) -> Sparse {
        let left = self.mul_sparse(x, &self.mul_sparse(y, z));
        let right = self.mul_sparse(&self.mul_sparse(x, y), z);
        sub_sparse(&left, &right)
    }

    /// The algebra with product `[x, y] = xy - yx`.
    pub fn commutator_algebra(&self) -> Algebra {
        let dim = self.dim;
        let table = (0..dim * dim)
            .map(|ij| {
                let (i, j) = (ij / dim, ij % dim);
                let d = sub_sparse(
                    &self.basis_product_sparse(i, j),
                    &self.basis_product_sparse(j, i),
                );
                d.into_iter().collect()
            })
            .collect();
        Algebra {
            dim,
            labels: self.labels.clone(),
            table,
        }
    }

    /// `L(b_i)`: column `j` holds `b_i * b_j`.
    pub fn left_mult(&self, i: usize) -> Result<Operator> {
        self.check_index(i)?;
        let mut op = Operator::zero(self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(i, j) {
                op.set(*k, j, c.clone());
            }
        }
        Ok(op)
    }

    /// `R(b_i)`: column `j` holds `b_j * b_i`.
    pub fn right_mult(&self, i: usize) -> Result<Operator> {
        self.check_index(i)?;
        let mut op = Operator::zero(self.dim);
        for j in 0..self.dim {
            for (k, c) in self.basis_product(j, i) {
                op.set(*k, j, c.clone());
            }
        }
        Ok(op)
    }

    /// `ad(b_i)` of a Lie algebra; identical to [`Algebra::left_mult`] for a bracket.
    pub fn ad(&self, i: usize) -> Result<Operator> {
        self.left_mult(i)
    }

    /// Re-expresses the product in the basis whose vectors are the columns of `basis`.
    pub fn change_basis(&self, basis: &Operator, labels: Vec<String>) -> Result<Algebra> {
        if basis.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                argument: "basis",
                expected: self.dim,
                found: basis.dim(),
            });
        }
        let inverse = basis.inverse()?;
        let columns: Vec<Sparse> = (0..self.dim).map(|a| basis.column(a).to_sparse()).collect();
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let old = Vector::from_sparse(self.dim, &self.mul_sparse(&columns[a], &columns[b]));
                let new = inverse.apply(&old);
                for (k, c) in new.0.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, k, c));
                    }
                }
            }
        }
        Algebra::from_entries(labels, entries)
    }

    /// Linear-combination rendering using the basis labels, e.g. `-1/2 z_{1,2,3} + z_{2,1,3}`.
    pub fn render(&self, v: &Vector) -> String {
        let mut out = String::new();
        for (k, c) in v.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&scalar::format(&mag));
                out.push(' ');
            }
            out.push_str(&self.labels[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Dense square matrix. Column `j` holds the coordinates of the image of `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    dim: usize,
    entries: Vec<Rational>,
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zero(dim);
        for i in 0..dim {
            op.set(i, i, Rational::one());
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn column(&self, col: usize) -> Vector {
        Vector((0..self.dim).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (c, x) in v.0.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for r in 0..self.dim {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out.0[r] += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Operator) -> Operator {
        Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Operator {
        Operator {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Matrix product, skipping zero entries of `self`.
    pub fn compose(&self, other: &Operator) -> Operator {
        let n = self.dim;
        let mut out = Operator::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Operator> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Operator::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..n {
                    a.entries.swap(pivot * n + c, col * n + c);
                    inv.entries.swap(pivot * n + c, col * n + c);
                }
            }
            let scale = a.get(col, col).recip();
            for c in 0..n {
                a.entries[col * n + c] *= &scale;
                inv.entries[col * n + c] *= &scale;
            }
            for r in (0..n).filter(|&r| r != col) {
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let da = &factor * &a.entries[col * n + c];
                    a.entries[r * n + c] -= da;
                    let di = &factor * &inv.entries[col * n + c];
                    inv.entries[r * n + c] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Operator) -> Operator {
        self.compose(other).sub(&other.compose(self))
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Rational)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, a)| !a.is_zero())
            .map(|(n, a)| (n / self.dim, n % self.dim, a))
    }
}

/// A Lie algebra together with a candidate Novikov product on the same basis.
///
/// Construction only checks that the two tables share a basis; whether the product really
/// is a Novikov structure is decided by [`crate::checks::check_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovStructure {
    lie: Algebra,
    product: Algebra,
}

impl NovikovStructure {
    pub fn from_parts(lie: Algebra, product: Algebra) -> Result<Self> {
        if lie.dim() != product.dim() {
            return Err(Error::DimensionMismatch {
                argument: "product",
                expected: lie.dim(),
                found: product.dim(),
            });
        }
        let product = product.with_labels(lie.labels().to_vec())?;
        Ok(NovikovStructure { lie, product })
    }

    /// Uses the commutator of `product` as the Lie bracket.
    pub fn from_product(product: Algebra) -> Self {
        NovikovStructure {
            lie: product.commutator_algebra(),
            product,
        }
    }

    pub fn lie(&self) -> &Algebra {
        &self.lie
    }

    pub fn product(&self) -> &Algebra {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("b{i}")).collect()
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut b = AlgebraBuilder::new(labels(2));
        b.add(0, 1, 1, int(1))
            .add(0, 1, 1, int(-1))
            .add(1, 0, 0, frac(1, 2));
        let a = b.build().unwrap();
        assert_eq!(a.nnz(), 1);
        assert_eq!(a.structure_constant(1, 0, 0), frac(1, 2));
        let c = Algebra::from_entries(labels(2), [(1, 0, 0, frac(1, 2))]).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn multiply_rejects_wrong_dimensions() {
        let a = Algebra::zero(labels(3)).unwrap();
        let err = a.multiply(&Vector::zero(3), &Vector::zero(2)).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch { argument: "y", .. }
        ));
        assert!(a.left_mult(3).is_err());
        assert!(Algebra::from_entries(labels(2), [(0, 2, 0, int(1))]).is_err());
    }

    #[test]
    fn operators_follow_column_convention() {
        let mut b = AlgebraBuilder::new(labels(3));
        b.add(0, 1, 2, int(5));
        let a = b.build().unwrap();
        let l = a.left_mult(0).unwrap();
        assert_eq!(l.column(1), Vector::from_ints(&[0, 0, 5]));
        let r = a.right_mult(1).unwrap();
        assert_eq!(r.column(0), Vector::from_ints(&[0, 0, 5]));
        assert_eq!(
            l.apply(&Vector::from_ints(&[0, 2, 0])),
            a.multiply(&Vector::basis(3, 0), &Vector::from_ints(&[0, 2, 0]))
                .unwrap()
        );
    }

    #[test]
    fn render_uses_labels() {
        let a = Algebra::zero(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let v = Vector(vec![int(0), frac(-1, 2), int(1)]);
        assert_eq!(a.render(&v), "-1/2 y + z");
        assert_eq!(a.render(&Vector::zero(3)), "0");
    }
}
