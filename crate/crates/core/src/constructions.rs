//! Factories for the algebra families the engine works with.
//!
//! Every factory is deterministic: equal arguments give identical structure constants and
//! labels. Each family is also addressable by a name string through [`by_name`]:
//!
//! | name                  | result                                                   |
//! |-----------------------|----------------------------------------------------------|
//! | `free3:n`             | free 3-step nilpotent Lie algebra on `n` generators      |
//! | `novikov-free3:n`     | the same with its Novikov product                        |
//! | `cex13`               | 13-dimensional 3-step nilpotent Lie algebra, 4 generators|
//! | `nilt:n`, `solvt:n`   | strictly upper / upper triangular `n x n` matrices       |
//! | `novikov-nilt:n`      | `nilt:n` with a Novikov product, `n <= 4`                |
//! | `filiform910:n:e\|f`  | the filiform family with its Novikov product             |
//! | `stdfiliform:n`       | standard filiform algebra with its Novikov product       |
//! | `abelian:n`           | abelian Lie algebra with the zero product                |

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraBuilder, NovikovStructure, Operator, Sparse, Vector};
use crate::error::{Error, Result};
use crate::scalar::{self, frac, int, Rational};
use crate::series::quotient;
use crate::subspace::kernel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Lie(Algebra),
    Novikov(NovikovStructure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedAlgebra {
    pub name: String,
    pub structure: Structure,
    /// Indices of a generating set, when the family has a distinguished one.
    pub generators: Vec<usize>,
    /// Degree of each basis vector, when the basis is graded.
    pub grading: Option<Vec<usize>>,
}

impl NamedAlgebra {
    pub fn lie(&self) -> &Algebra {
        match &self.structure {
            Structure::Lie(a) => a,
            Structure::Novikov(s) => s.lie(),
        }
    }

    pub fn novikov(&self) -> Option<&NovikovStructure> {
        match &self.structure {
            Structure::Lie(_) => None,
            Structure::Novikov(s) => Some(s),
        }
    }

    pub fn dim(&self) -> usize {
        self.lie().dim()
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

/// Basis `x_i`, `y_{i,j} = [x_i, x_j]` (`i < j`), `z_{i,j,k} = [x_i, y_{j,k}]`
/// (`j < k`, `i <= k`) of the free 3-step nilpotent Lie algebra on `n` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeNilpotentBasis {
    pub n: usize,
    pub labels: Vec<String>,
    y_index: BTreeMap<(usize, usize), usize>,
    z_index: BTreeMap<(usize, usize, usize), usize>,
}

impl FreeNilpotentBasis {
    /// Generators are numbered from 1 as in the labels.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(
                "free3",
                format!("need at least 2 generators, got {n}"),
            ));
        }
        let mut labels: Vec<String> = (1..=n).map(|i| format!("x_{i}")).collect();
        let mut y_index = BTreeMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                y_index.insert((i, j), labels.len());
                labels.push(format!("y_{{{i},{j}}}"));
            }
        }
        let mut z_index = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in j + 1..=n {
                    if i <= k {
                        z_index.insert((i, j, k), labels.len());
                        labels.push(format!("z_{{{i},{j},{k}}}"));
                    }
                }
            }
        }
        Ok(FreeNilpotentBasis {
            n,
            labels,
            y_index,
            z_index,
        })
    }

    /// `n + C(n,2) + sum_{j<k} k`.
    pub fn expected_dim(n: usize) -> usize {
        let pairs: usize = (1..=n).map(|k| (k - 1) * k).sum();
        n + n * (n - 1) / 2 + pairs
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn x(&self, i: usize) -> usize {
        i - 1
    }

    pub fn y(&self, i: usize, j: usize) -> usize {
        self.y_index[&(i, j)]
    }

    /// Index of a stored `z_{i,j,k}`; panics outside `j < k`, `i <= k`.
    pub fn z(&self, i: usize, j: usize, k: usize) -> usize {
        self.z_index[&(i, j, k)]
    }

    /// `[x_i, y_{j,k}]` for any `i`, rewriting `i > k` through the Jacobi identity:
    /// `z_{i,j,k} = -z_{j,k,i} + z_{k,j,i}`.
    pub fn z_any(&self, i: usize, j: usize, k: usize) -> Sparse {
        if i <= k {
            Sparse::from([(self.z(i, j, k), Rational::one())])
        } else {
            Sparse::from([(self.z(j, k, i), int(-1)), (self.z(k, j, i), int(1))])
        }
    }

    pub fn grading(&self) -> Vec<usize> {
        let n = self.n;
        let ny = n * (n - 1) / 2;
        (0..self.dim())
            .map(|a| {
                if a < n {
                    1
                } else if a < n + ny {
                    2
                } else {
                    3
                }
            })
            .collect()
    }

    pub fn y_pairs(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.y_index.iter()
    }

    pub fn z_triples(&self) -> impl Iterator<Item = (&(usize, usize, usize), &usize)> {
        self.z_index.iter()
    }
}

fn add_sparse_entries(b: &mut AlgebraBuilder, i: usize, j: usize, v: &Sparse, scale: &Rational) {
    for (k, c) in v {
        b.add(i, j, *k, c * scale);
    }
}

fn free_3step_bracket(basis: &FreeNilpotentBasis) -> Result<Algebra> {
    let n = basis.n;
    let mut b = AlgebraBuilder::new(basis.labels.clone());
    for i in 1..=n {
        for j in i + 1..=n {
            b.add_antisymmetric(basis.x(i), basis.x(j), basis.y(i, j), int(1));
        }
    }
    for i in 1..=n {
        for (&(j, k), &y) in basis.y_pairs() {
            let z = basis.z_any(i, j, k);
            add_sparse_entries(&mut b, basis.x(i), y, &z, &int(1));
            add_sparse_entries(&mut b, y, basis.x(i), &z, &int(-1));
        }
    }
    b.build()
}

/// Free 3-step nilpotent Lie algebra on `n ≥ 2` generators.
pub fn free_3step_lie(n: usize) -> Result<NamedAlgebra> {
    let basis = FreeNilpotentBasis::new(n)?;
    Ok(NamedAlgebra {
        name: format!("free3:{n}"),
        structure: Structure::Lie(free_3step_bracket(&basis)?),
        generators: (0..n).collect(),
        grading: Some(basis.grading()),
    })
}

/// The free 3-step nilpotent Lie algebra with its Novikov product:
///
/// - `x_i x_j = -y_{j,i}` for `i > j`;
/// - `x_i y_{j,k}` is `z_{i,j,k}/2` for `i <= j`, `-z_{j,i,k}/2 + z_{i,j,k}` for `j < i < k`,
///   and `z_{i,j,k}` (normalized) for `k <= i`;
/// - `y_{j,k} x_i` is `-z_{i,j,k}/2` for `i <= j` and `-z_{j,i,k}/2` for `j < i < k`;
///
/// every other basis product vanishes.
pub fn novikov_free_3step(n: usize) -> Result<NamedAlgebra> {
    let basis = FreeNilpotentBasis::new(n)?;
    let lie = free_3step_bracket(&basis)?;
    let half = frac(1, 2);
    let mut b = AlgebraBuilder::new(basis.labels.clone());
    for i in 1..=n {
        for j in 1..i {
            b.add(basis.x(i), basis.x(j), basis.y(j, i), int(-1));
        }
    }
    for i in 1..=n {
        for (&(j, k), &y) in basis.y_pairs() {
            let xi = basis.x(i);
            if i <= j {
                b.add(xi, y, basis.z(i, j, k), half.clone());
                b.add(y, xi, basis.z(i, j, k), -half.clone());
            } else if i < k {
                b.add(xi, y, basis.z(j, i, k), -half.clone());
                b.add(xi, y, basis.z(i, j, k), int(1));
                b.add(y, xi, basis.z(j, i, k), -half.clone());
            } else {
                add_sparse_entries(&mut b, xi, y, &basis.z_any(i, j, k), &int(1));
            }
        }
    }
    let product = b.build()?;
    Ok(NamedAlgebra {
        name: format!("novikov-free3:{n}"),
        structure: Structure::Novikov(NovikovStructure::from_parts(lie, product)?),
        generators: (0..n).collect(),
        grading: Some(basis.grading()),
    })
}

/// 13-dimensional 3-step nilpotent Lie algebra on the generators `x_1..x_4` that carries no
/// Novikov structure.
pub fn counterexample_13() -> NamedAlgebra {
    type Row = (usize, usize, &'static [(usize, i64)]);
    const BRACKETS: &[Row] = &[
        (1, 2, &[(5, 1)]),
        (1, 4, &[(6, 1)]),
        (1, 6, &[(10, 1)]),
        (1, 7, &[(11, 1)]),
        (1, 8, &[(12, 1)]),
        (2, 3, &[(7, 1)]),
        (2, 4, &[(8, 1)]),
        (2, 5, &[(13, 1)]),
        (2, 7, &[(13, 1)]),
        (3, 4, &[(5, -1)]),
        (3, 5, &[(11, -1)]),
        (3, 8, &[(9, 1)]),
        (4, 5, &[(12, -1)]),
        (4, 6, &[(9, 1)]),
        (4, 7, &[(9, 1), (13, 1)]),
    ];
    let labels = (1..=13).map(|i| format!("x_{i}")).collect();
    let mut b = AlgebraBuilder::new(labels);
    for &(i, j, image) in BRACKETS {
        for &(k, c) in image {
            b.add_antisymmetric(i - 1, j - 1, k - 1, int(c));
        }
    }
    let grading = (1..=13)
        .map(|i| {
            if i <= 4 {
                1
            } else if i <= 8 {
                2
            } else {
                3
            }
        })
        .collect();
    NamedAlgebra {
        name: "cex13".into(),
        structure: Structure::Lie(b.build().expect("indices in range")),
        generators: vec![0, 1, 2, 3],
        grading: Some(grading),
    }
}

/// Matrix-unit basis `e_{i,j}` of triangular matrices, ordered by diagonal level `j - i`
/// and then by row.
fn matrix_units(n: usize, include_diagonal: bool) -> Vec<(usize, usize)> {
    let start = if include_diagonal { 0 } else { 1 };
    (start..n)
        .flat_map(|d| (1..=n - d).map(move |i| (i, i + d)))
        .collect()
}

fn matrix_lie(n: usize, units: &[(usize, usize)]) -> Result<Algebra> {
    let index: BTreeMap<(usize, usize), usize> =
        units.iter().enumerate().map(|(a, &u)| (u, a)).collect();
    let labels = units
        .iter()
        .map(|(i, j)| format!("e_{{{i},{j}}}"))
        .collect();
    let mut b = AlgebraBuilder::new(labels);
    for (a, &(i, j)) in units.iter().enumerate() {
        for (c, &(k, l)) in units.iter().enumerate() {
            // [e_ij, e_kl] = δ_jk e_il - δ_il e_kj
            if j == k {
                b.add(a, c, index[&(i, l)], int(1));
            }
            if i == l {
                b.add(a, c, index[&(k, j)], int(-1));
            }
        }
    }
    let _ = n;
    b.build()
}

/// `n(n, k)`: strictly upper triangular `n x n` matrices, `n ≥ 2`.
pub fn strictly_upper_triangular(n: usize) -> Result<NamedAlgebra> {
    if n < 2 {
        return Err(invalid("nilt", format!("need n >= 2, got {n}")));
    }
    let units = matrix_units(n, false);
    let grading = units.iter().map(|(i, j)| j - i).collect();
    Ok(NamedAlgebra {
        name: format!("nilt:{n}"),
        structure: Structure::Lie(matrix_lie(n, &units)?),
        generators: (0..n - 1).collect(),
        grading: Some(grading),
    })
}

/// `t(n, k)`: upper triangular `n x n` matrices, `n ≥ 1`.
pub fn upper_triangular(n: usize) -> Result<NamedAlgebra> {
    if n < 1 {
        return Err(invalid("solvt", "need n >= 1"));
    }
    let units = matrix_units(n, true);
    Ok(NamedAlgebra {
        name: format!("solvt:{n}"),
        structure: Structure::Lie(matrix_lie(n, &units)?),
        generators: Vec::new(),
        grading: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiliformBasis {
    /// `e_1, ..., e_n` with `[e_1, e_j] = e_{j+1}`.
    E,
    /// `f_1 = 6 e_1`, `f_j = e_j / (j-2)!`, where `[f_i, f_j] = 6(j-i) f_{i+j}`.
    F,
}

impl FiliformBasis {
    fn letter(self) -> char {
        match self {
            FiliformBasis::E => 'e',
            FiliformBasis::F => 'f',
        }
    }
}

fn filiform_labels(n: usize, basis: FiliformBasis) -> Vec<String> {
    (1..=n).map(|i| format!("{}_{i}", basis.letter())).collect()
}

/// `e_j` in f-coordinates: `e_1 = f_1 / 6`, `e_j = (j-2)! f_j`.
pub fn f910_e_in_f(n: usize) -> Operator {
    let mut p = Operator::zero(n);
    p.set(0, 0, frac(1, 6));
    for j in 2..=n {
        p.set(
            j - 1,
            j - 1,
            Rational::from_integer(scalar::factorial(j as u64 - 2)),
        );
    }
    p
}

fn f910_f_basis(n: usize) -> Result<NovikovStructure> {
    let labels = filiform_labels(n, FiliformBasis::F);
    let mut lie = AlgebraBuilder::new(labels.clone());
    let mut prod = AlgebraBuilder::new(labels);
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                // truncation: anything landing past f_n is zero
                lie.add(i - 1, j - 1, i + j - 1, int(6 * (j as i64 - i as i64)));
                prod.add(i - 1, j - 1, i + j - 1, int(6 * (j as i64 - 1)));
            }
        }
    }
    NovikovStructure::from_parts(lie.build()?, prod.build()?)
}

/// The filiform family with its Novikov product, built in the f-basis and conjugated to the
/// e-basis when requested. `n ≥ 3`.
pub fn novikov_f910(n: usize, basis: FiliformBasis) -> Result<NamedAlgebra> {
    if n < 3 {
        return Err(invalid("filiform910", format!("need n >= 3, got {n}")));
    }
    let f = f910_f_basis(n)?;
    let structure = match basis {
        FiliformBasis::F => f,
        FiliformBasis::E => {
            let p = f910_e_in_f(n);
            let labels = filiform_labels(n, FiliformBasis::E);
            NovikovStructure::from_parts(
                f.lie().change_basis(&p, labels.clone())?,
                f.product().change_basis(&p, labels)?,
            )?
        }
    };
    Ok(NamedAlgebra {
        name: format!("filiform910:{n}:{}", basis.letter()),
        structure: Structure::Novikov(structure),
        generators: vec![0, 1],
        grading: None,
    })
}

/// The Lie algebra only.
pub fn filiform_f910(n: usize, basis: FiliformBasis) -> Result<Algebra> {
    Ok(novikov_f910(n, basis)?.lie().clone())
}

/// The e-basis constants evaluated directly from their closed forms:
/// `[e_1, e_j] = e_{j+1}`, `[e_i, e_j] = 6(j-i) / (j (j-1) C(j+i-2, i-2)) e_{i+j}` for
/// `2 <= i <= j`, `e_1 e_j = e_{j+1}`, `e_i e_j = 6 / (j C(j+i-2, i-2)) e_{i+j}` for
/// `i, j >= 2`. Independent of the f-basis route used by [`novikov_f910`].
pub fn f910_closed_form(n: usize) -> Result<NovikovStructure> {
    if n < 3 {
        return Err(invalid("filiform910", format!("need n >= 3, got {n}")));
    }
    let labels = filiform_labels(n, FiliformBasis::E);
    let mut lie = AlgebraBuilder::new(labels.clone());
    let mut prod = AlgebraBuilder::new(labels);
    for j in 2..n {
        lie.add_antisymmetric(0, j - 1, j, int(1));
        prod.add(0, j - 1, j, int(1));
    }
    for i in 2..=n {
        for j in 2..=n {
            if i + j > n {
                continue;
            }
            let binom =
                Rational::from_integer(scalar::binomial((j + i - 2) as u64, (i - 2) as u64));
            let (ji, jr) = (int(j as i64), int(j as i64 - 1));
            if i <= j {
                let c = int(6 * (j as i64 - i as i64)) / (&ji * &jr * &binom);
                if !c.is_zero() {
                    lie.add_antisymmetric(i - 1, j - 1, i + j - 1, c);
                }
            }
            prod.add(i - 1, j - 1, i + j - 1, int(6) / (ji * binom));
        }
    }
    NovikovStructure::from_parts(lie.build()?, prod.build()?)
}

/// Standard filiform algebra `[e_1, e_i] = e_{i+1}` with the product `e_1 e_i = e_{i+1}`
/// (`2 <= i <= n-1`), every other product zero. `n ≥ 3`.
pub fn standard_filiform(n: usize) -> Result<NamedAlgebra> {
    if n < 3 {
        return Err(invalid("stdfiliform", format!("need n >= 3, got {n}")));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("e_{i}")).collect();
    let mut lie = AlgebraBuilder::new(labels.clone());
    let mut prod = AlgebraBuilder::new(labels);
    for i in 2..n {
        lie.add_antisymmetric(0, i - 1, i, int(1));
        prod.add(0, i - 1, i, int(1));
    }
    Ok(NamedAlgebra {
        name: format!("stdfiliform:{n}"),
        structure: Structure::Novikov(NovikovStructure::from_parts(lie.build()?, prod.build()?)?),
        generators: vec![0, 1],
        grading: Some((1..=n).map(|i| if i == 1 { 1 } else { i - 1 }).collect()),
    })
}

/// Abelian Lie algebra of dimension `n ≥ 1` with the zero product.
pub fn abelian(n: usize) -> Result<NamedAlgebra> {
    if n < 1 {
        return Err(invalid("abelian", "need n >= 1"));
    }
    let zero = Algebra::zero((1..=n).map(|i| format!("a_{i}")).collect())?;
    Ok(NamedAlgebra {
        name: format!("abelian:{n}"),
        structure: Structure::Novikov(NovikovStructure::from_parts(zero.clone(), zero)?),
        generators: (0..n).collect(),
        grading: Some(vec![1; n]),
    })
}

/// Lie homomorphism out of the free 3-step algebra determined by generator images.
///
/// Returns the images of every basis vector (columns). Fails if the extension is not a
/// homomorphism, which happens only when `target` is not 3-step nilpotent.
pub fn free_3step_extension(
    basis: &FreeNilpotentBasis,
    target: &Algebra,
    images: &[Vector],
) -> Result<Vec<Vector>> {
    if images.len() != basis.n {
        return Err(invalid(
            "free3 extension",
            "one image per generator required",
        ));
    }
    let dim = target.dim();
    let mut out = vec![Vector::zero(dim); basis.dim()];
    for (i, v) in images.iter().enumerate() {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                argument: "images",
                expected: dim,
                found: v.dim(),
            });
        }
        out[i] = v.clone();
    }
    for (&(i, j), &y) in basis.y_pairs() {
        out[y] = target.multiply(&out[basis.x(i)], &out[basis.x(j)])?;
    }
    for (&(i, j, k), &z) in basis.z_triples() {
        out[z] = target.multiply(&out[basis.x(i)], &out[basis.y(j, k)])?;
    }
    Ok(out)
}

/// Pushes a Novikov structure on the free 3-step algebra through the surjection sending
/// generator `x_i` to `images[i]`. The kernel must be an ideal of the Novikov product; the
/// induced product is expressed in the basis of `target`.
pub fn novikov_by_quotient(
    free: &NovikovStructure,
    basis: &FreeNilpotentBasis,
    target: &Algebra,
    images: &[Vector],
) -> Result<NovikovStructure> {
    let columns = free_3step_extension(basis, target, images)?;
    let lie = free.lie();
    for a in 0..lie.dim() {
        for b in 0..lie.dim() {
            let lhs = combine(&columns, lie.basis_product(a, b), target.dim());
            let rhs = target.multiply(&columns[a], &columns[b])?;
            if lhs != rhs {
                return Err(invalid(
                    "free3 extension",
                    "generator images do not define a homomorphism",
                ));
            }
        }
    }
    let functionals = (0..target.dim()).map(|t| {
        columns
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.0[t].is_zero())
            .map(|(a, v)| (a, v.0[t].clone()))
            .collect::<Sparse>()
    });
    let ideal = kernel(lie.dim(), functionals.collect::<Vec<_>>());
    let q_product = quotient(free.product(), &ideal)?;
    let q_lie = quotient(lie, &ideal)?;
    if q_product.complement.len() != target.dim() {
        return Err(invalid(
            "free3 extension",
            "generator images do not span the target",
        ));
    }
    // columns of `to_target` are the images of the quotient basis in the target basis
    let mut to_target = Operator::zero(target.dim());
    for (a, &c) in q_product.complement.iter().enumerate() {
        for (t, x) in columns[c].0.iter().enumerate() {
            to_target.set(t, a, x.clone());
        }
    }
    let to_quotient = to_target.inverse()?;
    let labels = target.labels().to_vec();
    let product = q_product
        .algebra
        .change_basis(&to_quotient, labels.clone())?;
    let bracket = q_lie.algebra.change_basis(&to_quotient, labels)?;
    if &bracket != target {
        return Err(invalid(
            "free3 extension",
            "induced bracket differs from the target",
        ));
    }
    NovikovStructure::from_parts(bracket, product)
}

fn combine(columns: &[Vector], coeffs: &[(usize, Rational)], dim: usize) -> Vector {
    let mut out = Vector::zero(dim);
    for (k, c) in coeffs {
        out = out.add(&columns[*k].scale(c));
    }
    out
}

/// `n(n, k)` with a Novikov product for `2 <= n <= 4`: the zero product for `n = 2`, and
/// otherwise the quotient of the free 3-step Novikov algebra on `n - 1` generators.
///
/// For `n = 4` the generators go to `e_{1,2}, e_{3,4}, e_{2,3}` in that order. In the natural
/// order the kernel contains `y_{1,3}` and is not an ideal of the free product; in this one
/// it is.
pub fn novikov_strictly_upper_triangular(n: usize) -> Result<NamedAlgebra> {
    let target = strictly_upper_triangular(n)?;
    let lie = target.lie().clone();
    let structure = match n {
        2 => NovikovStructure::from_parts(lie.clone(), Algebra::zero(lie.labels().to_vec())?)?,
        3 | 4 => {
            // e_{1,2}, e_{2,3}, e_{3,4} sit at indices 0, 1, 2
            let order: &[usize] = if n == 3 { &[0, 1] } else { &[0, 2, 1] };
            let basis = FreeNilpotentBasis::new(n - 1)?;
            let free = novikov_free_3step(n - 1)?;
            let images: Vec<Vector> = order.iter().map(|&g| Vector::basis(lie.dim(), g)).collect();
            novikov_by_quotient(free.novikov().expect("novikov"), &basis, &lie, &images)?
        }
        _ => {
            return Err(invalid(
                "novikov-nilt",
                format!("no Novikov structure is shipped for n = {n}"),
            ))
        }
    };
    Ok(NamedAlgebra {
        name: format!("novikov-nilt:{n}"),
        structure: Structure::Novikov(structure),
        generators: target.generators,
        grading: target.grading,
    })
}

fn parse_usize(family: &'static str, text: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| invalid(family, format!("`{text}` is not a non-negative integer")))
}

/// Resolves a name such as `novikov-free3:4` or `filiform910:10:e`.
pub fn by_name(name: &str) -> Result<NamedAlgebra> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["cex13"] => Ok(counterexample_13()),
        ["free3", n] => free_3step_lie(parse_usize("free3", n)?),
        ["novikov-free3", n] => novikov_free_3step(parse_usize("novikov-free3", n)?),
        ["nilt", n] => strictly_upper_triangular(parse_usize("nilt", n)?),
        ["novikov-nilt", n] => novikov_strictly_upper_triangular(parse_usize("novikov-nilt", n)?),
        ["solvt", n] => upper_triangular(parse_usize("solvt", n)?),
        ["stdfiliform", n] => standard_filiform(parse_usize("stdfiliform", n)?),
        ["abelian", n] => abelian(parse_usize("abelian", n)?),
        ["filiform910", n, b] => {
            let basis = match *b {
                "e" => FiliformBasis::E,
                "f" => FiliformBasis::F,
                other => {
                    return Err(invalid(
                        "filiform910",
                        format!("basis must be e or f, got `{other}`"),
                    ))
                }
            };
            novikov_f910(parse_usize("filiform910", n)?, basis)
        }
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}
