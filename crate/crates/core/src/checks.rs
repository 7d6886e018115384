//! Identity checkers.
//!
//! Every identity checked here is multilinear, so it holds for all elements exactly when it
//! holds on all tuples of basis vectors. The checkers therefore enumerate basis tuples only,
//! in lexicographic order, and report the first failing tuple together with both evaluated
//! sides. The outer index is distributed over threads when the `parallel` feature is on; the
//! reported witness is still the lexicographically first one.

use serde::Serialize;

use crate::algebra::{add_sparse, sub_sparse, unit, Algebra, NovikovStructure, Sparse, Vector};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Lie,
    LeftSymmetric,
    Novikov,
    RightMultiplicationsCommute,
    Compatibility,
    OperatorIdentity,
    CyclicLeft,
    CyclicRight,
    AssociatorExpansion,
    IdealProducts,
    IdealBrackets,
    LowerCentralProducts,
    CenterAnnihilatesDerived,
    CenterIsIdeal,
    CenterMatchesLie,
    CentralAssociators,
    SeriesAreIdeals,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Lie => "lie",
            CheckKind::LeftSymmetric => "left-symmetric",
            CheckKind::Novikov => "novikov",
            CheckKind::RightMultiplicationsCommute => "right-multiplications-commute",
            CheckKind::Compatibility => "compatibility",
            CheckKind::OperatorIdentity => "operator-identity",
            CheckKind::CyclicLeft => "cyclic-left",
            CheckKind::CyclicRight => "cyclic-right",
            CheckKind::AssociatorExpansion => "associator-expansion",
            CheckKind::IdealProducts => "ideal-products",
            CheckKind::IdealBrackets => "ideal-brackets",
            CheckKind::LowerCentralProducts => "lower-central-products",
            CheckKind::CenterAnnihilatesDerived => "center-annihilates-derived",
            CheckKind::CenterIsIdeal => "center-is-ideal",
            CheckKind::CenterMatchesLie => "center-matches-lie",
            CheckKind::CentralAssociators => "central-associators",
            CheckKind::SeriesAreIdeals => "series-are-ideals",
        }
    }
}

/// Failing tuple with both sides of the identity evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Zero-based basis indices (or term indices, for the ideal checks).
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub(crate) fn from_witness(kind: CheckKind, witness: Option<Witness>) -> Self {
        CheckReport {
            kind,
            passed: witness.is_none(),
            witness,
        }
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

fn witness(dim: usize, indices: Vec<usize>, lhs: &Sparse, rhs: &Sparse) -> Witness {
    Witness {
        indices,
        lhs: Vector::from_sparse(dim, lhs),
        rhs: Vector::from_sparse(dim, rhs),
        note: None,
    }
}

/// Antisymmetry of the constants and the Jacobi identity on `i < j < l`.
pub fn check_lie(lie: &Algebra) -> CheckReport {
    let n = lie.dim();
    let anti = par::find_first(n, |i| {
        (i..n).find_map(|j| {
            let lhs = lie.basis_product_sparse(i, j);
            let rhs: Sparse = lie
                .basis_product(j, i)
                .iter()
                .map(|(k, c)| (*k, -c))
                .collect();
            (lhs != rhs).then(|| witness(n, vec![i, j], &lhs, &rhs))
        })
    });
    if anti.is_some() {
        return CheckReport::from_witness(CheckKind::Lie, anti);
    }
    let jacobi = par::find_first(n, |i| {
        for j in i + 1..n {
            for l in j + 1..n {
                let lhs = jacobiator(lie, i, j, l);
                if !lhs.is_empty() {
                    return Some(witness(n, vec![i, j, l], &lhs, &Sparse::new()));
                }
            }
        }
        None
    });
    CheckReport::from_witness(CheckKind::Lie, jacobi)
}

fn jacobiator(lie: &Algebra, i: usize, j: usize, l: usize) -> Sparse {
    let a = lie.mul_basis_left(i, &lie.basis_product_sparse(j, l));
    let b = lie.mul_basis_left(j, &lie.basis_product_sparse(l, i));
    let c = lie.mul_basis_left(l, &lie.basis_product_sparse(i, j));
    add_sparse(&add_sparse(&a, &b), &c)
}

/// `x(yz) - (xy)z = y(xz) - (yx)z` on basis triples. The identity is symmetric in `x, y`,
/// so only `x < y` is enumerated.
pub fn check_left_symmetric(a: &Algebra) -> CheckReport {
    let n = a.dim();
    let found = par::find_first(n, |x| {
        for y in x + 1..n {
            for z in 0..n {
                let (bx, by, bz) = (unit(x), unit(y), unit(z));
                let lhs = a.associator_sparse(&bx, &by, &bz);
                let rhs = a.associator_sparse(&by, &bx, &bz);
                if lhs != rhs {
                    return Some(witness(n, vec![x, y, z], &lhs, &rhs));
                }
            }
        }
        None
    });
    CheckReport::from_witness(CheckKind::LeftSymmetric, found)
}

/// `(xy)z = (xz)y` on basis triples, then `[R(b_i), R(b_j)] = 0` as matrices.
///
/// The two routes are equivalent; both run so that a disagreement surfaces as a failure.
pub fn check_novikov(a: &Algebra) -> CheckReport {
    let n = a.dim();
    let found = par::find_first(n, |x| {
        for y in 0..n {
            let xy = a.basis_product_sparse(x, y);
            for z in y + 1..n {
                let lhs = a.mul_basis_right(&xy, z);
                let rhs = a.mul_basis_right(&a.basis_product_sparse(x, z), y);
                if lhs != rhs {
                    return Some(witness(n, vec![x, y, z], &lhs, &rhs));
                }
            }
        }
        None
    });
    if found.is_some() {
        return CheckReport::from_witness(CheckKind::Novikov, found);
    }
    let operators = check_right_multiplications_commute(a);
    CheckReport {
        kind: CheckKind::Novikov,
        passed: operators.passed,
        witness: operators.witness,
    }
}

/// Pairwise commutation of the right multiplication matrices.
pub fn check_right_multiplications_commute(a: &Algebra) -> CheckReport {
    let n = a.dim();
    let rights: Vec<_> = par::map_collect(n, |i| a.right_mult(i).expect("index in range"));
    let found = par::find_first(n, |i| {
        for j in i + 1..n {
            let ij = rights[i].compose(&rights[j]);
            let ji = rights[j].compose(&rights[i]);
            if ij != ji {
                let col = (0..n).find(|&c| ij.column(c) != ji.column(c)).unwrap_or(0);
                return Some(Witness {
                    indices: vec![i, j, col],
                    lhs: ij.column(col),
                    rhs: ji.column(col),
                    note: Some("column of R(b_i)R(b_j) vs R(b_j)R(b_i)".into()),
                });
            }
        }
        None
    });
    CheckReport::from_witness(CheckKind::RightMultiplicationsCommute, found)
}

/// `b_i b_j - b_j b_i = [b_i, b_j]` for all ordered basis pairs.
pub fn check_compatibility(product: &Algebra, lie: &Algebra) -> Result<CheckReport> {
    if product.dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            argument: "lie",
            expected: product.dim(),
            found: lie.dim(),
        });
    }
    let n = product.dim();
    let found = par::find_first(n, |i| {
        (0..n).find_map(|j| {
            let lhs = sub_sparse(
                &product.basis_product_sparse(i, j),
                &product.basis_product_sparse(j, i),
            );
            let rhs = lie.basis_product_sparse(i, j);
            (lhs != rhs).then(|| witness(n, vec![i, j], &lhs, &rhs))
        })
    });
    Ok(CheckReport::from_witness(CheckKind::Compatibility, found))
}

/// `L([x,y]) + ad([x,y]) - [ad(x), L(y)] - [L(x), ad(y)] = 0`, applied to every basis
/// vector. The left side is antisymmetric in `x, y`, so only `i < j` is enumerated.
pub fn check_operator_identity(s: &NovikovStructure) -> CheckReport {
    let (lie, prod) = (s.lie(), s.product());
    let n = s.dim();
    let found = par::find_first(n, |i| {
        for j in i + 1..n {
            let w = lie.basis_product_sparse(i, j);
            for m in 0..n {
                let value = operator_identity_value(lie, prod, i, j, &w, m);
                if !value.is_empty() {
                    return Some(witness(n, vec![i, j, m], &value, &Sparse::new()));
                }
            }
        }
        None
    });
    CheckReport::from_witness(CheckKind::OperatorIdentity, found)
}

fn operator_identity_value(
    lie: &Algebra,
    prod: &Algebra,
    i: usize,
    j: usize,
    w: &Sparse,
    m: usize,
) -> Sparse {
    let t1 = prod.mul_basis_right(w, m);
    let t2 = lie.mul_basis_right(w, m);
    // [ad(b_i), L(b_j)] b_m = [b_i, b_j b_m] - b_j [b_i, b_m]
    let t3 = sub_sparse(
        &lie.mul_basis_left(i, &prod.basis_product_sparse(j, m)),
        &prod.mul_basis_left(j, &lie.basis_product_sparse(i, m)),
    );
    // [L(b_i), ad(b_j)] b_m = b_i [b_j, b_m] - [b_j, b_i b_m]
    let t4 = sub_sparse(
        &prod.mul_basis_left(i, &lie.basis_product_sparse(j, m)),
        &lie.mul_basis_left(j, &prod.basis_product_sparse(i, m)),
    );
    sub_sparse(&add_sparse(&t1, &t2), &add_sparse(&t3, &t4))
}

/// The full defining suite: Lie, compatibility, left-symmetry, Novikov, operator identity.
pub fn check_structure(s: &NovikovStructure) -> Vec<CheckReport> {
    vec![
        check_lie(s.lie()),
        check_compatibility(s.product(), s.lie()).expect("shared basis"),
        check_left_symmetric(s.product()),
        check_novikov(s.product()),
        check_operator_identity(s),
    ]
}
