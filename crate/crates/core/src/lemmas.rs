//! Consequences of the Novikov identities, checked on a concrete structure.
//!
//! For a Novikov structure these must all pass: products and brackets of ideals are ideals,
//! the series terms are two-sided ideals, `γ_a · γ_b ⊆ γ_{a+b-1}`, the center kills the
//! derived algebra from both sides, the center is an ideal, associators with a central
//! argument vanish, and both cyclic identities hold. A failure on a structure that passes
//! [`crate::checks::check_structure`] would be a bug.

use crate::algebra::{add_sparse, unit, NovikovStructure, Sparse, Vector};
use crate::checks::{CheckKind, CheckReport, Witness};
use crate::par;
use crate::series::{derived_series, lower_central_series, upper_central_series};
use crate::subspace::{center, ideal_witness, product_space, Subspace};

/// A named subspace drawn from one of the three series.
#[derive(Clone, Debug)]
pub struct SeriesTerm {
    pub name: String,
    pub space: Subspace,
}

/// Distinct terms of the lower central, derived and upper central series, in that order.
pub fn series_terms(s: &NovikovStructure) -> Vec<SeriesTerm> {
    let lie = s.lie();
    let mut out: Vec<SeriesTerm> = Vec::new();
    let mut push = |name: String, space: Subspace| {
        if !out.iter().any(|t| t.space == space) {
            out.push(SeriesTerm { name, space });
        }
    };
    for (n, t) in lower_central_series(lie).terms.into_iter().enumerate() {
        push(format!("gamma_{}", n + 1), t);
    }
    for (n, t) in derived_series(lie).terms.into_iter().enumerate() {
        push(format!("derived_{n}"), t);
    }
    for (n, t) in upper_central_series(lie).terms.into_iter().enumerate() {
        push(format!("center_{n}"), t);
    }
    out
}

fn subspace_witness(indices: Vec<usize>, offending: Vector, note: String) -> Witness {
    let dim = offending.dim();
    Witness {
        indices,
        lhs: offending,
        rhs: Vector::zero(dim),
        note: Some(note),
    }
}

fn triple_check<F>(s: &NovikovStructure, kind: CheckKind, ordered: bool, eval: F) -> CheckReport
where
    F: Fn(&Sparse, &Sparse, &Sparse) -> (Sparse, Sparse) + Sync + Send,
{
    let n = s.dim();
    let found = par::find_first(n, |i| {
        let start_j = if ordered { 0 } else { i + 1 };
        for j in start_j..n {
            let start_l = if ordered { 0 } else { j + 1 };
            for l in start_l..n {
                let (lhs, rhs) = eval(&unit(i), &unit(j), &unit(l));
                if lhs != rhs {
                    return Some(Witness {
                        indices: vec![i, j, l],
                        lhs: Vector::from_sparse(n, &lhs),
                        rhs: Vector::from_sparse(n, &rhs),
                        note: None,
                    });
                }
            }
        }
        None
    });
    CheckReport::from_witness(kind, found)
}

/// `[x,y]z + [y,z]x + [z,x]y = 0`; alternating, so `i < j < l` suffices.
pub fn check_cyclic_left(s: &NovikovStructure) -> CheckReport {
    let (p, lie) = (s.product(), s.lie());
    triple_check(s, CheckKind::CyclicLeft, false, |x, y, z| {
        let a = p.mul_sparse(&lie.mul_sparse(x, y), z);
        let b = p.mul_sparse(&lie.mul_sparse(y, z), x);
        let c = p.mul_sparse(&lie.mul_sparse(z, x), y);
        (add_sparse(&add_sparse(&a, &b), &c), Sparse::new())
    })
}

/// `x[y,z] + y[z,x] + z[x,y] = 0`.
pub fn check_cyclic_right(s: &NovikovStructure) -> CheckReport {
    let (p, lie) = (s.product(), s.lie());
    triple_check(s, CheckKind::CyclicRight, false, |x, y, z| {
        let a = p.mul_sparse(x, &lie.mul_sparse(y, z));
        let b = p.mul_sparse(y, &lie.mul_sparse(z, x));
        let c = p.mul_sparse(z, &lie.mul_sparse(x, y));
        (add_sparse(&add_sparse(&a, &b), &c), Sparse::new())
    })
}

/// `(x,y,z) = x[y,z] + [z, xy] + [x,z]y`, valid in every left-symmetric algebra.
pub fn check_associator_expansion(s: &NovikovStructure) -> CheckReport {
    let (p, lie) = (s.product(), s.lie());
    triple_check(s, CheckKind::AssociatorExpansion, true, |x, y, z| {
        let lhs = p.associator_sparse(x, y, z);
        let a = p.mul_sparse(x, &lie.mul_sparse(y, z));
        let b = lie.mul_sparse(z, &p.mul_sparse(x, y));
        let c = p.mul_sparse(&lie.mul_sparse(x, z), y);
        (lhs, add_sparse(&add_sparse(&a, &b), &c))
    })
}

pub fn check_series_are_ideals(s: &NovikovStructure, terms: &[SeriesTerm]) -> CheckReport {
    let found = terms.iter().enumerate().find_map(|(n, t)| {
        ideal_witness(s.product(), &t.space)
            .expect("ambient matches")
            .map(|v| {
                subspace_witness(
                    vec![n],
                    v.product,
                    format!("{} is not a two-sided ideal", t.name),
                )
            })
    });
    CheckReport::from_witness(CheckKind::SeriesAreIdeals, found)
}

fn pairwise_ideal_check(s: &NovikovStructure, terms: &[SeriesTerm], bracket: bool) -> CheckReport {
    let kind = if bracket {
        CheckKind::IdealBrackets
    } else {
        CheckKind::IdealProducts
    };
    let n = terms.len();
    let found = par::find_first(n * n, |ab| {
        let (a, b) = (ab / n, ab % n);
        let table = if bracket { s.lie() } else { s.product() };
        let space =
            product_space(table, &terms[a].space, &terms[b].space).expect("ambient matches");
        ideal_witness(s.product(), &space)
            .expect("ambient matches")
            .map(|v| {
                let op = if bracket { "bracket" } else { "product" };
                subspace_witness(
                    vec![a, b],
                    v.product,
                    format!(
                        "{op} of {} and {} is not a two-sided ideal",
                        terms[a].name, terms[b].name
                    ),
                )
            })
    });
    CheckReport::from_witness(kind, found)
}

pub fn check_ideal_products(s: &NovikovStructure, terms: &[SeriesTerm]) -> CheckReport {
    pairwise_ideal_check(s, terms, false)
}

pub fn check_ideal_brackets(s: &NovikovStructure, terms: &[SeriesTerm]) -> CheckReport {
    pairwise_ideal_check(s, terms, true)
}

/// `γ_a · γ_b ⊆ γ_{a+b-1}` for all `a, b ≥ 1`, with `γ_m` constant past the series' end.
pub fn check_lower_central_products(s: &NovikovStructure) -> CheckReport {
    let gamma = lower_central_series(s.lie()).terms;
    let term = |m: usize| gamma[(m - 1).min(gamma.len() - 1)].clone();
    let len = gamma.len();
    let found = (1..=len).find_map(|a| {
        (1..=len).find_map(|b| {
            let prod = product_space(s.product(), &term(a), &term(b)).expect("ambient matches");
            let target = term(a + b - 1);
            prod.basis()
                .iter()
                .find(|v| !target.contains(v).expect("ambient matches"))
                .map(|v| {
                    subspace_witness(
                        vec![a, b],
                        v.clone(),
                        format!("gamma_{a} * gamma_{b} not inside gamma_{}", a + b - 1),
                    )
                })
        })
    });
    CheckReport::from_witness(CheckKind::LowerCentralProducts, found)
}

/// `Z(A) · [A,A] = [A,A] · Z(A) = 0`.
pub fn check_center_annihilates_derived(s: &NovikovStructure) -> CheckReport {
    let z = center(s.product());
    let gamma = lower_central_series(s.lie()).terms;
    let gamma2 = gamma[1.min(gamma.len() - 1)].clone();
    let left = product_space(s.product(), &z, &gamma2).expect("ambient matches");
    let right = product_space(s.product(), &gamma2, &z).expect("ambient matches");
    let found = [(left, "Z * [A,A]"), (right, "[A,A] * Z")]
        .into_iter()
        .find(|(p, _)| !p.is_zero())
        .map(|(p, what)| {
            subspace_witness(vec![], p.basis()[0].clone(), format!("{what} is nonzero"))
        });
    CheckReport::from_witness(CheckKind::CenterAnnihilatesDerived, found)
}

pub fn check_center_is_ideal(s: &NovikovStructure) -> CheckReport {
    let z = center(s.product());
    let found = ideal_witness(s.product(), &z)
        .expect("ambient matches")
        .map(|v| {
            subspace_witness(
                vec![v.basis_index],
                v.product,
                "center is not a two-sided ideal".into(),
            )
        });
    CheckReport::from_witness(CheckKind::CenterIsIdeal, found)
}

/// The center of the product coincides with the center of the Lie algebra.
pub fn check_center_matches_lie(s: &NovikovStructure) -> CheckReport {
    let zp = center(s.product());
    let zl = center(s.lie());
    let found = (zp != zl).then(|| {
        let v = zp
            .basis()
            .iter()
            .chain(zl.basis())
            .find(|v| !(zp.contains(v).unwrap() && zl.contains(v).unwrap()))
            .cloned()
            .unwrap_or_else(|| Vector::zero(s.dim()));
        subspace_witness(vec![], v, "product center differs from Lie center".into())
    });
    CheckReport::from_witness(CheckKind::CenterMatchesLie, found)
}

/// `(x,y,z) = 0` whenever one argument lies in the center.
pub fn check_central_associators(s: &NovikovStructure) -> CheckReport {
    let p = s.product();
    let n = s.dim();
    let z: Vec<Sparse> = center(p).basis().iter().map(Vector::to_sparse).collect();
    let found = par::find_first(z.len(), |c| {
        let zc = &z[c];
        for x in 0..n {
            for y in 0..n {
                let (bx, by) = (unit(x), unit(y));
                for (slot, value) in [
                    (0, p.associator_sparse(zc, &bx, &by)),
                    (1, p.associator_sparse(&bx, zc, &by)),
                    (2, p.associator_sparse(&bx, &by, zc)),
                ] {
                    if !value.is_empty() {
                        return Some(Witness {
                            indices: vec![c, x, y, slot],
                            lhs: Vector::from_sparse(n, &value),
                            rhs: Vector::zero(n),
                            note: Some(format!("central basis vector {c} in slot {slot}")),
                        });
                    }
                }
            }
        }
        None
    });
    CheckReport::from_witness(CheckKind::CentralAssociators, found)
}

/// Runs every lemma check.
pub fn check_lemmas(s: &NovikovStructure) -> Vec<CheckReport> {
    let terms = series_terms(s);
    vec![
        check_cyclic_left(s),
        check_cyclic_right(s),
        check_associator_expansion(s),
        check_series_are_ideals(s, &terms),
        check_ideal_products(s, &terms),
        check_ideal_brackets(s, &terms),
        check_lower_central_products(s),
        check_center_annihilates_derived(s),
        check_center_is_ideal(s),
        check_center_matches_lie(s),
        check_central_associators(s),
    ]
}
