use proptest::prelude::*;

use novikov_core::checks::{
    all_passed, check_novikov, check_right_multiplications_commute, check_structure,
};
use novikov_core::constructions::by_name;
use novikov_core::scalar::{format, frac, int, parse};
use novikov_core::series::{derived_series, lower_central_series, upper_central_series};
use novikov_core::solver::{prove, SolverConfig};
use novikov_core::subspace::Subspace;
use novikov_core::{Algebra, NovikovStructure, Operator, Vector};

const SHIPPED: [&str; 5] = [
    "novikov-free3:2",
    "novikov-nilt:3",
    "filiform910:5:f",
    "filiform910:5:e",
    "stdfiliform:5",
];

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("b{i}")).collect()
}

fn shipped(index: usize) -> NovikovStructure {
    by_name(SHIPPED[index]).unwrap().novikov().unwrap().clone()
}

/// Unit upper triangular change of basis with the given entries above the diagonal.
fn unitriangular(n: usize, above: &[i64]) -> Operator {
    let mut p = Operator::identity(n);
    let mut it = above.iter().cycle();
    for r in 0..n {
        for c in r + 1..n {
            p.set(r, c, int(*it.next().unwrap()));
        }
    }
    p
}

fn random_algebra() -> impl Strategy<Value = Algebra> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, 0..n, -2i64..=2), 0..10).prop_map(move |e| {
            Algebra::from_entries(
                labels(n),
                e.into_iter().map(|(i, j, k, c)| (i, j, k, int(c))),
            )
            .unwrap()
        })
    })
}

fn vectors(dim: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=dim)
        .prop_map(|vs| vs.iter().map(|v| Vector::from_ints(v)).collect())
}

fn subspace_pair() -> impl Strategy<Value = (usize, Subspace, Subspace)> {
    (1usize..=5).prop_flat_map(|d| {
        (vectors(d), vectors(d)).prop_map(move |(a, b)| {
            (
                d,
                Subspace::span(d, &a).unwrap(),
                Subspace::span(d, &b).unwrap(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_round_trip_through_text(n in -10_000i64..10_000, d in 1i64..500) {
        let q = frac(n, d);
        let text = format(&q);
        prop_assert!(!text.contains('.') && !text.contains('e'));
        prop_assert_eq!(parse(&text).unwrap(), q);
    }

    #[test]
    fn sum_and_intersection_are_bounds((d, a, b) in subspace_pair()) {
        let sum = a.sum(&b).unwrap();
        let inter = a.intersect(&b).unwrap();
        prop_assert_eq!(&sum, &b.sum(&a).unwrap());
        prop_assert_eq!(&inter, &b.intersect(&a).unwrap());
        prop_assert!(a.is_subspace_of(&sum).unwrap() && b.is_subspace_of(&sum).unwrap());
        prop_assert!(inter.is_subspace_of(&a).unwrap() && inter.is_subspace_of(&b).unwrap());
        prop_assert_eq!(sum.rank() + inter.rank(), a.rank() + b.rank());
        prop_assert!(sum.rank() <= d);
        prop_assert_eq!(&a.intersect(&sum).unwrap(), &a);
    }

    #[test]
    fn change_of_basis_preserves_structures(index in 0..SHIPPED.len(), above in prop::collection::vec(-2i64..=2, 1..6)) {
        let s = shipped(index);
        let p = unitriangular(s.dim(), &above);
        let l = s.lie().labels().to_vec();
        let moved = NovikovStructure::from_parts(
            s.lie().change_basis(&p, l.clone()).unwrap(),
            s.product().change_basis(&p, l.clone()).unwrap(),
        )
        .unwrap();
        prop_assert!(all_passed(&check_structure(&moved)));
        let back = moved.product().change_basis(&p.inverse().unwrap(), l).unwrap();
        prop_assert_eq!(&back, s.product());
    }

    #[test]
    fn adjoint_is_left_minus_right(a in random_algebra()) {
        let lie = a.commutator_algebra();
        for i in 0..a.dim() {
            prop_assert_eq!(lie.ad(i).unwrap(), a.left_mult(i).unwrap().sub(&a.right_mult(i).unwrap()));
        }
    }

    #[test]
    fn novikov_identity_is_commuting_right_multiplications(a in random_algebra()) {
        prop_assert_eq!(check_novikov(&a).passed, check_right_multiplications_commute(&a).passed);
    }

    #[test]
    fn series_ranks_do_not_depend_on_the_basis(index in 0..SHIPPED.len(), above in prop::collection::vec(-2i64..=2, 1..6)) {
        let s = shipped(index);
        let lie = s.lie();
        prop_assert_eq!(&s.product().commutator_algebra(), lie);
        let moved = lie.change_basis(&unitriangular(lie.dim(), &above), lie.labels().to_vec()).unwrap();
        for series in [lower_central_series, derived_series, upper_central_series] {
            let (x, y) = (series(lie), series(&moved));
            prop_assert_eq!(x.ranks(), y.ranks());
            prop_assert_eq!(x.class, y.class);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn stage_counts_do_not_depend_on_row_order(seed in any::<u64>(), name in prop::sample::select(vec!["nilt:4", "free3:2", "stdfiliform:5"])) {
        let lie = by_name(name).unwrap().lie().clone();
        let base = prove(&lie, name, &SolverConfig::default()).unwrap();
        let config = SolverConfig { shuffle_seed: Some(seed), ..SolverConfig::default() };
        let shuffled = prove(&lie, name, &config).unwrap();
        prop_assert_eq!(base.stage_counts(), shuffled.stage_counts());
        prop_assert_eq!(base.outcome.name(), shuffled.outcome.name());
    }
}
