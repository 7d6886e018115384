//! Helpers shared by the integration tests: the golden-table fixture and naive oracles.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use novikov_core::scalar::{int, parse};
use novikov_core::solver::Unknown;
use novikov_core::{Algebra, Rational};

/// Nonzero entries `(left, right) -> {label: coeff}` with `left` before `right` for brackets.
pub type Table = BTreeMap<(String, String), BTreeMap<String, Rational>>;

pub fn fixture() -> (Table, Table) {
    let text = include_str!("../data/free3_n4.txt");
    let (mut brackets, mut products) = (Table::new(), Table::new());
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let mut parts = line.split_whitespace();
        let kind = parts.next().unwrap();
        let key = (
            parts.next().unwrap().to_string(),
            parts.next().unwrap().to_string(),
        );
        let value: BTreeMap<String, Rational> = parts
            .map(|t| {
                let (c, label) = t.split_once(':').unwrap();
                (label.to_string(), parse(c).unwrap())
            })
            .collect();
        let table = if kind == "bracket" {
            &mut brackets
        } else {
            &mut products
        };
        assert!(
            table.insert(key, value).is_none(),
            "duplicate fixture line {line}"
        );
    }
    (brackets, products)
}

pub fn table_of(a: &Algebra, upper_only: bool) -> Table {
    let mut t = Table::new();
    for (i, j, k, c) in a.entries() {
        if upper_only && i >= j {
            continue;
        }
        t.entry((a.label(i).to_string(), a.label(j).to_string()))
            .or_default()
            .insert(a.label(k).to_string(), c.clone());
    }
    t
}

/// Rank by plain Gaussian elimination on a copy of the rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / m[r][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f.clone() * p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn unit(n: usize, k: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| if i == k { int(1) } else { int(0) })
        .collect()
}

pub fn bracket(lie: &Algebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![int(0); lie.dim()];
    for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, c) in lie.basis_product(a, b) {
                out[*k] += xa.clone() * yb.clone() * c.clone();
            }
        }
    }
    out
}

/// Lower central series as spanning sets, `γ_1` first, until the rank stops changing.
pub fn naive_lower_central(lie: &Algebra) -> Vec<Vec<Vec<Rational>>> {
    let n = lie.dim();
    let mut terms = vec![(0..n).map(|k| unit(n, k)).collect::<Vec<_>>()];
    loop {
        let last = terms.last().unwrap();
        let next: Vec<Vec<Rational>> = (0..n)
            .flat_map(|a| last.iter().map(move |v| (a, v)))
            .map(|(a, v)| bracket(lie, &unit(n, a), v))
            .collect();
        if rank(&next) == rank(last) {
            return terms;
        }
        terms.push(next);
    }
}

pub fn contains(span: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut with = span.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(span)
}

/// Enumerates `(stratum of i, stratum of j, excluded k)` directly from ranks.
pub fn brute_force_zeros(lie: &Algebra) -> BTreeSet<Unknown> {
    let n = lie.dim();
    let terms = naive_lower_central(lie);
    let last = terms.len() - 1;
    let table: Vec<Vec<bool>> = terms
        .iter()
        .map(|t| (0..n).map(|k| contains(t, &unit(n, k))).collect())
        .collect();
    let member = |m: usize, k: usize| table[m.min(last)][k];
    let depth: Vec<usize> = (0..n)
        .map(|i| (0..terms.len()).take_while(|&m| member(m, i)).count())
        .collect();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            // zero-based index of γ_{a+b-1} is a + b - 2
            let m = depth[i] + depth[j] - 2;
            for k in 0..n {
                if !member(m, k) {
                    out.insert(Unknown::new(i, j, k));
                }
            }
        }
    }
    out
}
