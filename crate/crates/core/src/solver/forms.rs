//! Affine and quadratic forms over the unknown product coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{self, Rational};

/// The coefficient of `b_k` in `b_i · b_j`, zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unknown {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Unknown {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        Unknown { i, j, k }
    }

    pub fn one_based(self) -> [usize; 3] {
        [self.i + 1, self.j + 1, self.k + 1]
    }

    pub fn from_one_based([i, j, k]: [usize; 3]) -> Option<Self> {
        (i >= 1 && j >= 1 && k >= 1).then(|| Unknown::new(i - 1, j - 1, k - 1))
    }
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.one_based();
        write!(f, "x({i},{j},{k})")
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `constant + Σ c_u u`, with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AffineForm {
    pub constant: Rational,
    terms: BTreeMap<Unknown, Rational>,
}

impl AffineForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        AffineForm {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    pub fn unknown(u: Unknown) -> Self {
        let mut f = Self::zero();
        f.add_term(u, Rational::one());
        f
    }

    pub fn from_terms(
        constant: Rational,
        terms: impl IntoIterator<Item = (Unknown, Rational)>,
    ) -> Self {
        let mut f = Self::constant(constant);
        for (u, c) in terms {
            f.add_term(u, c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<Unknown, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, u: &Unknown) -> Rational {
        self.terms.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least unknown with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Unknown, &Rational)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, u: Unknown, c: Rational) {
        add_term(&mut self.terms, u, c);
    }

    pub fn add_constant(&mut self, c: &Rational) {
        self.constant += c;
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Rational, other: &AffineForm) {
        if s.is_zero() {
            return;
        }
        self.constant += s * &other.constant;
        for (u, c) in &other.terms {
            add_term(&mut self.terms, *u, s * c);
        }
    }

    pub fn scale(&self, s: &Rational) -> AffineForm {
        let mut out = AffineForm::zero();
        out.add_scaled(s, self);
        out
    }

    pub fn sub(&self, other: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        out
    }

    /// Removes `u` and returns its coefficient.
    pub fn take(&mut self, u: &Unknown) -> Option<Rational> {
        self.terms.remove(u)
    }

    /// Replaces every occurrence of `u` by `value`.
    pub fn substitute(&mut self, u: &Unknown, value: &AffineForm) -> bool {
        match self.terms.remove(u) {
            Some(c) => {
                self.add_scaled(&c, value);
                true
            }
            None => false,
        }
    }

    /// Values of the unknowns given by `value`, which returns `None` for unknowns to keep.
    pub fn evaluate_with<F>(&self, mut value: F) -> AffineForm
    where
        F: FnMut(&Unknown) -> Option<AffineForm>,
    {
        let mut out = AffineForm::constant(self.constant.clone());
        for (u, c) in &self.terms {
            match value(u) {
                Some(v) => out.add_scaled(c, &v),
                None => out.add_term(*u, c.clone()),
            }
        }
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.terms.is_empty() {
            parts.push(scalar::format(&self.constant));
        }
        for (u, c) in &self.terms {
            parts.push(format!("{}*{u}", scalar::format(c)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `constant + Σ c_u u + Σ c_{u,v} u v`, pairs stored with `u <= v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadraticForm {
    pub constant: Rational,
    linear: BTreeMap<Unknown, Rational>,
    quadratic: BTreeMap<(Unknown, Unknown), Rational>,
}

impl QuadraticForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn linear(&self) -> &BTreeMap<Unknown, Rational> {
        &self.linear
    }

    pub fn quadratic(&self) -> &BTreeMap<(Unknown, Unknown), Rational> {
        &self.quadratic
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    /// A nonzero constant: the form can never vanish.
    pub fn is_contradiction(&self) -> bool {
        !self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn is_affine(&self) -> bool {
        self.quadratic.is_empty()
    }

    pub fn add_quadratic_term(&mut self, u: Unknown, v: Unknown, c: Rational) {
        let key = if u <= v { (u, v) } else { (v, u) };
        add_term(&mut self.quadratic, key, c);
    }

    pub fn add_linear_term(&mut self, u: Unknown, c: Rational) {
        add_term(&mut self.linear, u, c);
    }

    /// `self += s * a * b`.
    pub fn add_product(&mut self, s: &Rational, a: &AffineForm, b: &AffineForm) {
        if s.is_zero() || a.is_zero() || b.is_zero() {
            return;
        }
        self.constant += s * &a.constant * &b.constant;
        if !b.constant.is_zero() {
            let sb = s * &b.constant;
            for (u, c) in &a.terms {
                add_term(&mut self.linear, *u, &sb * c);
            }
        }
        if !a.constant.is_zero() {
            let sa = s * &a.constant;
            for (u, c) in &b.terms {
                add_term(&mut self.linear, *u, &sa * c);
            }
        }
        for (u, cu) in &a.terms {
            let scu = s * cu;
            for (v, cv) in &b.terms {
                self.add_quadratic_term(*u, *v, &scu * cv);
            }
        }
    }

    pub fn add_affine(&mut self, s: &Rational, a: &AffineForm) {
        self.constant += s * &a.constant;
        for (u, c) in &a.terms {
            add_term(&mut self.linear, *u, s * c);
        }
    }

    /// The degree-one part when there is no quadratic part.
    pub fn to_affine(&self) -> Option<AffineForm> {
        self.is_affine().then(|| AffineForm {
            constant: self.constant.clone(),
            terms: self.linear.clone(),
        })
    }

    /// Writes the form as `u · A` with `u` the least unknown of the quadratic part, when
    /// every term is divisible by `u`.
    pub fn factor_unknown(&self) -> Option<(Unknown, AffineForm)> {
        let (&(u, _), _) = self.quadratic.iter().next()?;
        if !self.constant.is_zero() {
            return None;
        }
        let mut a = AffineForm::zero();
        if let Some(c) = self.linear.get(&u) {
            a.constant = c.clone();
        }
        for (&(p, q), c) in &self.quadratic {
            if p == u {
                a.add_term(q, c.clone());
            } else if q == u {
                a.add_term(p, c.clone());
            } else {
                return None;
            }
        }
        if self.linear.len() > usize::from(self.linear.contains_key(&u)) {
            return None;
        }
        let mut check = QuadraticForm::zero();
        check.add_product(&Rational::one(), &AffineForm::unknown(u), &a);
        (check == *self).then_some((u, a))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || (self.linear.is_empty() && self.quadratic.is_empty()) {
            parts.push(scalar::format(&self.constant));
        }
        for (u, c) in &self.linear {
            parts.push(format!("{}*{u}", scalar::format(c)));
        }
        for ((u, v), c) in &self.quadratic {
            parts.push(format!("{}*{u}*{v}", scalar::format(c)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
