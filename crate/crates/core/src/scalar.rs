//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. The textual form is `p/q`, or just `p` when `q = 1`; no other notation is
//! accepted or produced.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` with decimal integers, optional leading `-` on `p`, and `q > 0`.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom = match den {
        Some(d) if digits(d) => d.parse::<BigInt>().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Scales a list of rationals by the positive factor that makes them coprime integers.
pub fn primitive_scale(values: &[&Rational]) -> Rational {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let mut gcd = BigInt::zero();
    for v in values {
        let n = (v.numer() * &lcm / v.denom()).abs();
        gcd = gcd.gcd(&n);
    }
    if gcd.is_zero() {
        return one();
    }
    Rational::new(lcm, gcd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_format() {
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&frac(4, 2)), "2");
        assert_eq!(format(&zero()), "0");
        assert_eq!(frac(1, 2) + frac(1, 3), frac(5, 6));
    }

    #[test]
    fn parse_accepts_only_plain_fractions() {
        assert_eq!(parse("-9/10").unwrap(), frac(-9, 10));
        assert_eq!(parse("12").unwrap(), int(12));
        assert_eq!(parse("2/4").unwrap(), frac(1, 2));
        for bad in [
            "", "1/0", "1.5", "1e3", "+1", "1/-2", "a", "1/", "/2", "--1",
        ] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn primitive_scaling() {
        let v = [frac(1, 8), frac(-3, 4)];
        let s = primitive_scale(&v.iter().collect::<Vec<_>>());
        assert_eq!(s, int(8));
    }
}
