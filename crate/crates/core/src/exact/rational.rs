use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"n"` or `"n/d"`. The denominator must be positive and the fraction reduced.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = |why: &str| Error::Parse(format!("invalid rational {s:?}: {why}"));
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        let t = t.trim();
        let digits = t
            .strip_prefix('-')
            .or_else(|| t.strip_prefix('+'))
            .unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("not an integer"));
        }
        t.parse::<BigInt>().map_err(|_| bad("not an integer"))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            if d < BigInt::zero() {
                return Err(bad("negative denominator"));
            }
            if !n.gcd(&d).is_one() {
                return Err(bad("not in lowest terms"));
            }
            Ok(Rational::new_raw(n, d))
        }
    }
}

/// Inverse of [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
