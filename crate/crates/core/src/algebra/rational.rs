//! Scalar helpers around [`num::BigRational`].
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, which is exactly the canonical form the rest of the crate
//! relies on for cheap equality.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p"` or `"p/q"` with decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("invalid rational literal {s:?}"),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn lcm_of_denominators<'a>(items: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn gcd_of_numerators<'a>(items: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    items
        .into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

/// Renders `|r|` as a decimal string with `digits` digits in the mantissa,
/// in scientific notation (`d.ddd…e-k`). Truncates, does not round.
pub fn to_scientific(r: &Rational, digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sign = if r.is_negative() { "-" } else { "" };
    let (num, den) = (r.numer().abs(), r.denom().clone());
    let ten = BigInt::from(10);
    // find exponent e with 10^e <= num/den < 10^(e+1)
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow = |k: i64| -> BigInt { num::pow(ten.clone(), k.unsigned_abs() as usize) };
    let ge = |e: i64| -> bool {
        if e >= 0 {
            num >= &den * pow(e)
        } else {
            &num * pow(e) >= den
        }
    };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        (&num * pow(shift)) / &den
    } else {
        &num / (&den * pow(shift))
    };
    let s = scaled.to_string();
    let (head, tail) = s.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}
