//! Apéry-like approximation of ζ(4) = π⁴/90 from the #32 recurrence.

use num::{BigInt, Integer, One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{format_rational, rat, to_scientific, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::operator::PRecurrence;

/// Guard digits added to every fixed-point computation.
const GUARD: usize = 20;
/// π is always computed to at least this many decimals.
pub const MIN_DIGITS: usize = 50;

/// `arctan(1/m) · 10^p` by the alternating Gregory series.
fn arctan_inv(m: u64, scale: &BigInt) -> BigInt {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = scale / &m;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &m2;
        k += 1;
    }
    sum
}

/// `π · 10^digits` (truncated), by Machin's formula
/// `π/4 = 4 arctan(1/5) − arctan(1/239)`.
pub fn pi_scaled(digits: usize) -> BigInt {
    let scale = num::pow(BigInt::from(10), digits + GUARD);
    let pi = (arctan_inv(5, &scale) * 16u32) - (arctan_inv(239, &scale) * 4u32);
    pi / num::pow(BigInt::from(10), GUARD)
}

/// `π⁴/90` as a rational with denominator `10^digits`, correct to within
/// `10^-digits`.
pub fn zeta4_approx(digits: usize) -> Rational {
    let extra = 10;
    let p = digits + extra;
    let pi = pi_scaled(p);
    let scale = num::pow(BigInt::from(10), p);
    let z = pi.pow(4u32) / (&scale * &scale * &scale) / BigInt::from(90);
    let out = num::pow(BigInt::from(10), digits);
    let (q, _) = (z * &out).div_rem(&scale);
    Rational::new(q, out)
}

/// `(n+1)^5 A_{n+1} − 3(2n+1)(3n²+3n+1)(15n²+15n+4) A_n − 3n³(3n−1)(3n+1) A_{n−1} = 0`.
pub fn recurrence_32() -> PRecurrence {
    let t = Polynomial::var;
    let lin = |a: i64, b: i64| &t().scale(&rat(a)) + &Polynomial::constant(rat(b));
    let q0 = lin(1, 1).pow(5);
    let q1 = lin(2, 1) * (lin(3, 0) * lin(1, 1) + Polynomial::constant(rat(1))) * (lin(15, 0) * lin(1, 1) + Polynomial::constant(rat(4)));
    let q1 = q1.scale(&rat(-3));
    let q2 = (t().pow(3) * lin(3, -1) * lin(3, 1)).scale(&rat(-3));
    PRecurrence::new(vec![q0, q1, q2]).expect("nonzero leading term")
}

#[derive(Clone, Debug, Serialize)]
pub struct Zeta4Report {
    pub n: usize,
    pub a_n: String,
    pub b_n: String,
    pub ratio: String,
    pub zeta4: String,
    pub digits: usize,
    /// `|B_n/A_n − π⁴/90|` in scientific notation.
    pub error: String,
    #[serde(skip)]
    pub error_value: Rational,
}

/// `|B_n/A_n − π⁴/90|` with `A = 1, 12, …` and `B = 0, 13, …`.
pub fn zeta4_error(n: usize, digits: usize) -> Result<Zeta4Report> {
    if n < 1 {
        return Err(Error::Invalid("zeta4 approximation needs n >= 1".into()));
    }
    let rec = recurrence_32();
    let a = rec.run(&[rat(1), rat(12)], n + 1)?;
    let b = rec.run(&[rat(0), rat(13)], n + 1)?;
    let ratio = &b[n] / &a[n];
    let precision = digits.max(MIN_DIGITS) + 2 * GUARD;
    let zeta = zeta4_approx(precision);
    let err = (&ratio - &zeta).abs();
    let floor = Rational::new(BigInt::one(), num::pow(BigInt::from(10), precision - GUARD));
    let error = if err < floor {
        format!("< {}", to_scientific(&floor, 1))
    } else {
        to_scientific(&err, digits.clamp(1, 12))
    };
    Ok(Zeta4Report {
        n,
        a_n: format_rational(&a[n]),
        b_n: format_rational(&b[n]),
        ratio: format_rational(&ratio),
        zeta4: decimal(&zeta, digits),
        digits,
        error,
        error_value: err,
    })
}

/// `r` truncated to `digits` decimals, for `r ≥ 0`.
fn decimal(r: &Rational, digits: usize) -> String {
    let scaled = (r * Rational::from_integer(num::pow(BigInt::from(10), digits))).to_integer();
    let s = format!("{:0>width$}", scaled.to_string(), width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    format!("{int}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn pi_digits() {
        let pi = pi_scaled(60).to_string();
        assert_eq!(&pi[..61], "3141592653589793238462643383279502884197169399375105820974944");
    }

    #[test]
    fn zeta4_value() {
        assert_eq!(decimal(&zeta4_approx(30), 30), "1.082323233711138191516003696541");
    }

    #[test]
    fn two_solutions() {
        let rec = recurrence_32();
        let a = rec.run(&[rat(1), rat(12)], 4).unwrap();
        assert_eq!(a, [rat(1), rat(12), rat(804), rat(88680)]);
        let forced = rec.run(&[rat(1)], 2).unwrap();
        assert_eq!(forced[1], rat(12));
        let r = zeta4_error(1, 10).unwrap();
        assert_eq!(r.ratio, "13/12");
        assert!(r.error.starts_with("1.0"));
        assert!(r.error.ends_with("e-3"));
        assert!(r.error_value < ratio(11, 10000) && r.error_value > ratio(1, 1000));
    }

    #[test]
    fn monotone_convergence() {
        let errs: Vec<Rational> = (1..=20).map(|n| zeta4_error(n, 60).unwrap().error_value).collect();
        for w in errs[1..].windows(2) {
            assert!(w[1] < w[0]);
        }
        assert!(errs[19] < ratio(1, 10_000_000_000));
        assert!(zeta4_error(0, 50).is_err());
    }
}
