use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

use super::harmonic::HarmonicCache;
use crate::algebra::{from_bigint, rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    Kr32,
    Zudilin32,
    S60,
    S189,
    S244,
    S245,
    S253,
    S255,
    S281,
    S130,
    S188,
}

impl SequenceId {
    pub const ALL: [SequenceId; 11] = [
        SequenceId::Kr32,
        SequenceId::Zudilin32,
        SequenceId::S60,
        SequenceId::S189,
        SequenceId::S244,
        SequenceId::S245,
        SequenceId::S253,
        SequenceId::S255,
        SequenceId::S281,
        SequenceId::S130,
        SequenceId::S188,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceId::Kr32 => "32-KR",
            SequenceId::Zudilin32 => "32-Zudilin",
            SequenceId::S60 => "60",
            SequenceId::S189 => "189",
            SequenceId::S244 => "244",
            SequenceId::S245 => "245",
            SequenceId::S253 => "253",
            SequenceId::S255 => "255",
            SequenceId::S281 => "281",
            SequenceId::S130 => "130",
            SequenceId::S188 => "188",
        }
    }

    /// Known discrepancy between the printed sum and the operator, if any.
    pub fn erratum(self) -> Option<&'static str> {
        match self {
            SequenceId::Zudilin32 => Some(
                "printed harmonic sum gives (-1)^n A_n (A_1 = -12 instead of 12); \
                 the default reading multiplies by (-1)^n",
            ),
            SequenceId::S253 => Some(
                "printed harmonic bracket -2H_{2n-2k} gives A_2 = 2052 instead of 324; \
                 the default reading uses -4H_{2n-2k}",
            ),
            SequenceId::S255 => Some(
                "printed sum gives A_1 = -132 instead of -68; the default reading \
                 multiplies by (-1)^n and adds 4H_{4k} - 4H_{4n-4k} to the bracket",
            ),
            _ => None,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim_start_matches('#');
        SequenceId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Which version of a flagged formula to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Reading {
    /// The variant that agrees with the operator (identical to the printed
    /// sum for unflagged ids).
    #[default]
    OperatorValidated,
    AsPrinted,
}

pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    r
}

pub fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn sign(k: i64) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

struct Ctx {
    id: SequenceId,
    n: i64,
    h: HarmonicCache,
}

impl Ctx {
    fn new(id: SequenceId, n: i64) -> Self {
        Ctx {
            id,
            n,
            h: HarmonicCache::new(4 * n as usize),
        }
    }

    fn h(&self, k: i64) -> &Rational {
        self.h.get(k as usize)
    }

    /// `cofactor / den`; zero when the cofactor vanishes, error otherwise.
    fn quotient(&self, cofactor: Rational, den: Rational, term: &str) -> Result<Rational> {
        if !den.is_zero() {
            return Ok(cofactor / den);
        }
        if cofactor.is_zero() {
            return Ok(Rational::zero());
        }
        Err(Error::UndefinedTerm {
            id: self.id.to_string(),
            n: self.n as usize,
            term: term.to_string(),
        })
    }
}

fn b(a: i64, k: i64) -> Rational {
    from_bigint(binomial(a, k))
}

/// Exact value of the printed sum for `id` at `n`.
pub fn closed_form(id: SequenceId, n: i64, reading: Reading) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Invalid(format!("closed form at negative n = {n}")));
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let cx = Ctx::new(id, n);
    let printed = reading == Reading::AsPrinted;
    Ok(match id {
        SequenceId::Kr32 => kr32(n, false),
        SequenceId::Zudilin32 => {
            let v = zudilin32(&cx);
            if printed {
                v
            } else {
                v * from_bigint(sign(n))
            }
        }
        SequenceId::S60 => s60(n),
        SequenceId::S189 => s189(n, false),
        SequenceId::S244 => s244(&cx),
        SequenceId::S245 => s245(&cx)?,
        SequenceId::S253 => s253(&cx, if printed { -2 } else { -4 }),
        SequenceId::S255 => {
            if printed {
                s255(&cx, 0)
            } else {
                s255(&cx, 4) * from_bigint(sign(n))
            }
        }
        SequenceId::S281 => s281(&cx)?,
        SequenceId::S130 => from_bigint(multinomial_square_sum(n, 6)),
        SequenceId::S188 => from_bigint(binomial(2 * n, n) * multinomial_square_sum(n, 5)),
    })
}

/// `closed_form` at `0 … len-1`, evaluated in parallel.
pub fn closed_form_values(id: SequenceId, len: usize, reading: Reading) -> Result<Vec<Rational>> {
    (0..len as i64)
        .into_par_iter()
        .map(|n| closed_form(id, n, reading))
        .collect()
}

pub(crate) fn kr32(n: i64, swapped: bool) -> Rational {
    let term = |i: i64, j: i64| {
        binomial(n, i).pow(2)
            * binomial(n, j).pow(2)
            * binomial(n + i, n)
            * binomial(n + j, n)
            * binomial(i + j, n)
    };
    from_bigint(double_sum(n, swapped, term))
}

pub(crate) fn s189(n: i64, swapped: bool) -> Rational {
    let term = |i: i64, j: i64| binomial(n, i).pow(2) * binomial(n, j).pow(2) * binomial(i + j, n).pow(2);
    from_bigint(binomial(2 * n, n) * double_sum(n, swapped, term))
}

fn double_sum(n: i64, swapped: bool, term: impl Fn(i64, i64) -> BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for outer in 0..=n {
        for inner in 0..=n {
            acc += if swapped { term(inner, outer) } else { term(outer, inner) };
        }
    }
    acc
}

fn zudilin32(cx: &Ctx) -> Rational {
    let n = cx.n;
    (0..=n).fold(Rational::zero(), |acc, k| {
        let w = b(n, k).pow(4) * b(n + k, n).pow(2) * b(2 * n - k, n).pow(2);
        let bracket = rat(-6) * cx.h(k) + rat(6) * cx.h(n - k) + rat(2) * cx.h(n + k)
            - rat(2) * cx.h(2 * n - k);
        acc + w * (Rational::one() + rat(k) * bracket)
    })
}

fn s60(n: i64) -> Rational {
    let s = (0..=n).fold(BigInt::zero(), |acc, k| {
        acc + binomial(n, k).pow(2)
            * binomial(n + k, n)
            * binomial(2 * n - k, n)
            * binomial(2 * k, k)
            * binomial(2 * n - 2 * k, n - k)
    });
    from_bigint(s)
}

fn s244(cx: &Ctx) -> Rational {
    let n = cx.n;
    (0..=n).fold(Rational::zero(), |acc, k| {
        let w = b(n, k).pow(6) * b(2 * k, k) * b(2 * n - 2 * k, n - k);
        let bracket = rat(-8) * cx.h(k) + rat(8) * cx.h(n - k) + rat(2) * cx.h(2 * k)
            - rat(2) * cx.h(2 * n - 2 * k);
        acc + w * (Rational::one() + rat(k) * bracket)
    })
}

fn s245(cx: &Ctx) -> Result<Rational> {
    let n = cx.n;
    let mut acc = Rational::zero();
    for k in 0..=n / 3 {
        let cof = from_bigint(sign(k)) * rat(n - 2 * k) * b(n, k).pow(4) * b(3 * n - 3 * k, 2 * n);
        let t = cx.quotient(cof, rat(2 * n - 3 * k), "1/(2n-3k)")?;
        acc += cx.quotient(t, b(2 * n, 3 * k), "binomial(2n,3k)^-1")?;
    }
    Ok(rat(3) * b(2 * n, n).pow(2) * acc)
}

fn s253(cx: &Ctx, last: i64) -> Rational {
    let n = cx.n;
    (0..=n).fold(Rational::zero(), |acc, k| {
        let w = b(n, k).pow(2)
            * b(n + k, n)
            * b(2 * n - k, n)
            * b(2 * k, k).pow(2)
            * b(2 * n - 2 * k, n - k).pow(2);
        let bracket = rat(-7) * cx.h(k) + rat(7) * cx.h(n - k) + cx.h(n + k) - cx.h(2 * n - k)
            + rat(4) * cx.h(2 * k)
            + rat(last) * cx.h(2 * n - 2 * k);
        acc + w * (Rational::one() + rat(k) * bracket)
    })
}

/// `quartic` is the coefficient of `H_{4k} − H_{4n−4k}`, absent in print.
fn s255(cx: &Ctx, quartic: i64) -> Rational {
    let n = cx.n;
    (0..=n).fold(Rational::zero(), |acc, k| {
        let w = b(n, k).pow(2)
            * b(n + k, n)
            * b(2 * n - k, n)
            * b(2 * k, k)
            * b(2 * n - 2 * k, n - k)
            * b(4 * k, 2 * k)
            * b(4 * n - 4 * k, 2 * n - 2 * k);
        let bracket = rat(-5) * cx.h(k) + rat(5) * cx.h(n - k) + cx.h(n + k) - cx.h(2 * n - k)
            - rat(2) * cx.h(2 * k)
            + rat(2) * cx.h(2 * n - 2 * k)
            + rat(quartic) * (cx.h(4 * k) - cx.h(4 * n - 4 * k));
        acc + w * (Rational::one() + rat(k) * bracket)
    })
}

fn s281(cx: &Ctx) -> Result<Rational> {
    let n = cx.n;
    let mut acc = Rational::zero();
    for k in (2 * (n + 1)) / 3..=n {
        let f = |m: i64| from_bigint(factorial(m));
        let cof = from_bigint(sign(k))
            * rat(n - 2 * k)
            * b(n + k, n)
            * b(2 * n - k, n)
            * b(n, 3 * n - 3 * k)
            * (f(3 * k) / f(k).pow(3))
            * (f(3 * n - 3 * k) / f(n - k).pow(3));
        let t = cx.quotient(cof, rat(n - 3 * k), "1/(n-3k)")?;
        acc += cx.quotient(t, b(3 * k, n), "binomial(3k,n)^-1")?;
    }
    Ok(rat(3) * acc)
}

/// `Σ_{m_1+…+m_parts = n} (n! / Π m_i!)²`, via `(n!)² [z^n] (Σ z^m / m!²)^parts`.
pub fn multinomial_square_sum(n: i64, parts: usize) -> BigInt {
    let n = n as usize;
    let inv: Vec<Rational> = (0..=n)
        .map(|m| from_bigint(factorial(m as i64).pow(2)).recip())
        .collect();
    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for _ in 0..parts {
        let mut next = vec![Rational::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in inv.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * c;
            }
        }
        acc = next;
    }
    let v = &acc[n] * from_bigint(factorial(n as i64).pow(2));
    debug_assert!(v.is_integer() && !v.is_negative());
    v.to_integer()
}
