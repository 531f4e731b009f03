//! Text grammar for θ-form operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'T' | 'θ' | 'x' | '(' expr ')'
//! ```
//!
//! `x` and `T` are read as commuting symbols and the expanded result is
//! interpreted as `Σ_j x^j P_j(T)`, powers of `x` on the left, which is how
//! operators are conventionally displayed. `/` is only allowed between two
//! integer literals.

use num::{BigInt, One, Zero};
use std::str::FromStr;

use super::ThetaOperator;
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Parses an operator expression into expanded θ-form.
pub fn parse_operator(text: &str) -> Result<ThetaOperator> {
    let mut p = Parser { src: text, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ThetaOperator::new(v.0))
}

/// Commutative polynomial in (x, T): index = power of x.
#[derive(Clone)]
struct Biv(Vec<Polynomial>);

impl Biv {
    fn constant(c: Rational) -> Self {
        Biv(vec![Polynomial::constant(c)])
    }

    fn add(&self, o: &Biv, sign: i64) -> Biv {
        let n = self.0.len().max(o.0.len());
        let zero = Polynomial::zero();
        Biv(
            (0..n)
                .map(|j| {
                    let a = self.0.get(j).unwrap_or(&zero);
                    let b = o.0.get(j).unwrap_or(&zero);
                    if sign > 0 {
                        a + b
                    } else {
                        a - b
                    }
                })
                .collect(),
        )
    }

    fn mul(&self, o: &Biv) -> Biv {
        if self.0.is_empty() || o.0.is_empty() {
            return Biv(Vec::new());
        }
        let mut v = vec![Polynomial::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Biv(v)
    }

    fn pow(&self, e: u32) -> Biv {
        let mut acc = Biv::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn expr(&mut self) -> Result<Biv> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' | '-' => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t, if c == '+' { 1 } else { -1 });
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Biv> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.unary()?;
                    acc = acc.mul(&f);
                }
                Some('/') => return Err(self.err("division is only allowed inside a p/q literal")),
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Biv> {
        match self.peek() {
            Some('-') => {
                self.bump();
                let v = self.unary()?;
                Ok(Biv(Vec::new()).add(&v, -1))
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Biv> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            if self.peek() == Some('-') {
                return Err(self.err("negative exponents are not polynomial"));
            }
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(BigInt::from_str(&self.src[start..self.pos]).expect("digits"))
    }

    fn atom(&mut self) -> Result<Biv> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p = self.integer()?;
                if self.peek() == Some('/') {
                    self.bump();
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.err("division is only allowed inside a p/q literal"));
                    }
                    let q = self.integer()?;
                    if q.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(Biv::constant(Rational::new(p, q)));
                }
                Ok(Biv::constant(Rational::from_integer(p)))
            }
            Some('T') | Some('θ') => {
                self.bump();
                Ok(Biv(vec![Polynomial::var()]))
            }
            Some('x') => {
                self.bump();
                Ok(Biv(vec![Polynomial::zero(), Polynomial::one()]))
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(v)
            }
            Some(c) => Err(self.err(&format!("unexpected character {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn simple_forms() {
        let op = parse_operator("T^2").unwrap();
        assert_eq!((op.order(), op.degree()), (2, 0));
        assert_eq!(op.part(0), Polynomial::from_ints(&[0, 0, 1]));

        let op = parse_operator("(2*T+1)^2 * x").unwrap();
        assert_eq!(op.degree(), 1);
        assert!(op.part(0).is_zero());
        assert_eq!(op.part(1), Polynomial::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn operator_32() {
        let op = parse_operator(
            "T^5 - 3*x*(2*T+1)*(3*T^2+3*T+1)*(15*T^2+15*T+4) - 3*x^2*(T+1)^3*(3*T+2)*(3*T+4)",
        )
        .unwrap();
        assert_eq!((op.order(), op.degree()), (5, 2));
        assert!(op.is_mum());
        // P_1(0) = -3*1*1*4, leading of P_2 = -3*9
        assert_eq!(op.part(1).coeff(0), ratio(-12, 1));
        assert_eq!(op.part(2).leading(), ratio(-27, 1));
    }

    #[test]
    fn literals_and_unary() {
        let a = parse_operator("57/4 - -T + θ").unwrap();
        assert_eq!(a.part(0), Polynomial::new(vec![ratio(57, 4), ratio(2, 1)]));
        let b = parse_operator("2^4*3^6").unwrap();
        assert_eq!(b.part(0).coeff(0), ratio(11664, 1));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["T/x", "1/x", "x^-1", "(T+1", "T+", "3 T", "1/0", "y", "T*/2"] {
            assert!(
                matches!(parse_operator(bad), Err(Error::Parse { .. })),
                "{bad} should fail"
            );
        }
        match parse_operator("T + $") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }
}
