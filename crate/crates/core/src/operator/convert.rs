//! Conversion between θ-form and monic D-form.
//!
//! `θ^m = Σ_i S(m, i) x^i D^i` with `S` the Stirling numbers of the second
//! kind, and `x^i D^i = θ(θ-1)…(θ-i+1)`.

use num::Zero;

use super::{DOperator, ThetaOperator};
use crate::algebra::{rat, Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Either representation, for callers that dispatch on form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    Theta(ThetaOperator),
    D(DOperator),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Theta,
    D,
}

pub fn convert_operator(op: &Operator, target: Form) -> Result<Operator> {
    match (op, target) {
        (Operator::Theta(t), Form::D) => Ok(Operator::D(theta_to_d(t)?)),
        (Operator::D(d), Form::Theta) => Ok(Operator::Theta(d_to_theta(d)?)),
        (op, _) => Ok(op.clone()),
    }
}

fn stirling2(k: usize) -> Vec<Vec<Rational>> {
    let mut s = vec![vec![Rational::zero(); k + 1]; k + 1];
    s[0][0] = rat(1);
    for m in 1..=k {
        for i in 1..=m {
            s[m][i] = &s[m - 1][i - 1] + &s[m - 1][i] * rat(i as i64);
        }
    }
    s
}

/// `θ(θ-1)…(θ-i+1)`
fn falling(i: usize) -> Polynomial {
    (0..i).fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear(rat(-(r as i64))))
}

/// θ-form to monic D-form.
pub fn theta_to_d(op: &ThetaOperator) -> Result<DOperator> {
    if op.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let k = op.order();
    if k == 0 {
        return Err(Error::Invalid("order-0 operator has no D-form".into()));
    }
    let s = stirling2(k);
    // coefficient of D^i as a polynomial in x: x^i Σ_j x^j Σ_m p_{j,m} S(m,i)
    let coeff_of = |i: usize| -> Polynomial {
        let v: Vec<Rational> = op
            .parts()
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(m, _)| *m >= i)
                    .map(|(m, c)| c * &s[m][i])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect();
        Polynomial::new(v).shift_up(i)
    };
    let lead = coeff_of(k);
    let a = (0..k)
        .map(|i| RationalFunction::new(coeff_of(i), lead.clone()))
        .collect::<Result<Vec<_>>>()?;
    DOperator::new(a)
}

/// Monic D-form to θ-form.
///
/// Multiplies through by the common denominator and `x^k`, then removes the
/// polynomial content shared by all coefficients (a left factor in `x`), so
/// the result is unique up to a rational scalar.
pub fn d_to_theta(op: &DOperator) -> Result<ThetaOperator> {
    let k = op.order();
    let d = op.common_denominator();
    let mut r: Vec<Polynomial> = (0..=k)
        .map(|i| {
            let f = op.coeff(i);
            let p = &f.num().clone() * &d.div_exact(f.den());
            p.shift_up(k - i)
        })
        .collect();
    let g = r.iter().fold(Polynomial::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        return Err(Error::ZeroOperator);
    }
    if !g.is_one() {
        r = r.iter().map(|p| p.div_exact(&g)).collect();
    }
    let deg = r.iter().map(|p| p.degree().max(0) as usize).max().unwrap();
    let mut parts = vec![Polynomial::zero(); deg + 1];
    for (i, ri) in r.iter().enumerate() {
        let fi = falling(i);
        for (j, c) in ri.coeffs().iter().enumerate() {
            if !c.is_zero() {
                parts[j] = &parts[j] + &fi.scale(c);
            }
        }
    }
    Ok(ThetaOperator::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::parse_operator;

    #[test]
    fn theta_squared() {
        let d = theta_to_d(&ThetaOperator::theta_power(2)).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(d.coeff(1), RationalFunction::inverse_power(rat(1), 1));
        assert!(d.coeff(0).is_zero());
    }

    #[test]
    fn first_derivative_back_to_theta() {
        let d = DOperator::new(vec![RationalFunction::zero()]).unwrap();
        let t = d_to_theta(&d).unwrap();
        assert!(t.proportional(&ThetaOperator::theta_power(1)));
    }

    #[test]
    fn b4_of_32() {
        let op = parse_operator(
            "T^5 - 3*x*(2*T+1)*(3*T^2+3*T+1)*(15*T^2+15*T+4) - 3*x^2*(T+1)^3*(3*T+2)*(3*T+4)",
        )
        .unwrap();
        let d = theta_to_d(&op).unwrap();
        let want = RationalFunction::new(
            Polynomial::from_ints(&[-10, 3375, 405]),
            Polynomial::from_ints(&[0, -1, 270, 27]),
        )
        .unwrap();
        assert_eq!(d.coeff(4), want);
        let back = d_to_theta(&d).unwrap();
        assert!(back.proportional(&op));
    }

    #[test]
    fn conversion_dispatch() {
        let t = Operator::Theta(parse_operator("T^3 - x*(2*T+1)*(10*T^2+10*T+4) + 64*x^2*(T+1)^3").unwrap());
        let d = convert_operator(&t, Form::D).unwrap();
        let back = convert_operator(&d, Form::Theta).unwrap();
        match (t, back) {
            (Operator::Theta(a), Operator::Theta(b)) => assert!(a.proportional(&b)),
            _ => unreachable!(),
        }
        assert!(theta_to_d(&ThetaOperator::zero()).is_err());
    }
}
