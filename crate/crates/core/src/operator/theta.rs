use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, gcd_of_numerators, lcm_of_denominators, parse_rational};
use crate::algebra::{LogSeries, Polynomial, Rational};
use crate::error::{Error, Result};

/// `Σ_j x^j P_j(θ)` with `θ = x d/dx`, powers of `x` written to the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaOperator {
    parts: Vec<Polynomial>,
}

impl ThetaOperator {
    /// Trailing zero parts are dropped. Leading zero parts (an overall
    /// left factor `x^v`) are kept.
    pub fn new(mut parts: Vec<Polynomial>) -> Self {
        while parts.last().is_some_and(Polynomial::is_zero) {
            parts.pop();
        }
        ThetaOperator { parts }
    }

    pub fn zero() -> Self {
        ThetaOperator { parts: Vec::new() }
    }

    /// `θ^k`
    pub fn theta_power(k: usize) -> Self {
        Self::new(vec![Polynomial::monomial(Rational::one(), k)])
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Polynomial] {
        &self.parts
    }

    pub fn part(&self, j: usize) -> Polynomial {
        self.parts.get(j).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Highest power of `x` with a nonzero coefficient.
    pub fn degree(&self) -> isize {
        self.parts.len() as isize - 1
    }

    /// Highest power of `θ` anywhere in the operator.
    pub fn order(&self) -> usize {
        self.parts
            .iter()
            .map(|p| p.degree().max(0) as usize)
            .max()
            .unwrap_or(0)
    }

    /// `P_j(θ) -> P_j(θ + s)` for every `j`, i.e. conjugation `x^{-s} L x^{s}`.
    pub fn shift_theta(&self, s: &Rational) -> Self {
        Self::new(self.parts.iter().map(|p| p.taylor_shift(s)).collect())
    }

    /// Substitution `x -> λx`: `P_j` picks up `λ^j`.
    pub fn rescale_x(&self, lambda: &Rational) -> Self {
        let mut w = Rational::one();
        let mut parts = Vec::with_capacity(self.parts.len());
        for p in &self.parts {
            parts.push(p.scale(&w));
            w *= lambda;
        }
        Self::new(parts)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    /// Integer coefficients with content 1, sign chosen so that the lowest
    /// nonzero part has a positive leading coefficient.
    pub fn canonical_integral(&self) -> Self {
        let all = || self.parts.iter().flat_map(|p| p.coeffs().iter());
        if self.is_zero() {
            return self.clone();
        }
        let l = Rational::from_integer(lcm_of_denominators(all()));
        let scaled: Vec<Polynomial> = self.parts.iter().map(|p| p.scale(&l)).collect();
        let g = gcd_of_numerators(scaled.iter().flat_map(|p| p.coeffs().iter()));
        let mut c = Rational::from_integer(g).recip();
        let first = scaled.iter().find(|p| !p.is_zero()).unwrap();
        if first.leading().is_negative() {
            c = -c;
        }
        Self::new(scaled.iter().map(|p| p.scale(&c)).collect())
    }

    /// Scaled so that the lowest nonzero part has leading coefficient 1;
    /// for a MUM operator this makes `P_0 = θ^k` exactly as displayed.
    pub fn mum_normalized(&self) -> Self {
        match self.parts.iter().find(|p| !p.is_zero()) {
            Some(p) => self.scale(&p.leading().recip()),
            None => self.clone(),
        }
    }

    /// True iff `P_0(θ) = c θ^k` with `c != 0` and `k` the operator order.
    pub fn is_mum(&self) -> bool {
        match self.parts.first() {
            Some(p0) => p0.is_monomial() && p0.degree() as usize == self.order() && self.order() > 0,
            None => false,
        }
    }

    /// Proportional to `other` by a nonzero rational.
    pub fn proportional(&self, other: &ThetaOperator) -> bool {
        self.canonical_integral() == other.canonical_integral()
    }

    /// Applies the operator to a log-series term by term.
    pub fn apply(&self, u: &LogSeries) -> LogSeries {
        let n = u.order();
        let mut out = LogSeries::zero(n);
        let mut thetas: Vec<LogSeries> = vec![u.clone()];
        for (j, p) in self.parts.iter().enumerate() {
            if p.is_zero() || j > n {
                continue;
            }
            while thetas.len() <= p.degree() as usize {
                let next = thetas.last().unwrap().theta();
                thetas.push(next);
            }
            let mut acc = LogSeries::zero(n);
            for (m, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &thetas[m].scale(c);
                }
            }
            out = &out + &acc.mul_x(j);
        }
        out
    }

    pub fn to_json(&self) -> OperatorJson {
        OperatorJson {
            order: self.order(),
            coeffs: self
                .parts
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(j, p)| (j, p.coeffs().iter().map(format_rational).collect()))
                .collect(),
        }
    }

    pub fn from_json(doc: &OperatorJson) -> Result<Self> {
        let len = doc.coeffs.iter().map(|(j, _)| j + 1).max().unwrap_or(0);
        let mut parts = vec![Polynomial::zero(); len];
        for (j, cs) in &doc.coeffs {
            let c = cs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            parts[*j] = Polynomial::new(c);
        }
        let op = Self::new(parts);
        if op.order() != doc.order {
            return Err(Error::Invalid(format!(
                "operator JSON declares order {} but coefficients give {}",
                doc.order,
                op.order()
            )));
        }
        Ok(op)
    }
}

/// `{ "order": k, "coeffs": [[j, ["c0", "c1", …]], …] }`, θ-coefficients lowest first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub order: usize,
    pub coeffs: Vec<(usize, Vec<String>)>,
}

impl fmt::Display for ThetaOperator {
    /// Expanded form in the operator grammar (`T` for θ).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let body = p.display_in("T");
            if j == 0 {
                write!(f, "{body}")?;
            } else {
                let xs = if j == 1 { "x".to_string() } else { format!("x^{j}") };
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{xs}*({body})")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ThetaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
