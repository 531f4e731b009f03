use std::fmt;

use crate::algebra::{Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// Monic `y^(k) + a_{k-1} y^(k-1) + … + a_0 y` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DOperator {
    /// `a[i]` multiplies `y^(i)`; the leading `a[k] = 1` is implicit.
    a: Vec<RationalFunction>,
}

impl DOperator {
    pub fn new(a: Vec<RationalFunction>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::ZeroOperator);
        }
        Ok(DOperator { a })
    }

    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// Coefficient of `y^(i)`; `1` for `i = order`.
    pub fn coeff(&self, i: usize) -> RationalFunction {
        if i == self.a.len() {
            RationalFunction::one()
        } else {
            self.a[i].clone()
        }
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.a
    }

    pub fn with_coeff(&self, i: usize, f: RationalFunction) -> Self {
        let mut a = self.a.clone();
        a[i] = f;
        DOperator { a }
    }

    pub fn expect_order(&self, k: usize) -> Result<()> {
        if self.order() != k {
            return Err(Error::WrongOrder {
                expected: k,
                got: self.order(),
            });
        }
        Ok(())
    }

    /// Least common multiple of all coefficient denominators, monic.
    pub fn common_denominator(&self) -> Polynomial {
        self.a.iter().fold(Polynomial::one(), |acc, f| {
            let g = acc.gcd(f.den());
            &acc * &f.den().div_exact(&g)
        })
    }
}

impl fmt::Display for DOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.order())?;
        for i in (0..self.order()).rev() {
            if !self.a[i].is_zero() {
                write!(f, " + [{}]*D^{i}", self.a[i])?;
            }
        }
        Ok(())
    }
}
