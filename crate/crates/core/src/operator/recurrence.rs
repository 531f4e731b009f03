use num::Zero;

use super::ThetaOperator;
use crate::algebra::{rat, Polynomial, Rational};
use crate::error::{Error, Result};

/// `Σ_{j=0..s} Q_j(n) A_{n+1-j} = 0` for `n ≥ 0`, with `A_m = 0` for `m < 0`.
///
/// Taken from `Σ_j x^j P_j(θ)` at the coefficient of `x^{n+1}`, so that
/// `Q_j(n) = P_j(n + 1 - j)`. Every module uses this one convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRecurrence {
    q: Vec<Polynomial>,
}

impl PRecurrence {
    pub fn new(q: Vec<Polynomial>) -> Result<Self> {
        if q.first().is_none_or(Polynomial::is_zero) {
            return Err(Error::Invalid("recurrence needs a nonzero Q_0".into()));
        }
        Ok(PRecurrence { q })
    }

    pub fn span(&self) -> usize {
        self.q.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.q
    }

    /// Extends `initials` to `A_0 … A_len-1` using the relation at
    /// `n = m - 1` for each new index `m`.
    pub fn run(&self, initials: &[Rational], len: usize) -> Result<Vec<Rational>> {
        if initials.is_empty() {
            return Err(Error::Invalid("at least one initial value is required".into()));
        }
        let mut a: Vec<Rational> = initials.iter().take(len).cloned().collect();
        while a.len() < len {
            let m = a.len();
            let n = rat(m as i64 - 1);
            let lead = self.q[0].eval(&n);
            if lead.is_zero() {
                return Err(Error::VanishingLeading(m - 1));
            }
            let mut acc = Rational::zero();
            for (j, qj) in self.q.iter().enumerate().skip(1) {
                if j > m {
                    break;
                }
                let prev = &a[m - j];
                if !prev.is_zero() {
                    acc += qj.eval(&n) * prev;
                }
            }
            a.push(-acc / lead);
        }
        Ok(a)
    }
}

pub fn recurrence_from_theta(op: &ThetaOperator) -> Result<PRecurrence> {
    if !op.is_mum() {
        return Err(Error::NotMum(op.part(0).display_in("T")));
    }
    let q = op
        .parts()
        .iter()
        .enumerate()
        .map(|(j, p)| p.taylor_shift(&rat(1 - j as i64)))
        .collect();
    PRecurrence::new(q)
}
