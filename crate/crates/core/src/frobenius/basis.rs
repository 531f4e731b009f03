use num::{One, Zero};

use crate::algebra::{rat, LogSeries, Polynomial, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::operator::ThetaOperator;

/// Frobenius solutions at a MUM point.
///
/// With `f_0 = y_0` and tilde parts `f_1, f_2, …` (zero constant term),
///
/// ```text
/// y_m = Σ_{i=0..m} L^{m-i} / (m-i)! · f_i,    L = log x
/// ```
///
/// so `y_1 = y_0 L + f_1`, `y_2 = ½ y_0 L² + f_1 L + f_2`, and so on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusBasis {
    tilde: Vec<PowerSeries>,
    solutions: Vec<LogSeries>,
}

impl FrobeniusBasis {
    /// Builds the basis from its pure-series parts `f_0, f_1, …`.
    pub fn from_tilde(tilde: Vec<PowerSeries>) -> Result<Self> {
        let Some(f0) = tilde.first() else {
            return Err(Error::Invalid("empty Frobenius basis".into()));
        };
        if !f0.coeff(0).is_one() || tilde[1..].iter().any(|f| !f.coeff(0).is_zero()) {
            return Err(Error::Invalid(
                "Frobenius normalization needs f_0(0) = 1 and f_i(0) = 0".into(),
            ));
        }
        let n = tilde.iter().map(PowerSeries::order).min().unwrap();
        let tilde: Vec<PowerSeries> = tilde.into_iter().map(|f| f.truncate(n)).collect();
        let mut factorial = vec![Rational::one()];
        for p in 1..tilde.len() {
            let next = &factorial[p - 1] * rat(p as i64);
            factorial.push(next);
        }
        let solutions = (0..tilde.len())
            .map(|m| {
                let parts = (0..=m)
                    .map(|p| tilde[m - p].scale(&factorial[p].recip()))
                    .collect();
                LogSeries::new(parts)
            })
            .collect();
        Ok(FrobeniusBasis { tilde, solutions })
    }

    pub fn order(&self) -> usize {
        self.tilde.len()
    }

    pub fn truncation(&self) -> usize {
        self.tilde[0].order()
    }

    /// `y_0`
    pub fn analytic(&self) -> &PowerSeries {
        &self.tilde[0]
    }

    /// `f_i`; `f_0 = y_0`.
    pub fn tilde(&self, i: usize) -> &PowerSeries {
        &self.tilde[i]
    }

    pub fn tilde_parts(&self) -> &[PowerSeries] {
        &self.tilde
    }

    pub fn solution(&self, m: usize) -> &LogSeries {
        &self.solutions[m]
    }

    pub fn solutions(&self) -> &[LogSeries] {
        &self.solutions
    }
}

/// Truncated series in ε, length = operator order.
type Eps = Vec<Rational>;

fn eps_mul(a: &Eps, b: &Eps, len: usize) -> Eps {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn eps_div(a: &Eps, b: &Eps) -> Eps {
    let len = a.len();
    let inv = b[0].recip();
    let mut q: Eps = Vec::with_capacity(len);
    for i in 0..len {
        let mut acc = a[i].clone();
        for j in 1..=i.min(b.len() - 1) {
            acc -= &b[j] * &q[i - j];
        }
        q.push(acc * &inv);
    }
    q
}

fn eps_of(p: &Polynomial, len: usize) -> Eps {
    let mut v = p.coeffs().to_vec();
    v.resize(len, Rational::zero());
    v.truncate(len);
    v
}

/// Frobenius basis of a MUM operator to truncation order `n`.
///
/// Expands `Σ A_n(ε) x^{n+ε}` with `A_0 = 1` and
/// `P_0(n+ε) A_n(ε) = −Σ_{j≥1} P_j(n−j+ε) A_{n−j}(ε)`, keeping
/// `ε^0 … ε^{k−1}`; `f_i` collects the `ε^i` coefficients.
pub fn frobenius_basis(op: &ThetaOperator, n: usize) -> Result<FrobeniusBasis> {
    if !op.is_mum() {
        return Err(Error::NotMum(op.part(0).display_in("T")));
    }
    let op = op.mum_normalized();
    let k = op.order();
    let parts = op.parts();
    let mut a: Vec<Eps> = Vec::with_capacity(n + 1);
    let mut a0 = vec![Rational::zero(); k];
    a0[0] = Rational::one();
    a.push(a0);
    for m in 1..=n {
        let mut rhs = vec![Rational::zero(); k];
        for (j, pj) in parts.iter().enumerate().skip(1) {
            if j > m || pj.is_zero() {
                continue;
            }
            let shifted = eps_of(&pj.taylor_shift(&rat((m - j) as i64)), k);
            let t = eps_mul(&shifted, &a[m - j], k);
            for (r, v) in rhs.iter_mut().zip(t) {
                *r -= v;
            }
        }
        let lead = eps_of(&parts[0].taylor_shift(&rat(m as i64)), k);
        a.push(eps_div(&rhs, &lead));
    }
    let tilde = (0..k)
        .map(|i| PowerSeries::new(a.iter().map(|e| e[i].clone()).collect(), n))
        .collect();
    FrobeniusBasis::from_tilde(tilde)
}
