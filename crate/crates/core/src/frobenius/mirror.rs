//! Mirror map, Yukawa coupling and instanton numbers.
//!
//! Everything is computed on pure `x`-series: with `t = f_1/f_0`,
//! `log q = L + t`, and
//!
//! ```text
//! y_2 / y_0 = ½ (log q)² + u,      u = f_2/f_0 − ½ t²
//! ```
//!
//! so `K = 1 + (q d/dq)² u`, with `q d/dq = θ / (1 + θt)` in `x`.

use num::{One, Zero};

use super::basis::{frobenius_basis, FrobeniusBasis};
use crate::algebra::{rat, PowerSeries, Rational};
use crate::error::{Error, Result};
use crate::operator::ThetaOperator;

pub const DEFAULT_KMAX: usize = 8;

/// Truncation used for a given instanton range: `3·K + 5`.
pub fn default_truncation(kmax: usize) -> usize {
    3 * kmax + 5
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorMap {
    pub q_of_x: PowerSeries,
    pub x_of_q: PowerSeries,
}

/// Series in the mirror coordinate `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries(pub PowerSeries);

/// `N_1 … N_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstantonVector(pub Vec<Rational>);

impl InstantonVector {
    /// `N_k`, one-based.
    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `q = x · exp(f_1 / f_0)` and its compositional inverse.
pub fn mirror_map(basis: &FrobeniusBasis) -> Result<MirrorMap> {
    if basis.order() < 2 {
        return Err(Error::Invalid("mirror map needs at least y_0, y_1".into()));
    }
    let t = basis.tilde(1).div(basis.analytic())?;
    let q_of_x = t.exp()?.mul_x(1);
    let x_of_q = q_of_x.reversion()?;
    Ok(MirrorMap { q_of_x, x_of_q })
}

/// `K(q) = (q d/dq)² (y_2 / y_0)`.
pub fn yukawa(basis: &FrobeniusBasis) -> Result<QSeries> {
    if basis.order() < 3 {
        return Err(Error::Invalid("Yukawa coupling needs y_0, y_1, y_2".into()));
    }
    let y0 = basis.analytic();
    let t = basis.tilde(1).div(y0)?;
    let u = &basis.tilde(2).div(y0)? - &(&t * &t).scale(&Rational::new(1.into(), 2.into()));
    let dlogq = &PowerSeries::one(t.order()) + &t.theta();
    let inv = dlogq.inverse()?;
    let dq = |g: &PowerSeries| &g.theta() * &inv;
    let k_x = &PowerSeries::one(u.order()) + &dq(&dq(&u));
    if !k_x.coeff(0).is_one() {
        return Err(Error::YukawaNormalization(k_x.coeff(0).to_string()));
    }
    let m = mirror_map(basis)?;
    Ok(QSeries(k_x.compose(&m.x_of_q)?))
}

/// Möbius function by trial division.
pub fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `k³ N_k = Σ_{d|k} μ(k/d) c_d` where `K − 1 = Σ c_m q^m`.
pub fn instantons(k: &QSeries, kmax: usize) -> Result<InstantonVector> {
    let s = &k.0;
    if !s.coeff(0).is_one() {
        return Err(Error::YukawaNormalization(s.coeff(0).to_string()));
    }
    if kmax > s.order() {
        return Err(Error::Invalid(format!(
            "K(q) known to q^{} only, {kmax} instantons requested",
            s.order()
        )));
    }
    let n = (1..=kmax)
        .map(|kk| {
            let acc = (1..=kk)
                .filter(|d| kk % d == 0)
                .fold(Rational::zero(), |acc, d| acc + s.coeff(d) * rat(mobius(kk / d)));
            acc / rat((kk * kk * kk) as i64)
        })
        .collect();
    Ok(InstantonVector(n))
}

/// `1 + Σ_k k³ N_k q^k / (1 − q^k)` to order `order`.
pub fn lambert_series(n: &InstantonVector, order: usize) -> QSeries {
    let mut c = vec![Rational::zero(); order + 1];
    c[0] = Rational::one();
    for (i, nk) in n.0.iter().enumerate() {
        let k = i + 1;
        if nk.is_zero() {
            continue;
        }
        let w = nk * rat((k * k * k) as i64);
        let mut m = k;
        while m <= order {
            c[m] += &w;
            m += k;
        }
    }
    QSeries(PowerSeries::new(c, order))
}

/// `y_m → f · (y_m ∘ φ)` for `φ = x + O(x²)`, `f(0) = 1`.
///
/// `log φ = L + ℓ` with `ℓ = log(φ/x)`, hence the new tilde parts are
/// `g_r = f · Σ_{i+b=r} ℓ^b / b! · f_i(φ)`, which again vanish at 0 for
/// `r ≥ 1`. The result is truncated one order below `φ`.
pub fn change_coordinates(
    basis: &FrobeniusBasis,
    phi: &PowerSeries,
    f: &PowerSeries,
) -> Result<FrobeniusBasis> {
    if !phi.coeff(0).is_zero() || !phi.coeff(1).is_one() {
        return Err(Error::Invalid("coordinate change needs φ = x + O(x²)".into()));
    }
    if !f.coeff(0).is_one() {
        return Err(Error::Invalid("scaling factor needs f(0) = 1".into()));
    }
    let ell = phi.div_x(1)?.log()?;
    let composed: Vec<PowerSeries> = basis
        .tilde_parts()
        .iter()
        .map(|fi| fi.compose(phi))
        .collect::<Result<_>>()?;
    let n = ell.order().min(f.order()).min(basis.truncation());
    let mut ell_pow = vec![PowerSeries::one(n)];
    let mut fact = Rational::one();
    for b in 1..basis.order() {
        fact *= rat(b as i64);
        let next = &ell_pow[b - 1] * &ell;
        ell_pow.push(next);
    }
    let mut inv_fact = vec![Rational::one()];
    for b in 1..basis.order() {
        let next = &inv_fact[b - 1] / rat(b as i64);
        inv_fact.push(next);
    }
    let tilde = (0..basis.order())
        .map(|r| {
            let sum = (0..=r).fold(PowerSeries::zero(n), |acc, i| {
                let b = r - i;
                &acc + &(&ell_pow[b].scale(&inv_fact[b]) * &composed[i])
            });
            &sum * f
        })
        .collect();
    FrobeniusBasis::from_tilde(tilde)
}

pub fn instantons_of_basis(basis: &FrobeniusBasis, kmax: usize) -> Result<InstantonVector> {
    instantons(&yukawa(basis)?, kmax)
}

pub fn instantons_of_operator(op: &ThetaOperator, kmax: usize) -> Result<InstantonVector> {
    let basis = frobenius_basis(op, default_truncation(kmax))?;
    instantons_of_basis(&basis, kmax)
}

/// Same instanton numbers up to `kmax`.
pub fn equivalence_check(a: &ThetaOperator, b: &ThetaOperator, kmax: usize) -> Result<bool> {
    for op in [a, b] {
        if op.order() < 3 {
            return Err(Error::Invalid("equivalence needs operators of order ≥ 3".into()));
        }
    }
    Ok(instantons_of_operator(a, kmax)? == instantons_of_operator(b, kmax)?)
}
