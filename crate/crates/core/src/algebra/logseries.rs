use std::ops::{Add, Mul, Sub};

use num::Zero;

use super::rational::{rat, Rational};
use super::series::PowerSeries;

/// `Σ_m s_m(x) L^m` with `L = log x`, stored with plain `L^m` coefficients.
///
/// All parts share one truncation order. Trailing zero parts are dropped, so
/// `max_log_degree` is exact except for the zero value (which keeps one part).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogSeries {
    parts: Vec<PowerSeries>,
}

impl LogSeries {
    pub fn new(parts: Vec<PowerSeries>) -> Self {
        assert!(!parts.is_empty(), "log-series needs at least one part");
        let n = parts.iter().map(PowerSeries::order).min().unwrap();
        let mut parts: Vec<PowerSeries> = parts
            .into_iter()
            .map(|p| if p.order() == n { p } else { p.truncate(n) })
            .collect();
        while parts.len() > 1 && parts.last().unwrap().is_zero() {
            parts.pop();
        }
        LogSeries { parts }
    }

    pub fn from_series(s: PowerSeries) -> Self {
        LogSeries { parts: vec![s] }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_series(PowerSeries::zero(order))
    }

    /// `c x^n L^m`
    pub fn monomial(c: Rational, n: usize, m: usize, order: usize) -> Self {
        let mut parts = vec![PowerSeries::zero(order); m + 1];
        let mut v = vec![Rational::zero(); n + 1];
        v[n] = c;
        parts[m] = PowerSeries::new(v, order);
        Self::new(parts)
    }

    pub fn order(&self) -> usize {
        self.parts[0].order()
    }

    pub fn max_log_degree(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn parts(&self) -> &[PowerSeries] {
        &self.parts
    }

    /// Coefficient of `L^m`, zero beyond the stored degree.
    pub fn part(&self, m: usize) -> PowerSeries {
        self.parts
            .get(m)
            .cloned()
            .unwrap_or_else(|| PowerSeries::zero(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(PowerSeries::is_zero)
    }

    /// `θ(x^n L^m) = n x^n L^m + m x^n L^{m-1}`
    pub fn theta(&self) -> Self {
        let mut out: Vec<PowerSeries> = self.parts.iter().map(PowerSeries::theta).collect();
        for m in 1..self.parts.len() {
            let t = self.parts[m].scale(&rat(m as i64));
            out[m - 1] = &out[m - 1] + &t;
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.parts.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_series(&self, s: &PowerSeries) -> Self {
        Self::new(self.parts.iter().map(|p| p * s).collect())
    }

    pub fn mul_x(&self, k: usize) -> Self {
        Self::new(self.parts.iter().map(|p| p.mul_x(k)).collect())
    }

    fn zip_with(&self, rhs: &LogSeries, f: impl Fn(&PowerSeries, &PowerSeries) -> PowerSeries) -> Self {
        let len = self.parts.len().max(rhs.parts.len());
        let n = self.order().min(rhs.order());
        Self::new(
            (0..len)
                .map(|m| {
                    let a = self.part(m).truncate(n);
                    let b = rhs.part(m).truncate(n);
                    f(&a, &b)
                })
                .collect(),
        )
    }
}

impl Add for &LogSeries {
    type Output = LogSeries;
    fn add(self, rhs: &LogSeries) -> LogSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &LogSeries {
    type Output = LogSeries;
    fn sub(self, rhs: &LogSeries) -> LogSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &LogSeries {
    type Output = LogSeries;
    fn mul(self, rhs: &LogSeries) -> LogSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![PowerSeries::zero(n); self.parts.len() + rhs.parts.len() - 1];
        for (i, a) in self.parts.iter().enumerate() {
            for (j, b) in rhs.parts.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        LogSeries::new(out)
    }
}
