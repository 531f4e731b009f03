use num::Zero;

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};

/// `H_0 … H_cap`, `H_k = Σ_{j=1..k} 1/j`.
#[derive(Clone, Debug)]
pub struct HarmonicCache {
    values: Vec<Rational>,
}

impl HarmonicCache {
    pub fn new(cap: usize) -> Self {
        let mut values = Vec::with_capacity(cap + 1);
        values.push(Rational::zero());
        for k in 1..=cap {
            let next = &values[k - 1] + Rational::new(1.into(), (k as i64).into());
            values.push(next);
        }
        HarmonicCache { values }
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }
}

pub fn harmonic(k: i64) -> Result<Rational> {
    if k < 0 {
        return Err(Error::Invalid(format!("harmonic number of negative index {k}")));
    }
    Ok((1..=k).fold(Rational::zero(), |acc, j| acc + rat(j).recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn small_values() {
        assert_eq!(harmonic(0).unwrap(), rat(0));
        assert_eq!(harmonic(1).unwrap(), rat(1));
        assert_eq!(harmonic(3).unwrap(), ratio(11, 6));
        assert!(harmonic(-1).is_err());
        let cache = HarmonicCache::new(12);
        for k in 1..=12 {
            assert_eq!(cache.get(k) - cache.get(k - 1), rat(k as i64).recip());
            assert_eq!(cache.get(k), &harmonic(k as i64).unwrap());
        }
    }
}
