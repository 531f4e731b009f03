use std::collections::HashMap;

use num::{BigInt, One, Zero};

/// `S = Σ_{i=1..dims} (x_i + 1/x_i)`; exponents of each step are `±1` in
/// one variable.
#[derive(Clone, Debug)]
pub struct LaurentCT {
    dims: usize,
}

impl Default for LaurentCT {
    fn default() -> Self {
        LaurentCT { dims: 5 }
    }
}

impl LaurentCT {
    pub fn new(dims: usize) -> Self {
        LaurentCT { dims }
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Constant term of `S^m`, multiplying one factor at a time and keeping
    /// only monomials that can still return to the origin.
    pub fn ct_power(&self, m: usize) -> BigInt {
        let mut terms: HashMap<Vec<i32>, BigInt> = HashMap::new();
        terms.insert(vec![0; self.dims], BigInt::one());
        for step in 0..m {
            let remaining = (m - step - 1) as i32;
            let mut next: HashMap<Vec<i32>, BigInt> = HashMap::with_capacity(terms.len() * 2);
            for (e, c) in &terms {
                for i in 0..self.dims {
                    for d in [-1, 1] {
                        let mut f = e.clone();
                        f[i] += d;
                        if f.iter().map(|v| v.abs()).sum::<i32>() > remaining {
                            continue;
                        }
                        *next.entry(f).or_insert_with(BigInt::zero) += c;
                    }
                }
            }
            terms = next;
        }
        terms.remove(&vec![0; self.dims]).unwrap_or_default()
    }
}

/// Constant term of `S^{2n}` for the five-variable `S`.
pub fn constant_term_power(n: usize) -> BigInt {
    LaurentCT::default().ct_power(2 * n)
}
