//! Exterior square of a fourth-order operator.
//!
//! For solutions `y_p, y_q` of a monic quartic, the minors
//! `m_ij = y_p^(i) y_q^(j) - y_q^(i) y_p^(j)` (`0 ≤ i < j ≤ 3`) span a
//! six-dimensional first-order system. Starting from the Wronskian
//! `w = m_01`, successive derivatives are written in the minor basis and the
//! first linear dependency over `Q(x)` gives the minimal annihilator of
//! every 2×2 Wronskian.

use super::DOperator;
use crate::algebra::RationalFunction;
use crate::error::{Error, Result};

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

type Vec6 = [RationalFunction; 6];

fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("valid minor")
}

fn zero6() -> Vec6 {
    std::array::from_fn(|_| RationalFunction::zero())
}

/// Adds `c * m_ij` to `v`, with `m_ii = 0`, `m_ji = -m_ij` and `m_i4`
/// rewritten through the operator.
fn add_minor(v: &mut Vec6, i: usize, j: usize, c: &RationalFunction, a: &[RationalFunction]) {
    if c.is_zero() || i == j {
        return;
    }
    if j == 4 {
        // y^(4) = -Σ a_l y^(l)
        for (l, al) in a.iter().enumerate() {
            if l != i && !al.is_zero() {
                add_minor(v, i, l, &-(c * al), a);
            }
        }
        return;
    }
    if i > j {
        add_minor(v, j, i, &-c, a);
        return;
    }
    let k = pair_index(i, j);
    v[k] = &v[k] + c;
}

fn differentiate(v: &Vec6, a: &[RationalFunction]) -> Vec6 {
    let mut out: Vec6 = std::array::from_fn(|k| v[k].derivative());
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        if v[k].is_zero() {
            continue;
        }
        add_minor(&mut out, i + 1, j, &v[k], a);
        add_minor(&mut out, i, j + 1, &v[k], a);
    }
    out
}

/// Minimal monic operator annihilating all Wronskians of solution pairs.
///
/// Order 5 exactly on the C-Y2 locus, 6 otherwise. A dependency before
/// order 5 means `m_01` is not a cyclic vector and is reported as
/// [`Error::DegenerateCyclicVector`].
pub fn exterior_square(op: &DOperator) -> Result<DOperator> {
    op.expect_order(4)?;
    let a = op.coeffs();
    // each reduced row: (pivot, vector, combination of derivatives it equals)
    let mut rows: Vec<(usize, Vec6, Vec<RationalFunction>)> = Vec::new();
    let mut current = zero6();
    current[0] = RationalFunction::one();
    for k in 0..=6 {
        let mut r = current.clone();
        let mut combo = vec![RationalFunction::zero(); k + 1];
        combo[k] = RationalFunction::one();
        for (p, rv, rc) in &rows {
            if r[*p].is_zero() {
                continue;
            }
            let lambda = r[*p].div(&rv[*p])?;
            for t in 0..6 {
                if !rv[t].is_zero() {
                    r[t] = &r[t] - &(&lambda * &rv[t]);
                }
            }
            for (t, c) in rc.iter().enumerate() {
                if !c.is_zero() {
                    combo[t] = &combo[t] - &(&lambda * c);
                }
            }
        }
        match r.iter().position(|f| !f.is_zero()) {
            Some(p) => rows.push((p, r, combo)),
            None => {
                if k < 5 {
                    return Err(Error::DegenerateCyclicVector(k));
                }
                combo.pop();
                return DOperator::new(combo);
            }
        }
        if k < 6 {
            current = differentiate(&current, a);
        }
    }
    unreachable!("six-dimensional system must be dependent by the seventh derivative")
}
