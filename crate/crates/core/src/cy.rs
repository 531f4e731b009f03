//! The Calabi–Yau condition C-Y2 for monic quartics and quintics.
//!
//! Both checks compute `lhs - rhs` as a reduced rational function; the
//! condition holds iff its numerator is the zero polynomial.

use crate::algebra::{ratio, RationalFunction};
use crate::error::Result;
use crate::operator::DOperator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cy2Verdict {
    pub holds: bool,
    /// `a_1 - (…)` for quartics, `b_2 - (…)` for quintics.
    pub residual: RationalFunction,
}

impl Cy2Verdict {
    fn from_residual(residual: RationalFunction) -> Self {
        Cy2Verdict {
            holds: residual.is_zero(),
            residual,
        }
    }
}

/// `a1 = ½a2a3 − ⅛a3³ + a2′ − ¾a3a3′ − ½a3″`
pub fn cy2_order4(op: &DOperator) -> Result<Cy2Verdict> {
    op.expect_order(4)?;
    let (a1, a2, a3) = (op.coeff(1), op.coeff(2), op.coeff(3));
    let d3 = a3.derivative();
    let rhs = &(&(&(&a2 * &a3).scale(&ratio(1, 2)) - &a3.pow(3).scale(&ratio(1, 8)))
        + &a2.derivative())
        - &(&(&a3 * &d3).scale(&ratio(3, 4)) + &d3.derivative().scale(&ratio(1, 2)));
    Ok(Cy2Verdict::from_residual(&a1 - &rhs))
}

/// `b2 = (3/5)b3b4 − (4/25)b4³ + (3/2)b3′ − (6/5)b4b4′ − b4″`
pub fn cy2_order5(op: &DOperator) -> Result<Cy2Verdict> {
    op.expect_order(5)?;
    let (b2, b3, b4) = (op.coeff(2), op.coeff(3), op.coeff(4));
    let d4 = b4.derivative();
    let rhs = &(&(&(&b3 * &b4).scale(&ratio(3, 5)) - &b4.pow(3).scale(&ratio(4, 25)))
        + &b3.derivative().scale(&ratio(3, 2)))
        - &(&(&b4 * &d4).scale(&ratio(6, 5)) + &d4.derivative());
    Ok(Cy2Verdict::from_residual(&b2 - &rhs))
}

/// `a3 = 2/x + (2/5) b4`
pub fn a3_of_b4(b4: &RationalFunction) -> RationalFunction {
    &RationalFunction::inverse_power(ratio(2, 1), 1) + &b4.scale(&ratio(2, 5))
}
