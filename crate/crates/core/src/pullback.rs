//! Yifan Yang's pullback of a C-Y2 quintic to a quartic.

use crate::algebra::{ratio, RationalFunction};
use crate::cy::cy2_order5;
use crate::error::{Error, Result};
use crate::operator::{d_to_theta, theta_to_d, DOperator, ThetaOperator};

/// c3 = (8/5) b4
/// c2 = ½ b3 + (7/5) b4′ + (19/25) b4²
/// c1 = −(3/5) b2 + (7/5) b3′ + (19/25) b3 b4
/// c0 = −¼ b1 + (1/10) b2′ + (1/25) b2 b4 + (9/40) b3″ + (1/16) b3²
///      + (1/25) b3 b4′ + (23/100) b3′ b4 + (9/250) b3 b4²
pub fn yy_pullback(op: &DOperator) -> Result<DOperator> {
    op.expect_order(5)?;
    let verdict = cy2_order5(op)?;
    if !verdict.holds {
        return Err(Error::NotCy2 {
            residual: verdict.residual.to_string(),
        });
    }
    Ok(yy_coefficients(op))
}

fn yy_coefficients(op: &DOperator) -> DOperator {
    let (b1, b2, b3, b4) = (op.coeff(1), op.coeff(2), op.coeff(3), op.coeff(4));
    let (d2, d3, d4) = (b2.derivative(), b3.derivative(), b4.derivative());
    let b4sq = b4.pow(2);
    let sum = |terms: &[(RationalFunction, (i64, i64))]| -> RationalFunction {
        terms.iter().fold(RationalFunction::zero(), |acc, (f, (p, q))| {
            &acc + &f.scale(&ratio(*p, *q))
        })
    };
    let c3 = b4.scale(&ratio(8, 5));
    let c2 = sum(&[(b3.clone(), (1, 2)), (d4.clone(), (7, 5)), (b4sq.clone(), (19, 25))]);
    let c1 = sum(&[(b2.clone(), (-3, 5)), (d3.clone(), (7, 5)), (&b3 * &b4, (19, 25))]);
    let c0 = sum(&[
        (b1, (-1, 4)),
        (d2, (1, 10)),
        (&b2 * &b4, (1, 25)),
        (d3.derivative(), (9, 40)),
        (b3.pow(2), (1, 16)),
        (&b3 * &d4, (1, 25)),
        (&d3 * &b4, (23, 100)),
        (&b3 * &b4sq, (9, 250)),
    ]);
    DOperator::new(vec![c0, c1, c2, c3]).expect("four coefficients")
}

/// Both stages of the normalized pipeline, for reporting.
#[derive(Clone, Debug)]
pub struct PullbackResult {
    /// Monic quartic with the raw `c_i`.
    pub d_form: DOperator,
    /// θ-form after the shift `θ → θ − 5/2`, scaled to `P_0 = θ^4`.
    pub theta_form: ThetaOperator,
}

/// D-form → pullback → θ-form → `θ → θ − 5/2` → leading `θ^4`.
pub fn yy_pullback_normalized(op: &ThetaOperator) -> Result<PullbackResult> {
    if !op.is_mum() {
        return Err(Error::NotMum(op.part(0).display_in("T")));
    }
    if op.order() != 5 {
        return Err(Error::WrongOrder {
            expected: 5,
            got: op.order(),
        });
    }
    let d_form = yy_pullback(&theta_to_d(op)?)?;
    let theta_form = d_to_theta(&d_form)?
        .shift_theta(&ratio(-5, 2))
        .mum_normalized();
    Ok(PullbackResult { d_form, theta_form })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::parse_operator;

    #[test]
    fn hypergeometric_quintic() {
        // θ^5 − 32x(θ+½)^5 lies on the C-Y2 locus; c3 is always (8/5) b4
        let op = parse_operator("T^5 - 32*x*(T+1/2)^5").unwrap();
        let d = theta_to_d(&op).unwrap();
        let pb = yy_pullback(&d).unwrap();
        assert_eq!(pb.coeff(3), d.coeff(4).scale(&ratio(8, 5)));
        let norm = yy_pullback_normalized(&op).unwrap().theta_form;
        assert!(norm.is_mum());
        assert_eq!(norm.order(), 4);
    }

    #[test]
    fn rejects_off_locus() {
        let op = parse_operator("T^5 - x*(T+1)^2*(T^3+1)").unwrap();
        let d = theta_to_d(&op).unwrap();
        assert!(matches!(yy_pullback(&d), Err(Error::NotCy2 { .. })));
        assert!(yy_pullback_normalized(&parse_operator("T^4 - x").unwrap()).is_err());
    }
}
