use cyop::algebra::{rat, LogSeries, Polynomial, PowerSeries, Rational};
use cyop::catalog::{build_case, catalog, get_entry, third_order, Family};
use cyop::frobenius::{
    change_coordinates, frobenius_basis, instantons_of_basis, instantons_of_operator, mirror_map,
};
use cyop::operator::{
    apply_operator, d_to_theta, exterior_square, recurrence_from_theta, theta_to_d, ThetaOperator,
};
use cyop::pullback::yy_pullback_normalized;
use cyop::sequences::{
    binomial, closed_form, constant_term_power, hadamard, Reading, SequenceId,
};
use proptest::prelude::*;

fn sporadic() -> impl Iterator<Item = &'static cyop::catalog::CatalogEntry> {
    catalog().entries().iter().filter(|e| !e.is_case())
}

fn quartic(id: &str) -> ThetaOperator {
    yy_pullback_normalized(&get_entry(id).unwrap().quintic).unwrap().theta_form
}

#[test]
fn frobenius_solutions_are_annihilated() {
    for e in sporadic() {
        let b = frobenius_basis(&e.quintic, 25).unwrap();
        for (m, y) in b.solutions().iter().enumerate() {
            assert!(apply_operator(&e.quintic, y).is_zero(), "{} y_{m}", e.id);
        }
    }
}

#[test]
fn recurrence_reproduces_y0() {
    for e in sporadic() {
        let y0 = frobenius_basis(&e.quintic, 30).unwrap().analytic().coeffs().to_vec();
        let rec = recurrence_from_theta(&e.quintic).unwrap();
        assert_eq!(rec.run(&[rat(1)], y0.len()).unwrap(), y0, "{}", e.id);
    }
}

#[test]
fn catalog_conversion_roundtrip() {
    for e in catalog().entries() {
        let back = d_to_theta(&theta_to_d(&e.quintic).unwrap()).unwrap();
        assert!(back.proportional(&e.quintic), "{}", e.id);
    }
}

#[test]
fn exterior_square_kills_wronskian() {
    // θ-Wronskian V = y0 θy1 − y1 θy0 = x W, and L(θ) x^{-1} = x^{-1} L(θ−1)
    let q = quartic("32");
    let b = frobenius_basis(&q, 20).unwrap();
    let (y0, y1) = (&b.solutions()[0], &b.solutions()[1]);
    let v: LogSeries = &(y0 * &y1.theta()) - &(y1 * &y0.theta());
    let ext = d_to_theta(&exterior_square(&theta_to_d(&q).unwrap()).unwrap()).unwrap();
    assert_eq!(ext.order(), 5);
    assert!(apply_operator(&ext.shift_theta(&rat(-1)), &v).is_zero());
}

#[test]
fn wronskian_of_pullback_basis_vs_quintic_w0() {
    // observed: y0 θy1 − y1 θy0 = (1 − 270x − 27x²)^{-3/2} w0, checked here squared
    let n = 15;
    let b = frobenius_basis(&quartic("32"), n).unwrap();
    let (f0, f1) = (b.analytic(), b.tilde(1));
    let v = &(&(f0 * f0) + &(f0 * &f1.theta())) - &(f1 * &f0.theta());
    let w0 = frobenius_basis(&get_entry("32").unwrap().quintic, n).unwrap().analytic().clone();
    let disc = PowerSeries::from_ints(&[1, -270, -27], n);
    assert_eq!(&(&v * &v) * &disc.pow(3), &w0 * &w0);
}

#[test]
fn pullback_degrees() {
    for id in ["32", "60", "189", "244", "245", "255", "281"] {
        assert_eq!(quartic(id).degree(), 4, "{id}");
    }
    // the exception: much lower than the claimed 5, see the acceptance notes
    assert_eq!(quartic("253").degree(), 3);
    assert_eq!(quartic("~11").degree(), 2);
}

#[test]
fn mirror_map_inverse() {
    let b = frobenius_basis(&quartic("32"), 12).unwrap();
    let m = mirror_map(&b).unwrap();
    let id = m.q_of_x.compose(&m.x_of_q).unwrap();
    assert_eq!(id, PowerSeries::var(id.order()));
    assert_eq!(m.q_of_x.coeff(1), &rat(1));
}

#[test]
fn distinct_operators_distinct_instantons() {
    let a = instantons_of_operator(&quartic("32"), 2).unwrap();
    let b = instantons_of_operator(&quartic("~11"), 2).unwrap();
    assert_ne!(a.get(1), b.get(1));
}

#[test]
fn case_a_is_hadamard_with_central_binomial_square() {
    let (a, b, c) = (rat(10), rat(4), rat(64));
    let len = 11;
    let third = frobenius_basis(&third_order(&a, &b, &c).unwrap(), len - 1).unwrap();
    let quint = frobenius_basis(&build_case(Family::A, &a, &b, &c).unwrap(), len - 1).unwrap();
    let central: Vec<Rational> = (0..len as i64)
        .map(|n| Rational::from_integer(binomial(2 * n, n).pow(2)))
        .collect();
    let h = hadamard(&central, third.analytic().coeffs()).unwrap();
    assert_eq!(h, quint.analytic().coeffs());
}

#[test]
fn s255_default_reading_matches_y0() {
    let y0 = frobenius_basis(&get_entry("255").unwrap().quintic, 12).unwrap();
    for n in 0..=12 {
        let v = closed_form(SequenceId::S255, n, Reading::OperatorValidated).unwrap();
        assert_eq!(&v, y0.analytic().coeff(n as usize), "n = {n}");
    }
}

#[test]
fn constant_term_equals_188() {
    for n in 0..=4 {
        let cf = closed_form(SequenceId::S188, n as i64, Reading::OperatorValidated).unwrap();
        assert_eq!(Rational::from_integer(constant_term_power(n)), cf, "n = {n}");
    }
}

fn small_operator() -> impl Strategy<Value = ThetaOperator> {
    let part = proptest::collection::vec(-4i64..=4, 0..=4);
    (1usize..=4, proptest::collection::vec(part, 0..=2)).prop_map(|(k, rest)| {
        let mut parts = vec![Polynomial::monomial(rat(1), k)];
        parts.extend(rest.iter().map(|c| Polynomial::from_ints(c)));
        ThetaOperator::new(parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_d_roundtrip(op in small_operator()) {
        // the way back is minimal in x, so it can only drop a common factor
        let d = theta_to_d(&op).unwrap();
        let back = d_to_theta(&d).unwrap();
        prop_assert_eq!(theta_to_d(&back).unwrap(), d);
        prop_assert!(back.degree() <= op.degree());
        if back.degree() == op.degree() {
            prop_assert!(back.proportional(&op));
        }
    }

    #[test]
    fn instantons_invariant_under_scaling(a in -3i64..=3, b in -3i64..=3) {
        let basis = frobenius_basis(&quartic("~11"), 12).unwrap();
        let n = basis.truncation();
        let f = PowerSeries::from_ints(&[1, a, b], n);
        let scaled = change_coordinates(&basis, &PowerSeries::var(n), &f).unwrap();
        prop_assert_eq!(
            instantons_of_basis(&scaled, 3).unwrap(),
            instantons_of_basis(&basis, 3).unwrap()
        );
    }
}
