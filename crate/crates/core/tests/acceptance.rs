//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs with `harness = false`. A criterion that cannot hold because the
//! printed data it compares against is itself inconsistent is listed in
//! `KNOWN_RED` with the reason; it still runs at full strictness and still
//! prints FAIL. The target exits non-zero when any other criterion fails, or
//! when a known-red criterion unexpectedly passes (the note is then stale).

use std::process::ExitCode;
use std::time::Instant;

use cyop::algebra::{rat, ratio, Polynomial, PowerSeries, Rational, RationalFunction};
use cyop::catalog::{
    build_case, catalog, corrected_case_pullback, family_table, get_entry, same_ode,
    stated_case_pullback, Family,
};
use cyop::cy::{cy2_order4, cy2_order5};
use cyop::frobenius::{
    change_coordinates, default_truncation, frobenius_basis, instantons, instantons_of_basis,
    lambert_series, yukawa,
};
use cyop::operator::{exterior_square, indicial_is_mum, theta_to_d, DOperator, ThetaOperator};
use cyop::pullback::{yy_pullback, yy_pullback_normalized};
use cyop::sequences::{closed_form, constant_term_power, zeta4_error, Reading, SequenceId};

/// Observed `|B_20/A_20 − ζ(4)|` is 1.1096e-68 (matches an mpmath run); the
/// regression pin sits one order of magnitude above it.
const ZETA4_PIN: (i64, u32) = (111, 70);

const KNOWN_RED: &[(u32, &str)] = &[
    (
        2,
        "printed c2 numerator starts 26604x^4; the printed b's, the c2 formula and the printed \
         θ-form display all force 266004x^4 (c3, c1, c0 match exactly)",
    ),
    (
        3,
        "printed #130 display has (2θ+1)^2 in its x^6 term; the computed pullback has (2θ+6)^2 and \
         the printed quartic fails C-Y2 (the other nine displays match exactly)",
    ),
    (
        4,
        "printed Case A-D pullbacks are written in x/λ (λ = 4, 3, 4, 12), and Case B and C carry \
         coefficient typos; after rescaling and those corrections all 40 agree",
    ),
    (
        5,
        "the computed Yifan-Yang pullback of #253 has x-degree 3 (leading coefficient (1-64x)^3), \
         confirmed by an independent symbolic run; the degree-5 claim matches no reduced form",
    ),
];

type Outcome = Result<String, String>;

fn poly_hi(c: &[i64]) -> Polynomial {
    let mut v = c.to_vec();
    v.reverse();
    Polynomial::from_ints(&v)
}

fn rf(num: &Polynomial, den: &Polynomial) -> RationalFunction {
    RationalFunction::new(num.clone(), den.clone()).expect("nonzero denominator")
}

fn quintic(id: &str) -> &'static ThetaOperator {
    &get_entry(id).expect("catalog id").quintic
}

fn d_form(op: &ThetaOperator) -> DOperator {
    theta_to_d(op).expect("nonzero operator")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn disc() -> Polynomial {
    poly_hi(&[27, 270, -1])
}

fn x_pow(k: usize) -> Polynomial {
    Polynomial::monomial(rat(1), k)
}

fn criterion_1() -> Outcome {
    let d = disc();
    let b4 = rf(&poly_hi(&[81, 675, -2]).scale(&rat(5)), &(&x_pow(1) * &d));
    let b3 = rf(&poly_hi(&[1752, 11502, -25]), &(&x_pow(2) * &d));
    let b2 = rf(&poly_hi(&[804, 3753, -5]).scale(&rat(3)), &(&x_pow(3) * &d));
    let b1 = rf(&poly_hi(&[816, 2130, -1]), &(&x_pow(4) * &d));
    let computed = d_form(quintic("32"));
    for (i, b) in [(4, &b4), (3, &b3), (2, &b2), (1, &b1)] {
        ensure(&computed.coeff(i) == b, || format!("printed b{i} differs from the D-form of #32"))?;
    }
    let printed = DOperator::new(vec![computed.coeff(0), b1, b2, b3, b4]).map_err(|e| e.to_string())?;
    let v = cy2_order5(&printed).map_err(|e| e.to_string())?;
    ensure(v.holds, || format!("residual {}", v.residual))?;
    Ok("residual exactly 0; printed b4..b1 equal the D-form of #32".into())
}

fn criterion_2() -> Outcome {
    let d = disc();
    let d2 = d.pow(2);
    let printed = [
        (3, rf(&poly_hi(&[81, 675, -2]).scale(&rat(8)), &(&x_pow(1) * &d))),
        (
            2,
            rf(
                &poly_hi(&[26604, 4428594, 17854185, -105732, 149]),
                &(&x_pow(2) * &d2).scale(&rat(2)),
            ),
        ),
        (
            1,
            rf(
                &poly_hi(&[122580, 1831491, 6322540, -32634, 37]).scale(&rat(3)),
                &(&x_pow(3) * &d2),
            ),
        ),
        (
            0,
            rf(
                &poly_hi(&[4769856, 62980416, 175580928, -770052, 625]),
                &(&x_pow(4) * &d2).scale(&rat(16)),
            ),
        ),
    ];
    let pb = yy_pullback(&d_form(quintic("32"))).map_err(|e| e.to_string())?;
    let bad: Vec<String> = printed
        .iter()
        .filter(|(i, c)| &pb.coeff(*i) != c)
        .map(|(i, _)| format!("c{i}: computed {}", pb.coeff(*i)))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("c3, c2, c1, c0 equal the printed rational functions".into())
}

fn criterion_3() -> Outcome {
    let ids = ["32", "~11", "60", "189", "244", "245", "255", "281", "130", "188"];
    let mut bad = Vec::new();
    for id in ids {
        let stated = get_entry(id).unwrap().stated_pullback.as_ref().expect("stated display");
        let pb = yy_pullback_normalized(quintic(id)).map_err(|e| format!("{id}: {e}"))?;
        if pb.theta_form != stated.mum_normalized() {
            bad.push(id);
        }
    }
    let term = cyop::operator::parse_operator("(9/16)*(6*T+11)^2*(6*T+13)^2").unwrap().part(0);
    let pb32 = yy_pullback_normalized(quintic("32")).unwrap().theta_form;
    ensure(pb32.part(4) == term, || "#32 x^4 term differs from (9/16)(6θ+11)²(6θ+13)²".into())?;
    ensure(bad.is_empty(), || format!("{} of 10 displays differ: {}", bad.len(), bad.join(", ")))?;
    Ok("10/10 displays equal, including #32's x^4 term".into())
}

fn criterion_4() -> Outcome {
    let mut literal = 0;
    let mut corrected = 0;
    for family in Family::ALL {
        for row in family_table() {
            let q = build_case(family, &row.a, &row.b, &row.c).map_err(|e| e.to_string())?;
            let pb = yy_pullback_normalized(&q).map_err(|e| format!("{family}:{}: {e}", row.name))?;
            let stated = stated_case_pullback(family, &row.a, &row.b, &row.c).unwrap();
            if same_ode(&pb.theta_form, &stated).unwrap() {
                literal += 1;
            }
            let fixed = corrected_case_pullback(family, &row.a, &row.b, &row.c).unwrap();
            if same_ode(&pb.theta_form, &fixed).unwrap() {
                corrected += 1;
            }
        }
    }
    let note = format!("{literal}/40 equal as printed; {corrected}/40 after x/λ rescaling and corrections");
    ensure(literal == 40, || note.clone())?;
    Ok(note)
}

fn criterion_5() -> Outcome {
    let pb = yy_pullback_normalized(quintic("253")).map_err(|e| e.to_string())?;
    ensure(pb.theta_form.degree() == 5, || format!("x-degree {}", pb.theta_form.degree()))?;
    let ordinary = get_entry("253").unwrap().stated_pullback.as_ref().unwrap();
    let v = cy2_order4(&d_form(ordinary)).map_err(|e| e.to_string())?;
    ensure(v.holds, || format!("ordinary pullback C-Y2 residual {}", v.residual))?;
    Ok("Yifan-Yang pullback has x-degree 5; ordinary pullback passes C-Y2".into())
}

fn criterion_6() -> Outcome {
    for id in ["32", "~11"] {
        let pb = yy_pullback_normalized(quintic(id)).map_err(|e| e.to_string())?;
        let d = d_form(&pb.theta_form);
        let w = exterior_square(&d).map_err(|e| format!("{id}: {e}"))?;
        ensure(w.order() == 5, || format!("{id}: exterior square has order {}", w.order()))?;
        let v = cy2_order5(&w).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("{id}: exterior square fails C-Y2"))?;
        let bumped = d.with_coeff(1, &d.coeff(1) + &RationalFunction::one());
        let w6 = exterior_square(&bumped).map_err(|e| format!("{id} perturbed: {e}"))?;
        ensure(w6.order() == 6, || format!("{id}: perturbed exterior square has order {}", w6.order()))?;
    }
    Ok("order 5 with C-Y2 for #32 and #~11; a1 + 1 gives order 6".into())
}

fn criterion_7() -> Outcome {
    let r = zeta4_error(20, 80).map_err(|e| e.to_string())?;
    let pin = Rational::new(ZETA4_PIN.0.into(), num::pow(num::BigInt::from(10), ZETA4_PIN.1 as usize));
    ensure(r.error_value < ratio(1, 10_000_000_000), || format!("error {}", r.error))?;
    ensure(r.error_value < pin, || format!("error {} above pinned 1.11e-67", r.error))?;
    Ok(format!("|B20/A20 - ζ(4)| = {} (< 1e-10, pinned < 1.11e-67)", r.error))
}

fn criterion_8() -> Outcome {
    let pairs = [
        ("32", SequenceId::Kr32),
        ("60", SequenceId::S60),
        ("189", SequenceId::S189),
        ("244", SequenceId::S244),
        ("245", SequenceId::S245),
        ("253", SequenceId::S253),
        ("281", SequenceId::S281),
        ("130", SequenceId::S130),
        ("188", SequenceId::S188),
    ];
    for (op, id) in pairs {
        let b = frobenius_basis(quintic(op), 8).map_err(|e| e.to_string())?;
        for n in 0..=8 {
            let v = closed_form(id, n as i64, Reading::OperatorValidated).map_err(|e| e.to_string())?;
            ensure(&v == b.analytic().coeff(n), || format!("{id} at n = {n}: {v} vs y0 {}", b.analytic().coeff(n)))?;
        }
    }
    let printed = [
        ("32", SequenceId::Zudilin32, rat(-12), rat(12)),
        ("255", SequenceId::S255, rat(-132), rat(-68)),
    ];
    for (op, id, got, want) in printed {
        let v = closed_form(id, 1, Reading::AsPrinted).map_err(|e| e.to_string())?;
        let y1 = frobenius_basis(quintic(op), 1).map_err(|e| e.to_string())?.analytic().coeff(1).clone();
        ensure(v == got && y1 == want && v != y1, || format!("as-printed {id}: {v} vs y0 {y1}"))?;
    }
    Ok("9 closed forms equal y0 for n <= 8; as-printed 32-Zudilin (-12 vs 12) and 255 (-132 vs -68) fail".into())
}

fn criterion_9() -> Outcome {
    for n in 0..=5 {
        let ct = Rational::from_integer(constant_term_power(n));
        let cf = closed_form(SequenceId::S188, n as i64, Reading::OperatorValidated).map_err(|e| e.to_string())?;
        ensure(ct == cf, || format!("n = {n}: CT {ct} vs closed form {cf}"))?;
    }
    ensure(constant_term_power(1) == 10.into(), || "n = 1 value is not 10".into())?;
    Ok("CT(S^2n) = closed_form(188, n) for n <= 5; n = 1 gives 10".into())
}

fn criterion_10() -> Outcome {
    let kmax = 8;
    let n = default_truncation(kmax);
    for id in ["32", "~11"] {
        let pb = yy_pullback_normalized(quintic(id)).map_err(|e| e.to_string())?.theta_form;
        let basis = frobenius_basis(&pb, n).map_err(|e| e.to_string())?;
        let k = yukawa(&basis).map_err(|e| e.to_string())?;
        ensure(k.0.coeff(0) == &rat(1), || format!("{id}: K(q) constant term {}", k.0.coeff(0)))?;
        let nk = instantons(&k, kmax).map_err(|e| e.to_string())?;
        let back = instantons(&lambert_series(&nk, kmax + 1), kmax).map_err(|e| e.to_string())?;
        ensure(back == nk, || format!("{id}: Möbius round trip differs"))?;
        let k_again = lambert_series(&nk, kmax + 1);
        ensure(k_again.0.truncate(kmax) == k.0.truncate(kmax), || format!("{id}: Lambert series differs from K"))?;
        let geometric = PowerSeries::new(vec![rat(1); n], n);
        let x = PowerSeries::var(n);
        let scaled = change_coordinates(&basis, &x, &geometric).map_err(|e| e.to_string())?;
        let phi = &x * &geometric;
        let moved = change_coordinates(&basis, &phi, &PowerSeries::one(n)).map_err(|e| e.to_string())?;
        let six = |b| -> Result<Vec<Rational>, String> {
            Ok(instantons_of_basis(b, 6).map_err(|e| e.to_string())?.0)
        };
        let base = six(&basis)?;
        ensure(six(&scaled)? == base, || format!("{id}: N_k change under f = 1/(1-x)"))?;
        ensure(six(&moved)? == base, || format!("{id}: N_k change under x/(1-x)"))?;
    }
    Ok("K(q) = 1 + O(q), Möbius round trip for k <= 8, N_1..N_6 invariant under both changes".into())
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for e in catalog().entries() {
        let ops = [Some(&e.quintic), e.stated_pullback.as_ref(), e.corrected_pullback.as_ref()];
        for op in ops.into_iter().flatten() {
            ensure(indicial_is_mum(op), || format!("{} fails MUM", e.id))?;
            count += 1;
        }
    }
    Ok(format!("{count} catalog operators are MUM"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "C-Y2 of #32 from the printed b's", criterion_1),
        (2, "pullback c-coefficients of #32", criterion_2),
        (3, "ten normalized pullback displays", criterion_3),
        (4, "Case A-D pullback formulas", criterion_4),
        (5, "#253 exception", criterion_5),
        (6, "Wronskian dichotomy", criterion_6),
        (7, "ζ(4) approximation", criterion_7),
        (8, "closed forms versus y0", criterion_8),
        (9, "constant term of S^2n", criterion_9),
        (10, "mirror and instanton properties", criterion_10),
        (11, "MUM for catalog operators", criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        match (&outcome, known) {
            (Ok(msg), None) => println!("PASS criterion {id:>2} ({name}, {secs:.2}s): {msg}"),
            (Ok(msg), Some(_)) => {
                println!("PASS criterion {id:>2} ({name}, {secs:.2}s): {msg}  [listed as known-red]");
                unexpected.push(id);
            }
            (Err(msg), None) => {
                println!("FAIL criterion {id:>2} ({name}, {secs:.2}s): {msg}");
                unexpected.push(id);
            }
            (Err(msg), Some(why)) => {
                println!("FAIL criterion {id:>2} ({name}, {secs:.2}s): {msg}");
                println!("     known discrepancy in the printed data: {why}");
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: known-red set {:?} unchanged", KNOWN_RED.iter().map(|k| k.0).collect::<Vec<_>>());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
