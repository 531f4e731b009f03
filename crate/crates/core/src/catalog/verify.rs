use rayon::prelude::*;
use serde::Serialize;

use super::{catalog, CatalogEntry, PullbackKind};
use crate::algebra::{format_rational, Rational};
use crate::cy::{cy2_order4, cy2_order5};
use crate::error::Result;
use crate::frobenius::frobenius_basis;
use crate::operator::{indicial_is_mum, theta_to_d, ThetaOperator};
use crate::pullback::yy_pullback_normalized;
use crate::sequences::{closed_form, Reading, SequenceId};

/// Closed forms are compared with `y_0` for `n ≤ CLOSED_FORM_RANGE`.
pub const CLOSED_FORM_RANGE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    /// A documented discrepancy reproduced as expected.
    Erratum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }

    fn verdict(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Check::new(name, status, detail)
    }

    fn error(name: impl Into<String>, e: crate::Error) -> Self {
        Check::new(name, CheckStatus::Fail, e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub errata: Vec<String>,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn cy2_check(name: &str, op: &ThetaOperator, order: usize) -> Check {
    let verdict = theta_to_d(op).and_then(|d| if order == 4 { cy2_order4(&d) } else { cy2_order5(&d) });
    match verdict {
        Ok(v) if v.holds => Check::new(name, CheckStatus::Pass, "residual 0"),
        Ok(v) => {
            let r = v.residual.to_string();
            let detail = if r.len() > 160 { "residual nonzero".to_string() } else { format!("residual {r}") };
            Check::new(name, CheckStatus::Fail, detail)
        }
        Err(e) => Check::error(name, e),
    }
}

/// Same ODE: equal monic D-forms, so common polynomial factors do not matter.
pub fn same_ode(a: &ThetaOperator, b: &ThetaOperator) -> Result<bool> {
    Ok(theta_to_d(a)? == theta_to_d(b)?)
}

fn pullback_check(entry: &CatalogEntry) -> Check {
    let name = "pullback-match";
    let Some(stated) = &entry.stated_pullback else {
        return Check::new(name, CheckStatus::Skipped, "no stated pullback");
    };
    if entry.pullback_kind == PullbackKind::OrdinaryDataOnly {
        return Check::new(name, CheckStatus::Skipped, "stated pullback is the ordinary one (data only)");
    }
    let computed = match yy_pullback_normalized(&entry.quintic) {
        Ok(pb) => pb.theta_form,
        Err(e) => return Check::error(name, e),
    };
    match same_ode(&computed, stated) {
        Ok(true) => return Check::new(name, CheckStatus::Pass, "same monic D-form as printed"),
        Ok(false) => {}
        Err(e) => return Check::error(name, e),
    }
    let printed = format!("printed display differs: computed {}", computed.mum_normalized());
    match entry.corrected_pullback.as_ref().map(|c| same_ode(&computed, c)) {
        Some(Ok(true)) => Check::new(name, CheckStatus::Erratum, format!("{printed}; matches the corrected display")),
        Some(Err(e)) => Check::error(name, e),
        _ => Check::new(name, CheckStatus::Fail, printed),
    }
}

fn first_mismatch(got: &[Rational], want: &[Rational]) -> Option<(usize, String, String)> {
    got.iter()
        .zip(want)
        .enumerate()
        .find(|(_, (g, w))| g != w)
        .map(|(n, (g, w))| (n, format_rational(g), format_rational(w)))
}

fn closed_form_checks(entry: &CatalogEntry, y0: &[Rational], out: &mut Vec<Check>) {
    let eval = |id: SequenceId, reading: Reading| -> Result<Vec<Rational>> {
        (0..y0.len()).map(|n| closed_form(id, n as i64, reading)).collect()
    };
    for &id in &entry.closed_forms {
        let name = format!("closed-form:{id}");
        match eval(id, Reading::OperatorValidated) {
            Ok(v) => match first_mismatch(&v, y0) {
                None => out.push(Check::new(name, CheckStatus::Pass, format!("equal to y0 for n <= {}", y0.len() - 1))),
                Some((n, g, w)) => out.push(Check::new(name, CheckStatus::Fail, format!("n = {n}: {g} vs y0 {w}"))),
            },
            Err(e) => out.push(Check::error(name, e)),
        }
        if id.erratum().is_none() {
            continue;
        }
        let name = format!("closed-form-as-printed:{id}");
        match eval(id, Reading::AsPrinted) {
            Ok(v) => match first_mismatch(&v, y0) {
                Some((n, g, w)) => out.push(Check::new(name, CheckStatus::Erratum, format!("n = {n}: {g} vs y0 {w}"))),
                None => out.push(Check::new(name, CheckStatus::Fail, "documented erratum not reproduced")),
            },
            Err(e) => out.push(Check::error(name, e)),
        }
    }
}

fn run_checks(entry: &CatalogEntry) -> VerifyReport {
    let mut checks = vec![Check::verdict(
        "mum-quintic",
        indicial_is_mum(&entry.quintic),
        format!("x^0 part {}", entry.quintic.part(0).display_in("T")),
    )];
    checks.push(cy2_check("cy2-quintic", &entry.quintic, 5));
    checks.push(pullback_check(entry));
    match entry.expected_pullback() {
        Some(pb) => {
            checks.push(Check::verdict(
                "mum-quartic",
                indicial_is_mum(pb),
                format!("x^0 part {}", pb.part(0).display_in("T")),
            ));
            checks.push(cy2_check("cy2-quartic", pb, 4));
        }
        None => checks.push(Check::new("cy2-quartic", CheckStatus::Skipped, "no stated pullback")),
    }
    if let (Some(_), Some(printed)) = (&entry.corrected_pullback, &entry.stated_pullback) {
        let mut c = cy2_check("cy2-quartic-as-printed", printed, 4);
        if c.status == CheckStatus::Fail {
            c.status = CheckStatus::Erratum;
        }
        checks.push(c);
    }
    if !entry.closed_forms.is_empty() {
        match frobenius_basis(&entry.quintic, CLOSED_FORM_RANGE) {
            Ok(b) => closed_form_checks(entry, b.analytic().coeffs(), &mut checks),
            Err(e) => checks.push(Check::error("closed-form", e)),
        }
    }
    VerifyReport {
        id: entry.id.clone(),
        passed: checks.iter().all(|c| c.status != CheckStatus::Fail),
        checks,
        errata: entry.errata.clone(),
    }
}

pub fn verify_entry(id: &str) -> Result<VerifyReport> {
    Ok(run_checks(catalog().get(id)?))
}

/// Reports for `ids` (all entries when empty), in the order given.
pub fn verify_all(ids: &[String], parallel: bool) -> Result<Vec<VerifyReport>> {
    let entries: Vec<&CatalogEntry> = if ids.is_empty() {
        catalog().entries().iter().collect()
    } else {
        ids.iter().map(|id| catalog().get(id)).collect::<Result<_>>()?
    };
    Ok(if parallel {
        entries.par_iter().map(|e| run_checks(e)).collect()
    } else {
        entries.iter().map(|e| run_checks(e)).collect()
    })
}
