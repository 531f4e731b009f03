//! Argument handling and command execution for the `cyop` binary.

use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cyop::algebra::{format_rational, Rational};
use cyop::catalog::{catalog, strip_comments, verify_all, CheckStatus};
use cyop::cy::{cy2_order4, cy2_order5};
use cyop::frobenius::{frobenius_basis, instantons_of_operator, mirror_map, yukawa};
use cyop::operator::{parse_operator, theta_to_d, ThetaOperator};
use cyop::pullback::yy_pullback_normalized;
use cyop::sequences::{closed_form, constant_term_power, zeta4_error, Reading, SequenceId};
use cyop::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cyop", version, about = "Exact tools for Calabi-Yau differential operators")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the C-Y2 condition.
    Cy2 {
        target: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=5))]
        order: Option<u8>,
    },
    /// Yifan Yang pullback of a quintic, normalized to θ-form.
    Pullback {
        target: String,
        /// Also print the monic D-form coefficients c3 … c0.
        #[arg(long)]
        raw_c: bool,
    },
    /// Frobenius basis at x = 0.
    Frobenius {
        target: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Mirror map and Yukawa coupling.
    Mirror {
        target: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Instanton numbers N_1 … N_K.
    Instantons {
        target: String,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Closed-form sequence value A_n.
    Seq {
        id: String,
        #[arg(short = 'n')]
        n: i64,
        /// Evaluate flagged formulas literally.
        #[arg(long)]
        as_printed: bool,
    },
    /// Constant term of S^{2n}.
    Ct188 {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Error of the n-th ζ(4) approximant.
    Zeta4 {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 50)]
        digits: usize,
    },
    /// Run the catalog checks.
    Verify {
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        ids: Vec<String>,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub code: i32,
    pub text: String,
    pub json: Option<Value>,
    pub warnings: Vec<String>,
}

impl CommandResult {
    fn new(code: i32, text: String, json: Value) -> Self {
        CommandResult {
            code,
            text,
            json: Some(json),
            warnings: Vec::new(),
        }
    }

    fn usage(msg: String) -> Self {
        CommandResult {
            code: EXIT_USAGE,
            text: msg,
            json: None,
            warnings: Vec::new(),
        }
    }

    /// What goes to stdout.
    pub fn stdout(&self, as_json: bool) -> String {
        match (&self.json, as_json) {
            (Some(v), true) => serde_json::to_string_pretty(v).expect("JSON value serializes"),
            _ => self.text.clone(),
        }
    }
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn fail(e: Error) -> CommandResult {
    let code = match e {
        Error::Parse { .. } | Error::UnknownId(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    };
    CommandResult {
        code,
        text: format!("error: {e}"),
        json: Some(json!({ "error": e.to_string() })),
        warnings: Vec::new(),
    }
}

/// `<id>` is a catalog quintic, `<id>/pullback` its stated quartic; anything
/// else is a file path or, failing that, operator text.
pub fn resolve(target: &str) -> Result<ThetaOperator, Error> {
    if let Some(id) = target.strip_suffix("/pullback") {
        if let Ok(e) = catalog().get(id) {
            return e
                .stated_pullback
                .clone()
                .ok_or_else(|| Error::Invalid(format!("{id} has no stated pullback")));
        }
    }
    if let Ok(e) = catalog().get(target) {
        return Ok(e.quintic.clone());
    }
    let path = Path::new(target);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{target}: {e}")))?;
        return parse_operator(&strip_comments(&text));
    }
    if target.contains('T') || target.contains('θ') {
        return parse_operator(target);
    }
    Err(Error::UnknownId(target.to_string()))
}

pub fn run_command<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli.command).unwrap_or_else(fail),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            CommandResult::usage(e.render().to_string()).with_code(code)
        }
    }
}

impl CommandResult {
    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

pub fn execute(cmd: &Command) -> Result<CommandResult, Error> {
    match cmd {
        Command::Cy2 { target, order } => cmd_cy2(target, *order),
        Command::Pullback { target, raw_c } => cmd_pullback(target, *raw_c),
        Command::Frobenius { target, n } => cmd_frobenius(target, *n),
        Command::Mirror { target, n } => cmd_mirror(target, *n),
        Command::Instantons { target, k } => cmd_instantons(target, *k),
        Command::Seq { id, n, as_printed } => cmd_seq(id, *n, *as_printed),
        Command::Ct188 { n } => cmd_ct188(*n),
        Command::Zeta4 { n, digits } => cmd_zeta4(*n, *digits),
        Command::Verify { all, ids, parallel } => Ok(cmd_verify(*all, ids, *parallel)),
    }
}

fn cmd_cy2(target: &str, order: Option<u8>) -> Result<CommandResult, Error> {
    let op = match order {
        Some(4) if catalog().get(target).is_ok() => resolve(&format!("{target}/pullback"))?,
        _ => resolve(target)?,
    };
    let k = op.order();
    if let Some(o) = order {
        if o as usize != k {
            return Ok(CommandResult::usage(format!(
                "error: --order {o} requested but the operator has order {k}"
            )));
        }
    }
    let d = theta_to_d(&op)?;
    let verdict = match k {
        4 => cy2_order4(&d)?,
        5 => cy2_order5(&d)?,
        _ => return Ok(CommandResult::usage(format!("error: C-Y2 is defined for order 4 or 5, got {k}"))),
    };
    let residual = verdict.residual.to_string();
    let text = if verdict.holds {
        "PASS".to_string()
    } else {
        format!("FAIL\nresidual: {residual}")
    };
    let code = if verdict.holds { EXIT_PASS } else { EXIT_FAIL };
    Ok(CommandResult::new(
        code,
        text,
        json!({ "order": k, "holds": verdict.holds, "residual": residual }),
    ))
}

fn cmd_pullback(target: &str, raw_c: bool) -> Result<CommandResult, Error> {
    let op = resolve(target)?;
    let pb = yy_pullback_normalized(&op)?;
    let mut text = pb.theta_form.to_string();
    let c: Vec<String> = (0..4).map(|i| pb.d_form.coeff(i).to_string()).collect();
    if raw_c {
        for i in (0..4).rev() {
            text.push_str(&format!("\nc{i} = {}", c[i]));
        }
    }
    let mut doc = json!({
        "display": pb.theta_form.to_string(),
        "operator": pb.theta_form.to_json(),
        "degree": pb.theta_form.degree(),
    });
    if raw_c {
        doc["c"] = json!({ "c3": c[3], "c2": c[2], "c1": c[1], "c0": c[0] });
    }
    Ok(CommandResult::new(EXIT_PASS, text, doc))
}

fn cmd_frobenius(target: &str, n: usize) -> Result<CommandResult, Error> {
    let op = resolve(target)?;
    let b = frobenius_basis(&op, n)?;
    let parts: Vec<Vec<String>> = b.tilde_parts().iter().map(|f| rats(f.coeffs())).collect();
    let text = parts
        .iter()
        .enumerate()
        .map(|(i, p)| format!("f{i}: {}", p.join(", ")))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(CommandResult::new(
        EXIT_PASS,
        text,
        json!({ "order": b.order(), "truncation": n, "tilde": parts }),
    ))
}

fn cmd_mirror(target: &str, n: usize) -> Result<CommandResult, Error> {
    let op = resolve(target)?;
    let b = frobenius_basis(&op, n)?;
    let m = mirror_map(&b)?;
    let q = rats(m.q_of_x.coeffs());
    let x = rats(m.x_of_q.coeffs());
    let k = rats(yukawa(&b)?.0.coeffs());
    let text = format!("q(x): {}\nx(q): {}\nK(q): {}", q.join(", "), x.join(", "), k.join(", "));
    Ok(CommandResult::new(
        EXIT_PASS,
        text,
        json!({ "truncation": n, "q_of_x": q, "x_of_q": x, "yukawa": k }),
    ))
}

fn cmd_instantons(target: &str, k: usize) -> Result<CommandResult, Error> {
    let op = resolve(target)?;
    let nk = rats(&instantons_of_operator(&op, k)?.0);
    let text = nk
        .iter()
        .enumerate()
        .map(|(i, v)| format!("N{} = {v}", i + 1))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(CommandResult::new(EXIT_PASS, text, json!({ "kmax": k, "instantons": nk })))
}

fn cmd_seq(id: &str, n: i64, as_printed: bool) -> Result<CommandResult, Error> {
    let sid: SequenceId = id.parse()?;
    let reading = if as_printed { Reading::AsPrinted } else { Reading::OperatorValidated };
    let v = format_rational(&closed_form(sid, n, reading)?);
    let mut r = CommandResult::new(
        EXIT_PASS,
        v.clone(),
        json!({ "id": sid.as_str(), "n": n, "value": v, "as_printed": as_printed }),
    );
    if let Some(note) = sid.erratum() {
        let msg = if as_printed {
            format!("warning: literal reading of #{sid} disagrees with its operator: {note}")
        } else {
            format!("warning: #{sid} uses a corrected reading: {note}")
        };
        r.warnings.push(msg);
    }
    Ok(r)
}

fn cmd_ct188(n: usize) -> Result<CommandResult, Error> {
    let ct = constant_term_power(n);
    let cf = closed_form(SequenceId::S188, n as i64, Reading::OperatorValidated)?;
    let ok = Rational::from_integer(ct.clone()) == cf;
    let text = format!("{ct}\nclosed form #188: {} ({})", format_rational(&cf), if ok { "equal" } else { "DIFFERENT" });
    Ok(CommandResult::new(
        if ok { EXIT_PASS } else { EXIT_FAIL },
        text,
        json!({ "n": n, "constant_term": ct.to_string(), "closed_form": format_rational(&cf), "equal": ok }),
    ))
}

fn cmd_zeta4(n: usize, digits: usize) -> Result<CommandResult, Error> {
    let r = zeta4_error(n, digits)?;
    let text = format!(
        "A_{n} = {}\nB_{n} = {}\nB_{n}/A_{n} = {}\npi^4/90 = {}\nerror = {}",
        r.a_n, r.b_n, r.ratio, r.zeta4, r.error
    );
    let doc = serde_json::to_value(&r).map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(CommandResult::new(EXIT_PASS, text, doc))
}

fn cmd_verify(all: bool, ids: &[String], parallel: bool) -> CommandResult {
    if !all && ids.is_empty() {
        return CommandResult::usage("error: verify needs --all or at least one id".into());
    }
    let reports = match verify_all(ids, parallel) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{}: {}\n", r.id, if r.passed { "PASS" } else { "FAIL" }));
        for c in &r.checks {
            if matches!(c.status, CheckStatus::Fail | CheckStatus::Erratum) {
                let tag = if c.status == CheckStatus::Fail { "FAIL" } else { "ERRATUM" };
                text.push_str(&format!("  {tag} {}: {}\n", c.name, c.detail));
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    text.push_str(&format!("{passed}/{} entries pass", reports.len()));
    let code = if passed == reports.len() { EXIT_PASS } else { EXIT_FAIL };
    let doc = json!({ "passed": passed == reports.len(), "reports": reports });
    CommandResult::new(code, text, doc)
}
