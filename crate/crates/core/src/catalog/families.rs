use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::algebra::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::operator::{parse_operator, ThetaOperator};

const FAMILIES: &str = include_str!("../../data/families.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(format!("family {s}")))
    }
}

/// One row `(a, b, c)` of the table of third-order operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub name: String,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

#[derive(Deserialize)]
struct RowDoc {
    name: String,
    a: String,
    b: String,
    c: String,
}

#[derive(Deserialize)]
struct TemplateDoc {
    quintic: String,
    pullback: String,
    x_scale: String,
    corrections: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct FamiliesDoc {
    third_order: String,
    row: Vec<RowDoc>,
    family: BTreeMap<String, TemplateDoc>,
}

struct Families {
    third_order: String,
    rows: Vec<FamilyParams>,
    templates: BTreeMap<Family, TemplateDoc>,
}

fn load() -> Result<Families> {
    let doc: FamiliesDoc = toml::from_str(FAMILIES).map_err(|e| Error::Catalog(e.to_string()))?;
    let rows = doc
        .row
        .into_iter()
        .map(|r| {
            Ok(FamilyParams {
                name: r.name,
                a: parse_rational(&r.a)?,
                b: parse_rational(&r.b)?,
                c: parse_rational(&r.c)?,
            })
        })
        .collect::<Result<_>>()?;
    let templates = doc
        .family
        .into_iter()
        .map(|(k, v)| Ok((k.parse()?, v)))
        .collect::<Result<_>>()?;
    Ok(Families {
        third_order: doc.third_order,
        rows,
        templates,
    })
}

fn families() -> &'static Families {
    static CELL: OnceLock<Families> = OnceLock::new();
    CELL.get_or_init(|| load().expect("bundled families.toml is valid"))
}

/// The ten rows α … κ.
pub fn family_table() -> &'static [FamilyParams] {
    &families().rows
}

pub fn family_row(name: &str) -> Result<&'static FamilyParams> {
    family_table()
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownId(name.to_string()))
}

fn instantiate(template: &str, a: &Rational, b: &Rational, c: &Rational) -> Result<ThetaOperator> {
    let text = template
        .replace("{a}", &format!("({})", format_rational(a)))
        .replace("{b}", &format!("({})", format_rational(b)))
        .replace("{c}", &format!("({})", format_rational(c)));
    parse_operator(&text)
}

/// `θ³ − x(2θ+1)(aθ²+aθ+b) + cx²(θ+1)³`
pub fn third_order(a: &Rational, b: &Rational, c: &Rational) -> Result<ThetaOperator> {
    instantiate(&families().third_order, a, b, c)
}

pub fn build_case(family: Family, a: &Rational, b: &Rational, c: &Rational) -> Result<ThetaOperator> {
    instantiate(&families().templates[&family].quintic, a, b, c)
}

/// The pullback display exactly as printed.
pub fn stated_case_pullback(family: Family, a: &Rational, b: &Rational, c: &Rational) -> Result<ThetaOperator> {
    instantiate(&families().templates[&family].pullback, a, b, c)
}

/// Applies literal `(printed, corrected)` text replacements.
pub fn apply_corrections(text: &str, corrections: &[(String, String)]) -> Result<String> {
    let mut out = text.to_string();
    for (from, to) in corrections {
        if !out.contains(from.as_str()) {
            return Err(Error::Catalog(format!("correction target {from:?} not found")));
        }
        out = out.replace(from.as_str(), to);
    }
    Ok(out)
}

/// `λ` such that the printed display is written in `x/λ`.
pub fn case_x_scale(family: Family) -> Rational {
    parse_rational(&families().templates[&family].x_scale).expect("valid x_scale")
}

/// The printed display with its corrections applied and `x/λ → x`, i.e. the
/// operator the quintic actually produces.
pub fn corrected_case_pullback(family: Family, a: &Rational, b: &Rational, c: &Rational) -> Result<ThetaOperator> {
    let t = &families().templates[&family];
    let text = apply_corrections(&t.pullback, &t.corrections)?;
    Ok(instantiate(&text, a, b, c)?.rescale_x(&case_x_scale(family)))
}

/// Notes describing how the printed display differs from the computed one.
pub fn case_errata(family: Family) -> Vec<String> {
    let t = &families().templates[&family];
    let mut notes = vec![format!(
        "printed Case {family} pullback is written in the variable x/{}",
        t.x_scale
    )];
    notes.extend(
        t.corrections
            .iter()
            .map(|(from, to)| format!("printed Case {family} pullback has {from}; the computed pullback needs {to}")),
    );
    notes
}
