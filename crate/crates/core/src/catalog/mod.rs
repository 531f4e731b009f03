//! Operators, parameter tables and stated pullbacks, with per-entry checks.
//!
//! The data lives in `data/` as plain operator text (one operator per file)
//! plus `index.toml`; everything is bundled at compile time.

pub mod families;
pub mod verify;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use families::{
    apply_corrections, build_case, case_errata, case_x_scale, corrected_case_pullback, family_row,
    family_table, stated_case_pullback, third_order, Family, FamilyParams,
};
pub use verify::{same_ode, verify_all, verify_entry, Check, CheckStatus, VerifyReport};

use crate::error::{Error, Result};
use crate::operator::{parse_operator, ThetaOperator};
use crate::sequences::SequenceId;

const INDEX: &str = include_str!("../../data/index.toml");

const FILES: &[(&str, &str)] = &[
    ("32.op", include_str!("../../data/32.op")),
    ("32-pullback.op", include_str!("../../data/32-pullback.op")),
    ("11t.op", include_str!("../../data/11t.op")),
    ("11t-pullback.op", include_str!("../../data/11t-pullback.op")),
    ("60.op", include_str!("../../data/60.op")),
    ("60-pullback.op", include_str!("../../data/60-pullback.op")),
    ("189.op", include_str!("../../data/189.op")),
    ("189-pullback.op", include_str!("../../data/189-pullback.op")),
    ("244.op", include_str!("../../data/244.op")),
    ("244-pullback.op", include_str!("../../data/244-pullback.op")),
    ("245.op", include_str!("../../data/245.op")),
    ("245-pullback.op", include_str!("../../data/245-pullback.op")),
    ("253.op", include_str!("../../data/253.op")),
    ("253-ordinary.op", include_str!("../../data/253-ordinary.op")),
    ("255.op", include_str!("../../data/255.op")),
    ("255-pullback.op", include_str!("../../data/255-pullback.op")),
    ("281.op", include_str!("../../data/281.op")),
    ("281-pullback.op", include_str!("../../data/281-pullback.op")),
    ("130.op", include_str!("../../data/130.op")),
    ("130-pullback.op", include_str!("../../data/130-pullback.op")),
    ("188.op", include_str!("../../data/188.op")),
    ("188-pullback.op", include_str!("../../data/188-pullback.op")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PullbackKind {
    YifanYang,
    OrdinaryDataOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub quintic: ThetaOperator,
    /// The pullback as printed.
    pub stated_pullback: Option<ThetaOperator>,
    /// The printed pullback after documented corrections, when it needs any.
    pub corrected_pullback: Option<ThetaOperator>,
    pub pullback_kind: PullbackKind,
    pub closed_forms: Vec<SequenceId>,
    pub errata: Vec<String>,
}

impl CatalogEntry {
    pub fn is_case(&self) -> bool {
        self.id.starts_with("case")
    }

    /// The quartic the quintic is expected to produce: the corrected display
    /// when there is one, the printed one otherwise.
    pub fn expected_pullback(&self) -> Option<&ThetaOperator> {
        self.corrected_pullback.as_ref().or(self.stated_pullback.as_ref())
    }
}

#[derive(Deserialize)]
struct IndexDoc {
    entry: Vec<IndexEntry>,
}

#[derive(Deserialize)]
struct IndexEntry {
    id: String,
    quintic: String,
    pullback: Option<String>,
    pullback_kind: PullbackKind,
    #[serde(default)]
    pullback_corrections: Vec<(String, String)>,
    #[serde(default)]
    closed_forms: Vec<String>,
    #[serde(default)]
    errata: Vec<String>,
}

/// Data file contents with `#` comment lines removed.
pub fn data_file(name: &str) -> Result<String> {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Catalog(format!("missing data file {name}")))?;
    Ok(strip_comments(text))
}

pub fn strip_comments(text: &str) -> String {
    text.lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_text(name: &str, text: &str) -> Result<ThetaOperator> {
    parse_operator(text).map_err(|e| Error::Catalog(format!("{name}: {e}")))
}

fn parse_file(name: &str) -> Result<ThetaOperator> {
    parse_text(name, &data_file(name)?)
}

#[derive(Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn load() -> Result<Self> {
        let doc: IndexDoc = toml::from_str(INDEX).map_err(|e| Error::Catalog(e.to_string()))?;
        let mut entries = Vec::new();
        for e in doc.entry {
            let closed_forms: Vec<SequenceId> =
                e.closed_forms.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            let mut errata = e.errata;
            errata.extend(closed_forms.iter().filter_map(|s| s.erratum()).map(|t| t.to_string()));
            let corrected_pullback = match (&e.pullback, e.pullback_corrections.is_empty()) {
                (Some(f), false) => {
                    Some(parse_text(f, &apply_corrections(&data_file(f)?, &e.pullback_corrections)?)?)
                }
                _ => None,
            };
            entries.push(CatalogEntry {
                quintic: parse_file(&e.quintic)?,
                stated_pullback: e.pullback.as_deref().map(parse_file).transpose()?,
                corrected_pullback,
                id: e.id,
                pullback_kind: e.pullback_kind,
                closed_forms,
                errata,
            });
        }
        for family in Family::ALL {
            for row in family_table() {
                entries.push(CatalogEntry {
                    id: format!("case{family}:{}", row.name),
                    quintic: build_case(family, &row.a, &row.b, &row.c)?,
                    stated_pullback: Some(stated_case_pullback(family, &row.a, &row.b, &row.c)?),
                    corrected_pullback: Some(corrected_case_pullback(family, &row.a, &row.b, &row.c)?),
                    pullback_kind: PullbackKind::YifanYang,
                    closed_forms: Vec::new(),
                    errata: case_errata(family),
                });
            }
        }
        for (i, e) in entries.iter().enumerate() {
            if entries[..i].iter().any(|f| f.id == e.id) {
                return Err(Error::Catalog(format!("duplicate id {}", e.id)));
            }
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.id.as_str())
    }

    pub fn get(&self, id: &str) -> Result<&CatalogEntry> {
        let id = id.trim_start_matches('#');
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }
}

/// The bundled catalog, parsed once.
pub fn catalog() -> &'static Catalog {
    static CELL: OnceLock<Catalog> = OnceLock::new();
    CELL.get_or_init(|| Catalog::load().expect("bundled catalog data is valid"))
}

pub fn get_entry(id: &str) -> Result<&'static CatalogEntry> {
    catalog().get(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::indicial_is_mum;

    #[test]
    fn loads_all_entries() {
        let c = catalog();
        assert_eq!(c.entries().len(), 11 + 40);
        for e in c.entries() {
            assert!(indicial_is_mum(&e.quintic), "{}", e.id);
            assert_eq!(e.quintic.order(), 5, "{}", e.id);
        }
        assert!(get_entry("99").is_err());
    }

    #[test]
    fn entry_metadata() {
        assert_eq!(get_entry("253").unwrap().pullback_kind, PullbackKind::OrdinaryDataOnly);
        assert_eq!(get_entry("~11").unwrap().stated_pullback.as_ref().unwrap().degree(), 2);
        assert_eq!(get_entry("#32").unwrap().quintic.degree(), 2);
        assert_eq!(get_entry("130").unwrap().quintic.degree(), 3);
        assert!(get_entry("255").unwrap().errata.iter().any(|e| e.contains("-132")));
        assert!(get_entry("caseB:theta").is_ok());
    }

    #[test]
    fn json_roundtrip() {
        for e in catalog().entries() {
            let ops = [Some(&e.quintic), e.stated_pullback.as_ref(), e.corrected_pullback.as_ref()];
            for op in ops.into_iter().flatten() {
                let doc = serde_json::to_string(&op.to_json()).unwrap();
                let back = ThetaOperator::from_json(&serde_json::from_str(&doc).unwrap()).unwrap();
                assert_eq!(&back, op, "{}", e.id);
            }
        }
    }
}
