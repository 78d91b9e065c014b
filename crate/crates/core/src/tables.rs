//! Regeneration of the prime and composite reference tables, and a diff
//! engine against the bundled transcriptions.
//!
//! The bundled files reproduce the printed tables as-is, errors included.
//! Known misprints are listed separately in `data/anomalies.tsv`; the diff
//! flags rows on that list and leaves them out of the pass/fail maximum.
//! Rows are matched on `n`, never on the printed index, because the
//! composite table reuses index 80.

use crate::character::{chi_primes, CharacterAssignment};
use crate::fmt::fixed;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub const PRIME_TOL: f64 = 5e-9;
pub const COMPOSITE_TOL: f64 = 5e-8;

/// Row count of the printed prime table.
pub const PRIME_TABLE_COUNT: usize = 180;
/// Largest entry of the printed composite table (its heading says "less than
/// 121" but the table includes 121).
pub const COMPOSITE_TABLE_LIMIT: u64 = 121;

pub const PRIME_TABLE_FILE: &str = "prime_table.tsv";
pub const COMPOSITE_TABLE_FILE: &str = "composite_table.tsv";
pub const ANOMALIES_FILE: &str = "anomalies.tsv";

const BUNDLED_PRIME_TABLE: &str = include_str!("../data/prime_table.tsv");
const BUNDLED_COMPOSITE_TABLE: &str = include_str!("../data/composite_table.tsv");
const BUNDLED_ANOMALIES: &str = include_str!("../data/anomalies.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Prime,
    Composite,
}

impl TableKind {
    pub fn tolerance(self) -> f64 {
        match self {
            TableKind::Prime => PRIME_TOL,
            TableKind::Composite => COMPOSITE_TOL,
        }
    }

    pub fn reference_file(self) -> &'static str {
        match self {
            TableKind::Prime => PRIME_TABLE_FILE,
            TableKind::Composite => COMPOSITE_TABLE_FILE,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Prime => "prime",
            TableKind::Composite => "composite",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" | "primes" => Ok(TableKind::Prime),
            "composite" | "composites" => Ok(TableKind::Composite),
            other => Err(Error::Parse(format!("unknown table kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub kind: TableKind,
    pub index: u64,
    pub n: u64,
    pub re: f64,
    pub im: f64,
}

impl TableRow {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

pub fn generate_prime_table(count: usize) -> Result<Vec<TableRow>> {
    if count == 0 {
        return Err(Error::OutOfDomain {
            what: "prime table count",
            detail: "need at least one row".into(),
        });
    }
    Ok(chi_primes(count)?
        .into_iter()
        .map(|e| TableRow {
            kind: TableKind::Prime,
            index: e.index,
            n: e.prime,
            re: e.chi.re,
            im: e.chi.im,
        })
        .collect())
}

/// One row per composite `4 <= c <= limit`, indexed 1, 2, ...
pub fn generate_composite_table(limit: u64) -> Result<Vec<TableRow>> {
    if limit < 4 {
        return Err(Error::OutOfDomain {
            what: "composite table limit",
            detail: format!("must be at least 4; got {limit}"),
        });
    }
    let assignment = CharacterAssignment::new(limit as usize)?;
    Ok((4..=limit)
        .filter(|&c| !assignment.is_prime(c))
        .enumerate()
        .map(|(i, c)| {
            let z = assignment.get(c).expect("c <= limit");
            TableRow {
                kind: TableKind::Composite,
                index: i as u64 + 1,
                n: c,
                re: z.re,
                im: z.im,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Re,
    Im,
    Index,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Re => "re",
            Field::Im => "im",
            Field::Index => "index",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "re" => Ok(Field::Re),
            "im" => Ok(Field::Im),
            "index" => Ok(Field::Index),
            other => Err(Error::Parse(format!("unknown field `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnomalyCategory {
    /// Sign of a component flipped.
    Sign,
    /// Digits dropped or truncated.
    Digits,
    /// Stray characters in the printed number.
    Format,
    /// Printed value disagrees with the formula beyond printing effects.
    Value,
    /// Row numbering error.
    Numbering,
}

impl AnomalyCategory {
    /// Printing artefacts, as opposed to wrong values.
    pub fn is_typographical(self) -> bool {
        matches!(self, Self::Digits | Self::Format | Self::Numbering)
    }
}

impl FromStr for AnomalyCategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sign" => Ok(Self::Sign),
            "digits" => Ok(Self::Digits),
            "format" => Ok(Self::Format),
            "value" => Ok(Self::Value),
            "numbering" => Ok(Self::Numbering),
            other => Err(Error::Parse(format!("unknown anomaly category `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Anomaly {
    pub kind: TableKind,
    pub n: u64,
    pub field: Field,
    pub category: AnomalyCategory,
    pub printed: String,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct AnomalyList {
    entries: Vec<Anomaly>,
}

impl AnomalyList {
    pub fn new(entries: Vec<Anomaly>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[Anomaly] {
        &self.entries
    }

    pub fn find(&self, kind: TableKind, n: u64, field: Field) -> Option<&Anomaly> {
        self.entries
            .iter()
            .find(|a| a.kind == kind && a.n == n && a.field == field)
    }

    /// Keeps only entries matching `keep`.
    pub fn filtered(&self, keep: impl Fn(&Anomaly) -> bool) -> Self {
        Self::new(self.entries.iter().filter(|a| keep(a)).cloned().collect())
    }

    pub fn parse_tsv(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            kind: String,
            n: u64,
            field: String,
            category: String,
            printed: String,
            note: String,
        }
        let mut reader = tsv_reader(text);
        let mut entries = Vec::new();
        for raw in reader.deserialize::<Raw>() {
            let raw = raw?;
            entries.push(Anomaly {
                kind: raw.kind.parse()?,
                n: raw.n,
                field: raw.field.parse()?,
                category: raw.category.parse()?,
                printed: raw.printed,
                note: raw.note,
            });
        }
        Ok(Self { entries })
    }

    pub fn bundled() -> Self {
        Self::parse_tsv(BUNDLED_ANOMALIES).expect("bundled anomaly list parses")
    }

    pub fn load(dir: &Path) -> Result<Self> {
        Self::parse_tsv(&std::fs::read_to_string(dir.join(ANOMALIES_FILE))?)
    }
}

fn tsv_reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .has_headers(true)
        .from_reader(text.as_bytes())
}

/// Parses a reference table in the rendered TSV layout.
pub fn parse_table_tsv(text: &str, kind: TableKind) -> Result<Vec<TableRow>> {
    #[derive(Deserialize)]
    struct Raw {
        index: u64,
        n: u64,
        re: f64,
        im: f64,
    }
    tsv_reader(text)
        .deserialize::<Raw>()
        .map(|r| {
            let r = r?;
            Ok(TableRow {
                kind,
                index: r.index,
                n: r.n,
                re: r.re,
                im: r.im,
            })
        })
        .collect()
}

pub fn bundled_reference(kind: TableKind) -> Vec<TableRow> {
    let text = match kind {
        TableKind::Prime => BUNDLED_PRIME_TABLE,
        TableKind::Composite => BUNDLED_COMPOSITE_TABLE,
    };
    parse_table_tsv(text, kind).expect("bundled reference table parses")
}

pub fn load_reference(dir: &Path, kind: TableKind) -> Result<Vec<TableRow>> {
    parse_table_tsv(&std::fs::read_to_string(dir.join(kind.reference_file()))?, kind)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiffRow {
    pub index: u64,
    pub n: u64,
    pub field: Field,
    pub expected: f64,
    pub computed: f64,
    pub delta: f64,
    pub known_anomaly: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiffReport {
    pub kind: TableKind,
    pub tol: f64,
    pub rows: Vec<DiffRow>,
    pub max_delta_excluding_anomalies: f64,
}

impl DiffReport {
    pub fn passes(&self) -> bool {
        self.max_delta_excluding_anomalies < self.tol
    }

    pub fn anomalies(&self) -> impl Iterator<Item = &DiffRow> {
        self.rows.iter().filter(|r| r.known_anomaly)
    }

    /// Rows above the tolerance that are not on the anomaly list.
    pub fn failures(&self) -> impl Iterator<Item = &DiffRow> {
        self.rows.iter().filter(|r| !r.known_anomaly && !(r.delta < self.tol))
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} table: {} components compared, max delta excluding anomalies {:.3e} (tol {:.1e}): {}\n",
            self.kind,
            self.rows.len(),
            self.max_delta_excluding_anomalies,
            self.tol,
            if self.passes() { "PASS" } else { "FAIL" }
        );
        let anomalies: Vec<_> = self.anomalies().collect();
        out.push_str(&format!("known anomalies: {}\n", anomalies.len()));
        for r in anomalies {
            out.push_str(&format!(
                "  anomaly n={} index={} {}: printed {} computed {} delta {:.3e}\n",
                r.n,
                r.index,
                r.field,
                fixed(r.expected),
                fixed(r.computed),
                r.delta
            ));
        }
        for r in self.failures() {
            out.push_str(&format!(
                "  MISMATCH n={} index={} {}: printed {} computed {} delta {:.3e}\n",
                r.n,
                r.index,
                r.field,
                fixed(r.expected),
                fixed(r.computed),
                r.delta
            ));
        }
        out
    }
}

/// Compares `generated` against `reference` component by component.
pub fn diff_against_reference(
    generated: &[TableRow],
    reference: &[TableRow],
    anomalies: &AnomalyList,
    tol: f64,
) -> Result<DiffReport> {
    if !(tol > 0.0) {
        return Err(Error::OutOfDomain {
            what: "tolerance",
            detail: format!("must be positive; got {tol}"),
        });
    }
    let kind = match (generated.first(), reference.first()) {
        (Some(g), _) => g.kind,
        (None, Some(r)) => r.kind,
        (None, None) => TableKind::Prime,
    };
    if let Some(bad) = generated.iter().chain(reference).find(|r| r.kind != kind) {
        return Err(Error::KindMismatch(format!(
            "expected {kind} rows, found a {} row (n = {})",
            bad.kind, bad.n
        )));
    }
    let by_n: BTreeMap<u64, &TableRow> = generated.iter().map(|r| (r.n, r)).collect();
    let reference_ns: BTreeMap<u64, &TableRow> = reference.iter().map(|r| (r.n, r)).collect();
    let missing: Vec<u64> = reference_ns.keys().filter(|n| !by_n.contains_key(n)).copied().collect();
    let extra: Vec<u64> = by_n.keys().filter(|n| !reference_ns.contains_key(n)).copied().collect();
    if !missing.is_empty() || !extra.is_empty() || generated.len() != reference.len() {
        return Err(Error::RowMismatch { missing, extra });
    }

    let mut rows = Vec::with_capacity(2 * reference.len());
    let mut max_delta = 0.0f64;
    for (n, expected) in reference_ns {
        let computed = by_n[&n];
        for (field, e, c) in [
            (Field::Re, expected.re, computed.re),
            (Field::Im, expected.im, computed.im),
        ] {
            let delta = (e - c).abs();
            let known_anomaly = anomalies.find(kind, n, field).is_some();
            if !known_anomaly {
                max_delta = max_delta.max(delta);
            }
            rows.push(DiffRow {
                index: computed.index,
                n,
                field,
                expected: e,
                computed: c,
                delta,
                known_anomaly,
            });
        }
    }
    Ok(DiffReport {
        kind,
        tol,
        rows,
        max_delta_excluding_anomalies: max_delta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Deterministic text rendering; reals at 10 decimals.
pub fn render(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Tsv | Format::Csv => {
            let sep = if format == Format::Tsv { '\t' } else { ',' };
            let mut out = format!("index{sep}n{sep}re{sep}im\n");
            for r in rows {
                out.push_str(&format!(
                    "{}{sep}{}{sep}{}{sep}{}\n",
                    r.index,
                    r.n,
                    fixed(r.re),
                    fixed(r.im)
                ));
            }
            out
        }
        Format::Json => {
            let body: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "  {{\"kind\": \"{}\", \"index\": {}, \"n\": {}, \"re\": {}, \"im\": {}}}",
                        r.kind,
                        r.index,
                        r.n,
                        fixed(r.re),
                        fixed(r.im)
                    )
                })
                .collect();
            if body.is_empty() {
                "[]\n".to_string()
            } else {
                format!("[\n{}\n]\n", body.join(",\n"))
            }
        }
    }
}

pub fn parse_json(text: &str) -> Result<Vec<TableRow>> {
    Ok(serde_json::from_str(text)?)
}
