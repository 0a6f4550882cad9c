//! Table rendering: rows are streets `n`, each split into `l` blocks and
//! `j` sub-blocks, with `m` ascending inside a sub-block.

use std::fmt::Write as _;
use std::str::FromStr;

use atlas_core::chemistry::series_of_shell;
use atlas_core::{Column, FamilyLabel, HouseAddress, ShellAddress};
use serde::Serialize;

use crate::dataset::ElementDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format `{other}` (expected ascii, csv or json)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Annotations {
    pub families: bool,
    pub series: bool,
    pub status: bool,
}

impl FromStr for Annotations {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Annotations::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            match item {
                "families" | "family" => out.families = true,
                "series" => out.series = true,
                "status" => out.status = true,
                other => {
                    return Err(format!(
                        "unknown annotation `{other}` (expected families, series, status)"
                    ))
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub max_row_n: u32,
    pub format: Format,
    pub annotate: Annotations,
}

impl RenderSpec {
    pub fn new(max_row_n: u32, format: Format, annotate: Annotations) -> Result<Self, String> {
        if max_row_n == 0 {
            return Err("at least one row must be rendered".into());
        }
        if max_row_n > atlas_core::MAX_PRINCIPAL {
            return Err(format!("row count {max_row_n} is too large"));
        }
        Ok(Self {
            max_row_n,
            format,
            annotate,
        })
    }
}

/// One cell of the csv/json encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    pub z: u64,
    pub n: u32,
    pub l: u32,
    pub two_j: u32,
    pub two_m: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

fn family_tag(house: &HouseAddress) -> String {
    match FamilyLabel::for_column(Column::of(house)) {
        FamilyLabel::OtherColumn(c) => format!("column({},{},{})", c.l, c.two_j, c.two_m),
        named => named.to_string(),
    }
}

fn record(house: &HouseAddress, annotate: Annotations, ds: &ElementDataset) -> CellRecord {
    let z = house.z();
    CellRecord {
        z,
        n: house.n(),
        l: house.l(),
        two_j: house.two_j(),
        two_m: house.two_m(),
        symbol: ds.symbol(z).map(str::to_owned),
        family: annotate.families.then(|| family_tag(house)),
        series: if annotate.series {
            series_of_shell(house.shell()).name().map(str::to_owned)
        } else {
            None
        },
        status: annotate.status.then(|| ds.status_of(z).as_str().to_owned()),
    }
}

fn row_shells(n: u32) -> impl Iterator<Item = ShellAddress> {
    (0..n).map(move |l| ShellAddress::new(n, l).expect("l below n"))
}

/// Every cell of rows `1..=max_row_n`, in table order.
pub fn cell_records(spec: &RenderSpec, ds: &ElementDataset) -> Vec<CellRecord> {
    (1..=spec.max_row_n)
        .flat_map(row_shells)
        .flat_map(|shell| shell.houses().collect::<Vec<_>>())
        .map(|house| record(&house, spec.annotate, ds))
        .collect()
}

pub fn render_table(spec: &RenderSpec, ds: &ElementDataset) -> String {
    match spec.format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&cell_records(spec, ds))
                .expect("cell records serialize");
            out.push('\n');
            out
        }
        Format::Csv => render_csv(spec, ds),
        Format::Ascii => render_ascii(spec, ds),
    }
}

fn render_csv(spec: &RenderSpec, ds: &ElementDataset) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["z", "n", "l", "two_j", "two_m", "symbol"];
    let a = spec.annotate;
    if a.families {
        header.push("family");
    }
    if a.series {
        header.push("series");
    }
    if a.status {
        header.push("status");
    }
    writer.write_record(&header).expect("in-memory write");
    for cell in cell_records(spec, ds) {
        let mut row = vec![
            cell.z.to_string(),
            cell.n.to_string(),
            cell.l.to_string(),
            cell.two_j.to_string(),
            cell.two_m.to_string(),
            cell.symbol.unwrap_or_default(),
        ];
        if a.families {
            row.push(cell.family.unwrap_or_default());
        }
        if a.series {
            row.push(cell.series.unwrap_or_default());
        }
        if a.status {
            row.push(cell.status.unwrap_or_default());
        }
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8 input")
}

fn status_mark(z: u64, ds: &ElementDataset) -> char {
    match ds.status_of(z) {
        crate::dataset::Status::Named => ' ',
        crate::dataset::Status::ObservedUnnamed => '*',
        crate::dataset::Status::Unobserved => '?',
    }
}

// One line per j sub-block; long rows break by block.
fn render_ascii(spec: &RenderSpec, ds: &ElementDataset) -> String {
    let a = spec.annotate;
    let mut out = String::new();
    if a.status {
        out.push_str("# status: * observed, unnamed   ? not observed\n");
    }
    for n in 1..=spec.max_row_n {
        let _ = writeln!(out, "n={n}  ({} houses)", 2 * u64::from(n) * u64::from(n));
        for shell in row_shells(n) {
            let houses: Vec<HouseAddress> = shell.houses().collect();
            let split = houses.partition_point(|h| !h.is_upper_sub_block());
            for (i, sub) in [&houses[..split], &houses[split..]].into_iter().enumerate() {
                let Some(first) = sub.first() else { continue };
                let label = if i == 0 || split == 0 {
                    shell.to_string()
                } else {
                    String::new()
                };
                let _ = write!(out, "  {label:<7} j={:>2}/2 |", first.two_j());
                for house in sub {
                    let z = house.z();
                    let symbol = ds.symbol(z).unwrap_or("");
                    let _ = write!(out, " {z:>4} {symbol:<3}");
                    if a.status {
                        out.push(status_mark(z, ds));
                    }
                }
                let mut notes = Vec::new();
                if a.series && (i == 0 || split == 0) {
                    if let Some(name) = series_of_shell(shell).name() {
                        notes.push(name.to_owned());
                    }
                }
                if a.families {
                    notes.extend(
                        sub.iter()
                            .filter_map(|h| FamilyLabel::for_column(Column::of(h)).name())
                            .map(str::to_owned),
                    );
                }
                if !notes.is_empty() {
                    let _ = write!(out, "  [{}]", notes.join(", "));
                }
                out.truncate(out.trim_end_matches(' ').len());
                out.push('\n');
            }
        }
    }
    out
}
