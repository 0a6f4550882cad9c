//! Subcommand implementations. Each returns the full report text so the
//! binary only has to print it.

use std::fmt::Write as _;

use atlas_core::{
    address_from_z, classify_family, ground_state_configuration, oracle_enumerate,
    series_membership, taxi, z_from_address, AddressError, AtomicNumber, Column, FamilyLabel,
    HouseAddress, LadderError, LadderMove, Series, SubBlock,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::dataset::{DatasetError, ElementDataset};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}", address_error_text(.0))]
    Address(#[from] AddressError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    /// A walk stopped on a rejected move; carries the partial transcript.
    #[error("{transcript}{error}")]
    Walk {
        transcript: String,
        error: LadderError,
    },
    #[error("{report}")]
    VerifyFailed { report: String },
}

fn address_error_text(e: &AddressError) -> String {
    let name = match e {
        AddressError::ZeroAtomicNumber => "ZeroAtomicNumber",
        _ => "InvalidAddress",
    };
    format!("{name}: {e}")
}

fn fraction(two_x: i64) -> String {
    if two_x % 2 == 0 {
        (two_x / 2).to_string()
    } else {
        format!("{two_x}/2")
    }
}

fn describe_house(h: &HouseAddress) -> String {
    format!(
        "(n={}, l={}, j={}, m={})",
        h.n(),
        h.l(),
        fraction(i64::from(h.two_j())),
        fraction(i64::from(h.two_m()))
    )
}

fn label(z: AtomicNumber, ds: &ElementDataset) -> String {
    match ds.get(z) {
        Some(e) => format!("Z={z} {}", e.symbol),
        None => format!("Z={z}"),
    }
}

fn configuration_text(z: AtomicNumber, core: bool, ds: &ElementDataset) -> String {
    let config = ground_state_configuration(z);
    if core {
        config.with_noble_core().render(|core_z| {
            ds.symbol(core_z)
                .map_or(format!("Z={core_z}"), str::to_owned)
        })
    } else {
        config.to_string()
    }
}

/// Full report for one house: address, block, family, series,
/// configuration and status.
pub fn element_report(
    z: AtomicNumber,
    core: bool,
    ds: &ElementDataset,
) -> Result<String, CliError> {
    let house = address_from_z(z)?;
    let family = classify_family(z)?;
    let series = series_membership(z)?;
    let shell = house.shell();
    let (first, last) = shell.z_range();

    let mut out = String::new();
    match ds.get(z) {
        Some(e) => writeln!(out, "Z = {z}  {} ({})", e.symbol, e.name),
        None => writeln!(out, "Z = {z}"),
    }
    .ok();
    let _ = writeln!(
        out,
        "address:       {}  [n={} l={} 2j={} 2m={}]",
        describe_house(&house),
        house.n(),
        house.l(),
        house.two_j(),
        house.two_m()
    );
    let _ = writeln!(out, "block:         {shell}  Z {first}..{last}");
    let family_text = match family.label {
        FamilyLabel::OtherColumn(c) => format!("unnamed column {c}"),
        named => named.to_string(),
    };
    let _ = writeln!(out, "family:        {family_text}");
    let series_text = match (series.series, series.z_range) {
        (Series::None, _) | (_, None) => "none".to_string(),
        (s, Some((a, b))) => {
            let generation = match s {
                Series::Transition { generation } | Series::InnerTransition { generation } => {
                    format!(" n={generation}")
                }
                _ => String::new(),
            };
            let common = s
                .common_name()
                .map(|c| format!(", {c}"))
                .unwrap_or_default();
            format!(
                "{}{generation} Z {a}..{b}{common}",
                s.name().unwrap_or_default()
            )
        }
    };
    let _ = writeln!(out, "series:        {series_text}");
    if let Some(sub) = series.sub_block {
        let rare_earth = matches!(series.series, Series::InnerTransition { generation: 4 });
        let text = match (sub, rare_earth) {
            (SubBlock::Light, true) => "light (ceric)",
            (SubBlock::Heavy, true) => "heavy (yttric)",
            (SubBlock::Light, false) => "light",
            (SubBlock::Heavy, false) => "heavy",
        };
        let _ = writeln!(
            out,
            "sub-block:     {text} (j={})",
            fraction(i64::from(house.two_j()))
        );
    }
    let _ = writeln!(out, "configuration: {}", configuration_text(z, core, ds));
    let _ = writeln!(out, "status:        {}", ds.status_of(z).as_str());
    Ok(out)
}

pub fn address_report(
    n: u32,
    l: u32,
    two_j: u32,
    two_m: i32,
    core: bool,
    ds: &ElementDataset,
) -> Result<String, CliError> {
    let house = HouseAddress::new(n, l, two_j, two_m)?;
    element_report(z_from_address(&house), core, ds)
}

/// Parses a family given by name or as `l,2j,2m`.
pub fn parse_column(spec: &str) -> Result<Column, CliError> {
    if let Some(label) = FamilyLabel::from_name(spec) {
        return Ok(label.column());
    }
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let bad = || {
        CliError::Usage(format!(
            "`{spec}` is neither a family name (alkali, alkaline-earth, chalcogen, halogen, noble) nor l,2j,2m"
        ))
    };
    let [l, two_j, two_m] = parts.as_slice() else {
        return Err(bad());
    };
    let l = l.parse().map_err(|_| bad())?;
    let two_j = two_j.parse().map_err(|_| bad())?;
    let two_m = two_m.parse().map_err(|_| bad())?;
    Ok(Column::new(l, two_j, two_m)?)
}

pub fn family_report(spec: &str, count: usize, ds: &ElementDataset) -> Result<String, CliError> {
    let column = parse_column(spec)?;
    let label = FamilyLabel::for_column(column);
    let members: Vec<String> = column
        .members()
        .take(count)
        .map(|z| label_z(z, ds))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "family {label} {column}");
    let _ = writeln!(out, "{}", members.join(", "));
    Ok(out)
}

fn label_z(z: AtomicNumber, ds: &ElementDataset) -> String {
    match ds.symbol(z) {
        Some(s) => format!("{z} {s}"),
        None => z.to_string(),
    }
}

/// Parses a starting house given as `Z` or `n,l,2j,2m`.
pub fn parse_house(spec: &str) -> Result<HouseAddress, CliError> {
    if let Ok(z) = spec.trim().parse::<AtomicNumber>() {
        return Ok(address_from_z(z)?);
    }
    let mv: LadderMove = format!("@{spec}")
        .parse()
        .map_err(|e| CliError::Usage(format!("bad start `{spec}`: {e}")))?;
    match mv {
        LadderMove::Taxi(h) => Ok(h),
        _ => unreachable!("`@` always parses as a taxi"),
    }
}

/// Replays `moves` from `start`, one line per visited house.
pub fn walk_report(start: &str, moves: &[String], ds: &ElementDataset) -> Result<String, CliError> {
    let mut here = parse_house(start)?;
    let parsed: Vec<LadderMove> = moves
        .iter()
        .map(|m| m.parse().map_err(CliError::Usage))
        .collect::<Result<_, _>>()?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "start  {}  {}",
        describe_house(&here),
        label(here.z(), ds)
    );
    for mv in parsed {
        match mv.apply(&here) {
            Ok(next) => {
                let via = match mv {
                    LadderMove::Taxi(target) => {
                        let route = taxi(&here, &target);
                        let steps: Vec<String> =
                            route.steps.iter().map(|s| s.to_string()).collect();
                        format!("taxi [{}]", steps.join(" "))
                    }
                    _ => mv.kind().to_string(),
                };
                here = next;
                let _ = writeln!(
                    out,
                    "{:<6} {}  {}  via {via}",
                    mv.to_string(),
                    describe_house(&here),
                    label(here.z(), ds),
                );
            }
            Err(error) => {
                let _ = write!(out, "{:<6} rejected: ", mv.to_string());
                return Err(CliError::Walk {
                    transcript: out,
                    error,
                });
            }
        }
    }
    Ok(out)
}

/// Checks the closed-form atomic number against the enumeration oracle on
/// every house with `n + l <= max_sum`.
pub fn verify_report(max_sum: u32) -> Result<String, CliError> {
    if max_sum == 0 {
        return Err(CliError::Usage("--max-sum must be at least 1".into()));
    }
    let houses = oracle_enumerate(max_sum);
    let mismatch = houses
        .par_iter()
        .find_first(|(house, z)| z_from_address(house) != *z);
    let count = houses.len();
    match mismatch {
        None => Ok(format!(
            "checked {count} houses with n+l <= {max_sum}: all {count} houses agree\n"
        )),
        Some((house, z)) => Err(CliError::VerifyFailed {
            report: format!(
                "checked {count} houses with n+l <= {max_sum}: first mismatch at {} (oracle Z={z}, formula Z={})",
                describe_house(house),
                z_from_address(house)
            ),
        }),
    }
}

pub fn config_report(z: AtomicNumber, core: bool, ds: &ElementDataset) -> Result<String, CliError> {
    if z == 0 {
        return Err(AddressError::ZeroAtomicNumber.into());
    }
    Ok(format!(
        "{}: {}\n",
        label(z, ds),
        configuration_text(z, core, ds)
    ))
}
