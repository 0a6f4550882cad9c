//! Families (columns), transition and inner-transition series, rare-earth
//! sub-blocks, idealized Madelung configurations, and the counting of
//! commuting labelling operators.

use std::fmt;

use crate::address::{address_from_z, madelung_shells, AtomicNumber, HouseAddress, ShellAddress};
use crate::error::{AddressError, LabellingError};
use crate::ladders::avenue;

/// An avenue of the table: the `(l, j, m)` triple shared by a family of
/// chemical analogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub l: u32,
    pub two_j: u32,
    pub two_m: i32,
}

impl Column {
    pub fn new(l: u32, two_j: u32, two_m: i32) -> Result<Self, AddressError> {
        HouseAddress::new(l + 1, l, two_j, two_m).map(|h| Self::of(&h))
    }

    pub fn of(addr: &HouseAddress) -> Self {
        Self {
            l: addr.l(),
            two_j: addr.two_j(),
            two_m: addr.two_m(),
        }
    }

    /// The house of this column in its lowest street `n = l + 1`.
    pub fn head(&self) -> HouseAddress {
        HouseAddress::new(self.l + 1, self.l, self.two_j, self.two_m)
            .expect("column built from a valid address")
    }

    /// Atomic numbers of the column, top to bottom.
    pub fn members(&self) -> impl Iterator<Item = AtomicNumber> {
        avenue(&self.head()).map(|h| h.z())
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l={}, j={}/2, m={}/2)", self.l, self.two_j, self.two_m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyLabel {
    AlkaliMetal,
    AlkalineEarth,
    Chalcogen,
    Halogen,
    NobleGas,
    OtherColumn(Column),
}

impl FamilyLabel {
    pub const NAMED: [FamilyLabel; 5] = [
        FamilyLabel::AlkaliMetal,
        FamilyLabel::AlkalineEarth,
        FamilyLabel::Chalcogen,
        FamilyLabel::Halogen,
        FamilyLabel::NobleGas,
    ];

    pub fn column(&self) -> Column {
        let (l, two_j, two_m) = match self {
            FamilyLabel::AlkaliMetal => (0, 1, -1),
            FamilyLabel::AlkalineEarth => (0, 1, 1),
            FamilyLabel::Chalcogen => (1, 3, -1),
            FamilyLabel::Halogen => (1, 3, 1),
            FamilyLabel::NobleGas => (1, 3, 3),
            FamilyLabel::OtherColumn(c) => return *c,
        };
        Column { l, two_j, two_m }
    }

    pub fn for_column(column: Column) -> Self {
        Self::NAMED
            .into_iter()
            .find(|f| f.column() == column)
            .unwrap_or(FamilyLabel::OtherColumn(column))
    }

    /// Short kebab-case name; `None` for unnamed columns.
    pub fn name(&self) -> Option<&'static str> {
        match self {
            FamilyLabel::AlkaliMetal => Some("alkali-metal"),
            FamilyLabel::AlkalineEarth => Some("alkaline-earth"),
            FamilyLabel::Chalcogen => Some("chalcogen"),
            FamilyLabel::Halogen => Some("halogen"),
            FamilyLabel::NobleGas => Some("noble-gas"),
            FamilyLabel::OtherColumn(_) => None,
        }
    }

    /// Parses a family name; accepts short forms such as `alkali` or `noble`.
    pub fn from_name(name: &str) -> Option<Self> {
        let name = name.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        let label = match name.as_str() {
            "alkali" | "alkali-metal" | "alkali-metals" => FamilyLabel::AlkaliMetal,
            "alkaline-earth" | "alkaline-earths" | "alkaline-earth-metals" => {
                FamilyLabel::AlkalineEarth
            }
            "chalcogen" | "chalcogens" => FamilyLabel::Chalcogen,
            "halogen" | "halogens" => FamilyLabel::Halogen,
            "noble" | "noble-gas" | "noble-gases" => FamilyLabel::NobleGas,
            _ => return None,
        };
        Some(label)
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.name(), self) {
            (Some(name), _) => f.write_str(name),
            (None, FamilyLabel::OtherColumn(c)) => write!(f, "column {c}"),
            (None, _) => unreachable!(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub column: Column,
    pub label: FamilyLabel,
}

impl From<Column> for Family {
    fn from(column: Column) -> Self {
        Self {
            column,
            label: FamilyLabel::for_column(column),
        }
    }
}

pub fn classify_family(z: AtomicNumber) -> Result<Family, AddressError> {
    address_from_z(z).map(|h| Family::from(Column::of(&h)))
}

/// Which half of an `l >= 1` block a house sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubBlock {
    /// `j = l - 1/2`
    Light,
    /// `j = l + 1/2`
    Heavy,
}

impl SubBlock {
    pub fn of(addr: &HouseAddress) -> Option<Self> {
        match (addr.l(), addr.is_upper_sub_block()) {
            (0, _) => None,
            (_, false) => Some(SubBlock::Light),
            (_, true) => Some(SubBlock::Heavy),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    /// d block of street `generation` (n >= 3).
    Transition {
        generation: u32,
    },
    /// f block of street `generation` (n >= 4).
    InnerTransition {
        generation: u32,
    },
    /// The 5g block, Z = 121..=138, with no homologue among known elements.
    NewPeriod121to138,
    None,
}

impl Series {
    pub fn name(&self) -> Option<&'static str> {
        match self {
            Series::Transition { .. } => Some("transition"),
            Series::InnerTransition { .. } => Some("inner-transition"),
            Series::NewPeriod121to138 => Some("new-period"),
            Series::None => None,
        }
    }

    /// Conventional name of the series, where one exists.
    pub fn common_name(&self) -> Option<&'static str> {
        match self {
            Series::Transition { generation: 3 } => Some("iron group"),
            Series::Transition { generation: 4 } => Some("palladium group"),
            Series::Transition { generation: 5 } => Some("platinum group"),
            Series::Transition { generation: 6 } => Some("fourth transition series"),
            Series::InnerTransition { generation: 4 } => Some("lanthanides"),
            Series::InnerTransition { generation: 5 } => Some("actinides"),
            Series::InnerTransition { generation: 6 } => Some("superactinides"),
            Series::NewPeriod121to138 => Some("period 121-138"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesMembership {
    pub series: Series,
    /// Inclusive Z range of the series block; `None` outside any series.
    pub z_range: Option<(AtomicNumber, AtomicNumber)>,
    pub sub_block: Option<SubBlock>,
}

pub fn series_of_shell(shell: ShellAddress) -> Series {
    match (shell.l(), shell.n()) {
        (2, n) => Series::Transition { generation: n },
        (3, n) => Series::InnerTransition { generation: n },
        (4, 5) => Series::NewPeriod121to138,
        _ => Series::None,
    }
}

pub fn series_membership(z: AtomicNumber) -> Result<SeriesMembership, AddressError> {
    let addr = address_from_z(z)?;
    let series = series_of_shell(addr.shell());
    let membership = match series {
        Series::None => SeriesMembership {
            series,
            z_range: None,
            sub_block: None,
        },
        _ => SeriesMembership {
            series,
            z_range: Some(addr.shell().z_range()),
            sub_block: SubBlock::of(&addr),
        },
    };
    Ok(membership)
}

/// Light (ceric, `j = 5/2`) or heavy (yttric, `j = 7/2`) half of an f block.
pub fn rare_earth_subblock(z: AtomicNumber) -> Result<Option<SubBlock>, AddressError> {
    let addr = address_from_z(z)?;
    Ok(if addr.l() == 3 {
        SubBlock::of(&addr)
    } else {
        None
    })
}

/// Idealized ground-state configuration: shells filled in Madelung order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    occupied: Vec<(ShellAddress, u64)>,
}

impl Configuration {
    pub fn occupied(&self) -> &[(ShellAddress, u64)] {
        &self.occupied
    }

    pub fn total(&self) -> u64 {
        self.occupied.iter().map(|(_, k)| k).sum()
    }

    /// Splits off the largest closed noble-gas core strictly below the
    /// total, if any.
    pub fn with_noble_core(&self) -> AbbreviatedConfiguration {
        let total = self.total();
        let core = FamilyLabel::NobleGas
            .column()
            .members()
            .take_while(|&z| z < total)
            .last();
        let mut filled = 0;
        let mut split = 0;
        if let Some(core_z) = core {
            for (i, (_, k)) in self.occupied.iter().enumerate() {
                filled += k;
                if filled == core_z {
                    split = i + 1;
                    break;
                }
            }
        }
        AbbreviatedConfiguration {
            core,
            valence: self.occupied[split..].to_vec(),
        }
    }
}

pub fn ground_state_configuration(z: AtomicNumber) -> Configuration {
    let mut left = z;
    let mut occupied = Vec::new();
    for shell in madelung_shells() {
        if left == 0 {
            break;
        }
        let k = left.min(shell.capacity());
        occupied.push((shell, k));
        left -= k;
    }
    Configuration { occupied }
}

fn superscript(k: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .bytes()
        .map(|b| DIGITS[usize::from(b - b'0')])
        .collect()
}

fn write_shells(f: &mut fmt::Formatter<'_>, shells: &[(ShellAddress, u64)]) -> fmt::Result {
    for (shell, k) in shells {
        write!(f, "{shell}{}", superscript(*k))?;
    }
    Ok(())
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_shells(f, &self.occupied)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbbreviatedConfiguration {
    /// Atomic number of the noble-gas core.
    pub core: Option<AtomicNumber>,
    pub valence: Vec<(ShellAddress, u64)>,
}

impl AbbreviatedConfiguration {
    /// Renders with the core shown through `core_label`, e.g. `[Ar]`.
    pub fn render(&self, core_label: impl Fn(AtomicNumber) -> String) -> String {
        struct Shells<'a>(&'a [(ShellAddress, u64)]);
        impl fmt::Display for Shells<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_shells(f, self.0)
            }
        }
        let core = self
            .core
            .map(|z| format!("[{}]", core_label(z)))
            .unwrap_or_default();
        format!("{core}{}", Shells(&self.valence))
    }
}

impl fmt::Display for AbbreviatedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|z| format!("Z={z}")))
    }
}

/// Size of a complete set of commuting operators labelling the states of a
/// semi-simple group of order `r` and rank `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabellingCount {
    pub order_r: u32,
    pub rank_l: u32,
    pub cartan: u32,
    pub casimirs: u32,
    pub racah_extra: u32,
    pub complete_set: u32,
}

/// so(4,2): order 15, rank 3.
pub const SO_4_2: (u32, u32) = (15, 3);
/// su(2): order 3, rank 1.
pub const SU_2: (u32, u32) = (3, 1);

pub fn labelling_count(order_r: u32, rank_l: u32) -> Result<LabellingCount, LabellingError> {
    if order_r == 0 || rank_l == 0 {
        return Err(LabellingError::NonPositive);
    }
    let deficit = order_r
        .checked_sub(3 * rank_l)
        .ok_or(LabellingError::NegativeDeficit { order_r, rank_l })?;
    if deficit % 2 != 0 {
        return Err(LabellingError::OddDeficit { deficit });
    }
    let racah_extra = deficit / 2;
    Ok(LabellingCount {
        order_r,
        rank_l,
        cartan: rank_l,
        casimirs: rank_l,
        racah_extra,
        complete_set: 2 * rank_l + racah_extra,
    })
}

/// Complete-set size for a direct product of groups given as `(r, l)`.
pub fn composed_complete_set(groups: &[(u32, u32)]) -> Result<u32, LabellingError> {
    groups
        .iter()
        .map(|&(r, l)| labelling_count(r, l).map(|c| c.complete_set))
        .sum()
}
