//! Addressing, ordering and navigation for the periodic table built on the
//! quantum numbers `(n, l, j, m)`.
//!
//! Every element sits in a *house* `(n, l, j, m)`; houses are grouped into
//! blocks `(n, l)` filled in Madelung order. [`address::z_from_address`]
//! gives the atomic number of a house in closed form and
//! [`oracle::oracle_enumerate`] recomputes it by plain counting.

pub mod address;
pub mod chemistry;
mod error;
pub mod ladders;
pub mod oracle;

pub use address::{
    address_from_z, alt_to_jm, block_z_range, compare_shells, enumerate_shells, jm_to_alt,
    madelung_shells, shell_capacity, z_from_address, z_from_quartet, AltHouseAddress, AtomicNumber,
    HouseAddress, ShellAddress, MAX_PRINCIPAL,
};
pub use chemistry::{
    classify_family, composed_complete_set, ground_state_configuration, labelling_count,
    rare_earth_subblock, series_membership, Column, Configuration, Family, FamilyLabel,
    LabellingCount, Series, SeriesMembership, SubBlock,
};
pub use error::{AddressError, LabellingError, LadderError};
pub use ladders::{step_so21, step_so3, step_so4, taxi, Direction, LadderMove, So3Step, TaxiRoute};
pub use oracle::oracle_enumerate;
