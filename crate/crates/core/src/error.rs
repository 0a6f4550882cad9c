use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AddressError {
    #[error("principal quantum number must be at least 1")]
    PrincipalZero,
    #[error("principal quantum number {n} exceeds the supported maximum")]
    PrincipalTooLarge { n: u32 },
    #[error("orbital quantum number l={l} is not below n={n}")]
    OrbitalOutOfRange { n: u32, l: u32 },
    #[error("2j={two_j} is not l-1/2 or l+1/2 for l={l}")]
    InvalidJ { l: u32, two_j: u32 },
    #[error("2m={two_m} is not an odd value with |m| <= j for 2j={two_j}")]
    InvalidM { two_j: u32, two_m: i32 },
    #[error("m_l={m_l} is outside -{l}..={l}")]
    InvalidMl { l: u32, m_l: i32 },
    #[error("2m_s={two_m_s} must be +1 or -1")]
    InvalidMs { two_m_s: i32 },
    #[error("atomic number must be at least 1")]
    ZeroAtomicNumber,
}

/// Rejected ladder moves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LadderError {
    #[error("OutOfBlock: m step leaves the range -j..=j")]
    OutOfBlock,
    #[error("NoSecondSubBlock: an l=0 block has a single j sub-block")]
    NoSecondSubBlock,
    #[error("MOutOfRange: |m| exceeds the j of the other sub-block")]
    MOutOfRange,
    #[error("OutOfStreet: l step leaves 0..=n-1")]
    OutOfStreet,
    #[error("OutOfAvenue: n step goes below l+1")]
    OutOfAvenue,
    #[error(transparent)]
    Address(#[from] AddressError),
}

impl LadderError {
    /// The variant name, as surfaced on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            LadderError::OutOfBlock => "OutOfBlock",
            LadderError::NoSecondSubBlock => "NoSecondSubBlock",
            LadderError::MOutOfRange => "MOutOfRange",
            LadderError::OutOfStreet => "OutOfStreet",
            LadderError::OutOfAvenue => "OutOfAvenue",
            LadderError::Address(_) => "InvalidAddress",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabellingError {
    #[error("OddDeficit: r - 3l = {deficit} is odd")]
    OddDeficit { deficit: u32 },
    #[error("NegativeDeficit: order {order_r} is below 3 x rank {rank_l}")]
    NegativeDeficit { order_r: u32, rank_l: u32 },
    #[error("order and rank must be positive")]
    NonPositive,
}
