//! Shell and house addresses, the Madelung order, and the closed-form
//! atomic-number formula with its inverse.
//!
//! Half-integer quantum numbers `j` and `m` are carried as doubled integers
//! (`two_j`, `two_m`) so every computation stays exact.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::error::AddressError;

/// Largest principal quantum number accepted by the constructors.
///
/// Keeps every atomic number of the table inside `u64`.
pub const MAX_PRINCIPAL: u32 = 1_000_000;

/// Atomic number.
pub type AtomicNumber = u64;

const SPECTROSCOPIC: &[char] = &[
    's', 'p', 'd', 'f', 'g', 'h', 'i', 'k', 'l', 'm', 'n', 'o', 'q', 'r', 't', 'u', 'v', 'w', 'x',
    'y', 'z',
];

/// An atomic shell `(n, l)`, equivalently one block `[n + l, n]` of the table.
///
/// The `Ord` implementation is the Madelung order: increasing `n + l`, ties
/// broken by increasing `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShellAddress {
    n: u32,
    l: u32,
}

impl ShellAddress {
    pub fn new(n: u32, l: u32) -> Result<Self, AddressError> {
        if n == 0 {
            return Err(AddressError::PrincipalZero);
        }
        if n > MAX_PRINCIPAL {
            return Err(AddressError::PrincipalTooLarge { n });
        }
        if l >= n {
            return Err(AddressError::OrbitalOutOfRange { n, l });
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// The Madelung key `(n + l, n)`.
    pub fn madelung_key(&self) -> (u32, u32) {
        (self.n + self.l, self.n)
    }

    /// Number of houses in the block, `2(2l + 1)`.
    pub fn capacity(&self) -> u64 {
        2 * (2 * u64::from(self.l) + 1)
    }

    /// The shell following this one in Madelung order.
    pub fn next(&self) -> Option<ShellAddress> {
        let (sum, n) = self.madelung_key();
        if self.l > 0 {
            ShellAddress::new(n + 1, self.l - 1).ok()
        } else {
            let sum = sum + 1;
            let n = sum / 2 + 1;
            ShellAddress::new(n, sum - n).ok()
        }
    }

    /// Iterator over the houses of this block in table order: the
    /// `j = l - 1/2` sub-block first, then `j = l + 1/2`, `m` ascending.
    pub fn houses(&self) -> impl Iterator<Item = HouseAddress> {
        let shell = *self;
        (0..shell.capacity()).map(move |rank| shell.house_at_rank(rank))
    }

    /// The house at position `rank` (0-based) inside this block.
    ///
    /// Panics if `rank >= capacity()`.
    pub fn house_at_rank(&self, rank: u64) -> HouseAddress {
        assert!(rank < self.capacity(), "rank {rank} outside block {self}");
        let l = i64::from(self.l);
        let rank = rank as i64;
        let (two_j, offset) = if l > 0 && rank < 2 * l {
            (2 * l - 1, rank)
        } else if l > 0 {
            (2 * l + 1, rank - 2 * l)
        } else {
            (1, rank)
        };
        HouseAddress {
            shell: *self,
            two_j: two_j as u32,
            two_m: (-two_j + 2 * offset) as i32,
        }
    }

    /// Inclusive range of atomic numbers housed in this block.
    pub fn z_range(&self) -> (AtomicNumber, AtomicNumber) {
        block_z_range(*self)
    }

    pub fn letter(&self) -> Option<char> {
        SPECTROSCOPIC.get(self.l as usize).copied()
    }
}

impl Ord for ShellAddress {
    fn cmp(&self, other: &Self) -> Ordering {
        self.madelung_key().cmp(&other.madelung_key())
    }
}

impl PartialOrd for ShellAddress {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ShellAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter() {
            Some(c) => write!(f, "{}{}", self.n, c),
            None => write!(f, "{}[l={}]", self.n, self.l),
        }
    }
}

/// One house (table cell) `(n, l, j, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HouseAddress {
    shell: ShellAddress,
    two_j: u32,
    two_m: i32,
}

impl HouseAddress {
    /// Builds an address from `n`, `l`, `2j` and `2m`.
    pub fn new(n: u32, l: u32, two_j: u32, two_m: i32) -> Result<Self, AddressError> {
        Self::in_shell(ShellAddress::new(n, l)?, two_j, two_m)
    }

    pub fn in_shell(shell: ShellAddress, two_j: u32, two_m: i32) -> Result<Self, AddressError> {
        let l = shell.l;
        let j_ok = if l == 0 {
            two_j == 1
        } else {
            two_j == 2 * l - 1 || two_j == 2 * l + 1
        };
        if !j_ok {
            return Err(AddressError::InvalidJ { l, two_j });
        }
        if two_m.rem_euclid(2) != 1 || two_m.unsigned_abs() > two_j {
            return Err(AddressError::InvalidM { two_j, two_m });
        }
        Ok(Self {
            shell,
            two_j,
            two_m,
        })
    }

    pub fn shell(&self) -> ShellAddress {
        self.shell
    }

    pub fn n(&self) -> u32 {
        self.shell.n
    }

    pub fn l(&self) -> u32 {
        self.shell.l
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn two_m(&self) -> i32 {
        self.two_m
    }

    pub fn j(&self) -> Ratio<i64> {
        Ratio::new(i64::from(self.two_j), 2)
    }

    pub fn m(&self) -> Ratio<i64> {
        Ratio::new(i64::from(self.two_m), 2)
    }

    /// `true` for the `j = l + 1/2` sub-block (and for `l = 0`).
    pub fn is_upper_sub_block(&self) -> bool {
        self.two_j == 2 * self.shell.l + 1
    }

    /// Position of this house inside its block, 0-based.
    pub fn rank_in_block(&self) -> u64 {
        let l = u64::from(self.shell.l);
        let offset = ((i64::from(self.two_m) + i64::from(self.two_j)) / 2) as u64;
        if l > 0 && self.is_upper_sub_block() {
            2 * l + offset
        } else {
            offset
        }
    }

    /// Atomic number of the inhabitant, see [`z_from_address`].
    pub fn z(&self) -> AtomicNumber {
        z_from_address(self)
    }
}

impl fmt::Display for HouseAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, l={}, j={}/2, m={}/2)",
            self.shell.n, self.shell.l, self.two_j, self.two_m
        )
    }
}

/// The alternative labelling `(n, l, m_l, m_s)` of a house.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AltHouseAddress {
    shell: ShellAddress,
    m_l: i32,
    two_m_s: i32,
}

impl AltHouseAddress {
    pub fn new(n: u32, l: u32, m_l: i32, two_m_s: i32) -> Result<Self, AddressError> {
        let shell = ShellAddress::new(n, l)?;
        if m_l.unsigned_abs() > l {
            return Err(AddressError::InvalidMl { l, m_l });
        }
        if two_m_s != 1 && two_m_s != -1 {
            return Err(AddressError::InvalidMs { two_m_s });
        }
        Ok(Self {
            shell,
            m_l,
            two_m_s,
        })
    }

    pub fn shell(&self) -> ShellAddress {
        self.shell
    }

    pub fn m_l(&self) -> i32 {
        self.m_l
    }

    pub fn two_m_s(&self) -> i32 {
        self.two_m_s
    }

    /// Rank among the `2(2l+1)` labels of the shell: `m_s` ascending, then
    /// `m_l` ascending.
    pub fn rank_in_block(&self) -> u64 {
        let l = i64::from(self.shell.l);
        let spin = if self.two_m_s > 0 { 2 * l + 1 } else { 0 };
        (spin + i64::from(self.m_l) + l) as u64
    }

    fn at_rank(shell: ShellAddress, rank: u64) -> Self {
        let width = 2 * u64::from(shell.l) + 1;
        let (two_m_s, offset) = if rank < width {
            (-1, rank)
        } else {
            (1, rank - width)
        };
        Self {
            shell,
            m_l: offset as i32 - shell.l as i32,
            two_m_s,
        }
    }
}

impl fmt::Display for AltHouseAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(n={}, l={}, m_l={}, m_s={}/2)",
            self.shell.n, self.shell.l, self.m_l, self.two_m_s
        )
    }
}

/// Compares two shells in Madelung order.
pub fn compare_shells(a: ShellAddress, b: ShellAddress) -> Ordering {
    a.cmp(&b)
}

/// Iterator over every shell in Madelung order, starting at 1s.
#[derive(Debug, Clone)]
pub struct MadelungShells {
    next: Option<ShellAddress>,
}

impl Iterator for MadelungShells {
    type Item = ShellAddress;

    fn next(&mut self) -> Option<ShellAddress> {
        let current = self.next?;
        self.next = current.next();
        Some(current)
    }
}

pub fn madelung_shells() -> MadelungShells {
    MadelungShells {
        next: Some(ShellAddress { n: 1, l: 0 }),
    }
}

/// The first `count` shells in Madelung order.
pub fn enumerate_shells(count: usize) -> Vec<ShellAddress> {
    madelung_shells().take(count).collect()
}

pub fn shell_capacity(shell: ShellAddress) -> u64 {
    shell.capacity()
}

// Total capacity of all shells sharing `n + l = sum`: 2 * ceil(sum / 2)^2.
fn diagonal_capacity(sum: u32) -> u64 {
    let half = u64::from(sum).div_ceil(2);
    2 * half * half
}

/// First and last atomic numbers of the block `shell`, from cumulative
/// capacities over the Madelung order.
pub fn block_z_range(shell: ShellAddress) -> (AtomicNumber, AtomicNumber) {
    let (sum, n) = shell.madelung_key();
    let mut before: u64 = (1..sum).map(diagonal_capacity).sum();
    let first_n = sum / 2 + 1;
    before += (first_n..n)
        .map(|k| 2 * (2 * u64::from(sum - k) + 1))
        .sum::<u64>();
    (before + 1, before + shell.capacity())
}

/// Atomic number of the house `(n, l, j, m)`:
///
/// ```text
/// Z = (n+l)[(n+l)^2 - 1]/6 + (n+l+1)^2/2 - [1 + (-1)^(n+l)](n+l+1)/4
///     - 4l(l+1) + l + j(2l+1) + m - 1
/// ```
///
/// evaluated over exact rationals.
pub fn z_from_address(addr: &HouseAddress) -> AtomicNumber {
    let s = i128::from(addr.n()) + i128::from(addr.l());
    let l = i128::from(addr.l());
    let j = Ratio::new(i128::from(addr.two_j), 2);
    let m = Ratio::new(i128::from(addr.two_m), 2);
    let parity = if s % 2 == 0 { 2 } else { 0 };

    let z = Ratio::new(s * (s * s - 1), 6) + Ratio::new((s + 1) * (s + 1), 2)
        - Ratio::new(parity * (s + 1), 4)
        - Ratio::from_integer(4 * l * (l + 1) - l + 1)
        + j * (2 * l + 1)
        + m;

    assert!(z.is_integer(), "non-integral Z {z} at {addr}");
    let z = z.to_integer();
    assert!(z >= 1, "non-positive Z {z} at {addr}");
    z as AtomicNumber
}

/// Validates a quartet and evaluates [`z_from_address`].
pub fn z_from_quartet(
    n: u32,
    l: u32,
    two_j: u32,
    two_m: i32,
) -> Result<AtomicNumber, AddressError> {
    HouseAddress::new(n, l, two_j, two_m).map(|a| z_from_address(&a))
}

/// The unique house whose inhabitant has atomic number `z`.
///
/// Skips whole `n + l` diagonals, then blocks, then places `z` inside the
/// block by rank.
pub fn address_from_z(z: AtomicNumber) -> Result<HouseAddress, AddressError> {
    if z == 0 {
        return Err(AddressError::ZeroAtomicNumber);
    }
    let mut remaining = z - 1;
    let mut sum = 1u32;
    loop {
        let cap = diagonal_capacity(sum);
        if remaining < cap {
            break;
        }
        remaining -= cap;
        sum += 1;
    }
    let mut n = sum / 2 + 1;
    loop {
        let shell = ShellAddress::new(n, sum - n)?;
        if remaining < shell.capacity() {
            return Ok(shell.house_at_rank(remaining));
        }
        remaining -= shell.capacity();
        n += 1;
    }
}

/// Pairs an `(m_l, m_s)` label with the `(j, m)` house of equal rank in the
/// same block.
pub fn alt_to_jm(alt: &AltHouseAddress) -> HouseAddress {
    alt.shell.house_at_rank(alt.rank_in_block())
}

/// Inverse of [`alt_to_jm`].
pub fn jm_to_alt(addr: &HouseAddress) -> AltHouseAddress {
    AltHouseAddress::at_rank(addr.shell, addr.rank_in_block())
}
