//! Bus lines and taxis: unit moves between houses.
//!
//! * `So3Su2` moves inside a block (`m` steps, or a toggle between the two
//!   `j` sub-blocks),
//! * `So4Su2` moves along a street (fixed `n`, `l` steps),
//! * `So21` moves along an avenue (fixed `(l, j, m)`, `n` steps),
//! * `Taxi` jumps to any house and carries a decomposition into bus-line
//!   steps.
//!
//! A move either yields a valid [`HouseAddress`] or a [`LadderError`].

use std::fmt;
use std::str::FromStr;

use crate::address::{HouseAddress, ShellAddress};
use crate::error::LadderError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Raise => Direction::Lower,
            Direction::Lower => Direction::Raise,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Direction::Raise => 1,
            Direction::Lower => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum So3Step {
    M(Direction),
    ToggleJ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderMove {
    So3Su2(So3Step),
    So4Su2(Direction),
    So21(Direction),
    Taxi(HouseAddress),
}

impl LadderMove {
    pub fn apply(&self, addr: &HouseAddress) -> Result<HouseAddress, LadderError> {
        match *self {
            LadderMove::So3Su2(step) => step_so3(addr, step),
            LadderMove::So4Su2(dir) => step_so4(addr, dir),
            LadderMove::So21(dir) => step_so21(addr, dir),
            LadderMove::Taxi(target) => Ok(taxi(addr, &target).target),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            LadderMove::So3Su2(_) => "SO(3)xSU(2)",
            LadderMove::So4Su2(_) => "SO(4)xSU(2)",
            LadderMove::So21(_) => "SO(2,1)",
            LadderMove::Taxi(_) => "taxi",
        }
    }
}

/// Textual move syntax: `+m`, `-m`, `j`, `+l`, `-l`, `+n`, `-n` (suffix
/// signs such as `m+` are accepted too), and `@n,l,2j,2m` for a taxi.
impl FromStr for LadderMove {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('@') {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            let [n, l, two_j, two_m] = parts.as_slice() else {
                return Err(format!("taxi target `{rest}` must be n,l,2j,2m"));
            };
            let parse_err = |e: std::num::ParseIntError| format!("taxi target `{rest}`: {e}");
            let target = HouseAddress::new(
                n.parse().map_err(parse_err)?,
                l.parse().map_err(parse_err)?,
                two_j.parse().map_err(parse_err)?,
                two_m.parse().map_err(parse_err)?,
            )
            .map_err(|e| e.to_string())?;
            return Ok(LadderMove::Taxi(target));
        }
        let mv = match s {
            "j" | "J" => LadderMove::So3Su2(So3Step::ToggleJ),
            "+m" | "m+" => LadderMove::So3Su2(So3Step::M(Direction::Raise)),
            "-m" | "m-" => LadderMove::So3Su2(So3Step::M(Direction::Lower)),
            "+l" | "l+" => LadderMove::So4Su2(Direction::Raise),
            "-l" | "l-" => LadderMove::So4Su2(Direction::Lower),
            "+n" | "n+" => LadderMove::So21(Direction::Raise),
            "-n" | "n-" => LadderMove::So21(Direction::Lower),
            other => return Err(format!("unknown move `{other}`")),
        };
        Ok(mv)
    }
}

impl fmt::Display for LadderMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |d: &Direction| if *d == Direction::Raise { '+' } else { '-' };
        match self {
            LadderMove::So3Su2(So3Step::M(d)) => write!(f, "{}m", sign(d)),
            LadderMove::So3Su2(So3Step::ToggleJ) => write!(f, "j"),
            LadderMove::So4Su2(d) => write!(f, "{}l", sign(d)),
            LadderMove::So21(d) => write!(f, "{}n", sign(d)),
            LadderMove::Taxi(t) => {
                write!(f, "@{},{},{},{}", t.n(), t.l(), t.two_j(), t.two_m())
            }
        }
    }
}

/// Move inside a block: `m -> m ± 1`, or flip `j` between `l ∓ 1/2`
/// keeping `m`.
pub fn step_so3(addr: &HouseAddress, step: So3Step) -> Result<HouseAddress, LadderError> {
    match step {
        So3Step::M(dir) => {
            let two_m = i64::from(addr.two_m()) + 2 * dir.sign();
            if two_m.unsigned_abs() > u64::from(addr.two_j()) {
                return Err(LadderError::OutOfBlock);
            }
            Ok(HouseAddress::in_shell(
                addr.shell(),
                addr.two_j(),
                two_m as i32,
            )?)
        }
        So3Step::ToggleJ => {
            let l = addr.l();
            if l == 0 {
                return Err(LadderError::NoSecondSubBlock);
            }
            let two_j = if addr.is_upper_sub_block() {
                2 * l - 1
            } else {
                2 * l + 1
            };
            if addr.two_m().unsigned_abs() > two_j {
                return Err(LadderError::MOutOfRange);
            }
            Ok(HouseAddress::in_shell(addr.shell(), two_j, addr.two_m())?)
        }
    }
}

/// Move along a street: `l -> l ± 1` at fixed `n`.
///
/// `j` and `m` are kept when still valid; otherwise `j` goes to the nearest
/// allowed value for the new `l` (smaller on ties) and `m` to the nearest
/// value with `|m| <= j`.
pub fn step_so4(addr: &HouseAddress, dir: Direction) -> Result<HouseAddress, LadderError> {
    let new_l = i64::from(addr.l()) + dir.sign();
    if new_l < 0 || new_l >= i64::from(addr.n()) {
        return Err(LadderError::OutOfStreet);
    }
    let new_l = new_l as u32;
    let shell = ShellAddress::new(addr.n(), new_l)?;

    let candidates: &[u32] = if new_l == 0 {
        &[1]
    } else {
        &[2 * new_l - 1, 2 * new_l + 1]
    };
    let two_j = if candidates.contains(&addr.two_j()) {
        addr.two_j()
    } else {
        // candidates are ascending, so min_by_key keeps the smaller j on ties
        *candidates
            .iter()
            .min_by_key(|&&c| c.abs_diff(addr.two_j()))
            .expect("at least one j candidate")
    };
    let two_m = addr.two_m().clamp(-(two_j as i32), two_j as i32);
    Ok(HouseAddress::in_shell(shell, two_j, two_m)?)
}

/// Move along an avenue: `n -> n ± 1` at fixed `(l, j, m)`.
pub fn step_so21(addr: &HouseAddress, dir: Direction) -> Result<HouseAddress, LadderError> {
    let new_n = i64::from(addr.n()) + dir.sign();
    if new_n < i64::from(addr.l()) + 1 {
        return Err(LadderError::OutOfAvenue);
    }
    Ok(HouseAddress::new(
        new_n as u32,
        addr.l(),
        addr.two_j(),
        addr.two_m(),
    )?)
}

/// Every house of the avenue `(l, j, m)` through `addr`, from the lowest
/// street `n = l + 1` upwards.
pub fn avenue(addr: &HouseAddress) -> impl Iterator<Item = HouseAddress> {
    let start = HouseAddress::new(addr.l() + 1, addr.l(), addr.two_j(), addr.two_m())
        .expect("lowest street of a valid column");
    std::iter::successors(Some(start), |h| step_so21(h, Direction::Raise).ok())
}

/// A taxi ride, decomposed into bus-line steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaxiRoute {
    pub start: HouseAddress,
    pub target: HouseAddress,
    pub steps: Vec<LadderMove>,
}

impl TaxiRoute {
    /// Re-applies every step from `start`, returning the visited houses
    /// (start included).
    pub fn replay(&self) -> Result<Vec<HouseAddress>, LadderError> {
        let mut path = Vec::with_capacity(self.steps.len() + 1);
        let mut here = self.start;
        path.push(here);
        for step in &self.steps {
            here = step.apply(&here)?;
            path.push(here);
        }
        Ok(path)
    }
}

/// Jumps from `addr` to `target`, recording a route made of bus-line steps:
/// `l` lowered until both streets admit it, `n` steps along the avenue,
/// `l` steps along the target street, then `j` and `m` inside the block.
pub fn taxi(addr: &HouseAddress, target: &HouseAddress) -> TaxiRoute {
    let mut steps = Vec::new();
    let mut here = *addr;
    let mut push = |here: &mut HouseAddress, mv: LadderMove| {
        *here = mv.apply(here).expect("taxi decomposition step is valid");
        steps.push(mv);
    };

    let common_l = here.l().min(target.n() - 1);
    while here.l() > common_l {
        push(&mut here, LadderMove::So4Su2(Direction::Lower));
    }
    while here.n() != target.n() {
        let dir = if here.n() < target.n() {
            Direction::Raise
        } else {
            Direction::Lower
        };
        push(&mut here, LadderMove::So21(dir));
    }
    while here.l() != target.l() {
        let dir = if here.l() < target.l() {
            Direction::Raise
        } else {
            Direction::Lower
        };
        push(&mut here, LadderMove::So4Su2(dir));
    }
    if here.two_j() != target.two_j() {
        let bound = target.two_j() as i32;
        while here.two_m().abs() > bound {
            let dir = if here.two_m() > 0 {
                Direction::Lower
            } else {
                Direction::Raise
            };
            push(&mut here, LadderMove::So3Su2(So3Step::M(dir)));
        }
        push(&mut here, LadderMove::So3Su2(So3Step::ToggleJ));
    }
    while here.two_m() != target.two_m() {
        let dir = if here.two_m() < target.two_m() {
            Direction::Raise
        } else {
            Direction::Lower
        };
        push(&mut here, LadderMove::So3Su2(So3Step::M(dir)));
    }
    debug_assert_eq!(here, *target);

    TaxiRoute {
        start: *addr,
        target: *target,
        steps,
    }
}
