//! Brute-force enumeration of the table, used as ground truth for the
//! closed-form atomic-number formula.
//!
//! Shares nothing with [`crate::address`] beyond the address types: shells
//! are collected and sorted by their `(n + l, n)` key here, and houses are
//! numbered by counting.

use crate::address::{AtomicNumber, HouseAddress};

/// Every house with `n + l <= max_sum`, paired with the atomic number
/// obtained by counting cells in table order.
pub fn oracle_enumerate(max_sum: u32) -> Vec<(HouseAddress, AtomicNumber)> {
    let mut shells: Vec<(u32, u32)> = (1..=max_sum)
        .flat_map(|n| (0..n).map(move |l| (n, l)))
        .filter(|&(n, l)| n + l <= max_sum)
        .collect();
    shells.sort_by_key(|&(n, l)| (n + l, n));

    let mut out = Vec::new();
    let mut z: AtomicNumber = 0;
    for (n, l) in shells {
        let sub_blocks: &[u32] = if l == 0 {
            &[1]
        } else {
            &[2 * l - 1, 2 * l + 1]
        };
        for &two_j in sub_blocks {
            let two_j_signed = two_j as i32;
            for two_m in (-two_j_signed..=two_j_signed).step_by(2) {
                z += 1;
                let house =
                    HouseAddress::new(n, l, two_j, two_m).expect("enumerated quartet is valid");
                out.push((house, z));
            }
        }
    }
    out
}
