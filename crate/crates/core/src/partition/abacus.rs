//! The three-runner h-abacus of a strict partition.
//!
//! Positions `1, 2, 3, …` are laid out in rows of four as
//!
//! ```text
//!        1   3
//!    2
//!    4   5   7
//!    6
//!    8   9  11
//!   10
//!   12  13  15
//! ```
//!
//! so the first runner holds every even position, the second the positions
//! `≡ 1 (mod 4)` and the third the positions `≡ 3 (mod 4)`. A strict
//! partition places one bead at each of its parts.
//!
//! Reading the second and third runners as one Maya diagram
//! (`…, 11, 7, 3 | 1, 5, 9, …`, third runner inverted) gives an integer charge
//! and an ordinary partition; the first runner gives a strict partition by
//! halving. The leftover core depends only on the charge.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{ensure_strict, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusDecomposition {
    /// `λ^{hc}`, always `Δ^h(charge)`.
    pub core: Partition,
    /// `λ^h[0]`: halves of the beads on the even runner.
    pub shifted0: Partition,
    /// `λ^h[1]`: read off the Maya diagram of the odd runners.
    pub quotient1: Partition,
    /// `m(λ)`: beads on the `1 mod 4` runner minus beads on the `3 mod 4` runner.
    pub charge: i64,
}

/// `Δ^h(m) = (4m−3, …, 5, 1)` for `m ≥ 0` and `Δ^h(−m) = (4m−1, …, 7, 3)`.
pub fn h_core(charge: i64) -> Partition {
    let m = charge.unsigned_abs() as usize;
    let offset = if charge >= 0 { 3 } else { 1 };
    Partition::from_unsorted((1..=m).map(|j| 4 * j - offset).collect())
}

fn charge_of_core(core: &Partition) -> Result<i64> {
    let m = core.len() as i64;
    [m, -m].into_iter().find(|&c| h_core(c) == *core).ok_or_else(|| Error::NotHCore(core.clone()))
}

/// Maya slot of an odd position: `1, 5, 9, … ↦ 0, 1, 2, …` and
/// `3, 7, 11, … ↦ −1, −2, −3, …`.
fn slot_of(position: usize) -> i64 {
    let p = position as i64;
    if p % 4 == 1 {
        (p - 1) / 4
    } else {
        -(p + 1) / 4
    }
}

fn position_of(slot: i64) -> usize {
    if slot >= 0 {
        (4 * slot + 1) as usize
    } else {
        (-4 * slot - 1) as usize
    }
}

/// Runs the move/remove process on the odd runners until no move applies:
/// a bead slides one row up into a vacant cell of its own runner, and beads
/// sitting at both 1 and 3 annihilate together.
fn stalemate(second: &BTreeSet<usize>, third: &BTreeSet<usize>) -> Partition {
    let mut second = second.clone();
    let mut third = third.clone();
    loop {
        let mut moved = false;
        for runner in [&mut second, &mut third] {
            let beads: Vec<usize> = runner.iter().copied().collect();
            for b in beads {
                if b > 4 && !runner.contains(&(b - 4)) {
                    runner.remove(&b);
                    runner.insert(b - 4);
                    moved = true;
                }
            }
        }
        if second.contains(&1) && third.contains(&3) {
            second.remove(&1);
            third.remove(&3);
            moved = true;
        }
        if !moved {
            break;
        }
    }
    Partition::from_unsorted(second.into_iter().chain(third).collect())
}

pub fn h_abacus_decompose(lambda: &Partition) -> Result<AbacusDecomposition> {
    ensure_strict(lambda)?;
    let mut halves = Vec::new();
    let mut second = BTreeSet::new();
    let mut third = BTreeSet::new();
    for &part in lambda.parts() {
        match part % 4 {
            1 => {
                second.insert(part);
            }
            3 => {
                third.insert(part);
            }
            _ => halves.push(part / 2),
        }
    }
    let charge = second.len() as i64 - third.len() as i64;

    // Occupied Maya slots: every bead on the second runner, and every
    // negative slot whose third-runner cell is empty.
    let holes: BTreeSet<i64> = third.iter().map(|&p| slot_of(p)).collect();
    let lowest = holes.iter().next().copied().unwrap_or(0).min(0);
    let mut occupied: Vec<i64> =
        second.iter().map(|&p| slot_of(p)).chain((lowest..0).filter(|s| !holes.contains(s))).collect();
    occupied.sort_unstable_by(|a, b| b.cmp(a));
    // slots below `lowest` are all occupied; the i-th slot counts the
    // vacancies to its left
    let quotient1 = occupied.iter().enumerate().map(|(i, &slot)| (slot + i as i64 + 1 - charge) as usize).collect();

    let core = stalemate(&second, &third);
    debug_assert_eq!(core, h_core(charge));

    Ok(AbacusDecomposition {
        core,
        shifted0: Partition::from_unsorted(halves),
        quotient1: Partition::from_unsorted(quotient1),
        charge,
    })
}

pub fn h_abacus_compose(core: &Partition, shifted0: &Partition, quotient1: &Partition) -> Result<Partition> {
    let charge = charge_of_core(core)?;
    ensure_strict(shifted0)?;
    // slots q_i − i + m; beyond this depth the slots are contiguous and occupied
    let depth = quotient1.len() as i64 + charge.abs() + 1;
    let occupied: BTreeSet<i64> = (1..=depth).map(|i| quotient1.part(i as usize - 1) as i64 - i + charge).collect();
    let lowest = *occupied.iter().next().expect("depth >= 1");

    let mut parts: Vec<usize> = shifted0.parts().iter().map(|h| 2 * h).collect();
    parts.extend(occupied.iter().filter(|&&s| s >= 0).map(|&s| position_of(s)));
    parts.extend((lowest..0).filter(|s| !occupied.contains(s)).map(position_of));
    Ok(Partition::from_unsorted(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{generate_partitions, PartitionFilter};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let dec = h_abacus_decompose(&p("11,10,5,3,2")).unwrap();
        assert_eq!(dec.core, p("3"));
        assert_eq!(dec.shifted0, p("5,1"));
        assert_eq!(dec.quotient1, p("3,1"));
        assert_eq!(dec.charge, -1);
        assert_eq!(h_abacus_compose(&p("3"), &p("5,1"), &p("3,1")).unwrap(), p("11,10,5,3,2"));
    }

    #[test]
    fn degenerate_and_small() {
        let dec = h_abacus_decompose(&Partition::empty()).unwrap();
        assert_eq!(
            dec,
            AbacusDecomposition {
                core: Partition::empty(),
                shifted0: Partition::empty(),
                quotient1: Partition::empty(),
                charge: 0,
            }
        );
        let empty = Partition::empty();
        assert_eq!(h_abacus_compose(&empty, &empty, &empty).unwrap(), empty);
        assert_eq!(h_abacus_compose(&empty, &p("1"), &empty).unwrap(), p("2"));
        // multiples of four live on the even runner too
        assert_eq!(h_abacus_decompose(&p("4")).unwrap().shifted0, p("2"));
    }

    #[test]
    fn cores() {
        assert_eq!(h_core(0), Partition::empty());
        assert_eq!(h_core(1), p("1"));
        assert_eq!(h_core(3), p("9,5,1"));
        assert_eq!(h_core(-1), p("3"));
        assert_eq!(h_core(-2), p("7,3"));
        assert!(matches!(h_abacus_compose(&p("5"), &Partition::empty(), &Partition::empty()), Err(Error::NotHCore(_))));
        assert!(matches!(
            h_abacus_compose(&Partition::empty(), &p("1,1"), &Partition::empty()),
            Err(Error::NotStrict(_))
        ));
        assert!(matches!(h_abacus_decompose(&p("2,2")), Err(Error::NotStrict(_))));
    }

    #[test]
    fn stalemate_agrees_with_charge() {
        for n in 0..=20 {
            for lam in generate_partitions(n, PartitionFilter::Strict) {
                let dec = h_abacus_decompose(&lam).unwrap();
                assert_eq!(dec.core, h_core(dec.charge), "{lam}");
            }
        }
    }

    #[test]
    fn quotient_of_one_bead() {
        // slot 1 occupied with slot 0 vacant: one vacancy to the left
        let dec = h_abacus_decompose(&p("5")).unwrap();
        assert_eq!((dec.charge, dec.quotient1, dec.core), (1, p("1"), p("1")));
        let dec = h_abacus_decompose(&p("9")).unwrap();
        assert_eq!((dec.charge, dec.quotient1, dec.core), (1, p("2"), p("1")));
        // a hole at slot -1 and a bead at slot 1
        let dec = h_abacus_decompose(&p("5,3")).unwrap();
        assert_eq!((dec.charge, dec.quotient1, dec.core), (0, p("2"), p("")));
    }
}
