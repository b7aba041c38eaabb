//! Classical 2-core, 2-quotient and 2-sign on the two-runner abacus.
//!
//! Beta-numbers are always taken with an even count `k`, so the runner of a
//! beta-number (its parity) does not depend on how much padding is used.
//! `q0` is read from the even runner and `q1` from the odd runner.
//!
//! The sign is `(−1)^{Σ leg lengths}` over any sequence of rim dominoes
//! stripping the partition down to its core, i.e. `(−1)^{#vertical dominoes}`
//! of any domino tiling of the skew shape `ξ / core`. This is independent of
//! the removal order and of the padding.

use serde::{Deserialize, Serialize};

use super::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoQuotient {
    /// Staircase `(k, k−1, …, 1)` or empty.
    pub core2: Partition,
    pub q0: Partition,
    pub q1: Partition,
    /// `δ(ξ) ∈ {+1, −1}`.
    pub sign: i8,
}

fn beta_set(xi: &Partition) -> Vec<usize> {
    let k = xi.len() + xi.len() % 2;
    (0..k).map(|i| xi.part(i) + k - 1 - i).collect()
}

fn from_beta_set(beta: &[usize]) -> Partition {
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let k = sorted.len();
    Partition::from_unsorted(sorted.iter().enumerate().map(|(i, b)| b - (k - 1 - i)).collect())
}

fn runner_partition(beads: &mut [usize]) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let c = beads.len();
    Partition::from_unsorted(beads.iter().enumerate().map(|(j, b)| b - (c - 1 - j)).collect())
}

pub fn two_core_quotient(xi: &Partition) -> TwoQuotient {
    let beta = beta_set(xi);
    let mut even: Vec<usize> = beta.iter().filter(|b| *b % 2 == 0).map(|b| b / 2).collect();
    let mut odd: Vec<usize> = beta.iter().filter(|b| *b % 2 == 1).map(|b| b / 2).collect();
    let q0 = runner_partition(&mut even);
    let q1 = runner_partition(&mut odd);

    let settled: Vec<usize> = (0..even.len()).map(|j| 2 * j).chain((0..odd.len()).map(|j| 2 * j + 1)).collect();
    let core2 = from_beta_set(&settled);

    TwoQuotient { core2, q0, q1, sign: domino_sign(&beta) }
}

/// Strips rim dominoes (moving a bead from `b` to a vacant `b − 2`) until none
/// is left; a domino has leg length 1 exactly when `b − 1` holds a bead.
fn domino_sign(beta: &[usize]) -> i8 {
    let mut beads: std::collections::BTreeSet<usize> = beta.iter().copied().collect();
    let mut sign = 1i8;
    while let Some(&b) = beads.iter().rev().find(|&&b| b >= 2 && !beads.contains(&(b - 2))) {
        if beads.contains(&(b - 1)) {
            sign = -sign;
        }
        beads.remove(&b);
        beads.insert(b - 2);
    }
    sign
}

/// The partition with the given 2-core and 2-quotient, with the beta-set
/// count chosen even. Returns `None` when `core2` is not a staircase.
pub fn two_quotient_compose(core2: &Partition, q0: &Partition, q1: &Partition) -> Option<Partition> {
    let t = core2.len();
    if *core2 != Partition::from_unsorted((1..=t).collect()) {
        return None;
    }
    // bead counts per runner are fixed by the core's own beta-set
    let k = (q0.len() + q1.len() + t + 2) * 2;
    let core_beta: Vec<usize> = (0..k).map(|i| core2.part(i) + k - 1 - i).collect();
    let n_even = core_beta.iter().filter(|b| *b % 2 == 0).count();
    let n_odd = k - n_even;
    let place = |q: &Partition, count: usize, residue: usize| -> Vec<usize> {
        (0..count).map(|j| 2 * (q.part(j) + count - 1 - j) + residue).collect()
    };
    let mut beta = place(q0, n_even, 0);
    beta.extend(place(q1, n_odd, 1));
    Some(from_beta_set(&beta))
}
