//! Symmetric-group characters, spin characters and Green functions.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{pow2, rational_from, schur_q, z_rational, Rational};
use crate::error::{Error, Result};
use crate::partition::{ensure_odd, ensure_same_weight, ensure_strict, Partition};

fn beta_set(lambda: &Partition) -> BTreeSet<usize> {
    let k = lambda.len();
    (0..k).map(|i| lambda.part(i) + k - 1 - i).collect()
}

fn from_beta_set(beta: &BTreeSet<usize>) -> Partition {
    let k = beta.len();
    Partition::from_unsorted(beta.iter().rev().enumerate().map(|(i, b)| b - (k - 1 - i)).collect())
}

fn murnaghan_nakayama(lambda: &Partition, rho: &[usize], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
    let Some((&hook, rest)) = rho.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if let Some(v) = memo.get(&(lambda.clone(), rho.len())) {
        return v.clone();
    }
    let beta = beta_set(lambda);
    let mut total = BigInt::zero();
    for &b in &beta {
        if b < hook || beta.contains(&(b - hook)) {
            continue;
        }
        // leg length: beads strictly between the two positions
        let leg = beta.range(b - hook + 1..b).count();
        let mut moved = beta.clone();
        moved.remove(&b);
        moved.insert(b - hook);
        let value = murnaghan_nakayama(&from_beta_set(&moved), rest, memo);
        if leg.is_multiple_of(2) {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert((lambda.clone(), rho.len()), total.clone());
    total
}

/// `χ^λ_ρ` by the Murnaghan–Nakayama rule, stripping rim hooks of sizes
/// `ρ₁, ρ₂, …` in turn.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    ensure_same_weight(lambda, rho)?;
    Ok(murnaghan_nakayama(lambda, rho.parts(), &mut HashMap::new()))
}

fn to_integer(value: Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { what: what(), value: value.to_string() })
    }
}

fn check_spin_args(lambda: &Partition, sigma: &Partition) -> Result<()> {
    ensure_strict(lambda)?;
    ensure_odd(sigma)?;
    ensure_same_weight(lambda, sigma)
}

/// `X^λ_σ` from `Q_λ = Σ_σ 2^{ℓ(σ)} z_σ^{−1} X^λ_σ p_σ`.
pub fn green_function(lambda: &Partition, sigma: &Partition) -> Result<BigInt> {
    check_spin_args(lambda, sigma)?;
    let c = schur_q(lambda)?.coeff(sigma);
    let value = c * z_rational(sigma) * pow2(-(sigma.len() as i64));
    to_integer(value, || format!("X^{lambda}_{sigma}"))
}

/// `ζ^λ_ρ`, read from the coefficient of `t^{m}/m!` in `Q_λ(t)` under
/// `p_j = ½ j t_j`, which is `2^{(ℓ(λ)−ℓ(ρ)+ε)/2} ζ^λ_ρ`.
pub fn spin_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    check_spin_args(lambda, rho)?;
    let c = schur_q(lambda)?.coeff(rho);
    // p_ρ = 2^{−ℓ(ρ)} ∏ j^{m_j} t^m
    let mut t_coeff = c * pow2(-(rho.len() as i64));
    let mut factorials = BigInt::one();
    for (j, m) in rho.multiplicities() {
        for k in 1..=m {
            t_coeff *= rational_from(j);
            factorials *= k;
        }
    }
    let diff = lambda.len() as i64 - rho.len() as i64;
    let eps = diff.mod_floor(&2);
    let value = t_coeff * Rational::from_integer(factorials) * pow2(-(diff + eps) / 2);
    to_integer(value, || format!("ζ^{lambda}_{rho}"))
}
