//! Generators and the named basis families.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use super::{pow2, rational_from, z_rational, Rational, SymFunc};
use crate::error::Result;
use crate::partition::{ensure_strict, generate_partitions, phi, Partition, PartitionFilter};

// Memo tables only; every value is a pure function of its key.
static SCHUR_MEMO: LazyLock<RwLock<HashMap<Partition, SymFunc>>> = LazyLock::new(Default::default);
static SCHUR_Q_MEMO: LazyLock<RwLock<HashMap<Partition, SymFunc>>> = LazyLock::new(Default::default);

fn memoized(
    table: &RwLock<HashMap<Partition, SymFunc>>,
    key: &Partition,
    compute: impl FnOnce() -> SymFunc,
) -> SymFunc {
    if let Some(hit) = table.read().expect("memo poisoned").get(key) {
        return hit.clone();
    }
    let value = compute();
    table.write().expect("memo poisoned").entry(key.clone()).or_insert(value).clone()
}

/// `h_r = Σ_{ρ ⊢ r} z_ρ^{−1} p_ρ`
pub fn complete_h(r: usize) -> SymFunc {
    SymFunc::from_terms(generate_partitions(r, PartitionFilter::All).into_iter().map(|rho| {
        let c = z_rational(&rho).recip();
        (rho, c)
    }))
}

/// `e_r = Σ_{ρ ⊢ r} (−1)^{r−ℓ(ρ)} z_ρ^{−1} p_ρ`
pub fn elementary_e(r: usize) -> SymFunc {
    SymFunc::from_terms(generate_partitions(r, PartitionFilter::All).into_iter().map(|rho| {
        let mut c = z_rational(&rho).recip();
        if (r - rho.len()) % 2 == 1 {
            c = -c;
        }
        (rho, c)
    }))
}

/// Coefficient of `u^r` in `∏ (1 + x_i u)/(1 − x_i u) = exp(2 Σ_{r odd} p_r u^r / r)`,
/// i.e. `Σ_{ρ ⊢ r odd} 2^{ℓ(ρ)} z_ρ^{−1} p_ρ`.
pub fn q_gen(r: usize) -> SymFunc {
    SymFunc::from_terms(generate_partitions(r, PartitionFilter::Odd).into_iter().map(|rho| {
        let c = pow2(rho.len() as i64) / z_rational(&rho);
        (rho, c)
    }))
}

/// `h_μ = ∏ h_{μ_i}`
pub fn h_product(mu: &Partition) -> SymFunc {
    mu.parts().iter().fold(SymFunc::one(), |acc, &r| &acc * &complete_h(r))
}

/// Determinant of a square matrix of symmetric functions by expansion over
/// column subsets, row by row.
fn determinant(entries: &[Vec<SymFunc>]) -> SymFunc {
    let k = entries.len();
    if k == 0 {
        return SymFunc::one();
    }
    let mut minors: HashMap<u32, SymFunc> = HashMap::new();
    minors.insert(0, SymFunc::one());
    for (row, row_entries) in entries.iter().enumerate() {
        let mut next: HashMap<u32, SymFunc> = HashMap::new();
        for (mask, partial) in &minors {
            debug_assert_eq!(mask.count_ones() as usize, row);
            for (col, entry) in row_entries.iter().enumerate() {
                if mask & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = partial * entry;
                if inversions % 2 == 1 {
                    term = -&term;
                }
                *next.entry(mask | (1 << col)).or_default() += &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        minors = next;
    }
    minors.remove(&((1u32 << k) - 1)).unwrap_or_default()
}

fn jacobi_trudi(lambda: &Partition, generator: fn(usize) -> SymFunc) -> SymFunc {
    let k = lambda.len();
    let entries: Vec<Vec<SymFunc>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let index = lambda.part(i) as i64 - i as i64 + j as i64;
                    if index < 0 {
                        SymFunc::zero()
                    } else {
                        generator(index as usize)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&entries)
}

/// Schur function by the Jacobi–Trudi determinant in `h` (or the dual one in
/// `e` on the conjugate, whichever matrix is smaller).
pub fn schur(lambda: &Partition) -> SymFunc {
    memoized(&SCHUR_MEMO, lambda, || {
        let conj = lambda.conjugate();
        if lambda.len() <= conj.len() {
            jacobi_trudi(lambda, complete_h)
        } else {
            jacobi_trudi(&conj, elementary_e)
        }
    })
}

/// `Q_{(a,b)} = q_a q_b + 2 Σ_{i=1}^{b} (−1)^i q_{a+i} q_{b−i}`, with `Q_{(a,0)} = q_a`.
fn schur_q_pair(a: usize, b: usize) -> SymFunc {
    let mut out = &q_gen(a) * &q_gen(b);
    for i in 1..=b {
        let mut term = (&q_gen(a + i) * &q_gen(b - i)).scale(&rational_from(2));
        if i % 2 == 1 {
            term = -&term;
        }
        out += &term;
    }
    out
}

fn pfaffian(indices: &[usize], pair: &dyn Fn(usize, usize) -> SymFunc) -> SymFunc {
    if indices.is_empty() {
        return SymFunc::one();
    }
    let first = indices[0];
    let mut out = SymFunc::zero();
    for pos in 1..indices.len() {
        let rest: Vec<usize> =
            indices[1..].iter().enumerate().filter(|&(i, _)| i + 1 != pos).map(|(_, &x)| x).collect();
        let mut term = &pair(first, indices[pos]) * &pfaffian(&rest, pair);
        if pos % 2 == 0 {
            term = -&term;
        }
        out += &term;
    }
    out
}

/// Schur's Q-function, via the Pfaffian of the two-row functions
/// `Q_{(λ_i, λ_j)}` (padding with a zero part to even length).
pub fn schur_q(lambda: &Partition) -> Result<SymFunc> {
    ensure_strict(lambda)?;
    Ok(memoized(&SCHUR_Q_MEMO, lambda, || match lambda.len() {
        0 => SymFunc::one(),
        1 => q_gen(lambda.part(0)),
        len => {
            let padded = len + len % 2;
            let parts: Vec<usize> = (0..padded).map(|i| lambda.part(i)).collect();
            let pair = |i: usize, j: usize| schur_q_pair(parts[i], parts[j]);
            pfaffian(&(0..padded).collect::<Vec<_>>(), &pair)
        }
    }))
}

/// `P_λ = 2^{−ℓ(λ)} Q_λ`
pub fn schur_p(lambda: &Partition) -> Result<SymFunc> {
    Ok(schur_q(lambda)?.scale(&pow2(-(lambda.len() as i64))))
}

/// `W_λ = Q_{λʳ}(x) · S_{λᵈ}(x²)`
pub fn w_basis(lambda: &Partition) -> SymFunc {
    let (r, d) = phi(lambda);
    let q = schur_q(&r).expect("λʳ is strict");
    &q * &schur(&d).sub_square()
}

/// `V_λ = P_{λʳ}(x) · S_{λᵈ}(x²)`
pub fn v_basis(lambda: &Partition) -> SymFunc {
    let (r, d) = phi(lambda);
    let p = schur_p(&r).expect("λʳ is strict");
    &p * &schur(&d).sub_square()
}

/// `Q′_λ = Q_{λʳ}(2t) h_{λᵈ}(t′)`, which in the `x` variables is
/// `Q_{λʳ}(x, x) · h_{λᵈ}(x²)`.
pub fn q_prime(lambda: &Partition) -> SymFunc {
    let (r, d) = phi(lambda);
    let q = schur_q(&r).expect("λʳ is strict");
    &q.sub_double() * &h_product(&d).sub_square()
}

/// `Σ_ρ z_ρ^{−1} χ^λ_ρ p_ρ` with characters from Murnaghan–Nakayama; an
/// independent route to [`schur`].
pub fn schur_from_characters(lambda: &Partition) -> SymFunc {
    let n = lambda.weight();
    SymFunc::from_terms(generate_partitions(n, PartitionFilter::All).into_iter().map(|rho| {
        let chi = super::character(lambda, &rho).expect("same weight");
        let c = Rational::from_integer(chi) / z_rational(&rho);
        (rho, c)
    }))
}
