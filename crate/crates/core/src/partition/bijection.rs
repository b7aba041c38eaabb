//! The three bijections φ (multiplicity parity), ψ (part parity) and the
//! Glaisher map between strict and odd partitions.

use super::{ensure_odd, ensure_strict, Partition};
use crate::error::Result;

/// `λ ↦ (λʳ, λᵈ)` with `m_i(λʳ) = m_i(λ) mod 2` and `m_i(λᵈ) = ⌊m_i(λ)/2⌋`.
pub fn phi(lambda: &Partition) -> (Partition, Partition) {
    let mults = lambda.multiplicities();
    let r = Partition::from_multiplicities(mults.iter().map(|(&p, &m)| (p, m % 2)));
    let d = Partition::from_multiplicities(mults.iter().map(|(&p, &m)| (p, m / 2)));
    (r, d)
}

pub fn phi_inverse(r: &Partition, d: &Partition) -> Result<Partition> {
    ensure_strict(r)?;
    Ok(r.union(&d.union(d)))
}

/// The class `(n₀, n₁) = (|λʳ|, |λᵈ|)`, so that `λ ∈ P_{n₀,n₁}`.
pub fn split_class(lambda: &Partition) -> (usize, usize) {
    let (r, d) = phi(lambda);
    (r.weight(), d.weight())
}

/// `λ ↦ (λᵒ, λᵉ)`: the odd parts, and the halves of the even parts.
pub fn psi(lambda: &Partition) -> (Partition, Partition) {
    let odd = lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect();
    let halves = lambda.parts().iter().filter(|p| *p % 2 == 0).map(|p| p / 2).collect();
    (Partition::from_unsorted(odd), Partition::from_unsorted(halves))
}

pub fn psi_inverse(odd: &Partition, halves: &Partition) -> Result<Partition> {
    ensure_odd(odd)?;
    Ok(odd.union(&halves.scaled(2)))
}

/// Writes each part as `2^p·q` with `q` odd and contributes `2^p` copies of `q`.
pub fn glaisher(lambda: &Partition) -> Result<Partition> {
    ensure_strict(lambda)?;
    let mut parts = Vec::new();
    for &part in lambda.parts() {
        let shift = part.trailing_zeros();
        let odd = part >> shift;
        parts.extend(std::iter::repeat_n(odd, 1 << shift));
    }
    Ok(Partition::from_unsorted(parts))
}

/// Splits each multiplicity of an odd partition into its binary digits.
pub fn glaisher_inverse(lambda: &Partition) -> Result<Partition> {
    ensure_odd(lambda)?;
    let mut parts = Vec::new();
    for (odd, mut m) in lambda.multiplicities() {
        let mut power = 1;
        while m > 0 {
            if m & 1 == 1 {
                parts.push(odd * power);
            }
            m >>= 1;
            power <<= 1;
        }
    }
    Ok(Partition::from_unsorted(parts))
}
