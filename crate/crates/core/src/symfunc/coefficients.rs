//! Structure constants obtained from the Hall pairing.

use num_bigint::BigInt;

use super::{h_product, schur, schur_p, InnerProductKind, Rational, SymFunc};
use crate::error::{Error, Result};
use crate::partition::{ensure_same_weight, ensure_strict, Partition};

fn hall_integer(f: &SymFunc, g: &SymFunc, what: impl FnOnce() -> String) -> Result<BigInt> {
    let value: Rational = f.inner(g, InnerProductKind::Hall);
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { what: what(), value: value.to_string() })
    }
}

/// `c^λ_{νξ} = ⟨S_ν S_ξ, S_λ⟩`
pub fn littlewood_richardson(nu: &Partition, xi: &Partition, lambda: &Partition) -> Result<BigInt> {
    let weight = nu.weight() + xi.weight();
    if weight != lambda.weight() {
        return Err(Error::WeightMismatch { expected: weight, actual: lambda.weight() });
    }
    hall_integer(&(&schur(nu) * &schur(xi)), &schur(lambda), || format!("c^{lambda}_{{{nu},{xi}}}"))
}

/// `g_{μν} = ⟨P_μ, S_ν⟩`
pub fn stembridge_g(mu: &Partition, nu: &Partition) -> Result<BigInt> {
    ensure_strict(mu)?;
    ensure_same_weight(mu, nu)?;
    hall_integer(&schur_p(mu)?, &schur(nu), || format!("g_{{{mu},{nu}}}"))
}

/// `K_{νμ} = ⟨h_μ, S_ν⟩`
pub fn kostka(nu: &Partition, mu: &Partition) -> Result<BigInt> {
    ensure_same_weight(nu, mu)?;
    hall_integer(&h_product(mu), &schur(nu), || format!("K_{{{nu},{mu}}}"))
}
