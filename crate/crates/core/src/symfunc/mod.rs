//! Symmetric functions as sparse combinations of power-sum monomials
//! `p_ρ = p_{ρ₁} p_{ρ₂} ⋯` with exact rational coefficients.
//!
//! All internal arithmetic is in the eigenvalue variables `x`. The two
//! time-variable conventions (`p_j = j·t_j` on the Schur side, `p_j = ½·j·t_j`
//! on the Q side) only matter for display, see [`crate::format::display_symfunc`].

mod bases;
mod characters;
mod coefficients;

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::Partition;

pub use bases::{
    complete_h, elementary_e, h_product, q_gen, q_prime, schur, schur_from_characters, schur_p, schur_q, v_basis,
    w_basis,
};
pub use characters::{character, green_function, spin_character};
pub use coefficients::{kostka, littlewood_richardson, stembridge_g};

pub type Rational = BigRational;

/// The pairing on power sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerProductKind {
    /// `⟨p_ρ, p_σ⟩ = z_ρ δ_{ρσ}`
    Hall,
    /// `⟨p_ρ, p_σ⟩ = 2^{−ℓ(ρ)} z_ρ δ_{ρσ}`
    MinusOne,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

pub(crate) fn rational_from(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn z_rational(rho: &Partition) -> Rational {
    Rational::from_integer(BigInt::from(rho.z_factor()))
}

pub(crate) fn pow2(exp: i64) -> Rational {
    let base = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p_monomial(&Partition::empty())
    }

    /// The single term `p_ρ`.
    pub fn p_monomial(rho: &Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(rho.clone(), Rational::one());
        Self { terms }
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = Self::zero();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    pub fn add_term(&mut self, key: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `p_ρ`.
    pub fn coeff(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree-`n` component.
    pub fn homogeneous(&self, n: usize) -> Self {
        Self {
            terms: self.terms.iter().filter(|(k, _)| k.weight() == n).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|k| k.weight() == n)
    }

    /// True when every key has only odd parts, i.e. `f ∈ Γ`.
    pub fn is_in_odd_subring(&self) -> bool {
        self.terms.keys().all(Partition::is_odd)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    fn map_keys(&self, f: impl Fn(&Partition, &Rational) -> (Partition, Rational)) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| f(k, c)))
    }

    /// `f(x, x)`: the algebra map `p_r ↦ 2 p_r`.
    pub fn sub_double(&self) -> Self {
        self.map_keys(|k, c| (k.clone(), c * pow2(k.len() as i64)))
    }

    /// `f(x²)`: the algebra map `p_r ↦ p_{2r}`.
    pub fn sub_square(&self) -> Self {
        self.map_keys(|k, c| (k.scaled(2), c.clone()))
    }

    /// Drops every term involving an even power sum (the projection `Λ → Γ`).
    pub fn reduce2(&self) -> Self {
        Self { terms: self.terms.iter().filter(|(k, _)| k.is_odd()).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    pub fn inner(&self, other: &Self, kind: InnerProductKind) -> Rational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Rational::zero();
        for (key, a) in &small.terms {
            let Some(b) = large.terms.get(key) else { continue };
            let mut w = z_rational(key);
            if kind == InnerProductKind::MinusOne {
                w *= pow2(-(key.len() as i64));
            }
            acc += a * b * w;
        }
        acc
    }

    /// Coefficients scaled by `z_ρ`, which are integers for every Schur-like
    /// function built here.
    pub fn z_scaled(&self, rho: &Partition) -> Rational {
        self.coeff(rho) * z_rational(rho)
    }

    /// All coefficients with their keys, for serialisation.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(k, c)| TermRecord { key: k.clone(), num: c.numer().to_string(), den: c.denom().to_string() })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> crate::Result<Self> {
        let mut out = Self::zero();
        for r in records {
            let num: BigInt = r.num.parse().map_err(|_| crate::Error::Malformed(format!("numerator {:?}", r.num)))?;
            let den: BigUint =
                r.den.parse().map_err(|_| crate::Error::Malformed(format!("denominator {:?}", r.den)))?;
            if den.is_zero() {
                return Err(crate::Error::Malformed("zero denominator".into()));
            }
            out.add_term(r.key.clone(), Rational::new(num, BigInt::from(den)));
        }
        Ok(out)
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }
}

/// One term of the JSON form `{"key": [parts], "num": "…", "den": "…"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub key: Partition,
    pub num: String,
    pub den: String,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        SymFunc::from_records(&records).map_err(serde::de::Error::custom)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;

    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (ka, a) in &self.terms {
            for (kb, b) in &rhs.terms {
                out.add_term(ka.union(kb), a * b);
            }
        }
        out
    }
}
