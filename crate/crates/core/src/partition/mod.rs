//! Integer partitions and the combinatorial maps between classes of them.
//!
//! A [`Partition`] is always stored normalised: parts weakly decreasing and
//! strictly positive, so the derived `Ord` is the lexicographic order on part
//! sequences. Sorting descending gives the reverse-lexicographic order used
//! for every matrix label in this crate; it is a linear extension of the
//! dominance order.

mod abacus;
mod bijection;
mod two_quotient;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use abacus::{h_abacus_compose, h_abacus_decompose, h_core, AbacusDecomposition};
pub use bijection::{glaisher, glaisher_inverse, phi, phi_inverse, psi, psi_inverse, split_class};
pub use two_quotient::{two_core_quotient, two_quotient_compose, TwoQuotient};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Which partitions [`generate_partitions`] returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    /// Distinct parts.
    Strict,
    /// Odd parts only.
    Odd,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds a partition from `(part, multiplicity)` pairs in any order.
    pub fn from_multiplicities<I>(mults: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let parts = mults.into_iter().flat_map(|(part, m)| std::iter::repeat_n(part, m)).collect();
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Multiplicities `m_i(λ)` keyed by part, ascending.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Self {
        Self::from_unsorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self { parts }
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn z_factor(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigUint::from(part) * BigUint::from(k);
            }
        }
        z
    }

    /// Exponent notation accepted by [`FromStr`], e.g. `5^3,4^4,2^7,1`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .into_iter()
            .rev()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Compact label in the style `21^2`, `\emptyset` for the empty partition.
    /// Parts are comma-separated when any part has more than one digit.
    pub fn to_latex(&self) -> String {
        if self.is_empty() {
            return "\\emptyset".to_string();
        }
        let sep = if self.part(0) >= 10 { "," } else { "" };
        self.multiplicities()
            .into_iter()
            .rev()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5^3,4^4,2^7,1`, `[5,2,1]`, `(5,2,1)`, and `[]`, `()`, `∅` or
    /// the empty string for the empty partition. Parts may appear in any order.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParsePartition { input: s.to_string(), reason: reason.to_string() };
        let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
        if body.is_empty() || body == "∅" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| bad("parts must be integers"))?;
            let exp: usize = exp.parse().map_err(|_| bad("exponents must be integers"))?;
            if base == 0 {
                return Err(bad("parts must be positive"));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Ok(Self::from_unsorted(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

/// All partitions of `n` passing `filter`, in reverse-lexicographic order
/// (`(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`).
pub fn generate_partitions(n: usize, filter: PartitionFilter) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        filter: PartitionFilter,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            if filter == PartitionFilter::Odd && part % 2 == 0 {
                continue;
            }
            let next_max = match filter {
                PartitionFilter::Strict => part - 1,
                _ => part,
            };
            prefix.push(part);
            rec(remaining - part, next_max, filter, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    rec(n, n, filter, &mut Vec::new(), &mut out);
    out
}

/// `λ ⊴ μ` in dominance order: every prefix sum of `μ` is at least that of `λ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { expected: lambda.weight(), actual: mu.weight() });
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for i in 0..len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn ensure_strict(lambda: &Partition) -> Result<()> {
    if lambda.is_strict() {
        Ok(())
    } else {
        Err(Error::NotStrict(lambda.clone()))
    }
}

pub(crate) fn ensure_odd(lambda: &Partition) -> Result<()> {
    if lambda.is_odd() {
        Ok(())
    } else {
        Err(Error::NotOdd(lambda.clone()))
    }
}

pub(crate) fn ensure_same_weight(a: &Partition, b: &Partition) -> Result<()> {
    if a.weight() == b.weight() {
        Ok(())
    } else {
        Err(Error::WeightMismatch { expected: a.weight(), actual: b.weight() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn brute_force(n: usize, keep: impl Fn(&[usize]) -> bool) -> usize {
        // compositions of n filtered to weakly decreasing sequences
        fn comps(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in comps(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        comps(n).into_iter().filter(|c| c.windows(2).all(|w| w[0] >= w[1])).filter(|c| keep(c)).count()
    }

    #[test]
    fn generation_small_cases() {
        assert_eq!(generate_partitions(0, PartitionFilter::All), vec![Partition::empty()]);
        let p4 = generate_partitions(4, PartitionFilter::All);
        assert_eq!(p4, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        let sp8 = generate_partitions(8, PartitionFilter::Strict);
        assert_eq!(sp8, vec![p(&[8]), p(&[7, 1]), p(&[6, 2]), p(&[5, 3]), p(&[5, 2, 1]), p(&[4, 3, 1])]);
    }

    #[test]
    fn generation_counts_match_brute_force() {
        for n in 0..=12 {
            assert_eq!(generate_partitions(n, PartitionFilter::All).len(), brute_force(n, |_| true));
            assert_eq!(
                generate_partitions(n, PartitionFilter::Strict).len(),
                brute_force(n, |c| c.windows(2).all(|w| w[0] > w[1]))
            );
            assert_eq!(
                generate_partitions(n, PartitionFilter::Odd).len(),
                brute_force(n, |c| c.iter().all(|x| x % 2 == 1))
            );
        }
    }

    #[test]
    fn generation_is_reverse_lex_and_extends_dominance() {
        for n in 1..=10 {
            let ps = generate_partitions(n, PartitionFilter::All);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    // a comes first, so a can never be strictly dominated by b
                    assert!(!(dominance_leq(a, b).unwrap() && a != b));
                }
            }
        }
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(Partition::empty().z_factor(), BigUint::from(1u32));
        assert_eq!(p(&[1, 1, 1, 1, 1]).z_factor(), BigUint::from(120u32));
        assert_eq!(p(&[3, 1, 1]).z_factor(), BigUint::from(6u32));
        let twenty_fact: BigUint = (1u32..=20).map(BigUint::from).product();
        assert_eq!(Partition::from_multiplicities([(1, 20)]).z_factor(), twenty_fact);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1, 1, 1]), &p(&[4])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(matches!(dominance_leq(&p(&[3]), &p(&[2])), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=10 {
            let ps = generate_partitions(n, PartitionFilter::All);
            let leq = |a: &Partition, b: &Partition| dominance_leq(a, b).unwrap();
            for a in &ps {
                assert!(leq(a, a));
                for b in &ps {
                    if a != b && leq(a, b) {
                        assert!(!leq(b, a), "antisymmetry fails for {a} {b}");
                    }
                    if leq(a, b) {
                        for c in &ps {
                            if leq(b, c) {
                                assert!(leq(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parsing() {
        let lam: Partition = "5^3,4^4,2^7,1".parse().unwrap();
        assert_eq!(lam.weight(), 15 + 16 + 14 + 1);
        assert_eq!(lam.multiplicity(2), 7);
        assert_eq!(lam.to_exponent_string(), "5^3,4^4,2^7,1");
        assert_eq!("[5,2,1]".parse::<Partition>().unwrap(), p(&[5, 2, 1]));
        assert_eq!("1,2,5".parse::<Partition>().unwrap(), p(&[5, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn latex_labels() {
        assert_eq!(p(&[2, 1, 1]).to_latex(), "21^2");
        assert_eq!(p(&[1, 1, 1]).to_latex(), "1^3");
        assert_eq!(p(&[11, 10, 5]).to_latex(), "11,10,5");
        assert_eq!(Partition::empty().to_latex(), "\\emptyset");
    }

    #[test]
    fn json_round_trip() {
        let lam = p(&[5, 2, 1]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[5,2,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), lam);
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn conjugate_and_union() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 2, 2, 1]).conjugate().conjugate(), p(&[4, 2, 2, 1]));
        assert_eq!(p(&[5, 2]).union(&p(&[3, 2, 1])), p(&[5, 3, 2, 2, 1]));
    }
}
