//! The labelled integer matrices built from the compound basis: A_n, Γ_n,
//! G_n = ᵗΓ_nΓ_n, ᵗA_nA_n and its diagonal blocks B_{n₀,n₁}.
//!
//! Rows of A_n are indexed by `λ ⊢ n`, columns by pairs `(μʳ, μᵈ)` with
//! `μ = φ⁻¹(μʳ, μᵈ)`, and `S_λ(x, x) = Σ_μ a_{λμ} W_μ(x)`.
//!
//! Two label orders are supported:
//!
//! - [`LabelOrder::Canonical`]: rows reverse-lexicographic; pairs by `n₀`
//!   descending, then `μʳ` and `μᵈ` reverse-lexicographic.
//! - [`LabelOrder::Printed`]: pairs list the principal class `(n, 0)` first and
//!   then the other classes by `n₀` ascending; rows of A_n follow their column
//!   partners under φ. This reproduces the printed layouts of A₃, A₄, ᵗA₃A₃ and
//!   ᵗA₄A₄.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::partition::{
    generate_partitions, glaisher, phi, phi_inverse, psi, two_core_quotient, Partition, PartitionFilter,
};
use crate::symfunc::{
    littlewood_richardson, schur, schur_p, stembridge_g, w_basis, InnerProductKind, Rational, SymFunc,
};

/// A row or column label: a partition, or a pair `(μʳ, μᵈ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Part(Partition),
    Pair(Partition, Partition),
}

impl Label {
    pub fn pair(r: &Partition, d: &Partition) -> Self {
        Self::Pair(r.clone(), d.clone())
    }

    /// The class `(n₀, n₁)` of the partition this label stands for.
    pub fn class(&self) -> (usize, usize) {
        match self {
            Self::Part(p) => crate::partition::split_class(p),
            Self::Pair(r, d) => (r.weight(), d.weight()),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Self::Part(p) => format!("({})", p.to_latex()),
            Self::Pair(r, d) => format!("({},{})", r.to_latex(), d.to_latex()),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Part(p) => write!(f, "{p}"),
            Self::Pair(r, d) => write!(f, "({r},{d})"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelOrder {
    /// Rows reverse-lexicographic; pairs by `n₀` descending, then each
    /// component reverse-lexicographic.
    #[default]
    Canonical,
    /// Classes `(n, 0)` first, then by `n₀` ascending; rows are `φ⁻¹` of the
    /// pair labels, so `A₄` has rows `(4), (31), (2²), (1⁴), (21²)`.
    Printed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledIntMatrix {
    pub n: usize,
    pub row_labels: Vec<Label>,
    pub col_labels: Vec<Label>,
    pub entries: IntMatrix,
}

impl LabeledIntMatrix {
    pub fn new(n: usize, row_labels: Vec<Label>, col_labels: Vec<Label>, entries: IntMatrix) -> Result<Self> {
        if entries.len() != row_labels.len() || entries.iter().any(|row| row.len() != col_labels.len()) {
            return Err(Error::Malformed(format!(
                "entries do not match {} row labels and {} column labels",
                row_labels.len(),
                col_labels.len()
            )));
        }
        Ok(Self { n, row_labels, col_labels, entries })
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries: linalg::transpose(&self.entries),
        }
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.entries)
    }

    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        linalg::smith_normal_form(&self.entries)
    }

    /// The same matrix with rows and columns listed in the given label order.
    pub fn permuted(&self, rows: &[Label], cols: &[Label]) -> Result<Self> {
        let index = |labels: &[Label]| -> HashMap<Label, usize> {
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect()
        };
        let (ri, ci) = (index(&self.row_labels), index(&self.col_labels));
        let lookup = |map: &HashMap<Label, usize>, l: &Label| {
            map.get(l).copied().ok_or_else(|| Error::InvalidArgument(format!("no label {l} in matrix")))
        };
        if rows.len() != self.rows() || cols.len() != self.cols() {
            return Err(Error::InvalidArgument("permutation changes the shape".into()));
        }
        let mut entries = Vec::with_capacity(rows.len());
        for r in rows {
            let i = lookup(&ri, r)?;
            let mut row = Vec::with_capacity(cols.len());
            for c in cols {
                row.push(self.entries[i][lookup(&ci, c)?].clone());
            }
            entries.push(row);
        }
        Ok(Self { n: self.n, row_labels: rows.to_vec(), col_labels: cols.to_vec(), entries })
    }

    /// First entry that differs from `other`, as `(row label, col label,
    /// expected, actual)` with `self` taken as the expected side.
    pub fn first_difference(&self, other: &Self) -> Option<(Label, Label, String, String)> {
        if self.row_labels != other.row_labels || self.col_labels != other.col_labels {
            return Some((
                Label::Part(Partition::empty()),
                Label::Part(Partition::empty()),
                format!("labels {:?} x {:?}", self.row_labels, self.col_labels),
                format!("labels {:?} x {:?}", other.row_labels, other.col_labels),
            ));
        }
        for (i, (a, b)) in self.entries.iter().zip(&other.entries).enumerate() {
            for (j, (x, y)) in a.iter().zip(b).enumerate() {
                if x != y {
                    return Some((
                        self.row_labels[i].clone(),
                        self.col_labels[j].clone(),
                        x.to_string(),
                        y.to_string(),
                    ));
                }
            }
        }
        None
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDocument {
    n: usize,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    entries: Vec<Vec<String>>,
}

impl Serialize for LabeledIntMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDocument {
            n: self.n,
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self.entries.iter().map(|row| row.iter().map(BigInt::to_string).collect()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabeledIntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = MatrixDocument::deserialize(deserializer)?;
        let entries = doc
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|_| D::Error::custom(format!("bad integer {s:?}"))))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LabeledIntMatrix::new(doc.n, doc.row_labels, doc.col_labels, entries).map_err(D::Error::custom)
    }
}

fn ensure_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// Classes `(n₀, n₁)` with `n₀ + 2n₁ = n` in the given order.
pub fn classes(n: usize, order: LabelOrder) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..=n / 2).map(|n1| (n - 2 * n1, n1)).collect();
    if order == LabelOrder::Printed {
        out[1..].sort_by_key(|&(n0, _)| n0);
    }
    out
}

/// The column labels `(μʳ, μᵈ)` of A_n.
pub fn pair_labels(n: usize, order: LabelOrder) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for (n0, n1) in classes(n, order) {
        for r in generate_partitions(n0, PartitionFilter::Strict) {
            for d in generate_partitions(n1, PartitionFilter::All) {
                out.push((r.clone(), d));
            }
        }
    }
    out
}

/// The row partitions of A_n.
pub fn row_partitions(n: usize, order: LabelOrder) -> Vec<Partition> {
    match order {
        LabelOrder::Canonical => generate_partitions(n, PartitionFilter::All),
        LabelOrder::Printed => pair_labels(n, order)
            .iter()
            .map(|(r, d)| phi_inverse(r, d).expect("pair labels have strict first component"))
            .collect(),
    }
}

fn part_labels(ps: &[Partition]) -> Vec<Label> {
    ps.iter().cloned().map(Label::Part).collect()
}

fn pair_label_vec(pairs: &[(Partition, Partition)]) -> Vec<Label> {
    pairs.iter().map(|(r, d)| Label::pair(r, d)).collect()
}

/// Coefficients of each target in the W basis of degree `n`: row `i` holds the
/// coordinates of `targets[i]` against [`pair_labels`] in canonical order.
pub fn expand_in_w(targets: &[SymFunc], n: usize) -> Result<Vec<Vec<Rational>>> {
    let keys = generate_partitions(n, PartitionFilter::All);
    let pairs = pair_labels(n, LabelOrder::Canonical);
    let basis: Vec<SymFunc> = pairs.par_iter().map(|(r, d)| w_basis(&phi_inverse(r, d).expect("strict"))).collect();
    for t in targets {
        if !t.is_homogeneous_of(n) {
            return Err(Error::InvalidArgument(format!("target is not homogeneous of degree {n}")));
        }
    }
    let m: Vec<Vec<Rational>> = keys.iter().map(|rho| basis.iter().map(|w| w.coeff(rho)).collect()).collect();
    let b: Vec<Vec<Rational>> = keys.iter().map(|rho| targets.iter().map(|t| t.coeff(rho)).collect()).collect();
    let x = linalg::solve_rational(&m, &b)?;
    Ok((0..targets.len()).map(|t| x.iter().map(|row| row[t].clone()).collect()).collect())
}

fn to_integer(value: &Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { what: what(), value: value.to_string() })
    }
}

// Canonical A_n by n; a cache of a pure function.
static A_MEMO: LazyLock<RwLock<HashMap<usize, LabeledIntMatrix>>> = LazyLock::new(Default::default);

fn build_a_canonical(n: usize) -> Result<LabeledIntMatrix> {
    if let Some(hit) = A_MEMO.read().expect("memo poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let rows = row_partitions(n, LabelOrder::Canonical);
    let pairs = pair_labels(n, LabelOrder::Canonical);
    let targets: Vec<SymFunc> = rows.par_iter().map(|lam| schur(lam).sub_double()).collect();
    let coeffs = expand_in_w(&targets, n)?;
    let mut entries = Vec::with_capacity(rows.len());
    for (lam, row) in rows.iter().zip(&coeffs) {
        let mut out = Vec::with_capacity(row.len());
        for ((r, d), c) in pairs.iter().zip(row) {
            out.push(to_integer(c, || format!("a_{{{lam},({r},{d})}}"))?);
        }
        entries.push(out);
    }
    let a = LabeledIntMatrix::new(n, part_labels(&rows), pair_label_vec(&pairs), entries)?;
    A_MEMO.write().expect("memo poisoned").insert(n, a.clone());
    Ok(a)
}

fn reorder_a(a: LabeledIntMatrix, n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    if order == LabelOrder::Canonical {
        return Ok(a);
    }
    a.permuted(&part_labels(&row_partitions(n, order)), &pair_label_vec(&pair_labels(n, order)))
}

/// A_n by solving `S_λ(x,x) = Σ_μ a_{λμ} W_μ` exactly; fails if any entry is
/// not an integer.
pub fn build_a(n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    ensure_positive(n)?;
    reorder_a(build_a_canonical(n)?, n, order)
}

/// A_n assembled entry by entry from
/// `a_{λμ} = Σ_{ν,ξ} δ(ξ) g_{μʳν} c^λ_{νξ} c^{μᵈ}_{ξ[0],ξ[1]}`.
pub fn build_a_combinatorial(n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    ensure_positive(n)?;
    let rows = row_partitions(n, LabelOrder::Canonical);
    let pairs = pair_labels(n, LabelOrder::Canonical);

    // Σ_ξ δ(ξ) c^{d}_{ξ[0],ξ[1]} S_ξ, as a sparse vector over ξ ⊢ 2|d|
    let square_expansion = |d: &Partition| -> Result<Vec<(Partition, BigInt)>> {
        let mut out = Vec::new();
        for xi in generate_partitions(2 * d.weight(), PartitionFilter::All) {
            let tq = two_core_quotient(&xi);
            if !tq.core2.is_empty() {
                continue;
            }
            let c = littlewood_richardson(&tq.q0, &tq.q1, d)?;
            if !c.is_zero() {
                out.push((xi, c * tq.sign));
            }
        }
        Ok(out)
    };

    // c^λ_{νξ} for every λ ⊢ n, keyed by (ν, ξ)
    let mut lr_rows: HashMap<(Partition, Partition), Vec<BigInt>> = HashMap::new();
    let mut lr_row = |nu: &Partition, xi: &Partition| -> Result<Vec<BigInt>> {
        if let Some(hit) = lr_rows.get(&(nu.clone(), xi.clone())) {
            return Ok(hit.clone());
        }
        let row = rows.iter().map(|lam| littlewood_richardson(nu, xi, lam)).collect::<Result<Vec<_>>>()?;
        lr_rows.insert((nu.clone(), xi.clone()), row.clone());
        Ok(row)
    };

    let mut columns = Vec::with_capacity(pairs.len());
    for (r, d) in &pairs {
        let mut col = vec![BigInt::zero(); rows.len()];
        let square = square_expansion(d)?;
        for nu in generate_partitions(r.weight(), PartitionFilter::All) {
            let g = stembridge_g(r, &nu)?;
            if g.is_zero() {
                continue;
            }
            for (xi, t) in &square {
                let lr = lr_row(&nu, xi)?;
                let weight = &g * t;
                for (entry, c) in col.iter_mut().zip(&lr) {
                    *entry += &weight * c;
                }
            }
        }
        columns.push(col);
    }
    let entries = linalg::transpose(&columns);
    let a = LabeledIntMatrix::new(n, part_labels(&rows), pair_label_vec(&pairs), entries)?;
    reorder_a(a, n, order)
}

/// Γ_n: the coefficients `γ_{λμ}` of `S_λ^{(2)} = Σ_{μ ∈ SP_n} γ_{λμ} Q_μ`,
/// read off with the `⟨,⟩₋₁` duality between Q and P. In x-coordinates the
/// 2-reduction of `S_λ` is `reduce2(S_λ(x, x))`.
pub fn build_gamma(n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    ensure_positive(n)?;
    let rows = row_partitions(n, order);
    let strict = generate_partitions(n, PartitionFilter::Strict);
    let ps: Vec<SymFunc> = strict.iter().map(schur_p).collect::<Result<_>>()?;
    let entries = rows
        .par_iter()
        .map(|lam| {
            let reduced = schur(lam).sub_double().reduce2();
            strict
                .iter()
                .zip(&ps)
                .map(|(mu, p)| {
                    let v = reduced.inner(p, InnerProductKind::MinusOne);
                    to_integer(&v, || format!("gamma_{{{lam},{mu}}}"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = strict.iter().map(|mu| Label::pair(mu, &Partition::empty())).collect();
    LabeledIntMatrix::new(n, part_labels(&rows), cols, entries)
}

/// `G_n = ᵗΓ_nΓ_n`.
pub fn gram_g(n: usize) -> Result<LabeledIntMatrix> {
    let gamma = build_gamma(n, LabelOrder::Canonical)?;
    let entries = linalg::mat_mul(&linalg::transpose(&gamma.entries), &gamma.entries);
    LabeledIntMatrix::new(n, gamma.col_labels.clone(), gamma.col_labels, entries)
}

/// `ᵗA_nA_n`, labelled by pairs on both sides.
pub fn cartan_like(n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    let a = build_a(n, LabelOrder::Canonical)?;
    let entries = linalg::mat_mul(&linalg::transpose(&a.entries), &a.entries);
    let m = LabeledIntMatrix::new(n, a.col_labels.clone(), a.col_labels, entries)?;
    if order == LabelOrder::Canonical {
        return Ok(m);
    }
    let labels = pair_label_vec(&pair_labels(n, order));
    m.permuted(&labels, &labels)
}

/// Splits `ᵗA_nA_n` into its diagonal blocks `B_{n₀,n₁}`, after checking that
/// every entry outside them is zero.
pub fn blocks(n: usize) -> Result<BTreeMap<(usize, usize), LabeledIntMatrix>> {
    split_blocks(&cartan_like(n, LabelOrder::Canonical)?)
}

/// Block decomposition of a square matrix whose labels carry a class.
pub fn split_blocks(m: &LabeledIntMatrix) -> Result<BTreeMap<(usize, usize), LabeledIntMatrix>> {
    let classes: Vec<(usize, usize)> = m.col_labels.iter().map(Label::class).collect();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if classes[i] != classes[j] && !m.entries[i][j].is_zero() {
                return Err(Error::Inconsistent(format!(
                    "off-block entry at ({}, {}) is {}",
                    m.row_labels[i], m.col_labels[j], m.entries[i][j]
                )));
            }
        }
    }
    let mut out = BTreeMap::new();
    for class in classes.iter().copied().collect::<std::collections::BTreeSet<_>>() {
        let idx: Vec<usize> = (0..m.cols()).filter(|&i| classes[i] == class).collect();
        let labels: Vec<Label> = idx.iter().map(|&i| m.col_labels[i].clone()).collect();
        let entries = idx.iter().map(|&i| idx.iter().map(|&j| m.entries[i][j].clone()).collect()).collect();
        out.insert(class, LabeledIntMatrix::new(m.n, labels.clone(), labels, entries)?);
    }
    Ok(out)
}

/// The single block `B_{n₀,n₁}` of `ᵗA_nA_n`.
pub fn block(n: usize, n0: usize, n1: usize) -> Result<LabeledIntMatrix> {
    if n0 + 2 * n1 != n || n == 0 {
        return Err(Error::InvalidBlock { n, n0, n1 });
    }
    blocks(n)?.remove(&(n0, n1)).ok_or(Error::InvalidBlock { n, n0, n1 })
}

/// The matrices that can be requested by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    A,
    Gamma,
    G,
    AtA,
    Block { n0: usize, n1: usize },
}

impl MatrixKind {
    /// `"A"`, `"Gamma"`, `"G"`, `"AtA"`, or `"block"` together with a class.
    pub fn parse(name: &str, class: Option<(usize, usize)>) -> Result<Self> {
        match (name, class) {
            ("A", None) => Ok(Self::A),
            ("Gamma", None) => Ok(Self::Gamma),
            ("G", None) => Ok(Self::G),
            ("AtA", None) => Ok(Self::AtA),
            ("block", Some((n0, n1))) => Ok(Self::Block { n0, n1 }),
            ("block", None) => Err(Error::InvalidArgument("kind block needs a class n0,n1".into())),
            ("A" | "Gamma" | "G" | "AtA", Some(_)) => {
                Err(Error::InvalidArgument(format!("kind {name} takes no block class")))
            }
            (other, _) => Err(Error::InvalidArgument(format!("unknown matrix kind {other:?}"))),
        }
    }

    /// Stable name used in cache keys.
    pub fn key(&self) -> String {
        match self {
            Self::A => "A".into(),
            Self::Gamma => "Gamma".into(),
            Self::G => "G".into(),
            Self::AtA => "AtA".into(),
            Self::Block { n0, n1 } => format!("block-{n0}-{n1}"),
        }
    }
}

pub fn build_matrix(kind: MatrixKind, n: usize, order: LabelOrder) -> Result<LabeledIntMatrix> {
    match kind {
        MatrixKind::A => build_a(n, order),
        MatrixKind::Gamma => build_gamma(n, order),
        MatrixKind::G => {
            ensure_positive(n)?;
            gram_g(n)
        }
        MatrixKind::AtA => cartan_like(n, order),
        MatrixKind::Block { n0, n1 } => block(n, n0, n1),
    }
}

/// `k_n = Σ_{λ ⊢ n} ℓ(λᵉ) = Σ_{λ ⊢ n} (ℓ(λ̃ʳ) − ℓ(λʳ))`, with both sums
/// computed and compared.
pub fn k_value(n: usize) -> Result<u64> {
    ensure_positive(n)?;
    let mut by_parity = 0u64;
    let mut by_glaisher = 0u64;
    for lam in generate_partitions(n, PartitionFilter::All) {
        by_parity += psi(&lam).1.len() as u64;
        let (r, _) = phi(&lam);
        by_glaisher += (glaisher(&r)?.len() - r.len()) as u64;
    }
    if by_parity != by_glaisher {
        return Err(Error::Inconsistent(format!(
            "k_{n}: sum of l(lambda^e) = {by_parity}, glaisher form = {by_glaisher}"
        )));
    }
    Ok(by_parity)
}

/// `|det|` as a power of two, if it is one.
pub fn log2_abs(value: &BigInt) -> Option<u64> {
    let v = value.abs();
    if v.is_zero() || (&v & (&v - 1u8)) != BigInt::zero() {
        return None;
    }
    Some(v.bits() - 1)
}
