//! Text emitters and parsers for matrices and symmetric functions.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{glaisher, glaisher_inverse, h_abacus_decompose, phi, psi, two_core_quotient};
use crate::symfunc::{Rational, SymFunc};
use crate::transition::{Label, LabeledIntMatrix};
use crate::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFormat {
    Json,
    Csv,
    Latex,
}

impl FromStr for MatrixFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "latex" => Ok(Self::Latex),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// How power sums are printed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VarConvention {
    /// `p_ρ` in the eigenvalue variables.
    #[default]
    X,
    /// Time variables with `p_j = j t_j`.
    TSchur,
    /// Time variables with `p_j = ½ j t_j`.
    TQ,
}

impl FromStr for VarConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Self::X),
            "t-schur" => Ok(Self::TSchur),
            "t-q" => Ok(Self::TQ),
            other => Err(Error::InvalidArgument(format!("unknown variable convention {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct BlockEntry<'a> {
    class: (usize, usize),
    labels: &'a [Label],
}

#[derive(Serialize)]
struct AnnotatedMatrix<'a> {
    #[serde(flatten)]
    matrix: &'a LabeledIntMatrix,
    blocks: Vec<BlockEntry<'a>>,
}

/// One-line JSON document, optionally listing the diagonal blocks by class.
pub fn matrix_json(
    m: &LabeledIntMatrix,
    blocks: Option<&BTreeMap<(usize, usize), LabeledIntMatrix>>,
) -> Result<String> {
    let mut out = match blocks {
        None => serde_json::to_string(m)?,
        Some(blocks) => serde_json::to_string(&AnnotatedMatrix {
            matrix: m,
            blocks: blocks.iter().map(|(&class, b)| BlockEntry { class, labels: &b.row_labels }).collect(),
        })?,
    };
    out.push('\n');
    Ok(out)
}

/// Parses a document written by [`matrix_json`]; a `blocks` field is ignored.
pub fn parse_matrix_json(text: &str) -> Result<LabeledIntMatrix> {
    Ok(serde_json::from_str(text)?)
}

/// Entries only, one row per line.
pub fn matrix_csv(m: &LabeledIntMatrix) -> String {
    let mut out = String::new();
    for row in &m.entries {
        let line: Vec<String> = row.iter().map(BigInt::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// A plain-TeX `\bordermatrix` with the labels on the border.
pub fn matrix_latex(m: &LabeledIntMatrix) -> String {
    let mut out = String::from("\\bordermatrix{\n  ");
    for label in &m.col_labels {
        let _ = write!(out, " & {}", label.to_latex());
    }
    out.push_str(" \\cr\n");
    for (i, (label, row)) in m.row_labels.iter().zip(&m.entries).enumerate() {
        let _ = write!(out, "  {}", label.to_latex());
        for x in row {
            let _ = write!(out, " & {x}");
        }
        out.push_str(if i + 1 == m.rows() { "}\n" } else { " \\cr\n" });
    }
    if m.rows() == 0 {
        out.push_str("}\n");
    }
    out
}

pub fn emit_matrix(
    m: &LabeledIntMatrix,
    format: MatrixFormat,
    blocks: Option<&BTreeMap<(usize, usize), LabeledIntMatrix>>,
) -> Result<String> {
    match format {
        MatrixFormat::Json => matrix_json(m, blocks),
        MatrixFormat::Csv => Ok(matrix_csv(m)),
        MatrixFormat::Latex => Ok(matrix_latex(m)),
    }
}

fn monomial(rho: &Partition, var: char) -> String {
    rho.multiplicities()
        .into_iter()
        .rev()
        .map(|(j, m)| if m == 1 { format!("{var}{j}") } else { format!("{var}{j}^{m}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The factor `c` with `p_ρ = c · t_ρ` in the given convention.
fn dictionary_factor(rho: &Partition, vars: VarConvention) -> Rational {
    let mut c = Rational::one();
    for &j in rho.parts() {
        c *= match vars {
            VarConvention::X => Rational::one(),
            VarConvention::TSchur => Rational::from_integer(j.into()),
            VarConvention::TQ => Rational::new(j.into(), 2.into()),
        };
    }
    c
}

/// Human-readable expansion, largest keys first, e.g. `4/3 p1^3 - 4/3 p3`
/// becomes `-4/3 p3 + 4/3 p1^3`.
pub fn display_symfunc(f: &SymFunc, vars: VarConvention) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let var = if vars == VarConvention::X { 'p' } else { 't' };
    let mut terms: Vec<_> = f.terms().collect();
    terms.reverse();
    let mut out = String::new();
    for (i, (rho, c)) in terms.into_iter().enumerate() {
        let c = c * dictionary_factor(rho, vars);
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = monomial(rho, var);
        if mono.is_empty() {
            let _ = write!(out, "{magnitude}");
        } else if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{magnitude} {mono}");
        }
    }
    out
}

/// Names accepted by [`decompose`].
pub const DECOMPOSE_MAPS: &[&str] = &["phi", "psi", "glaisher", "glaisher-inverse", "habacus", "2quot"];

/// One of the partition maps applied to `lambda`, as a JSON object holding
/// the map name, the input and the named outputs.
pub fn decompose(map: &str, lambda: &Partition) -> Result<serde_json::Value> {
    use serde_json::json;
    Ok(match map {
        "phi" => {
            let (r, d) = phi(lambda);
            json!({ "map": map, "input": lambda, "r": r, "d": d })
        }
        "psi" => {
            let (o, e) = psi(lambda);
            json!({ "map": map, "input": lambda, "odd": o, "halves": e })
        }
        "glaisher" => json!({ "map": map, "input": lambda, "output": glaisher(lambda)? }),
        "glaisher-inverse" => json!({ "map": map, "input": lambda, "output": glaisher_inverse(lambda)? }),
        "habacus" => {
            let dec = h_abacus_decompose(lambda)?;
            json!({
                "map": map,
                "input": lambda,
                "core": dec.core,
                "shifted0": dec.shifted0,
                "quotient1": dec.quotient1,
                "charge": dec.charge,
            })
        }
        "2quot" => {
            let tq = two_core_quotient(lambda);
            json!({ "map": map, "input": lambda, "core": tq.core2, "q0": tq.q0, "q1": tq.q1, "sign": tq.sign })
        }
        other => {
            return Err(Error::InvalidArgument(format!("unknown map {other:?}, expected one of {DECOMPOSE_MAPS:?}")))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{complete_h, schur, schur_q};
    use crate::transition::{blocks, build_a, cartan_like, LabelOrder};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn csv_of_a1() {
        assert_eq!(matrix_csv(&build_a(1, LabelOrder::Canonical).unwrap()), "1\n");
    }

    #[test]
    fn latex_of_a3() {
        let expected = "\\bordermatrix{\n   & (3,\\emptyset) & (21,\\emptyset) & (1,1) \\cr\n  (3) & 1 & 0 & 1 \\cr\n  (21) & 1 & 1 & 0 \\cr\n  (1^3) & 1 & 0 & -1}\n";
        assert_eq!(matrix_latex(&build_a(3, LabelOrder::Printed).unwrap()), expected);
    }

    #[test]
    fn json_with_blocks_round_trips() {
        let m = cartan_like(4, LabelOrder::Canonical).unwrap();
        let b = blocks(4).unwrap();
        let text = matrix_json(&m, Some(&b)).unwrap();
        assert!(text.contains(r#""blocks":[{"class":[0,2],"labels":[[[],[2]],[[],[1,1]]]}"#), "{text}");
        assert_eq!(parse_matrix_json(&text).unwrap(), m);
        let plain = matrix_json(&m, None).unwrap();
        assert!(!plain.contains("blocks"));
        assert_eq!(parse_matrix_json(&plain).unwrap(), m);
    }

    #[test]
    fn symfunc_display() {
        let q21 = schur_q(&p("2,1")).unwrap();
        assert_eq!(display_symfunc(&q21, VarConvention::X), "-4/3 p3 + 4/3 p1^3");
        // p3 = 3/2 t3 and p1^3 = 1/8 t1^3
        assert_eq!(display_symfunc(&q21, VarConvention::TQ), "-2 t3 + 1/6 t1^3");
        // h_2 = t2 + t1^2/2
        assert_eq!(display_symfunc(&complete_h(2), VarConvention::TSchur), "t2 + 1/2 t1^2");
        assert_eq!(display_symfunc(&schur(&Partition::empty()), VarConvention::X), "1");
        assert_eq!(display_symfunc(&SymFunc::zero(), VarConvention::X), "0");
    }

    #[test]
    fn decompositions() {
        let v = decompose("habacus", &p("11,10,5,3,2")).unwrap();
        assert_eq!(v["core"], serde_json::json!([3]));
        assert_eq!(v["charge"], -1);
        let v = decompose("2quot", &p("1,1")).unwrap();
        assert_eq!((v["q0"].clone(), v["sign"].clone()), (serde_json::json!([1]), serde_json::json!(-1)));
        assert!(decompose("glaisher", &p("2,2")).is_err());
        assert!(decompose("beta", &p("1")).is_err());
    }

    #[test]
    fn parse_options() {
        assert_eq!("t-q".parse::<VarConvention>().unwrap(), VarConvention::TQ);
        assert_eq!("latex".parse::<MatrixFormat>().unwrap(), MatrixFormat::Latex);
        assert!("yaml".parse::<MatrixFormat>().is_err());
    }
}
