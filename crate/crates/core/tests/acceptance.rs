//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails or exceeds its time limit.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::Value;

use compound_core::partition::{generate_partitions, h_abacus_decompose};
use compound_core::transition::{build_a, cartan_like, gram_g, k_value, log2_abs, split_blocks};
use compound_core::verify::{check_with_config, golden_k_values, golden_matrix, VerifyConfig};
use compound_core::{LabelOrder, LabeledIntMatrix, Partition, PartitionFilter};

type Outcome = Result<String, String>;

struct Criterion {
    number: usize,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "A_3 and A_4 match the printed matrices",
        limit: Duration::from_secs(1),
        run: golden_a,
    },
    Criterion {
        number: 2,
        title: "tA_3 A_3 and tA_4 A_4 match the printed matrices",
        limit: Duration::from_secs(1),
        run: golden_ata,
    },
    Criterion { number: 3, title: "k_n table for n = 1..8", limit: Duration::from_secs(5), run: k_table },
    Criterion { number: 4, title: "|det A_n| = 2^k_n for n <= 10", limit: Duration::from_secs(120), run: determinants },
    Criterion {
        number: 5,
        title: "A_n integral (n <= 10) and combinatorial (n <= 8)",
        limit: Duration::from_secs(120),
        run: integrality,
    },
    Criterion {
        number: 6,
        title: "W/V duality and Cauchy kernel for n <= 8",
        limit: Duration::from_secs(120),
        run: duality,
    },
    Criterion {
        number: 7,
        title: "elementary divisors of G_n for n <= 10",
        limit: Duration::from_secs(120),
        run: divisors,
    },
    Criterion {
        number: 8,
        title: "block determinants and block diagonality for n <= 8",
        limit: Duration::from_secs(120),
        run: blocks,
    },
    Criterion {
        number: 9,
        title: "length-sum identities for n <= 14",
        limit: Duration::from_secs(120),
        run: length_sums,
    },
    Criterion {
        number: 10,
        title: "h-abacus and the strict/pair correspondence",
        limit: Duration::from_secs(120),
        run: abacus,
    },
    Criterion { number: 11, title: "property suites", limit: Duration::from_secs(120), run: properties },
];

fn config() -> VerifyConfig {
    let mut config = VerifyConfig::default();
    for (id, cap) in [
        ("prop-3.1", 14),
        ("prop-4.1", 8),
        ("cor-4.2", 8),
        ("thm-4.3", 10),
        ("thm-4.5-via-formula", 10),
        ("thm-4.6", 10),
        ("thm-4.8", 8),
        ("prop-4.9", 8),
        ("frobenius", 8),
        ("eta-correspondence", 10),
        ("stembridge-structure", 10),
        ("qprime-kostka", 8),
        ("two-sign-oracle", 5),
    ] {
        config.caps.insert(id.to_string(), cap);
    }
    config.combinatorial_cap = 8;
    config
}

/// Runs `claim` at n = 1..=max_n, returning the pass details by n.
fn claim(id: &str, max_n: usize) -> Result<BTreeMap<usize, Value>, String> {
    let config = config();
    let mut details = BTreeMap::new();
    for n in 1..=max_n {
        let report = check_with_config(id, n, &config).map_err(|e| format!("{id} n={n}: {e}"))?;
        if !report.passed() {
            return Err(report.to_json_line());
        }
        details.insert(n, report.details);
    }
    Ok(details)
}

fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn same(what: &str, expected: &LabeledIntMatrix, actual: &LabeledIntMatrix) -> Result<(), String> {
    if expected.row_labels != actual.row_labels || expected.col_labels != actual.col_labels {
        return Err(format!("{what}: labels differ"));
    }
    match expected.first_difference(actual) {
        None => Ok(()),
        Some((r, c, e, a)) => Err(format!("{what}: entry ({r}, {c}) expected {e}, got {a}")),
    }
}

fn golden_a() -> Outcome {
    let a3 = build_a(3, LabelOrder::Printed).map_err(|e| e.to_string())?;
    if a3.entries != int_matrix(&[&[1, 0, 1], &[1, 1, 0], &[1, 0, -1]]) {
        return Err(format!("A_3 entries {:?}", a3.entries));
    }
    let a4 = build_a(4, LabelOrder::Printed).map_err(|e| e.to_string())?;
    let printed =
        int_matrix(&[&[1, 0, 1, 0, 1], &[1, 1, -1, 0, 1], &[0, 1, 1, 1, 0], &[1, 0, 0, 1, -1], &[1, 1, 0, -1, -1]]);
    if a4.entries != printed {
        return Err(format!("A_4 entries {:?}", a4.entries));
    }
    same("A_3", &golden_matrix("A", 3).ok_or("no A_3 fixture")?, &a3)?;
    same("A_4", &golden_matrix("A", 4).ok_or("no A_4 fixture")?, &a4)?;
    Ok("5x5 and 3x3 exact".into())
}

fn golden_ata() -> Outcome {
    let g3 = cartan_like(3, LabelOrder::Printed).map_err(|e| e.to_string())?;
    if g3.entries != int_matrix(&[&[3, 1, 0], &[1, 1, 0], &[0, 0, 2]]) {
        return Err(format!("tA_3 A_3 entries {:?}", g3.entries));
    }
    let g4 = cartan_like(4, LabelOrder::Printed).map_err(|e| e.to_string())?;
    let printed =
        int_matrix(&[&[4, 2, 0, 0, 0], &[2, 3, 0, 0, 0], &[0, 0, 3, 1, 0], &[0, 0, 1, 3, 0], &[0, 0, 0, 0, 4]]);
    if g4.entries != printed {
        return Err(format!("tA_4 A_4 entries {:?}", g4.entries));
    }
    same("tA_3 A_3", &golden_matrix("AtA", 3).ok_or("no fixture")?, &g3)?;
    same("tA_4 A_4", &golden_matrix("AtA", 4).ok_or("no fixture")?, &g4)?;
    Ok("exact".into())
}

/// Number of even parts, summed over all partitions of n, by direct recursion.
fn even_parts_total(n: usize) -> u64 {
    fn walk(rest: usize, max: usize, evens: u64, total: &mut u64) {
        if rest == 0 {
            *total += evens;
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            walk(rest - part, part, evens + u64::from(part % 2 == 0), total);
        }
    }
    let mut total = 0;
    walk(n, n, 0, &mut total);
    total
}

fn k_table() -> Outcome {
    let expected = [0u64, 1, 1, 4, 5, 11, 15, 28];
    let mut got = Vec::new();
    for n in 1..=8 {
        // k_value fails if its two defining sums disagree
        let k = k_value(n).map_err(|e| e.to_string())?;
        if k != even_parts_total(n) {
            return Err(format!("k_{n} = {k}, direct count {}", even_parts_total(n)));
        }
        got.push(k);
    }
    if got != expected {
        return Err(format!("k = {got:?}"));
    }
    let fixture: Vec<u64> = golden_k_values().into_iter().map(|(_, k)| k).collect();
    if fixture != expected {
        return Err(format!("fixture k = {fixture:?}"));
    }
    Ok(format!("{got:?}"))
}

fn determinants() -> Outcome {
    for n in 1..=10 {
        let det = build_a(n, LabelOrder::Canonical).map_err(|e| e.to_string())?.determinant();
        let k = even_parts_total(n);
        if log2_abs(&det) != Some(k) {
            return Err(format!("n={n}: det {det}, expected +-2^{k}"));
        }
    }
    claim("thm-4.6", 10)?;
    Ok("n = 1..10".into())
}

fn integrality() -> Outcome {
    let details = claim("thm-4.3", 10)?;
    for (n, d) in &details {
        if d["combinatorial"] != Value::Bool(*n <= 8) {
            return Err(format!("n={n}: combinatorial comparison flag {}", d["combinatorial"]));
        }
    }
    Ok("integral to 10, combinatorial to 8".into())
}

fn duality() -> Outcome {
    claim("cor-4.2", 8)?;
    claim("prop-4.1", 8)?;
    Ok("n = 1..8".into())
}

/// `2^{ℓ(λ̃) − ℓ(λ)}` with `λ̃` counted directly: a part `2^a m`, `m` odd,
/// becomes `2^a` parts.
fn divisor_oracle(n: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = generate_partitions(n, PartitionFilter::Strict)
        .iter()
        .map(|lam| {
            let expanded: usize = lam.parts().iter().map(|&p| 1usize << p.trailing_zeros()).sum();
            BigInt::from(1) << (expanded - lam.len())
        })
        .collect();
    out.sort();
    out
}

fn divisors() -> Outcome {
    for n in 1..=10 {
        let mut snf = gram_g(n).map_err(|e| e.to_string())?.smith_normal_form();
        snf.sort();
        if snf != divisor_oracle(n) {
            return Err(format!("n={n}: SNF {snf:?}"));
        }
    }
    claim("thm-4.5-via-formula", 10)?;
    Ok("n = 1..10".into())
}

fn blocks() -> Outcome {
    for n in 1..=8 {
        let ata = cartan_like(n, LabelOrder::Canonical).map_err(|e| e.to_string())?;
        let bs = split_blocks(&ata).map_err(|e| format!("n={n}: {e}"))?;
        let mut zeros = 0usize;
        for (i, r) in ata.row_labels.iter().enumerate() {
            for (j, c) in ata.col_labels.iter().enumerate() {
                if r.class() != c.class() {
                    if ata.entry(i, j) != &BigInt::from(0) {
                        return Err(format!("n={n}: off-block entry at ({r}, {c})"));
                    }
                    zeros += 1;
                }
            }
        }
        let covered: usize = bs.values().map(|b| b.rows() * b.rows()).sum();
        if covered + zeros != ata.rows() * ata.rows() {
            return Err(format!("n={n}: blocks do not tile the matrix"));
        }
    }
    claim("thm-4.8", 8)?;
    Ok("n = 1..8".into())
}

fn length_sums() -> Outcome {
    claim("prop-3.1", 14)?;
    Ok("n = 1..14, global and per class".into())
}

fn abacus() -> Outcome {
    // eta-correspondence at n covers SP_{2n-1} and SP_{2n}
    let details = claim("eta-correspondence", 10)?;
    for (n, d) in &details {
        let pairs = partition_pairs(*n);
        if d["count"] != pairs {
            return Err(format!("n={n}: count {} against {pairs}", d["count"]));
        }
    }
    let lam: Partition = "11,10,5,3,2".parse().map_err(|e| format!("{e}"))?;
    let dec = h_abacus_decompose(&lam).map_err(|e| e.to_string())?;
    let parts = |p: &Partition| p.parts().to_vec();
    if (parts(&dec.core), parts(&dec.shifted0), parts(&dec.quotient1)) != (vec![3], vec![5, 1], vec![3, 1]) {
        return Err(format!("worked example gave {};{},{}", dec.core, dec.shifted0, dec.quotient1));
    }
    Ok("weights 1..20, correspondence to 10".into())
}

/// `Σ_{n0 + 2 n1 = n} |SP_{n0}| · |P_{n1}|`.
fn partition_pairs(n: usize) -> usize {
    (0..=n / 2)
        .map(|n1| {
            let n0 = n - 2 * n1;
            generate_partitions(n0, PartitionFilter::Strict).len() * generate_partitions(n1, PartitionFilter::All).len()
        })
        .sum()
}

fn properties() -> Outcome {
    claim("stembridge-structure", 10)?;
    claim("two-sign-oracle", 5)?;
    claim("frobenius", 8)?;
    claim("prop-4.9", 8)?;
    claim("qprime-kostka", 8)?;
    Ok("Stembridge to 10, 2-sign to 5, the rest to 8".into())
}

fn main() -> ExitCode {
    let mut failures = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, note) = match outcome {
            Ok(note) if elapsed <= c.limit => ("PASS", note),
            Ok(note) => ("FAIL", format!("{note}; took {elapsed:?}, limit {:?}", c.limit)),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {:>2}: {status} ({:.3} s, limit {} s) {}: {note}",
            c.number,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            c.title
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
