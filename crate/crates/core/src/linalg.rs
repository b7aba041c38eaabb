//! Dense exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::symfunc::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(k: usize) -> IntMatrix {
    (0..k).map(|i| (0..k).map(|j| BigInt::from(u8::from(i == j))).collect()).collect()
}

pub fn transpose(m: &[Vec<BigInt>]) -> IntMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect()
        })
        .collect()
}

/// Bareiss elimination in place on the first `pivot_cols` columns. Returns
/// the sign of the row permutation, or `None` when a pivot column is zero.
fn bareiss(m: &mut [Vec<BigInt>], pivot_cols: usize) -> Option<i8> {
    let rows = m.len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..pivot_cols.min(rows) {
        let pivot_row = (k..rows).find(|&i| !m[i][k].is_zero())?;
        if pivot_row != k {
            m.swap(pivot_row, k);
            sign = -sign;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..row.len() {
                row[j] = (&pivot[k] * &row[j] - &factor * &pivot[j]) / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = top[k][k].clone();
    }
    Some(sign)
}

pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == k), "determinant of a non-square matrix");
    let mut work = m.to_vec();
    match bareiss(&mut work, k) {
        Some(sign) => work[k - 1][k - 1].clone() * sign,
        None => BigInt::zero(),
    }
}

/// Solves `M X = B` for square nonsingular integer `M`, returning the
/// numerators `Y = det(M) X` and `det(M)` up to a common sign.
pub fn solve_fraction_free(m: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<(IntMatrix, BigInt)> {
    let k = m.len();
    let rhs = b.first().map_or(0, Vec::len);
    let mut work: IntMatrix = m.iter().zip(b).map(|(row, brow)| row.iter().chain(brow).cloned().collect()).collect();
    if k == 0 {
        return Ok((Vec::new(), BigInt::one()));
    }
    bareiss(&mut work, k).ok_or(Error::Singular)?;
    let det = work[k - 1][k - 1].clone();
    let mut y = vec![vec![BigInt::zero(); rhs]; k];
    for c in 0..rhs {
        for i in (0..k).rev() {
            let mut acc = &det * &work[i][k + c];
            for j in i + 1..k {
                acc -= &work[i][j] * &y[j][c];
            }
            let (q, r) = acc.div_rem(&work[i][i]);
            debug_assert!(r.is_zero(), "back substitution must divide exactly");
            y[i][c] = q;
        }
    }
    Ok((y, det))
}

/// Solves `M X = B` over the rationals, clearing denominators row by row
/// before running the fraction-free solver.
pub fn solve_rational(m: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let mut mi = Vec::with_capacity(m.len());
    let mut bi = Vec::with_capacity(b.len());
    for (row, brow) in m.iter().zip(b) {
        let lcm = row.iter().chain(brow).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale = |x: &Rational| (x * &lcm).to_integer();
        mi.push(row.iter().map(scale).collect::<Vec<_>>());
        bi.push(brow.iter().map(scale).collect::<Vec<_>>());
    }
    let (y, det) = solve_fraction_free(&mi, &bi)?;
    Ok(y.into_iter().map(|row| row.into_iter().map(|v| Rational::new(v, det.clone())).collect()).collect())
}

fn min_nonzero(m: &[Vec<BigInt>], from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.len() {
        for j in from..m[i].len() {
            if m[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Elementary divisors `d₁ | d₂ | …` (zeros last), one per row of `m`.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::with_capacity(rows);
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_nonzero(&a, t) else {
                diagonal.resize(rows, BigInt::zero());
                return diagonal;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, p) in bottom[0][t..cols].iter_mut().zip(&top[t][t..cols]) {
                        *x -= &q * p;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide everything left; otherwise fold the
            // offending row into row t and go again
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for (x, v) in top[t][t..cols].iter_mut().zip(&bottom[0][t..cols]) {
                        *x += v;
                    }
                }
                None => {
                    diagonal.push(pivot.abs());
                    break;
                }
            }
        }
    }
    diagonal.resize(rows, BigInt::zero());
    diagonal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Determinant by cofactor expansion along the first row.
    fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        (0..m.len())
            .map(|j| {
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * det_cofactor(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect()
    }

    /// `d₁⋯d_k` is the gcd of all k×k minors.
    fn divisors_from_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
        let n = m.len();
        let mut products = vec![BigInt::one()];
        for k in 1..=n {
            let mut g = BigInt::zero();
            for rs in subsets(n, k) {
                for cs in subsets(n, k) {
                    let minor: IntMatrix = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                    g = g.gcd(&det_cofactor(&minor));
                }
            }
            products.push(g);
        }
        (1..=n).map(|k| if products[k].is_zero() { BigInt::zero() } else { &products[k] / &products[k - 1] }).collect()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&[]), BigInt::one());
        assert_eq!(determinant(&int_matrix(&[&[3, 1], &[1, 1]])), BigInt::from(2));
        assert_eq!(determinant(&int_matrix(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&int_matrix(&[&[1, 2], &[2, 4]])), BigInt::zero());
        let a3 = int_matrix(&[&[1, 0, 1], &[1, 1, 0], &[1, 0, -1]]);
        assert_eq!(determinant(&a3), BigInt::from(-2));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_normal_form(&identity(3)), ints(&[1, 1, 1]));
        assert_eq!(smith_normal_form(&int_matrix(&[&[3, 1], &[1, 1]])), ints(&[1, 2]));
        assert_eq!(smith_normal_form(&int_matrix(&[&[4, 2], &[2, 3]])), ints(&[1, 8]));
        assert_eq!(smith_normal_form(&int_matrix(&[&[2, 0], &[0, 3]])), ints(&[1, 6]));
        assert_eq!(smith_normal_form(&int_matrix(&[&[2, 4], &[4, 8]])), ints(&[2, 0]));
        assert_eq!(smith_normal_form(&int_matrix(&[&[0, 0], &[0, 0]])), ints(&[0, 0]));
    }

    #[test]
    fn solve_examples() {
        let m = int_matrix(&[&[2, 1], &[1, 3]]);
        let b = int_matrix(&[&[3], &[5]]);
        let (y, det) = solve_fraction_free(&m, &b).unwrap();
        let x: Vec<Rational> = y.iter().map(|r| Rational::new(r[0].clone(), det.clone())).collect();
        assert_eq!(
            x,
            vec![
                Rational::from_integer(4.into()) / Rational::from_integer(5.into()),
                Rational::from_integer(7.into()) / Rational::from_integer(5.into())
            ]
        );
        assert!(matches!(
            solve_fraction_free(&int_matrix(&[&[1, 2], &[2, 4]]), &int_matrix(&[&[1], &[1]])),
            Err(Error::Singular)
        ));
    }

    fn small_matrix(k: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(prop::collection::vec(-6i64..=6, k), k)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(small_matrix)) {
            prop_assert_eq!(determinant(&m), det_cofactor(&m));
        }

        #[test]
        fn smith_matches_minor_gcds(m in (1usize..=4).prop_flat_map(small_matrix)) {
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.clone(), divisors_from_minors(&m));
            let product: BigInt = snf.iter().product();
            prop_assert_eq!(product, determinant(&m).abs());
        }

        #[test]
        fn rational_solve_satisfies_system(
            m in (1usize..=5).prop_flat_map(small_matrix),
            seed in prop::collection::vec(-9i64..=9, 5),
        ) {
            prop_assume!(!determinant(&m).is_zero());
            let k = m.len();
            let to_q = |x: &BigInt| Rational::from_integer(x.clone());
            let mq: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(to_q).collect()).collect();
            let bq: Vec<Vec<Rational>> = (0..k).map(|i| vec![Rational::new(seed[i].into(), BigInt::from(i + 1))]).collect();
            let x = solve_rational(&mq, &bq).unwrap();
            for i in 0..k {
                let lhs: Rational = (0..k).map(|j| &mq[i][j] * &x[j][0]).sum();
                prop_assert_eq!(&lhs, &bq[i][0]);
            }
        }
    }
}
