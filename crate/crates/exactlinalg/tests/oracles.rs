#![allow(clippy::needless_range_loop)]

use exactlinalg::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

/// Matrix with a planted dependent column: column `dup` = 2·col0 − col1.
fn dependent_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    small_matrix(5, 4).prop_map(|mut rows| {
        for r in rows.iter_mut() {
            let extra = 2 * r[0] - r.get(1).copied().unwrap_or(0);
            r.insert(r.len() / 2, extra);
        }
        rows
    })
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat_int(1);
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Plain rational row reduction, returning pivot columns.
fn naive_pivots(m: &RatMatrix) -> Vec<usize> {
    let mut a = m.to_rows();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        if let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) {
            a.swap(p, r);
            for i in r + 1..rows {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    pivots
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(rows in small_matrix(5, 5)) {
        let m = RatMatrix::from_i64(&rows).unwrap();
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn pivots_match_naive_elimination(rows in dependent_matrix()) {
        let m = RatMatrix::from_i64(&rows).unwrap();
        prop_assert_eq!(pivot_columns(&m), naive_pivots(&m));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(rows in (1usize..5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n))) {
        let m = RatMatrix::from_i64(&rows).unwrap();
        prop_assert_eq!(determinant(&m).unwrap(), cofactor_det(&m.to_rows()));
    }

    #[test]
    fn solve_matches_cramer(rows in (1usize..5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n)),
                            rhs in prop::collection::vec(-5i64..=5, 4)) {
        let m = RatMatrix::from_i64(&rows).unwrap();
        let n = m.nrows();
        let t: Vec<Rational> = rhs[..n].iter().map(|&x| rat_int(x)).collect();
        let det = cofactor_det(&m.to_rows());
        let sol = solve_in_span(&m, &t).unwrap();
        if det.is_zero() {
            if let Some(x) = sol {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), t);
            }
        } else {
            let x = sol.expect("nonsingular system is solvable");
            for (j, xj) in x.iter().enumerate() {
                let mut replaced = m.to_rows();
                for (i, row) in replaced.iter_mut().enumerate() {
                    row[j] = t[i].clone();
                }
                prop_assert_eq!(xj, &(cofactor_det(&replaced) / &det));
            }
        }
    }

    #[test]
    fn targets_in_span_are_reproduced(rows in dependent_matrix(), coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let b = RatMatrix::from_i64(&rows).unwrap();
        let c: Vec<Rational> = (0..b.ncols()).map(|j| rat_int(coeffs[j % coeffs.len()])).collect();
        let t = b.mul_vec(&c).unwrap();
        let x = solve_in_span(&b, &t).unwrap().expect("in span by construction");
        prop_assert_eq!(b.mul_vec(&x).unwrap(), t);
    }

    #[test]
    fn gram_matrices_are_psd(rows in small_matrix(4, 5)) {
        let b = RatMatrix::from_i64(&rows).unwrap();
        let g = b.transpose().mul(&b).unwrap();
        let r = psd_check(&g).unwrap();
        prop_assert!(r.psd);
        prop_assert_eq!(r.rank, rank(&b));
    }

    #[test]
    fn psd_verdict_is_consistent(upper in prop::collection::vec(-3i64..=3, 10)) {
        let n = 4;
        let mut rows = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                rows[i][j] = upper[k];
                rows[j][i] = upper[k];
                k += 1;
            }
        }
        let g = RatMatrix::from_i64(&rows).unwrap();
        let r = psd_check(&g).unwrap();
        if r.psd {
            for i in 0..n {
                prop_assert!(!g.get(i, i).is_negative());
                for j in i + 1..n {
                    let minor = g.get(i, i) * g.get(j, j) - g.get(i, j) * g.get(j, i);
                    prop_assert!(!minor.is_negative());
                }
            }
        } else {
            prop_assert!(witness_norm(&g, r.witness.as_ref().unwrap()).is_negative());
        }
    }

    #[test]
    fn inverse_is_two_sided(rows in (1usize..5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n))) {
        let m = RatMatrix::from_i64(&rows).unwrap();
        match inverse(&m).unwrap() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(m.nrows()));
                prop_assert_eq!(inv.mul(&m).unwrap(), RatMatrix::identity(m.nrows()));
            }
            None => prop_assert!(determinant(&m).unwrap().is_zero()),
        }
    }
}

#[test]
fn rational_strings_round_trip() {
    for (a, b) in [(-1, 12), (3, 1), (0, 5), (22, 7)] {
        let x = rat(a, b);
        assert_eq!(parse_rational(&fmt_rational(&x)).unwrap(), x);
    }
}
