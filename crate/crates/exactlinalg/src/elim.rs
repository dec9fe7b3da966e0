use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{LinalgError, RatMatrix, Rational};

/// Rows scaled to integers, with the scale factor of each row.
fn integer_rows(m: &RatMatrix) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.nrows());
    let mut scales = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let l = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect(),
        );
        scales.push(l);
    }
    (rows, scales)
}

/// Fraction-free (Bareiss) reduction to row echelon form. Returns the pivot
/// columns and the number of row swaps. Pivot columns are the first linearly
/// independent columns in left-to-right order.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, usize) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub fn pivot_columns(m: &RatMatrix) -> Vec<usize> {
    let (mut a, _) = integer_rows(m);
    bareiss(&mut a, m.ncols()).0
}

pub fn rank(m: &RatMatrix) -> usize {
    pivot_columns(m).len()
}

pub fn determinant(m: &RatMatrix) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(
            "determinant of a non-square matrix".into(),
        ));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, scales) = integer_rows(m);
    let (pivots, swaps) = bareiss(&mut a, n);
    if pivots.len() < n {
        return Ok(Rational::zero());
    }
    let mut det = a[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        det = -det;
    }
    let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Ok(Rational::new(det, scale))
}

/// Gauss-Jordan reduction of the first `cols` columns in place; the rows
/// may carry extra augmented columns. Returns the pivot columns.
fn rref(a: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let width = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..width {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of {x : M x = 0}, one vector per free column.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let cols = m.ncols();
    let mut a = m.to_rows();
    let pivots = rref(&mut a, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for (k, &c) in pivots.iter().enumerate() {
                x[c] = -a[k][free].clone();
            }
            x
        })
        .collect()
}

/// Gauss-Jordan on [B | t]. Returns coefficients c with B c = t, free
/// variables set to zero, or `None` when t is not in the column span.
pub fn solve_in_span(b: &RatMatrix, t: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if t.len() != b.nrows() {
        return Err(LinalgError::Dimension(format!(
            "target of length {} for {} rows",
            t.len(),
            b.nrows()
        )));
    }
    let cols = b.ncols();
    let mut a: Vec<Vec<Rational>> = (0..b.nrows())
        .map(|i| {
            let mut r = b.row(i).to_vec();
            r.push(t[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut a, cols);
    let r = pivots.len();
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = a[k][cols].clone();
    }
    Ok(Some(x))
}

/// Unique solution of a square nonsingular system.
pub fn solve_unique(a: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::Dimension(
            "solve_unique needs a square matrix".into(),
        ));
    }
    if rank(a) < a.nrows() {
        return Ok(None);
    }
    solve_in_span(a, b)
}

pub fn inverse(m: &RatMatrix) -> Result<Option<RatMatrix>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(
            "inverse of a non-square matrix".into(),
        ));
    }
    let n = m.nrows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(None);
        };
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in 0..2 * n {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    let rows = a.into_iter().map(|r| r[n..].to_vec()).collect();
    RatMatrix::from_rows(rows).map(Some)
}
