//! Exact linear algebra over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free (Bareiss)
//! elimination over the integers; the echelon form is then back-substituted
//! to produce kernel vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rat;

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in row {
        l = l.lcm(c.denom());
    }
    row.iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect()
}

fn echelon(rows: &[Vec<Rat>], cols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            integer_row(r)
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in col + 1..cols {
                let num = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, cols }
}

/// Rank of the matrix with the given rows.
pub fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    echelon(rows, cols).pivots.len()
}

/// Basis of `{v : A v = 0}`. There is one vector per free column, carrying a 1
/// in that column and 0 in the other free columns.
pub fn kernel(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let e = echelon(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); e.cols];
            v[f] = Rat::one();
            back_substitute(&e, &mut v);
            v
        })
        .collect()
}

fn back_substitute(e: &Echelon, v: &mut [Rat]) {
    for (row, &pc) in e.rows.iter().zip(&e.pivots).rev() {
        let mut s = Rat::zero();
        for j in pc + 1..e.cols {
            if !row[j].is_zero() && !v[j].is_zero() {
                s += Rat::from_integer(row[j].clone()) * &v[j];
            }
        }
        v[pc] = -s / Rat::from_integer(row[pc].clone());
    }
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat], cols: usize) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), rhs.len(), "right-hand side length");
    let augmented: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(-b);
            r
        })
        .collect();
    let e = echelon(&augmented, cols + 1);
    if e.pivots.contains(&cols) {
        return None;
    }
    let mut v = vec![Rat::zero(); cols + 1];
    v[cols] = Rat::one();
    back_substitute(&e, &mut v);
    v.truncate(cols);
    Some(v)
}
