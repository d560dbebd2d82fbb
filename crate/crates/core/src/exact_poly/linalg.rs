//! Exact linear algebra: reduced row echelon form over `Rat` and the
//! fraction-free determinant over polynomial entries.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Rat>>) -> usize {
    rref(rows).1.len()
}

/// Basis of `{v : A·v = 0}` for the `rows × ncols` matrix `A`, one vector per
/// free column in increasing column order.
pub fn nullspace(rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    let (reduced, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rat::zero(); ncols];
            v[free] = Rat::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Determinant by single-step fraction-free (Bareiss) elimination; every
/// division is exact. The empty matrix has determinant 1.
///
/// Panics if the matrix is not square.
pub fn bareiss_det<const N: usize>(matrix: &[Vec<Poly<N>>]) -> Poly<N> {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one();
    }
    // integer rows keep every intermediate coefficient integral
    let mut m = matrix.to_vec();
    let mut scale = Rat::one();
    for row in m.iter_mut() {
        let l = row
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()))
            .fold(num_bigint::BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, &d));
        if !l.is_one() {
            let l = Rat::from_integer(l);
            row.iter_mut().for_each(|p| *p = p.scale(&l));
            scale *= l;
        }
    }
    let scale = scale.recip();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("fraction-free step divides exactly");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].scale(&scale);
    if negate {
        -det
    } else {
        det
    }
}
