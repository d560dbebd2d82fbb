use super::linalg::bareiss_det;
use super::moving::MovingForm;
use super::poly::MPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` (degree μ1) and `q` (degree μ2) in `s, s̄`: μ2 rows
/// of shifted `p` coefficients followed by μ1 rows of shifted `q`
/// coefficients, highest power of `s` in the leftmost column.
pub fn sylvester_matrix(p: &MovingForm, q: &MovingForm) -> Result<Vec<Vec<MPoly>>> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch { left: p.arity(), right: q.arity() });
    }
    let (m1, m2) = (p.degree(), q.degree());
    let n = m1 + m2;
    let mut rows = Vec::with_capacity(n);
    for (form, own, shifts) in [(p, m1, m2), (q, m2, m1)] {
        let coeffs: Vec<MPoly> = (0..=own).rev().map(|j| form.linear_coefficient(j)).collect();
        for r in 0..shifts {
            let mut row = vec![MPoly::zero(); n];
            for (c, coeff) in coeffs.iter().enumerate() {
                row[r + c] = coeff.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Homogeneous resultant of two moving forms with respect to `s, s̄`.
///
/// When `μ1 = 0` the matrix is diagonal and the result is `p^μ2`.
pub fn sylvester_resultant(p: &MovingForm, q: &MovingForm) -> Result<MPoly> {
    Ok(bareiss_det(&sylvester_matrix(p, q)?))
}
