//! Dense univariate polynomials over `Rat`, coefficients in ascending order.
//! Always trimmed: no trailing zeros, the zero polynomial is empty.

#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use super::rat::Rat;

pub(crate) fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[Rat]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn monic(p: &[Rat]) -> Vec<Rat> {
    match p.last() {
        None => Vec::new(),
        Some(lc) => p.iter().map(|c| c / lc).collect(),
    }
}

pub(crate) fn derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(i.into())).collect()
}

pub(crate) fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let zero = Rat::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = degree(b).expect("division by zero polynomial");
    let lc = &b[db];
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / lc;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = monic(&r);
    }
    monic(&x)
}

/// Multiplicities of the squarefree factors (Yun's algorithm). Constant
/// input yields an empty list.
pub(crate) fn squarefree_multiplicities(f: &[Rat]) -> Vec<usize> {
    let f = trim(f.to_vec());
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = derivative(&f);
    let a = gcd(&f, &df);
    let (mut b, _) = div_rem(&f, &a);
    let (c, _) = div_rem(&df, &a);
    let mut d = sub(&c, &derivative(&b));
    let mut mults = Vec::new();
    let mut i = 1;
    while degree(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            mults.push(i);
        }
        let (nb, _) = div_rem(&b, &a);
        let (c, _) = div_rem(&d, &a);
        b = nb;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    mults
}

#[cfg(test)]
pub(crate) fn is_one(p: &[Rat]) -> bool {
    p.len() == 1 && p[0].is_one()
}
