use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Exponent vector ordered by graded reverse lexicographic order with
/// variable 0 largest (x > y > z > w).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub fn one() -> Self {
        Self([0; N])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Self(e)
    }

    /// `self / other` when every exponent stays nonnegative.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Self(e))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self(self.0.map(|a| a * k))
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..N).rev() {
                if self.0[i] != other.0[i] {
                    return other.0[i].cmp(&self.0[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `N` variables with rational coefficients.
/// Zero coefficients are never stored; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<Monomial<N>, Rat>,
}

/// Polynomial in `x, y, z, w`.
pub type MPoly = Poly<4>;
/// Polynomial in `s, t`.
pub type BiPoly = Poly<2>;

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Rat, m: Monomial<N>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(i: usize) -> Self {
        Self::term(Rat::one(), Monomial::var(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; N], Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn from_int_terms(terms: &[([u32; N], i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, super::rat(c))))
    }

    pub fn add_term(&mut self, m: Monomial<N>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<N>, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial<N>) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn leading_term(&self) -> Option<(&Monomial<N>, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_term(&self, c: &Rat, m: &Monomial<N>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self -= c·m·other`, in place.
    fn sub_scaled(&mut self, c: &Rat, m: &Monomial<N>, other: &Self) {
        for (e, a) in &other.terms {
            self.add_term(e.mul(m), -(a * c));
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        if self.is_integral() && divisor.is_integral() {
            if let Some(q) = self.div_exact_integral(divisor, &lm, lc.numer()) {
                return q;
            }
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let e = m.checked_div(&lm)?;
            let q = c / &lc;
            rem.sub_scaled(&q, &e, divisor);
            quot.add_term(e, q);
        }
        Some(quot)
    }

    /// Integer long division; the outer `None` means a non-integral quotient
    /// coefficient turned up and the rational path has to decide.
    fn div_exact_integral(&self, divisor: &Self, lm: &Monomial<N>, lc: &BigInt) -> Option<Option<Self>> {
        let mut rem: BTreeMap<Monomial<N>, BigInt> = self.terms.iter().map(|(m, c)| (*m, c.numer().clone())).collect();
        let div: Vec<(Monomial<N>, BigInt)> = divisor.terms.iter().map(|(m, c)| (*m, c.numer().clone())).collect();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.pop_last() {
            let Some(e) = m.checked_div(lm) else {
                return Some(None);
            };
            let (q, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (dm, dc) in &div {
                let mm = dm.mul(&e);
                if mm == m {
                    continue;
                }
                match rem.entry(mm) {
                    Entry::Vacant(v) => {
                        v.insert(-(dc * &q));
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= dc * &q;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(e, Rat::from_integer(q));
        }
        Some(Some(Self { terms: quot }))
    }

    /// Replaces variable `i` by `images[i]`.
    pub fn substitute<const M: usize>(&self, images: &[Poly<M>; N]) -> Poly<M> {
        let mut cache: Vec<Vec<Poly<M>>> = images.iter().map(|p| vec![Poly::one(), p.clone()]).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                if e > 0 {
                    t = &t * &cache[i][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates every variable except `keep`, returning ascending coefficients in `keep`.
    pub fn specialize_to_univariate(&self, keep: usize, values: &[Rat; N]) -> Vec<Rat> {
        let deg = self.degree_in(keep).unwrap_or(0) as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if i != keep && e > 0 {
                    v *= num_traits::pow(values[i].clone(), e as usize);
                }
            }
            out[m.0[keep] as usize] += v;
        }
        super::upoly::trim(out)
    }

    /// Returns `(content, primitive)` with `self = content·primitive`, the
    /// primitive part having coprime integer coefficients and a positive
    /// leading coefficient. Zero maps to `(0, 0)`.
    pub fn primitive_part(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::zero(), Self::zero());
        }
        let lcm_den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd_num = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm_den / c.denom()))));
        let mut content = Rat::new(gcd_num, lcm_den);
        if self.leading_term().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    /// Equal up to a nonzero rational factor.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        self.primitive_part().1 == other.primitive_part().1
    }

    /// Multiplies lower-degree terms by powers of variable `var` to reach the total degree.
    pub fn homogenize(&self, var: usize) -> Self {
        let Some(d) = self.total_degree() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            e[var] += d - m.degree();
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Sets variable `var` to 1.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            e[var] = 0;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Linear change of variables `X_i ↦ Σ_j a[i][j]·X_j`.
    pub fn linear_substitute(&self, a: &[[Rat; N]; N]) -> Self {
        let images: [Self; N] =
            std::array::from_fn(|i| Self::from_terms((0..N).map(|j| (Monomial::<N>::var(j).0, a[i][j].clone()))));
        self.substitute(&images)
    }
}

impl<const N: usize> Add for &Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<const N: usize> Mul for &Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        if self.is_integral() && rhs.is_integral() {
            let mut acc: BTreeMap<Monomial<N>, BigInt> = BTreeMap::new();
            for (ma, ca) in &self.terms {
                for (mb, cb) in &rhs.terms {
                    let prod = ca.numer() * cb.numer();
                    match acc.entry(ma.mul(mb)) {
                        Entry::Vacant(v) => {
                            v.insert(prod);
                        }
                        Entry::Occupied(mut o) => *o.get_mut() += prod,
                    }
                }
            }
            return Poly {
                terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m, Rat::from_integer(c))).collect(),
            };
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<const N: usize> $tr for Poly<N> {
            type Output = Poly<N>;
            fn $m(self, rhs: Poly<N>) -> Poly<N> { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<const N: usize> Neg for Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var(0)
    }
    fn y() -> MPoly {
        MPoly::var(1)
    }
    fn z() -> MPoly {
        MPoly::var(2)
    }

    #[test]
    fn grevlex_order_matches_display_convention() {
        // x^2y^2 > xy^3 > y^4 > x^2yz > xy^2z among degree-4 monomials
        let ms = [[2, 2, 0, 0], [1, 3, 0, 0], [0, 4, 0, 0], [2, 1, 1, 0], [1, 2, 1, 0], [2, 0, 2, 0]];
        for w in ms.windows(2) {
            assert!(Monomial(w[0]) > Monomial(w[1]), "{:?} !> {:?}", w[0], w[1]);
        }
        assert!(Monomial([0, 0, 0, 2]) < Monomial([0, 0, 2, 0]));
        assert!(Monomial([3, 0, 0, 0]) < Monomial([0, 0, 0, 4]));
    }

    #[test]
    fn exact_division_roundtrip_and_failure() {
        let a = &(&x() * &z()) - &(&y() * &y());
        let b = &x() + &z();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!((&prod + &MPoly::one()).div_exact(&b).is_none());
    }

    #[test]
    fn primitive_part_normalizes_sign_and_content() {
        let p =
            MPoly::from_terms([([1, 0, 0, 0], super::super::rat_frac(-3, 2)), ([0, 1, 0, 0], super::super::rat(3))]);
        let (c, q) = p.primitive_part();
        assert_eq!(c, super::super::rat_frac(-3, 2));
        assert_eq!(q, &x() - &(&y() + &y()));
        assert_eq!(&q.scale(&c), &p);
    }

    #[test]
    fn homogenize_and_dehomogenize() {
        let p = &(&x() * &y()) - &z();
        let h = p.homogenize(3);
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(3), p);
    }
}
