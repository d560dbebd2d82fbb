use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use super::upoly;
use crate::error::{Error, Result};

/// Homogeneous binary form in `(s, s̄)` over the rationals.
///
/// `coeffs[i]` is the coefficient of `s^i·s̄^(degree-i)`. The zero form has
/// no degree and is stored with an empty coefficient vector, so it is never
/// mistaken for a degree-0 form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HForm {
    coeffs: Vec<Rat>,
}

impl HForm {
    /// Form of the given degree; all-zero coefficients collapse to the zero form.
    ///
    /// Panics if `coeffs.len() != degree + 1`.
    pub fn new(degree: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "coefficient vector length must be degree+1");
        if coeffs.iter().all(Zero::is_zero) {
            Self::zero()
        } else {
            Self { coeffs }
        }
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Self {
        Self::new(degree, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(0, vec![c])
    }

    /// `c·s^i·s̄^(degree-i)`.
    pub fn monomial(c: Rat, i: usize, degree: usize) -> Self {
        assert!(i <= degree);
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[i] = c;
        Self::new(degree, coeffs)
    }

    /// Homogenizes the affine polynomial `Σ affine[i]·s^i` to the given degree.
    pub fn homogenize(affine: &[Rat], degree: usize) -> Result<Self> {
        let affine = upoly::trim(affine.to_vec());
        if affine.len() > degree + 1 {
            return Err(Error::Input(format!(
                "cannot homogenize a degree-{} polynomial to degree {degree}",
                affine.len() - 1
            )));
        }
        let mut coeffs = affine;
        coeffs.resize(degree + 1, Rat::zero());
        Ok(Self::new(degree, coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `s^i·s̄^(degree-i)`; zero outside the range.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Dehomogenization at `s̄ = 1`, trimmed.
    pub fn affine(&self) -> Vec<Rat> {
        upoly::trim(self.coeffs.clone())
    }

    /// Degree in `s` after setting `s̄ = 1`.
    pub fn affine_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Largest `e` with `s̄^e` dividing the form.
    pub fn sbar_valuation(&self) -> Option<usize> {
        Some(self.degree()? - self.affine_degree()?)
    }

    /// Coefficient of the highest power of `s` present.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.affine_degree().map(|i| &self.coeffs[i])
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let lc = lc.clone();
                Self { coeffs: self.coeffs.iter().map(|c| c / &lc).collect() }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `s̄^e`.
    pub fn mul_sbar_pow(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len() + e, Rat::zero());
        Self { coeffs }
    }

    /// Multiplies by `s^e`.
    pub fn mul_s_pow(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Dehomogenization at `s̄ = 1` as a polynomial in `(s, t)`.
    pub fn to_affine_poly(&self) -> super::BiPoly {
        super::BiPoly::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| ([i as u32, 0], c.clone())))
    }

    /// Forms that differ by a nonzero rational factor.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }
}

/// Monic gcd of two forms. Powers of `s̄` shared by both inputs are kept.
pub fn hform_gcd(a: &HForm, b: &HForm) -> Result<HForm> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::ZeroGcd),
        (false, true) => Ok(a.monic()),
        (true, false) => Ok(b.monic()),
        (false, false) => {
            let g = upoly::gcd(&a.affine(), &b.affine());
            let e = a.sbar_valuation().unwrap().min(b.sbar_valuation().unwrap());
            let d = upoly::degree(&g).unwrap();
            let mut coeffs = g;
            coeffs.resize(d + e + 1, Rat::zero());
            Ok(HForm::new(d + e, coeffs))
        }
    }
}

/// Monic gcd of every nonzero form in the slice; errors when all are zero.
pub fn hform_gcd_all<'a>(forms: impl IntoIterator<Item = &'a HForm>) -> Result<HForm> {
    let mut acc = HForm::zero();
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = hform_gcd(&acc, f)?;
    }
    if acc.is_zero() {
        Err(Error::ZeroGcd)
    } else {
        Ok(acc)
    }
}

/// Exact quotient `a / b`.
pub fn hform_div_exact(a: &HForm, b: &HForm) -> Result<HForm> {
    let db = b.degree().ok_or_else(|| Error::Input("division by the zero form".into()))?;
    let Some(da) = a.degree() else {
        return Ok(HForm::zero());
    };
    let non_exact = |remainder: HForm| Error::NonExactDivision { remainder };
    if da < db {
        return Err(non_exact(a.clone()));
    }
    let (q, r) = upoly::div_rem(&a.affine(), &b.affine());
    if !r.is_empty() {
        let mut coeffs = r;
        coeffs.resize(db.max(1), Rat::zero());
        let rd = coeffs.len() - 1;
        return Err(non_exact(HForm::new(rd, coeffs)));
    }
    let dq = da - db;
    if q.len() > dq + 1 {
        // the quotient would need negative powers of s̄
        return Err(non_exact(a.clone()));
    }
    HForm::homogenize(&q, dq)
}

impl Add for &HForm {
    type Output = HForm;
    fn add(self, rhs: &HForm) -> HForm {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degree");
        let d = self.degree().unwrap();
        HForm::new(d, self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HForm {
    type Output = HForm;
    fn sub(self, rhs: &HForm) -> HForm {
        self + &(-rhs)
    }
}

impl Neg for &HForm {
    type Output = HForm;
    fn neg(self) -> HForm {
        HForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &HForm {
    type Output = HForm;
    fn mul(self, rhs: &HForm) -> HForm {
        if self.is_zero() || rhs.is_zero() {
            return HForm::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let d = out.len() - 1;
        HForm::new(d, out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for HForm {
            type Output = HForm;
            fn $m(self, rhs: HForm) -> HForm { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for HForm {
    type Output = HForm;
    fn neg(self) -> HForm {
        -&self
    }
}

/// Homogeneous notation with `sb` standing for `s̄`, highest power of `s` first.
impl fmt::Display for HForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("s".to_string()),
                _ => mono.push(format!("s^{i}")),
            }
            match d - i {
                0 => {}
                1 => mono.push("sb".to_string()),
                e => mono.push(format!("sb^{e}")),
            }
            write_term(f, c, &mono.join("*"), first)?;
            first = false;
        }
        Ok(())
    }
}

/// Writes `± c*mono` with the conventions shared by all polynomial printers.
pub(crate) fn write_term(f: &mut impl fmt::Write, c: &Rat, mono: &str, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if mono.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{abs}*{mono}")
    }
}
