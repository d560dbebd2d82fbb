use std::fmt;

use super::hform::HForm;
use super::poly::{MPoly, Monomial};
use crate::error::{Error, Result};

pub(crate) const VARS: [&str; 4] = ["x", "y", "z", "w"];

/// Linear form `Σ h_i·X_i` in `x, y, z` (moving line, arity 3) or
/// `x, y, z, w` (moving plane, arity 4) with coefficients in `K[s, s̄]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MovingForm {
    coeffs: Vec<HForm>,
    degree: usize,
}

impl MovingForm {
    /// All nonzero coefficients must share one degree; at least one must be nonzero.
    pub fn new(coeffs: Vec<HForm>) -> Result<Self> {
        if !(coeffs.len() == 3 || coeffs.len() == 4) {
            return Err(Error::InvalidMovingForm(format!("arity {} (expected 3 or 4)", coeffs.len())));
        }
        let mut degrees = coeffs.iter().filter_map(HForm::degree);
        let Some(degree) = degrees.next() else {
            return Err(Error::InvalidMovingForm("all coefficients are zero".into()));
        };
        if degrees.any(|d| d != degree) {
            return Err(Error::InvalidMovingForm("coefficients of unequal degree".into()));
        }
        Ok(Self { coeffs, degree })
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[HForm] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &HForm {
        &self.coeffs[i]
    }

    /// `Σ h_i·f_i`; `forms` must have the form's arity.
    pub fn apply(&self, forms: &[HForm]) -> HForm {
        assert_eq!(forms.len(), self.arity());
        self.coeffs.iter().zip(forms).fold(HForm::zero(), |acc, (h, f)| &acc + &(h * f))
    }

    pub fn mul_form(&self, a: &HForm) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|h| h * a).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    /// The linear polynomial `Σ_i coeff_j(h_i)·X_i`, where `coeff_j` picks the
    /// coefficient of `s^j·s̄^(μ-j)`.
    pub fn linear_coefficient(&self, j: usize) -> MPoly {
        let mut p = MPoly::zero();
        for (i, h) in self.coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), h.coeff(j));
        }
        p
    }

    /// Coefficient vector `[h_0 | h_1 | ...]`, each block of length `degree+1`.
    pub fn to_vector(&self) -> Vec<super::Rat> {
        self.coeffs.iter().flat_map(|h| (0..=self.degree).map(move |j| h.coeff(j))).collect()
    }

    /// Inverse of [`MovingForm::to_vector`].
    pub fn from_vector(v: &[super::Rat], arity: usize, degree: usize) -> Result<Self> {
        assert_eq!(v.len(), arity * (degree + 1));
        Self::new(v.chunks(degree + 1).map(|c| HForm::new(degree, c.to_vec())).collect())
    }

    /// Same syzygy up to a nonzero rational factor.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.arity() != other.arity() || self.degree != other.degree {
            return false;
        }
        super::linalg::rank(vec![self.to_vector(), other.to_vector()]) == 1
    }
}

impl fmt::Display for MovingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.coeffs.iter().zip(VARS).filter(|(h, _)| !h.is_zero()).map(|(h, v)| format!("({h})*{v}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(MovingForm::new(vec![HForm::zero(); 3]).is_err());
        assert!(MovingForm::new(vec![HForm::one(); 2]).is_err());
        let mixed = vec![HForm::one(), HForm::from_ints(1, &[0, 1]), HForm::zero()];
        assert!(MovingForm::new(mixed).is_err());
    }

    #[test]
    fn vector_roundtrip() {
        let m =
            MovingForm::new(vec![HForm::from_ints(1, &[1, 2]), HForm::zero(), HForm::from_ints(1, &[0, -1])]).unwrap();
        let v = m.to_vector();
        assert_eq!(MovingForm::from_vector(&v, 3, 1).unwrap(), m);
    }
}
