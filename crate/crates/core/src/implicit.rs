use crate::exact_poly::{MPoly, Rat};
use crate::ruled::NormalizationRecord;

/// Implicit equation recovered from `Res(p, q) = content·F^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitResult {
    /// Primitive `F` in the original coordinates of the input.
    pub implicit: MPoly,
    /// Primitive `F` in the coordinates used for the computation. Equal to
    /// `implicit` unless normalization changed coordinates.
    pub normalized_implicit: MPoly,
    /// Degree of the parametrization map.
    pub k: u32,
    pub hypersurface_degree: u32,
    pub content: Rat,
    /// `Res(p, q)` in the normalized frame.
    pub resultant: MPoly,
    pub mu_degrees: (usize, usize),
    /// Present for surfaces only.
    pub normalization: Option<NormalizationRecord>,
}
