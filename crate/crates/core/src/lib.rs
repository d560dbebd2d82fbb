//! Exact μ-bases and implicit equations for rational planar curves and
//! rational ruled surfaces.
//!
//! A curve `(f0 : f1 : f2)` or a ruled surface `f_i = t̄·s̄^(n1-n0)·f_i0 + t·f_i1`
//! is described by homogeneous binary forms over the rationals. The syzygy
//! module of such a parametrization is free of rank two; its minimal-degree
//! basis `(p, q)` yields the implicit equation through the Sylvester
//! resultant `Res(p, q) = c·F^k`, where `k` is the degree of the
//! parametrization map.
//!
//! Ruled surfaces are handled through their associated Plücker curve
//! `(p03 : p13 : p23)`, whose syzygies are lifted back to moving planes.

pub mod cli;
pub mod curve;
pub mod error;
pub mod exact_poly;
pub mod expr_io;
pub mod implicit;
pub mod ruled;

pub use curve::{
    curve_implicitize, mu_basis_curve, syzygy_kernel_at_degree, verify_curve_implicit, CurveParam, MuBasisCurve,
};
pub use error::{Error, Result};
pub use exact_poly::{
    bareiss_det, hform_div_exact, hform_gcd, mpoly_kth_root, power_exponent_probe, sylvester_resultant, BiPoly, HForm,
    MPoly, Monomial, MovingForm, Poly, Rat,
};
pub use implicit::ImplicitResult;
pub use ruled::{
    degree_formula, lift_syzygy, mu_basis_surface, normalize, pluecker_all, project_syzygy, surface_implicitize,
    verify_implicit, NormalizationRecord, PlueckerSet, RuledParam, SurfaceMuBasis,
};
