//! Exact scalars, binary forms, sparse multivariate polynomials and the
//! determinant, resultant and root-extraction kernels built on them.

mod hform;
mod linalg;
mod moving;
mod poly;
mod power;
mod rat;
mod resultant;
pub(crate) mod upoly;

pub(crate) use hform::write_term;
pub use hform::{hform_div_exact, hform_gcd, hform_gcd_all, HForm};
pub use linalg::{bareiss_det, nullspace, rank, rref};
pub use moving::MovingForm;
pub use poly::{BiPoly, MPoly, Monomial, Poly};
pub use power::{mpoly_kth_root, power_exponent_probe, KthRoot, NotAPower, PROBE_RETRIES};
pub use rat::{rat, rat_frac, rat_slash, Rat};
pub use resultant::{sylvester_matrix, sylvester_resultant};
