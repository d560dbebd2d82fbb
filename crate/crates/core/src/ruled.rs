//! Ruled surfaces of bidegree `(n, 1)`:
//! `f_i = t̄·s̄^(n1-n0)·f_i0 + t·f_i1`, `i = 0..3`.
//!
//! The syzygies of the surface correspond one-to-one (degree preserving) to
//! the syzygies of the associated Plücker curve `(p03 : p13 : p23)` once
//! `gcd(f30, f31) = 1`. Normalization establishes that condition and records
//! the coordinate change so the implicit equation can be reported in the
//! caller's frame.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{implicit_from_basis, mu_basis_curve, CurveParam, MuBasisCurve};
use crate::error::{Error, Result};
use crate::exact_poly::{hform_div_exact, hform_gcd, hform_gcd_all, BiPoly, HForm, MPoly, MovingForm, Rat};
use crate::implicit::ImplicitResult;

/// Retry bound for the generic combination of step 3.
pub const COMBINATION_RETRIES: usize = 8;

/// Coefficient pairs `(f_i0, f_i1)` of a bidegree-`(n, 1)` parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledParam {
    slot0: [HForm; 4],
    slot1: [HForm; 4],
    n0: usize,
    n1: usize,
}

impl RuledParam {
    /// Nonzero entries of `slot0` must have degree `n0`, those of `slot1`
    /// degree `n1 ≥ n0`, and the two vectors must be independent over `R`.
    pub fn from_forms(slot0: [HForm; 4], slot1: [HForm; 4]) -> Result<Self> {
        let common = |v: &[HForm; 4]| -> Result<usize> {
            let mut it = v.iter().filter_map(HForm::degree);
            let d = it.next().ok_or_else(|| {
                Error::Degenerate("a coefficient vector is zero; parametrization does not define a surface".into())
            })?;
            if it.any(|e| e != d) {
                return Err(Error::Input("coefficient forms of unequal degree".into()));
            }
            Ok(d)
        };
        let n0 = common(&slot0)?;
        let n1 = common(&slot1)?;
        if n1 < n0 {
            return Err(Error::Input(format!("n1 = {n1} < n0 = {n0}")));
        }
        let p = Self { slot0, slot1, n0, n1 };
        if pluecker_all(&p).all().iter().all(HForm::is_zero) {
            return Err(Error::Degenerate(
                "all Plücker forms vanish; parametrization does not define a surface".into(),
            ));
        }
        Ok(p)
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    /// `(f_i0, f_i1)`.
    pub fn pair(&self, i: usize) -> (&HForm, &HForm) {
        (&self.slot0[i], &self.slot1[i])
    }

    pub fn slot0(&self) -> &[HForm; 4] {
        &self.slot0
    }

    pub fn slot1(&self) -> &[HForm; 4] {
        &self.slot1
    }

    pub fn pair_coprime(&self, i: usize) -> bool {
        hform_gcd(&self.slot0[i], &self.slot1[i]).is_ok_and(|g| g.degree() == Some(0))
    }

    /// `Σ h_i·f_i = 0` identically in `s, s̄, t, t̄`.
    pub fn annihilated_by(&self, h: &MovingForm) -> bool {
        h.arity() == 4 && h.apply(&self.slot0).is_zero() && h.apply(&self.slot1).is_zero()
    }

    /// Affine parametrization `f_i0(s) + t·f_i1(s)` in this frame.
    pub fn to_affine(&self) -> [BiPoly; 4] {
        std::array::from_fn(|i| {
            let t = BiPoly::var(1);
            &self.slot0[i].to_affine_poly() + &(&t * &self.slot1[i].to_affine_poly())
        })
    }
}

/// Actions applied by [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationRecord {
    /// Step 2: the roles of `t` and `t̄` were exchanged.
    pub t_swap: bool,
    /// Power of `s̄` in the common factor divided out of all eight forms.
    pub sbar_division: usize,
    /// Monic common factor of all eight forms that was divided out.
    pub common_factor: HForm,
    /// Step 3, first branch: coordinate `i` exchanged with coordinate 3.
    pub index_swap: Option<usize>,
    /// Step 3, second branch: `f3 ← α·f0 + β·f1 + γ·f2 + f3`.
    pub generic_combination: Option<[Rat; 3]>,
    /// Invertible matrix with `normalized = transform · original` on point
    /// coordinates, so `F_original(X) = F_normalized(transform · X)`.
    pub transform: [[Rat; 4]; 4],
    pub seed: u64,
}

fn identity() -> [[Rat; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rat::one() } else { Rat::zero() }))
}

fn affine_coeffs(p: &BiPoly, t_power: u32) -> Vec<Rat> {
    let deg = p.degree_in(0).unwrap_or(0) as usize;
    let mut out = vec![Rat::zero(); deg + 1];
    for (m, c) in p.terms() {
        if m.0[1] == t_power {
            out[m.0[0] as usize] = c.clone();
        }
    }
    crate::exact_poly::upoly::trim(out)
}

/// Steps 1-3: split into t-coefficients, order the slots so that `n1 ≥ n0`,
/// divide out common factors and make `gcd(f30, f31) = 1`.
pub fn normalize(raw: &[BiPoly; 4], seed: u64) -> Result<(RuledParam, NormalizationRecord)> {
    for (index, f) in raw.iter().enumerate() {
        let t_degree = f.degree_in(1).unwrap_or(0);
        if t_degree > 1 {
            return Err(Error::NotRuled { index, t_degree });
        }
    }
    let mut a0: Vec<Vec<Rat>> = raw.iter().map(|f| affine_coeffs(f, 0)).collect();
    let mut a1: Vec<Vec<Rat>> = raw.iter().map(|f| affine_coeffs(f, 1)).collect();
    let max_deg = |v: &[Vec<Rat>]| v.iter().filter(|p| !p.is_empty()).map(|p| p.len() - 1).max();
    let (Some(mut n0), Some(mut n1)) = (max_deg(&a0), max_deg(&a1)) else {
        return Err(Error::Degenerate(
            "step 1: a coefficient vector is zero; parametrization does not define a surface".into(),
        ));
    };
    let t_swap = n1 < n0;
    if t_swap {
        std::mem::swap(&mut a0, &mut a1);
        std::mem::swap(&mut n0, &mut n1);
    }
    let homog = |v: &[Vec<Rat>], d| -> Result<[HForm; 4]> {
        Ok([
            HForm::homogenize(&v[0], d)?,
            HForm::homogenize(&v[1], d)?,
            HForm::homogenize(&v[2], d)?,
            HForm::homogenize(&v[3], d)?,
        ])
    };
    let mut slot0 = homog(&a0, n0)?;
    let mut slot1 = homog(&a1, n1)?;

    let common = hform_gcd_all(slot0.iter().chain(&slot1))?;
    let sbar_division = common.sbar_valuation().unwrap_or(0);
    if common.degree() != Some(0) {
        for f in slot0.iter_mut().chain(slot1.iter_mut()) {
            *f = hform_div_exact(f, &common)?;
        }
    }
    let mut param = RuledParam::from_forms(slot0, slot1)?;

    let mut transform = identity();
    let mut index_swap = None;
    let mut generic_combination = None;
    if !param.pair_coprime(3) {
        if let Some(i) = (0..3).find(|&i| param.pair_coprime(i)) {
            param.slot0.swap(i, 3);
            param.slot1.swap(i, 3);
            transform.swap(i, 3);
            index_swap = Some(i);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut found = None;
            for _ in 0..COMBINATION_RETRIES {
                let abc: [Rat; 3] = std::array::from_fn(|_| Rat::from_integer(rng.gen_range(-9i64..=9).into()));
                let combine = |slot: &[HForm; 4]| (0..3).fold(slot[3].clone(), |acc, i| &acc + &slot[i].scale(&abc[i]));
                let c0 = combine(&param.slot0);
                let c1 = combine(&param.slot1);
                if hform_gcd(&c0, &c1).is_ok_and(|g| g.degree() == Some(0)) {
                    found = Some((abc, c0, c1));
                    break;
                }
            }
            let (abc, c0, c1) = found.ok_or(Error::NoCoprimeCombination { attempts: COMBINATION_RETRIES })?;
            param.slot0[3] = c0;
            param.slot1[3] = c1;
            for (j, a) in abc.iter().enumerate() {
                transform[3][j] = a.clone();
            }
            generic_combination = Some(abc);
        }
    }
    let record = NormalizationRecord {
        t_swap,
        sbar_division,
        common_factor: common,
        index_swap,
        generic_combination,
        transform,
        seed,
    };
    Ok((param, record))
}

/// The six Plücker forms `p_ij = f_i0·f_j1 - f_i1·f_j0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerSet {
    pub p01: HForm,
    pub p02: HForm,
    pub p03: HForm,
    pub p12: HForm,
    pub p13: HForm,
    pub p23: HForm,
}

impl PlueckerSet {
    /// In the order `p01, p02, p03, p12, p13, p23`.
    pub fn all(&self) -> [HForm; 6] {
        [self.p01.clone(), self.p02.clone(), self.p03.clone(), self.p12.clone(), self.p13.clone(), self.p23.clone()]
    }

    /// The associated curve `(p03, p13, p23)`.
    pub fn associated(&self) -> [HForm; 3] {
        [self.p03.clone(), self.p13.clone(), self.p23.clone()]
    }

    /// `p01·p23 - p02·p13 + p03·p12`.
    pub fn quadric_relation(&self) -> HForm {
        &(&(&self.p01 * &self.p23) - &(&self.p02 * &self.p13)) + &(&self.p03 * &self.p12)
    }
}

pub fn pluecker_all(p: &RuledParam) -> PlueckerSet {
    let m = |i: usize, j: usize| &(&p.slot0[i] * &p.slot1[j]) - &(&p.slot1[i] * &p.slot0[j]);
    PlueckerSet { p01: m(0, 1), p02: m(0, 2), p03: m(0, 3), p12: m(1, 2), p13: m(1, 3), p23: m(2, 3) }
}

/// `deg(S)·deg(Φ_S) = n1 + n0 - deg gcd(p03, p13, p23)`.
pub fn degree_formula(p: &RuledParam) -> Result<usize> {
    let pl = pluecker_all(p);
    let g = hform_gcd_all(&pl.associated()).map_err(|_| Error::Degenerate("p03, p13 and p23 all vanish".into()))?;
    Ok(p.n0 + p.n1 - g.degree().unwrap())
}

/// Lifts a syzygy `h0·x + h1·y + h2·z` of `(p03, p13, p23)` to the moving
/// plane `h0·x + h1·y + h2·z - (h0·f00 + h1·f10 + h2·f20)/f30 · w`.
pub fn lift_syzygy(h: &MovingForm, p: &RuledParam) -> Result<MovingForm> {
    if h.arity() != 3 {
        return Err(Error::ArityMismatch { left: h.arity(), right: 3 });
    }
    let head: Vec<HForm> = h.coeffs().to_vec();
    // f30 = 0 forces f31 to be a nonzero constant; use the t-slot relation then.
    let (slot, f3) = if p.slot0[3].is_zero() { (&p.slot1, &p.slot1[3]) } else { (&p.slot0, &p.slot0[3]) };
    let num = h.apply(&slot[..3]);
    let h3 = -hform_div_exact(&num, f3)?;
    let mut coeffs = head;
    coeffs.push(h3);
    let lifted = MovingForm::new(coeffs)?;
    if !p.annihilated_by(&lifted) {
        return Err(Error::Input("moving line is not a syzygy of the associated curve".into()));
    }
    Ok(lifted)
}

/// Drops the `w` coefficient (specialization `w = 0`).
pub fn project_syzygy(q: &MovingForm) -> Result<MovingForm> {
    if q.arity() != 4 {
        return Err(Error::ArityMismatch { left: q.arity(), right: 4 });
    }
    MovingForm::new(q.coeffs()[..3].to_vec())
        .map_err(|_| Error::Input("projection of the moving plane vanishes".into()))
}

/// μ-basis `(q1, q2)` of a ruled surface with the curve data it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceMuBasis {
    pub q1: MovingForm,
    pub q2: MovingForm,
    pub mu1: usize,
    pub mu2: usize,
    pub associated: CurveParam,
    pub curve_basis: MuBasisCurve,
}

/// Steps 4-6: μ-basis of the associated curve, lifted to moving planes.
pub fn mu_basis_surface(p: &RuledParam) -> Result<SurfaceMuBasis> {
    let pl = pluecker_all(p);
    let associated = CurveParam::new(pl.associated()).map_err(|e| match e {
        Error::InvalidCurve(msg) => Error::Degenerate(format!("associated curve: {msg}")),
        other => other,
    })?;
    let curve_basis = mu_basis_curve(&associated)?;
    let q1 = lift_syzygy(&curve_basis.p, p)?;
    let q2 = lift_syzygy(&curve_basis.q, p)?;
    Ok(SurfaceMuBasis { q1, q2, mu1: curve_basis.mu1, mu2: curve_basis.mu2, associated, curve_basis })
}

/// `Res(q1, q2) = c·F^k`; `F` is reported in both frames.
pub fn surface_implicitize(p: &RuledParam, rec: &NormalizationRecord, seed: u64) -> Result<ImplicitResult> {
    let basis = mu_basis_surface(p)?;
    let mut result = implicit_from_basis(&basis.q1, &basis.q2, seed)?;
    result.implicit = result.normalized_implicit.linear_substitute(&rec.transform).primitive_part().1;
    result.normalization = Some(rec.clone());
    Ok(result)
}

/// `F(f0, f1, f2, f3) = 0` identically, for homogeneous `F`.
pub fn verify_implicit(f: &MPoly, raw: &[BiPoly; 4]) -> bool {
    f.is_homogeneous() && f.substitute(raw).is_zero()
}
