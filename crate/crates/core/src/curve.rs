//! μ-bases and implicit equations of rational planar curves `(f0 : f1 : f2)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_poly::{
    hform_div_exact, hform_gcd_all, mpoly_kth_root, nullspace, power_exponent_probe, rank, sylvester_resultant, HForm,
    MovingForm, Rat,
};
use crate::implicit::ImplicitResult;

/// Three binary forms of a common degree `n ≥ 1`, not all zero, whose gcd
/// has degree below `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParam {
    f: [HForm; 3],
    n: usize,
    gcd: HForm,
}

impl CurveParam {
    pub fn new(f: [HForm; 3]) -> Result<Self> {
        let mut degrees = f.iter().filter_map(HForm::degree);
        let Some(n) = degrees.next() else {
            return Err(Error::InvalidCurve("all three forms are zero".into()));
        };
        if degrees.any(|d| d != n) {
            return Err(Error::InvalidCurve("forms of unequal degree".into()));
        }
        if n == 0 {
            return Err(Error::InvalidCurve("degree must be at least 1".into()));
        }
        let gcd = hform_gcd_all(&f)?;
        if gcd.degree() == Some(n) {
            return Err(Error::InvalidCurve("gcd of the forms has full degree; the image is a point".into()));
        }
        Ok(Self { f, n, gcd })
    }

    /// Homogenizes three affine polynomials in `s` to their common maximal degree.
    pub fn from_affine(polys: &[Vec<Rat>; 3]) -> Result<Self> {
        let n = polys
            .iter()
            .filter_map(|p| p.iter().rposition(|c| !c.is_zero()))
            .max()
            .ok_or_else(|| Error::InvalidCurve("all three polynomials are zero".into()))?;
        let f = [HForm::homogenize(&polys[0], n)?, HForm::homogenize(&polys[1], n)?, HForm::homogenize(&polys[2], n)?];
        Self::new(f)
    }

    pub fn forms(&self) -> &[HForm; 3] {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Monic gcd of the three forms.
    pub fn gcd(&self) -> &HForm {
        &self.gcd
    }

    /// `n - deg(gcd)`, the sum of the μ-basis degrees.
    pub fn reduced_degree(&self) -> usize {
        self.n - self.gcd.degree().unwrap()
    }

    /// The triple divided by its gcd.
    pub fn reduced(&self) -> [HForm; 3] {
        self.f.clone().map(|f| hform_div_exact(&f, &self.gcd).expect("gcd divides each form"))
    }
}

/// μ-basis `(p, q)` of a curve, `deg p = μ1 ≤ μ2 = deg q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasisCurve {
    pub p: MovingForm,
    pub q: MovingForm,
    pub mu1: usize,
    pub mu2: usize,
    /// `μ1 = 0`: the curve lies on the line `p = 0`.
    pub degenerate_line: bool,
}

/// Basis of the degree-`d` syzygies `h0·x + h1·y + h2·z` of the gcd-reduced
/// triple, in reduced-row-echelon order.
pub fn syzygy_kernel_at_degree(c: &CurveParam, d: usize) -> Vec<MovingForm> {
    let f = c.reduced();
    let m = c.reduced_degree();
    let nrows = d + m + 1;
    let ncols = 3 * (d + 1);
    let mut rows = vec![vec![Rat::zero(); ncols]; nrows];
    for (i, fi) in f.iter().enumerate() {
        for (k, fk) in fi.coeffs().iter().enumerate() {
            if fk.is_zero() {
                continue;
            }
            for j in 0..=d {
                rows[j + k][i * (d + 1) + j] += fk;
            }
        }
    }
    nullspace(rows, ncols)
        .into_iter()
        .map(|v| MovingForm::from_vector(&v, 3, d).expect("kernel vectors are nonzero"))
        .collect()
}

/// Multiples `s^j·s̄^(e-j)·p` for `j = 0..=e`, as coefficient vectors of degree `deg p + e`.
fn shifted_multiples(p: &MovingForm, e: usize) -> Vec<Vec<Rat>> {
    (0..=e)
        .map(|j| {
            let a = HForm::monomial(Rat::from_integer(1.into()), j, e);
            p.mul_form(&a).expect("nonzero multiple").to_vector()
        })
        .collect()
}

pub fn mu_basis_curve(c: &CurveParam) -> Result<MuBasisCurve> {
    let m = c.reduced_degree();
    let (mu1, p) = (0..=m)
        .find_map(|d| syzygy_kernel_at_degree(c, d).into_iter().next().map(|p| (d, p)))
        .ok_or_else(|| Error::Internal("no syzygy found up to the reduced degree".into()))?;
    let mu2 = m - mu1;
    if mu2 < mu1 {
        return Err(Error::Internal(format!("μ1 = {mu1} exceeds half the reduced degree {m}")));
    }
    let mut span = shifted_multiples(&p, mu2 - mu1);
    let base_rank = rank(span.clone());
    let q = syzygy_kernel_at_degree(c, mu2)
        .into_iter()
        .find(|cand| {
            span.push(cand.to_vector());
            let grew = rank(span.clone()) > base_rank;
            span.pop();
            grew
        })
        .ok_or_else(|| Error::Internal(format!("no second generator in degree {mu2}")))?;
    Ok(MuBasisCurve { p, q, mu1, mu2, degenerate_line: mu1 == 0 })
}

/// Implicit equation `F` and map degree `k` from `Res(p, q) = c·F^k`.
pub fn curve_implicitize(c: &CurveParam, seed: u64) -> Result<ImplicitResult> {
    let basis = mu_basis_curve(c)?;
    implicit_from_basis(&basis.p, &basis.q, seed)
}

/// `F(f0, f1, f2) = 0` identically; `F` must be homogeneous in `x, y, z` with no `w`.
pub fn verify_curve_implicit(f: &crate::exact_poly::MPoly, c: &CurveParam) -> bool {
    if !f.is_homogeneous() || f.degree_in(3).unwrap_or(0) > 0 {
        return false;
    }
    let [a, b, cc] = c.forms().clone().map(|h| h.to_affine_poly());
    f.substitute(&[a, b, cc, crate::exact_poly::BiPoly::zero()]).is_zero()
}

/// Shared by curves and surfaces: resultant, exponent probe and root extraction.
pub(crate) fn implicit_from_basis(p: &MovingForm, q: &MovingForm, seed: u64) -> Result<ImplicitResult> {
    let res = sylvester_resultant(p, q)?;
    if res.is_zero() {
        return Err(Error::Internal("resultant of a μ-basis vanished".into()));
    }
    if res.total_degree() != Some((p.degree() + q.degree()) as u32) {
        return Err(Error::Internal("resultant degree differs from μ1 + μ2".into()));
    }
    let k = power_exponent_probe(&res, seed);
    let root =
        mpoly_kth_root(&res, k).map_err(|e| Error::Internal(format!("confirmed exponent failed to extract: {e}")))?;
    let degree = root.root.total_degree().unwrap_or(0);
    Ok(ImplicitResult {
        implicit: root.root.clone(),
        normalized_implicit: root.root,
        k,
        hypersurface_degree: degree,
        content: root.content,
        resultant: res,
        mu_degrees: (p.degree(), q.degree()),
        normalization: None,
    })
}
