//! Test-only oracles and fixtures. Nothing here calls the μ-basis, resultant
//! or root-extraction code paths it is used to check.
#![allow(dead_code)]

use mubasis::exact_poly::{rat, HForm, MPoly, Monomial, Rat};
use mubasis::expr_io::parse_poly;
use mubasis::BiPoly;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const WORKED_RAW: [&str; 4] = ["s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"];

/// The reference quartic of the worked example, affine in `x, y, z`.
pub const WORKED_QUARTIC: &str = "4*x^2*y^2-4*x*y^3+y^4-4*x^2*y*z+2*x*y^2*z+x^2*z^2+4*x*y*z^2\
    -2*y^2*z^2-2*x*z^3+z^4-x^2+x*y+2*y^2-x*z-4*y*z+2*z^2";

pub fn raw(polys: [&str; 4]) -> [BiPoly; 4] {
    polys.map(|p| parse_poly(p).unwrap())
}

pub fn worked_raw() -> [BiPoly; 4] {
    raw(WORKED_RAW)
}

pub fn paraboloid() -> [BiPoly; 4] {
    raw(["s", "t", "s*t", "1"])
}

pub fn plane() -> [BiPoly; 4] {
    raw(["s", "t", "0", "1"])
}

pub fn var(i: usize) -> MPoly {
    MPoly::var(i)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Plain Gauss-Jordan nullspace, kept separate from the library's.
pub fn kernel(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            rows[r].iter_mut().for_each(|v| *v *= &inv);
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let pr = rows[r].clone();
                    rows[i].iter_mut().zip(pr).for_each(|(v, p)| *v -= &f * p);
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); ncols];
            v[free] = Rat::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

fn monomials_of_degree(d: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b, 0]);
        }
    }
    out
}

/// Lowest-degree homogeneous `F(x, y, z)` with `F(f0, f1, f2) = 0`, found by
/// solving for its unknown coefficients. Returns `(F, degree)`.
pub fn implicit_oracle_curve(f: &[HForm; 3]) -> (MPoly, u32) {
    let n = f.iter().filter_map(HForm::degree).next().unwrap();
    for d in 1..=(2 * n as u32 + 2) {
        let monos = monomials_of_degree(d);
        let len = d as usize * n + 1;
        let mut rows = vec![vec![Rat::zero(); monos.len()]; len];
        for (c, m) in monos.iter().enumerate() {
            let mut prod = HForm::one();
            for (i, &e) in m.iter().take(3).enumerate() {
                prod = &prod * &f[i].pow(e);
            }
            if prod.is_zero() {
                continue;
            }
            for (r, v) in prod.coeffs().iter().enumerate() {
                rows[r][c] = v.clone();
            }
        }
        let ker = kernel(rows, monos.len());
        if let Some(v) = ker.first() {
            assert_eq!(ker.len(), 1, "implicit equation of minimal degree is unique up to scalar");
            let p = MPoly::from_terms(monos.iter().zip(v).map(|(m, c)| (*m, c.clone())));
            return (p.primitive_part().1, d);
        }
    }
    panic!("no implicit equation found");
}

/// Coefficient-wise cross product of two moving lines.
pub fn cross(p: &[HForm], q: &[HForm]) -> [HForm; 3] {
    [&(&p[1] * &q[2]) - &(&p[2] * &q[1]), &(&p[2] * &q[0]) - &(&p[0] * &q[2]), &(&p[0] * &q[1]) - &(&p[1] * &q[0])]
}

/// `a = λ·b` for a single nonzero rational `λ`, coordinate-wise.
pub fn proportional(a: &[HForm], b: &[HForm]) -> bool {
    let mut lambda: Option<Rat> = None;
    for (x, y) in a.iter().zip(b) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (false, false) => {}
            _ => return false,
        }
        if x.degree() != y.degree() {
            return false;
        }
        for (cx, cy) in x.coeffs().iter().zip(y.coeffs()) {
            match (cx.is_zero(), cy.is_zero()) {
                (true, true) => continue,
                (false, false) => {
                    let l = cx / cy;
                    match &lambda {
                        None => lambda = Some(l),
                        Some(prev) if *prev == l => {}
                        Some(_) => return false,
                    }
                }
                _ => return false,
            }
        }
    }
    lambda.is_some()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_form(rng: &mut ChaCha8Rng, degree: usize, range: i64) -> HForm {
    loop {
        let c: Vec<Rat> = (0..=degree).map(|_| rat(rng.gen_range(-range..=range))).collect();
        let h = HForm::new(degree, c);
        if !h.is_zero() {
            return h;
        }
    }
}

/// Substitutes `(s, s̄) ↦ (h0, h1)` into a form.
pub fn compose(f: &HForm, h0: &HForm, h1: &HForm) -> HForm {
    let Some(d) = f.degree() else {
        return HForm::zero();
    };
    let mut acc = HForm::zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&h0.pow(i as u32) * &h1.pow((d - i) as u32)).scale(c);
    }
    acc
}

/// Random curve of degree ≤ `max_n`. Variants: plain, with a common factor,
/// or composed with a degree-r reparametrization (so the map degree is r).
pub fn random_curve_forms(rng: &mut ChaCha8Rng, max_n: usize) -> [HForm; 3] {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let n = rng.gen_range(1..=max_n);
            std::array::from_fn(|_| random_form(rng, n, 3))
        }
        2 => {
            let n = rng.gen_range(1..max_n.max(2));
            let g = random_form(rng, 1, 2);
            std::array::from_fn(|_| &random_form(rng, n, 3) * &g)
        }
        _ => {
            let r = rng.gen_range(2..=3usize);
            let m = rng.gen_range(1..=(max_n / r).max(1));
            let h0 = random_form(rng, r, 2);
            let h1 = random_form(rng, r, 2);
            let base: [HForm; 3] = std::array::from_fn(|_| random_form(rng, m, 3));
            base.map(|f| compose(&f, &h0, &h1))
        }
    }
}

fn random_affine(rng: &mut ChaCha8Rng, max_deg: usize, zero_prob: f64) -> Vec<i64> {
    if rng.gen_bool(zero_prob) {
        return Vec::new();
    }
    let d = rng.gen_range(0..=max_deg);
    (0..=d).map(|_| rng.gen_range(-3..=3)).collect()
}

fn affine_to_bipoly(c0: &[i64], c1: &[i64]) -> BiPoly {
    let mut terms: Vec<([u32; 2], i64)> = Vec::new();
    for (i, &c) in c0.iter().enumerate() {
        terms.push(([i as u32, 0], c));
    }
    for (i, &c) in c1.iter().enumerate() {
        terms.push(([i as u32, 1], c));
    }
    BiPoly::from_int_terms(&terms)
}

/// Random affine ruled parametrization with `n0, n1 ≤ max_deg`. Some draws
/// substitute `s ↦ s^2` (map degree 2), zero out `f30`, or share a linear
/// factor in `s` so normalization has to divide it out.
pub fn random_surface_raw(rng: &mut ChaCha8Rng, max_deg: usize) -> [BiPoly; 4] {
    let variant = rng.gen_range(0..5);
    let deg = match variant {
        1 => (max_deg / 2).max(1),
        3 => max_deg - 1,
        _ => max_deg,
    };
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> =
        (0..4).map(|_| (random_affine(rng, deg, 0.15), random_affine(rng, deg, 0.15))).collect();
    match variant {
        1 => {
            // s ↦ s^2
            let spread = |c: &Vec<i64>| {
                c.iter().enumerate().flat_map(|(i, &v)| if i == 0 { vec![v] } else { vec![0, v] }).collect::<Vec<_>>()
            };
            for p in pairs.iter_mut() {
                *p = (spread(&p.0), spread(&p.1));
            }
        }
        2 => pairs[3].0.clear(),
        _ => {}
    }
    let polys: [BiPoly; 4] = std::array::from_fn(|i| affine_to_bipoly(&pairs[i].0, &pairs[i].1));
    if variant == 3 {
        let g = BiPoly::from_int_terms(&[([1, 0], 1), ([0, 0], rng.gen_range(-2..=2))]);
        return polys.map(|p| &p * &g);
    }
    polys
}

pub fn monomial(e: [u32; 4]) -> Monomial<4> {
    Monomial(e)
}

/// Every curve-side invariant on one instance.
pub fn check_curve(forms: &[HForm; 3], seed: u64) -> Result<(), String> {
    use mubasis::{curve_implicitize, mu_basis_curve, verify_curve_implicit, CurveParam};
    let c = CurveParam::new(forms.clone()).map_err(|e| e.to_string())?;
    let b = mu_basis_curve(&c).map_err(|e| e.to_string())?;
    let n = c.degree();
    let g = c.gcd().degree().unwrap_or(0);
    if b.mu1 + b.mu2 != n - g || b.mu1 > b.mu2 {
        return Err(format!("degree sum {} + {} vs {n} - {g}", b.mu1, b.mu2));
    }
    if !b.p.apply(forms).is_zero() || !b.q.apply(forms).is_zero() {
        return Err("basis does not annihilate".into());
    }
    if !proportional(&cross(b.p.coeffs(), b.q.coeffs()), &c.reduced()) {
        return Err("cross product is not proportional to the reduced triple".into());
    }
    let r = curve_implicitize(&c, seed).map_err(|e| e.to_string())?;
    if r.hypersurface_degree * r.k != (b.mu1 + b.mu2) as u32 {
        return Err(format!("deg F {} · k {} ≠ {}", r.hypersurface_degree, r.k, b.mu1 + b.mu2));
    }
    if !verify_curve_implicit(&r.implicit, &c) {
        return Err("F does not vanish on the curve".into());
    }
    Ok(())
}

/// Every surface-side invariant on one instance; `Ok(false)` means the draw
/// was degenerate and skipped.
pub fn check_surface(raw: &[BiPoly; 4], seed: u64) -> Result<bool, String> {
    use mubasis::{
        degree_formula, lift_syzygy, mu_basis_surface, normalize, pluecker_all, project_syzygy, surface_implicitize,
        verify_implicit, Error,
    };
    let (p, rec) = match normalize(raw, seed) {
        Ok(v) => v,
        Err(Error::Degenerate(_)) => return Ok(false),
        Err(e) => return Err(e.to_string()),
    };
    let pl = pluecker_all(&p);
    if !pl.quadric_relation().is_zero() {
        return Err("Plücker quadric fails".into());
    }
    if p.pair_coprime(3) {
        let small = mubasis::exact_poly::hform_gcd_all(&pl.associated()).map_err(|e| e.to_string())?;
        let big = mubasis::exact_poly::hform_gcd_all(&pl.all()).map_err(|e| e.to_string())?;
        if small != big {
            return Err(format!("gcd of associated forms {small} vs all six {big}"));
        }
    }
    let formula = degree_formula(&p).map_err(|e| e.to_string())?;
    let b = mu_basis_surface(&p).map_err(|e| e.to_string())?;
    if b.mu1 + b.mu2 != formula {
        return Err(format!("μ1 + μ2 = {} vs formula {formula}", b.mu1 + b.mu2));
    }
    if !p.annihilated_by(&b.q1) || !p.annihilated_by(&b.q2) {
        return Err("surface basis does not annihilate".into());
    }
    let cb = &b.curve_basis;
    if !proportional(&cross(cb.p.coeffs(), cb.q.coeffs()), &b.associated.reduced()) {
        return Err("associated cross product fails".into());
    }
    for q in [&b.q1, &b.q2] {
        let h = project_syzygy(q).map_err(|e| e.to_string())?;
        if &lift_syzygy(&h, &p).map_err(|e| e.to_string())? != q {
            return Err("lift ∘ project is not the identity".into());
        }
    }
    let mut r = rng(seed ^ 0x5eed);
    for _ in 0..3 {
        let a = random_form(&mut r, 1, 3);
        let c = random_form(&mut r, 1 + cb.mu2 - cb.mu1, 3);
        let h = cb.p.mul_form(&c).and_then(|x| x.add(&cb.q.mul_form(&a)?)).map_err(|e| e.to_string())?;
        let lifted = lift_syzygy(&h, &p).map_err(|e| e.to_string())?;
        if lifted.degree() != h.degree() || project_syzygy(&lifted).map_err(|e| e.to_string())? != h {
            return Err("project ∘ lift is not the identity".into());
        }
    }
    let res = surface_implicitize(&p, &rec, seed).map_err(|e| e.to_string())?;
    if res.hypersurface_degree as usize * res.k as usize != formula {
        return Err(format!("deg F {} · k {} ≠ {formula}", res.hypersurface_degree, res.k));
    }
    if !verify_implicit(&res.implicit, raw) {
        return Err("F fails in the original frame".into());
    }
    let other = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let (p2, rec2) = normalize(raw, other).map_err(|e| e.to_string())?;
    let res2 = surface_implicitize(&p2, &rec2, other).map_err(|e| e.to_string())?;
    if !res2.implicit.is_scalar_multiple_of(&res.implicit) {
        return Err("two seeds disagree".into());
    }
    Ok(true)
}

/// Every worked example as a CLI invocation.
pub const GOLDEN_CLI: &[&[&str]] = &[
    &["pluecker", "s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"],
    &["degrees", "s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"],
    &["mubasis-surface", "s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"],
    &["implicitize-surface", "s^2+t*(s^2-1)", "1+t*(-s^2+1)", "1+t*(-s^6+1)", "t*(-s^6-2*s^2)"],
    &[
        "implicitize-surface",
        "s^2+t*(s^2-1)",
        "1+t*(-s^2+1)",
        "1+t*(-s^6+1)",
        "t*(-s^6-2*s^2)",
        "--frame",
        "normalized",
    ],
    &["mubasis-surface", "s", "t", "s*t", "1"],
    &["implicitize-surface", "s", "t", "s*t", "1"],
    &["pluecker", "s", "t", "s*t", "1"],
    &["implicitize-surface", "s", "t", "0", "1"],
    &["implicitize-surface", "s*(s+t)", "s*(1+t*s)", "s*(s^2+t)", "s*(1-t)"],
    &["mubasis-curve", "s^2", "s", "1"],
    &["implicitize-curve", "s^2", "s", "1"],
    &["implicitize-curve", "s^4", "s^2", "1"],
    &["implicitize-curve", "s^8+2*s^4", "s^4-1", "s^8-1"],
    &["implicitize-curve", "s", "1", "s"],
    &["verify", "x*y-z*w", "s", "t", "s*t", "1"],
    &["verify", "x", "s", "t", "s*t", "1"],
    &["verify", "x*z-y^2", "s^2", "s", "1"],
];
