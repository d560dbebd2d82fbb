use std::collections::HashMap;

use crate::exact_poly::{write_term, HForm, MPoly, Monomial, Poly, Rat};
use crate::implicit::ImplicitResult;

pub const MPOLY_VARS: [&str; 4] = ["x", "y", "z", "w"];

/// Which coordinates an implicit equation is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Frame {
    /// Coordinates of the caller's parametrization.
    #[default]
    Original,
    /// Coordinates after step-3 normalization.
    Normalized,
}

impl Frame {
    pub fn as_str(self) -> &'static str {
        match self {
            Frame::Original => "original",
            Frame::Normalized => "normalized",
        }
    }
}

fn monomial_string<const N: usize>(m: &Monomial<N>, vars: &[&str; N]) -> String {
    m.0.iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn write_terms<'a, const N: usize>(
    terms: impl IntoIterator<Item = (Monomial<N>, &'a Rat)>,
    vars: &[&str; N],
) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        write_term(&mut out, c, &monomial_string(&m, vars), i == 0).unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms in descending graded reverse lexicographic order, `" + "`/`" - "`
/// separated; parseable by [`super::parse_poly_in`] with the same variables.
pub fn format_poly<const N: usize>(p: &Poly<N>, vars: &[&str; N]) -> String {
    write_terms(p.terms().map(|(m, c)| (*m, c)), vars)
}

/// With `affine_w`, `w` is set to 1; terms keep the order of the homogeneous
/// polynomial, merged where they collide.
pub fn format_mpoly(f: &MPoly, affine_w: bool) -> String {
    if !affine_w {
        return format_poly(f, &MPOLY_VARS);
    }
    let mut order: Vec<Monomial<4>> = Vec::new();
    let mut sums: HashMap<Monomial<4>, Rat> = HashMap::new();
    for (m, c) in f.terms() {
        let mut e = m.0;
        e[3] = 0;
        let key = Monomial(e);
        match sums.get_mut(&key) {
            Some(acc) => *acc += c,
            None => {
                order.push(key);
                sums.insert(key, c.clone());
            }
        }
    }
    let kept: Vec<(Monomial<4>, &Rat)> =
        order.iter().map(|m| (*m, &sums[m])).filter(|(_, c)| !num_traits::Zero::is_zero(*c)).collect();
    write_terms(kept, &MPOLY_VARS)
}

pub fn format_implicit(r: &ImplicitResult, frame: Frame, affine_w: bool) -> String {
    let f = match frame {
        Frame::Original => &r.implicit,
        Frame::Normalized => &r.normalized_implicit,
    };
    format_mpoly(f, affine_w)
}

/// The form at `s̄ = 1` as a polynomial in `s`.
pub fn format_affine_hform(h: &HForm) -> String {
    format_poly(&h.to_affine_poly(), &["s", "t"])
}
