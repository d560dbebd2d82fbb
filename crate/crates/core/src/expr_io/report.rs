//! Result reports: the stable JSON interface and a human-readable text form.
//!
//! Every rational number is an exact `"num/den"` string.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::format::{format_affine_hform, format_implicit, Frame};
use crate::exact_poly::{rat_slash, MovingForm};
use crate::implicit::ImplicitResult;
use crate::ruled::{NormalizationRecord, PlueckerSet};

const VARS: [&str; 4] = ["x", "y", "z", "w"];
pub const PLUECKER_NAMES: [&str; 6] = ["p01", "p02", "p03", "p12", "p13", "p23"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuBasisEntry {
    pub degree: usize,
    /// Variable name to coefficient, written as a polynomial in `s` (`s̄ = 1`).
    pub coeffs: BTreeMap<String, String>,
}

impl MuBasisEntry {
    pub fn from_form(m: &MovingForm) -> Self {
        let coeffs = m.coeffs().iter().zip(VARS).map(|(h, v)| (v.to_string(), format_affine_hform(h))).collect();
        Self { degree: m.degree(), coeffs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicitEntry {
    /// `"ex,ey,ez,ew"` to `"num/den"`.
    pub terms: BTreeMap<String, String>,
    pub text: String,
    pub frame: String,
    pub k: u32,
    pub degree: u32,
    pub content: String,
}

impl ImplicitEntry {
    pub fn new(r: &ImplicitResult, frame: Frame) -> Self {
        let f = match frame {
            Frame::Original => &r.implicit,
            Frame::Normalized => &r.normalized_implicit,
        };
        let terms = f
            .terms()
            .map(|(m, c)| {
                let key = m.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                (key, rat_slash(c))
            })
            .collect();
        Self {
            terms,
            text: format_implicit(r, frame, false),
            frame: frame.as_str().to_string(),
            k: r.k,
            degree: r.hypersurface_degree,
            content: rat_slash(&r.content),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationEntry {
    pub t_swap: bool,
    pub sbar_division: usize,
    pub common_factor: String,
    pub index_swap: Option<usize>,
    pub alpha_beta_gamma: Option<[String; 3]>,
    pub transform: [[String; 4]; 4],
    pub seed: u64,
}

impl NormalizationEntry {
    pub fn new(rec: &NormalizationRecord) -> Self {
        Self {
            t_swap: rec.t_swap,
            sbar_division: rec.sbar_division,
            common_factor: format_affine_hform(&rec.common_factor),
            index_swap: rec.index_swap,
            alpha_beta_gamma: rec.generic_combination.as_ref().map(|abc| abc.each_ref().map(rat_slash)),
            transform: rec.transform.each_ref().map(|row| row.each_ref().map(rat_slash)),
            seed: rec.seed,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DegreesEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<usize>,
    pub gcd_degree: usize,
    /// `μ1 + μ2`: `n - deg g` for curves, `n1 + n0 - deg g` for surfaces.
    pub degree_formula: usize,
    pub mu: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implicit_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_basis: Option<Vec<MuBasisEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pluecker: Option<[String; 6]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implicit: Option<ImplicitEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<NormalizationEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreesEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            mu_basis: None,
            pluecker: None,
            implicit: None,
            normalization: None,
            degrees: None,
            verified: None,
        }
    }

    pub fn with_mu_basis(mut self, forms: &[&MovingForm]) -> Self {
        self.mu_basis = Some(forms.iter().map(|m| MuBasisEntry::from_form(m)).collect());
        self
    }

    pub fn with_pluecker(mut self, p: &PlueckerSet) -> Self {
        self.pluecker = Some(p.all().each_ref().map(format_affine_hform));
        self
    }

    pub fn with_implicit(mut self, r: &ImplicitResult, frame: Frame) -> Self {
        self.implicit = Some(ImplicitEntry::new(r, frame));
        self
    }

    pub fn with_normalization(mut self, rec: &NormalizationRecord) -> Self {
        self.normalization = Some(NormalizationEntry::new(rec));
        self
    }

    pub fn with_degrees(mut self, d: DegreesEntry) -> Self {
        self.degrees = Some(d);
        self
    }

    pub fn with_verified(mut self, v: bool) -> Self {
        self.verified = Some(v);
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(n) = &self.normalization {
            let _ = writeln!(out, "normalization:");
            let _ = writeln!(out, "  t_swap: {}", n.t_swap);
            if n.common_factor != "1" {
                let _ = writeln!(out, "  common factor divided out: {}", n.common_factor);
            }
            match (&n.index_swap, &n.alpha_beta_gamma) {
                (Some(i), _) => {
                    let _ = writeln!(out, "  index swap: f{i} <-> f3");
                }
                (None, Some(abc)) => {
                    let [a, b, c] = abc.each_ref().map(|v| v.strip_suffix("/1").unwrap_or(v));
                    let _ = writeln!(out, "  f3 <- ({a})*f0 + ({b})*f1 + ({c})*f2 + f3");
                }
                (None, None) => {
                    let _ = writeln!(out, "  no coordinate change");
                }
            }
        }
        if let Some(p) = &self.pluecker {
            let _ = writeln!(out, "pluecker:");
            for (name, v) in PLUECKER_NAMES.iter().zip(p) {
                let _ = writeln!(out, "  {name} = {v}");
            }
        }
        if let Some(d) = &self.degrees {
            let _ = writeln!(out, "degrees:");
            if let Some(n) = d.n {
                let _ = writeln!(out, "  n = {n}");
            }
            if let (Some(n0), Some(n1)) = (d.n0, d.n1) {
                let _ = writeln!(out, "  n0 = {n0}, n1 = {n1}");
            }
            let _ = writeln!(out, "  deg g = {}", d.gcd_degree);
            let _ = writeln!(out, "  mu1 + mu2 = {}", d.degree_formula);
            let _ = writeln!(out, "  mu = ({}, {})", d.mu[0], d.mu[1]);
            if let (Some(deg), Some(k)) = (d.implicit_degree, d.k) {
                let _ = writeln!(out, "  deg F = {deg}, k = {k}");
            }
        }
        if let Some(mb) = &self.mu_basis {
            let _ = writeln!(out, "mu-basis:");
            for (i, e) in mb.iter().enumerate() {
                let terms: Vec<String> = VARS
                    .iter()
                    .filter_map(|v| e.coeffs.get(*v).filter(|c| *c != "0").map(|c| format!("({c})*{v}")))
                    .collect();
                let _ = writeln!(out, "  q{} [degree {}] = {}", i + 1, e.degree, terms.join(" + "));
            }
        }
        if let Some(im) = &self.implicit {
            let _ = writeln!(out, "implicit ({} frame):", im.frame);
            let _ = writeln!(out, "  F = {}", im.text);
            let _ = writeln!(out, "  k = {}", im.k);
            let _ = writeln!(out, "  degree = {}", im.degree);
        }
        if let Some(v) = self.verified {
            let _ = writeln!(out, "verified: {v}");
        }
        out
    }
}
