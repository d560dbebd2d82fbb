//! Perfect-power detection and exact k-th roots of multivariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::poly::{Monomial, Poly};
use super::rat::Rat;
use super::upoly;

/// Number of random specializations tried before falling back to divisor search.
pub const PROBE_RETRIES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial is not a perfect {k}-th power")]
pub struct NotAPower {
    pub k: u32,
}

/// `F = content·root^k`, `root` primitive over the integers with positive
/// leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KthRoot<const N: usize> {
    pub root: Poly<N>,
    pub content: Rat,
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Extracts `G` with `G^k = F / c` for a rational `c`.
///
/// Works on the primitive part: by Gauss's lemma a primitive integer `G`
/// has primitive `G^k`, so the leading term of `G` is the integer k-th root
/// of the primitive leading term and the remaining terms follow one at a
/// time from `lt(F - G^k) = k·lt(G)^(k-1)·t`.
pub fn mpoly_kth_root<const N: usize>(f: &Poly<N>, k: u32) -> Result<KthRoot<N>, NotAPower> {
    let fail = NotAPower { k };
    if k == 0 || f.is_zero() {
        return Err(fail);
    }
    let deg = f.total_degree().unwrap();
    if !deg.is_multiple_of(k) {
        return Err(fail);
    }
    let (_, prim) = f.primitive_part();
    let (lm, lc) = prim.leading_term().unwrap();
    let root_lm = Monomial(lm.0.map(|e| e / k));
    if root_lm.pow(k) != *lm {
        return Err(fail);
    }
    let root_lc = exact_int_root(lc.numer(), k).ok_or(fail.clone())?;
    let root_lc = Rat::from_integer(root_lc);
    let mut g = Poly::term(root_lc.clone(), root_lm);
    let lm_pow = root_lm.pow(k - 1);
    let lc_factor = Rat::from_integer(k.into()) * num_traits::pow(root_lc, (k - 1) as usize);
    loop {
        let r = &prim - &g.pow(k);
        let Some((m, c)) = r.leading_term() else {
            break;
        };
        let t = m.checked_div(&lm_pow).ok_or(fail.clone())?;
        if t >= root_lm {
            return Err(fail);
        }
        let tc = c / &lc_factor;
        g.add_term(t, tc);
    }
    let (_, root) = g.primitive_part();
    let (_, flc) = f.leading_term().unwrap();
    let (_, rlc) = root.leading_term().unwrap();
    let content = flc / num_traits::pow(rlc.clone(), k as usize);
    Ok(KthRoot { root, content })
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rat {
    let num: i64 = loop {
        let v = rng.gen_range(-9..=9);
        if v != 0 {
            break v;
        }
    };
    let den: i64 = rng.gen_range(1..=5);
    Rat::new(num.into(), den.into())
}

fn divisors_descending(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n.is_multiple_of(*k)).collect();
    d.reverse();
    d
}

/// Largest `k` such that `F` is a perfect k-th power.
///
/// Candidates come from the gcd of squarefree multiplicities of random
/// univariate specializations and are confirmed by [`mpoly_kth_root`].
pub fn power_exponent_probe<const N: usize>(f: &Poly<N>, seed: u64) -> u32 {
    let Some(deg) = f.total_degree().filter(|&d| d > 0) else {
        return 1;
    };
    let keep = (0..N).find(|&i| f.degree_in(i).unwrap_or(0) > 0).expect("nonconstant polynomial has a variable");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PROBE_RETRIES {
        let values: [Rat; N] = std::array::from_fn(|_| small_rational(&mut rng));
        let uni = f.specialize_to_univariate(keep, &values);
        let mults = upoly::squarefree_multiplicities(&uni);
        let cand = mults.iter().fold(0usize, |acc, &m| acc.gcd(&m)) as u32;
        if cand >= 1 && deg % cand == 0 && mpoly_kth_root(f, cand).is_ok() {
            return cand;
        }
    }
    divisors_descending(deg).into_iter().find(|&k| mpoly_kth_root(f, k).is_ok()).unwrap_or(1)
}
