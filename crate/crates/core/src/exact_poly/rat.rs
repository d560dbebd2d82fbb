use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Always `num/den`, including `den = 1`.
pub fn rat_slash(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
