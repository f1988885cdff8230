//! Exact rational arithmetic helpers.
//!
//! Every distance, radius and edge weight in this crate is a
//! `num::BigRational`. There is no floating point on any computation path;
//! floats only appear in display helpers such as [`to_f64`].

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

use crate::error::Error;

/// The exact number type used throughout the crate.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// `2^i` for possibly negative `i`.
pub fn pow2(i: i64) -> Rat {
    let base = Rat::from_integer(BigInt::from(2));
    if i >= 0 {
        num::pow::pow(base, i as usize)
    } else {
        num::pow::pow(base, (-i) as usize).recip()
    }
}

/// Smallest `l >= 0` with `2^l >= x`. Requires `x >= 1`.
pub fn ceil_log2(x: &Rat) -> usize {
    assert!(*x >= Rat::one(), "ceil_log2 requires x >= 1");
    let mut l = 0usize;
    let mut p = Rat::one();
    let two = rat_int(2);
    while p < *x {
        p *= &two;
        l += 1;
    }
    l
}

/// Smallest `k >= 0` with `2^k >= d` for integer `d >= 1`; this is
/// `ceil(log2 d)`, the integer ceiling of the doubling dimension.
pub fn ceil_log2_int(d: usize) -> usize {
    assert!(d >= 1);
    let mut l = 0usize;
    let mut p = 1usize;
    while p < d {
        p = p.saturating_mul(2);
        l += 1;
    }
    l
}

/// Canonical display form: `p` when the denominator is one, else `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q`, a plain integer, or a decimal such as `1.5` (kept exact).
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int: BigInt = if int == "-" || int.is_empty() {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = num::pow::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let signed_frac = if neg { -frac } else { frac };
        return Ok(Rat::new(int * &scale + signed_frac, scale));
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(p))
}

/// Lossy conversion for display purposes only.
pub fn to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// True when `r` is strictly positive.
pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}
