//! Exact rational scalars.
//!
//! Scalars and exponents are both [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `p` for integers, `p/q` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Smallest natural `k` with `k >= r`; zero for non-positive `r`.
pub fn ceil_nonneg(r: &Rational) -> BigUint {
    if !r.is_positive() {
        return BigUint::zero();
    }
    r.ceil().to_integer().to_biguint().unwrap_or_default()
}

/// Smallest natural `k` with `k^root >= r` for `r >= 0`.
pub(crate) fn ceil_root(r: &Rational, root: u32) -> BigUint {
    let c = ceil_nonneg(r);
    if root <= 1 || c.is_zero() {
        return c;
    }
    let k = c.nth_root(root);
    if k.pow(root) < c {
        k + BigUint::one()
    } else {
        k
    }
}

pub(crate) fn to_u32(r: &BigInt) -> Option<u32> {
    r.to_u32()
}
