//! Limits of sequences `n ↦ x(n)` given by rational functions of `n`.
//!
//! The criterion is monad membership: the sequence converges to `L` iff
//! `x(ω) − L` is infinitesimal. Index witnesses for the ε-m definition and
//! for the Cauchy criterion are computed exactly: a root bound certifies
//! the tail, and a downward scan over the finite prefix finds the minimal
//! index. Positions where the sequence is undefined count as violations.

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::gpoly::GPoly;
use crate::hyper::{Hyper, Sign};
use crate::rational::{fmt_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitResult {
    Converges(Rational),
    DivergesPlus,
    DivergesMinus,
}

/// Cooperative cancellation flag for long scans.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::Relaxed)
    }
}

const CANCEL_POLL: u64 = 4096;

fn require_sequence(x: &Hyper) -> Result<()> {
    for p in [x.num(), x.den()] {
        if let Some(t) = p.terms().iter().find(|t| !t.exp.is_integer()) {
            return Err(Error::NonIntegralExponent(fmt_rational(&t.exp)));
        }
    }
    Ok(())
}

/// `x(n)`, or `None` where the term is undefined.
pub fn term(x: &Hyper, n: u64) -> Result<Option<Rational>> {
    x.eval_at(&BigInt::from(n), &BigInt::one())
}

pub fn ns_limit(x: &Hyper) -> Result<LimitResult> {
    require_sequence(x)?;
    Ok(match x.standard_part() {
        Ok(l) => LimitResult::Converges(l),
        Err(_) if x.signum() == Sign::Positive => LimitResult::DivergesPlus,
        Err(_) => LimitResult::DivergesMinus,
    })
}

fn to_scan_len(bound: BigUint) -> Result<u64> {
    bound
        .to_u64()
        .ok_or_else(|| Error::BudgetExceeded(format!("scan bound {bound} does not fit in u64")))
}

fn check_eps(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::EpsNotPositive)
    }
}

/// Index past which `|x(n) − limit| <= eps` is certified: the sign of
/// `P² − eps²Q²` (with `x − limit = P/Q`) is eventually negative.
fn epsilon_tail_bound(x: &Hyper, limit: &Rational, eps: &Rational) -> Result<u64> {
    let y = x - &Hyper::from_rational(limit.clone());
    let (p, q) = (y.num(), y.den());
    let r = &(p * p) - &(q * q).scale(&(eps * eps));
    let bound = r.scan_bound()?.max(x.den().scan_bound()?);
    to_scan_len(bound)
}

fn within(value: &Option<Rational>, limit: &Rational, eps: &Rational) -> bool {
    value.as_ref().is_some_and(|v| (v - limit).abs() <= *eps)
}

pub fn epsilon_index(x: &Hyper, limit: &Rational, eps: &Rational) -> Result<u64> {
    epsilon_index_with(x, limit, eps, &CancelToken::new())
}

/// Minimal `m` with `|x(n) − limit| <= eps` for all `n >= m`.
pub fn epsilon_index_with(
    x: &Hyper,
    limit: &Rational,
    eps: &Rational,
    cancel: &CancelToken,
) -> Result<u64> {
    check_eps(eps)?;
    if ns_limit(x)? != LimitResult::Converges(limit.clone()) {
        return Err(Error::NotConvergentToL);
    }
    let bound = epsilon_tail_bound(x, limit, eps)?;
    for n in (0..bound).rev() {
        if n % CANCEL_POLL == 0 && cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        if !within(&term(x, n)?, limit, eps) {
            return Ok(n + 1);
        }
    }
    Ok(0)
}

/// `p(ω + 1)` for a polynomial with integer exponents.
fn shift_by_one(p: &GPoly) -> Result<Hyper> {
    let base = Hyper::omega() + Hyper::one();
    let mut sum = Hyper::zero();
    for t in p.terms() {
        let k = t.exp.to_integer();
        let mag = k
            .abs()
            .to_u32()
            .ok_or_else(|| Error::BudgetExceeded("exponent too large".into()))?;
        let mut power = Hyper::one();
        for _ in 0..mag {
            power = &power * &base;
        }
        if k.is_negative() {
            power = power.inv()?;
        }
        sum = &sum + &power.scale(&t.coef);
    }
    Ok(sum)
}

/// Index past which `x` is defined and monotone: the forward difference
/// `x(n + 1) − x(n)` has constant sign.
fn monotone_tail_bound(x: &Hyper) -> Result<u64> {
    let shifted = shift_by_one(x.num())?.div(&shift_by_one(x.den())?)?;
    let delta = &shifted - x;
    let mut bound = x.den().scan_bound()?.max(shifted.den().scan_bound()?);
    for p in [delta.num(), delta.den()] {
        if !p.is_zero() {
            bound = bound.max(p.scan_bound()?);
        }
    }
    to_scan_len(bound)
}

pub fn cauchy_index(x: &Hyper, eps: &Rational) -> Result<u64> {
    cauchy_index_with(x, eps, &CancelToken::new())
}

/// Minimal `k` with `|x(n) − x(m)| <= eps` for all `n, m >= k`.
pub fn cauchy_index_with(x: &Hyper, eps: &Rational, cancel: &CancelToken) -> Result<u64> {
    check_eps(eps)?;
    let LimitResult::Converges(limit) = ns_limit(x)? else {
        return Err(Error::NotConvergent);
    };
    // Past `tail` the sequence is monotone toward the limit, so the tail
    // spread from k is |x(k) − limit| and is within eps.
    let tail = monotone_tail_bound(x)?.max(epsilon_index_with(x, &limit, eps, cancel)?);
    let anchor = term(x, tail)?.expect("defined past the tail bound");
    let (mut hi, mut lo) = if anchor > limit {
        (anchor, limit)
    } else {
        (limit, anchor)
    };
    for k in (0..tail).rev() {
        if k % CANCEL_POLL == 0 && cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        let Some(v) = term(x, k)? else {
            return Ok(k + 1);
        };
        if v > hi {
            hi = v;
        } else if v < lo {
            lo = v;
        }
        if &hi - &lo > *eps {
            return Ok(k + 1);
        }
    }
    Ok(0)
}

/// Whether the index witnesses are in agreement with the tail beyond them:
/// a direct check on `[m, m + extra]`.
pub fn verify_epsilon_window(
    x: &Hyper,
    limit: &Rational,
    eps: &Rational,
    m: u64,
    extra: u64,
) -> Result<bool> {
    for n in m..=m + extra {
        if !within(&term(x, n)?, limit, eps) {
            return Ok(false);
        }
    }
    Ok(m == 0 || !within(&term(x, m - 1)?, limit, eps))
}
