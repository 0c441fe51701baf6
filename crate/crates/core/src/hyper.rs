//! The representable fragment of the ultrapower field.
//!
//! A [`Hyper`] is a quotient of two generalized polynomials in ω. The
//! element ω stands for the class of the identity sequence `λ ↦ λ`, so a
//! `Hyper` stands for the class of the sequence `n ↦ num(n) / den(n)`.
//! Every predicate here (order, magnitude class, standard part) depends
//! only on behaviour over cofinite index sets, which lie in every free
//! ultrafilter, so no answer depends on the choice of ultrafilter.
//!
//! Coefficients are rational, so the implemented field is the subfield
//! generated by ℚ and the monomials `ω^q`, `q ∈ ℚ`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gpoly::GPoly;
use crate::rational::{lcm, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

impl From<Sign> for Ordering {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// Three-way magnitude partition. `Appreciable` means finite and not
/// infinitesimal; zero is `Infinitesimal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagnitudeClass {
    Infinitesimal,
    Appreciable,
    InfinitelyLarge,
}

impl MagnitudeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MagnitudeClass::Infinitesimal => "infinitesimal",
            MagnitudeClass::Appreciable => "appreciable",
            MagnitudeClass::InfinitelyLarge => "infinite",
        }
    }
}

impl fmt::Display for MagnitudeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `num / den` with `den ≠ 0` and a positive leading coefficient in `den`.
///
/// Fractions are not reduced to lowest terms; equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct Hyper {
    num: GPoly,
    den: GPoly,
}

impl Hyper {
    /// Builds `num / den`, normalizing the sign of the denominator.
    pub fn from_parts(num: GPoly, den: GPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: GPoly, mut den: GPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.signum() == Ordering::Less {
            num = -num;
            den = -den;
        }
        if den.is_constant() {
            let c = den.lead_coef().expect("nonzero").recip();
            return Self {
                num: num.scale(&c),
                den: GPoly::one(),
            };
        }
        // Fold the denominator away when it divides exactly into an
        // ordinary polynomial (non-negative exponents only). A quotient's
        // lowest term is num.low / den.low, and a monomial is divisible only
        // by monomials.
        let low = &num.lowest().expect("nonzero").exp - &den.lowest().expect("nonzero").exp;
        if !low.is_negative() && num.terms().len() >= den.terms().len() {
            if let Ok((q, r)) = num.div_rem_down_to(&den, &low) {
                if r.is_zero() {
                    return Self {
                        num: q,
                        den: GPoly::one(),
                    };
                }
            }
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: GPoly::zero(),
            den: GPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The embedding `r ↦ (r, r, r, …)`.
    pub fn from_rational(r: Rational) -> Self {
        Self {
            num: GPoly::constant(r),
            den: GPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_gpoly(p: GPoly) -> Self {
        Self {
            num: p,
            den: GPoly::one(),
        }
    }

    /// `coef · ω^exp`.
    pub fn monomial(exp: Rational, coef: Rational) -> Self {
        Self::from_gpoly(GPoly::monomial(exp, coef))
    }

    /// The class of the identity sequence.
    pub fn omega() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    /// `1/ω`.
    pub fn eps() -> Self {
        Self {
            num: GPoly::one(),
            den: GPoly::monomial(Rational::one(), Rational::one()),
        }
    }

    pub fn num(&self) -> &GPoly {
        &self.num
    }

    pub fn den(&self) -> &GPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::normalized(self.num.scale(r), self.den.clone())
    }

    pub fn signum(&self) -> Sign {
        self.num.signum().into()
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    /// Sign of `self − other`.
    pub fn compare(&self, other: &Self) -> Sign {
        (self - other).signum()
    }

    /// Valuation: leading exponent of `num` minus that of `den`; `None` for 0.
    pub fn degree(&self) -> Option<Rational> {
        Some(self.num.lead_exp()? - self.den.lead_exp().expect("den is nonzero"))
    }

    pub fn classify(&self) -> MagnitudeClass {
        Self::class_of_degree(self.degree())
    }

    /// Class of `self / other` without forming the quotient.
    pub fn ratio_class(&self, other: &Self) -> Result<MagnitudeClass> {
        let den = other.degree().ok_or(Error::DivisionByZero)?;
        Ok(Self::class_of_degree(self.degree().map(|d| d - den)))
    }

    fn class_of_degree(degree: Option<Rational>) -> MagnitudeClass {
        match degree {
            None => MagnitudeClass::Infinitesimal,
            Some(d) if d.is_negative() => MagnitudeClass::Infinitesimal,
            Some(d) if d.is_zero() => MagnitudeClass::Appreciable,
            Some(_) => MagnitudeClass::InfinitelyLarge,
        }
    }

    /// Finite in the inclusive sense: infinitesimals count as finite.
    pub fn is_finite(&self) -> bool {
        self.classify() != MagnitudeClass::InfinitelyLarge
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.classify() == MagnitudeClass::Infinitesimal
    }

    pub fn is_infinitely_large(&self) -> bool {
        self.classify() == MagnitudeClass::InfinitelyLarge
    }

    /// The unique rational infinitely close to `self`.
    pub fn standard_part(&self) -> Result<Rational> {
        match self.classify() {
            MagnitudeClass::Infinitesimal => Ok(Rational::zero()),
            MagnitudeClass::Appreciable => {
                Ok(self.num.lead_coef().expect("nonzero") / self.den.lead_coef().expect("nonzero"))
            }
            MagnitudeClass::InfinitelyLarge => Err(Error::NotFinite),
        }
    }

    pub fn exponent_denominator(&self) -> BigInt {
        lcm(
            &self.num.exponent_denominator(),
            &self.den.exponent_denominator(),
        )
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.num.has_integer_exponents() && self.den.has_integer_exponents()
    }

    /// Value of the representing sequence at `ω = n^d`; `None` where the
    /// denominator vanishes or a negative power of `n = 0` appears.
    pub fn eval_at(&self, n: &BigInt, d: &BigInt) -> Result<Option<Rational>> {
        let (Some(num), Some(den)) = (self.num.eval_at(n, d)?, self.den.eval_at(n, d)?) else {
            return Ok(None);
        };
        if den.is_zero() {
            return Ok(None);
        }
        Ok(Some(num / den))
    }

    /// Checks `compare(self, other)` against the pointwise sign of the
    /// representing sequences at `samples` indices past the root bounds of
    /// every polynomial involved. A test-side bridge to the cofinite-set
    /// semantics.
    pub fn oracle_agrees(&self, other: &Self, samples: usize) -> Result<bool> {
        let d = lcm(&self.exponent_denominator(), &other.exponent_denominator());
        let diff = self - other;
        let mut start = BigUint::one();
        for p in [&diff.num, &diff.den, &self.den, &other.den] {
            if !p.is_zero() {
                start = start.max(p.root_bound()?);
            }
        }
        let expected = self.compare(other);
        let start = BigInt::from(start);
        for k in 0..samples {
            let n = &start + BigInt::from(k);
            let (Some(a), Some(b)) = (self.eval_at(&n, &d)?, other.eval_at(&n, &d)?) else {
                return Ok(false);
            };
            if Sign::from((a - b).cmp(&Rational::zero())) != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for Hyper {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Hyper {}

impl PartialOrd for Hyper {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hyper {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other).into()
    }
}

impl Add for &Hyper {
    type Output = Hyper;
    fn add(self, rhs: &Hyper) -> Hyper {
        if self.den == rhs.den {
            return Hyper::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Hyper::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Hyper {
    type Output = Hyper;
    fn sub(self, rhs: &Hyper) -> Hyper {
        self + &(-rhs)
    }
}

impl Mul for &Hyper {
    type Output = Hyper;
    fn mul(self, rhs: &Hyper) -> Hyper {
        Hyper::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Hyper {
    type Output = Hyper;
    fn neg(self) -> Hyper {
        Hyper {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Hyper {
            type Output = Hyper;
            fn $m(self, rhs: Hyper) -> Hyper {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Hyper> for Hyper {
            type Output = Hyper;
            fn $m(self, rhs: &Hyper) -> Hyper {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Hyper {
    type Output = Hyper;
    fn neg(self) -> Hyper {
        -&self
    }
}

impl From<Rational> for Hyper {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Hyper {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Canonical form, e.g. `(w + 1)/w` or `2*w^2 - 1`.
impl fmt::Display for Hyper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms().len() > 1 {
            write!(f, "({})/", self.num)?;
        } else {
            write!(f, "{}/", self.num)?;
        }
        let bare = self.den.terms().len() == 1 && self.den.lead_coef().is_some_and(|c| c.is_one());
        if bare {
            write!(f, "{}", self.den)
        } else {
            write!(f, "({})", self.den)
        }
    }
}
