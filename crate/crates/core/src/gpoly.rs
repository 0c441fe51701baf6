//! Generalized polynomials in ω with rational exponents.
//!
//! A [`GPoly`] is a finite sum `Σ cᵢ ω^{eᵢ}` with rational exponents and
//! nonzero rational coefficients, stored by strictly decreasing exponent.
//! Read as a function of the index `n` through `ω = n^d`, it describes the
//! eventual behaviour of a sequence, which is all the ultrapower order sees.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{ceil_nonneg, ceil_root, fmt_rational, lcm, to_u32, Rational};

/// One monomial `coef · ω^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Rational,
    pub coef: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GPoly {
    terms: Vec<Term>,
}

impl GPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Rational::zero(), c)
    }

    pub fn monomial(exp: Rational, coef: Rational) -> Self {
        if coef.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![Term { exp, coef }],
            }
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining like exponents and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(exp, coef)| Term { exp, coef })
            .collect();
        terms.sort_by(|a, b| b.exp.cmp(&a.exp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exp == t.exp => last.coef += t.coef,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coef.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for `c · ω⁰`.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].exp.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].coef.is_one()
    }

    /// The term of maximal exponent.
    pub fn leading(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn lowest(&self) -> Result<&Term> {
        self.terms.last().ok_or(Error::ZeroPolynomial)
    }

    pub fn lead_exp(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn lead_coef(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coef)
    }

    /// Sign of the leading coefficient, i.e. the eventual sign.
    pub fn signum(&self) -> Ordering {
        match self.lead_coef() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// Least common denominator of all exponents (1 for the zero polynomial).
    pub fn exponent_denominator(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, t| lcm(&acc, t.exp.denom()))
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.clone(),
                    coef: &t.coef * c,
                })
                .collect(),
        }
    }

    /// Multiplies by `ω^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: &t.exp + e,
                    coef: t.coef.clone(),
                })
                .collect(),
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let other_coef = |t: &Term| {
            if negate_other {
                -t.coef.clone()
            } else {
                t.coef.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match a[i].exp.cmp(&b[j].exp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        exp: b[j].exp.clone(),
                        coef: other_coef(&b[j]),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coef = &a[i].coef + other_coef(&b[j]);
                    if !coef.is_zero() {
                        out.push(Term {
                            exp: a[i].exp.clone(),
                            coef,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            exp: t.exp.clone(),
            coef: other_coef(t),
        }));
        Self { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (&a.exp + &b.exp, &a.coef * &b.coef))
        }))
    }

    /// Generalized long division: peels off quotient terms while the
    /// quotient exponent stays `>= min_quotient_exp`.
    ///
    /// Exponents of every term involved live in one cyclic group `(1/D)ℤ`
    /// and the remainder's leading exponent strictly decreases, so the loop
    /// terminates.
    pub fn div_rem_down_to(
        &self,
        divisor: &Self,
        min_quotient_exp: &Rational,
    ) -> Result<(Self, Self)> {
        let lead = divisor.leading()?.clone();
        let mut quotient = Vec::new();
        let mut rem = self.clone();
        while let Some(r) = rem.terms.first() {
            let exp = &r.exp - &lead.exp;
            if &exp < min_quotient_exp {
                break;
            }
            let coef = &r.coef / &lead.coef;
            let step = divisor.shift(&exp).scale(&coef);
            quotient.push(Term { exp, coef });
            rem = &rem - &step;
        }
        Ok((Self { terms: quotient }, rem))
    }

    /// Exact quotient `self / divisor` as a generalized polynomial, if one exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        let floor = &self.lowest()?.exp - &divisor.lowest()?.exp;
        let (q, r) = self.div_rem_down_to(divisor, &floor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Integer exponents `exp·d` for every term, or `NonIntegralExponent`.
    fn scaled_exponents(&self, d: &BigInt) -> Result<Vec<BigInt>> {
        self.terms
            .iter()
            .map(|t| {
                let e = &t.exp * Rational::from_integer(d.clone());
                if e.is_integer() {
                    Ok(e.to_integer())
                } else {
                    Err(Error::NonIntegralExponent(fmt_rational(&t.exp)))
                }
            })
            .collect()
    }

    /// Exact value at `ω = n^d`. Returns `None` at `n = 0` when a negative
    /// exponent makes the value undefined.
    pub fn eval_at(&self, n: &BigInt, d: &BigInt) -> Result<Option<Rational>> {
        let exps = self.scaled_exponents(d)?;
        let mut sum = Rational::zero();
        for (t, k) in self.terms.iter().zip(exps) {
            let mag = to_u32(&k.abs()).ok_or_else(|| {
                Error::BudgetExceeded(format!("exponent {k} too large to evaluate"))
            })?;
            let p = Rational::from_integer(num_traits::pow::Pow::pow(n, mag));
            if k.is_negative() {
                if n.is_zero() {
                    return Ok(None);
                }
                sum += &t.coef / p;
            } else {
                sum += &t.coef * p;
            }
        }
        Ok(Some(sum))
    }

    /// Exact value at `ω = n^d` for `n >= 1`.
    pub fn eval(&self, n: u64, d: u64) -> Result<Rational> {
        if n == 0 || d == 0 {
            return Err(Error::PreconditionViolated(
                "sample point needs n >= 1 and d >= 1".into(),
            ));
        }
        Ok(self
            .eval_at(&BigInt::from(n), &BigInt::from(d))?
            .expect("n >= 1 is always defined"))
    }

    /// Coefficients of the ordinary polynomial in `m = ω^{1/d}` obtained
    /// after clearing the lowest power, highest degree first.
    /// Entries are `(gap below the leading degree, coefficient)`.
    fn cleared(&self) -> Result<(u32, Vec<(u32, Rational)>)> {
        let d = self.exponent_denominator();
        let exps = self.scaled_exponents(&d)?;
        let top = exps.first().ok_or(Error::ZeroPolynomial)?.clone();
        let low = exps.last().expect("nonempty").clone();
        let degree = to_u32(&(&top - &low))
            .ok_or_else(|| Error::BudgetExceeded("degree too large".into()))?;
        let gaps = exps
            .iter()
            .zip(&self.terms)
            .map(|(k, t)| {
                (
                    to_u32(&(&top - k)).expect("bounded by degree"),
                    t.coef.clone(),
                )
            })
            .collect();
        Ok((degree, gaps))
    }

    /// Cauchy bound `N₀ = ⌈1 + max |cᵢ / c_lead|⌉`: for every integer
    /// `n >= N₀` the value at `ω = n^d` has the sign of the leading
    /// coefficient, `d` being [`Self::exponent_denominator`].
    pub fn root_bound(&self) -> Result<BigUint> {
        let (_, gaps) = self.cleared()?;
        let lead = gaps[0].1.abs();
        let max = gaps[1..]
            .iter()
            .map(|(_, c)| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(ceil_nonneg(&(Rational::one() + max)).max(BigUint::one()))
    }

    /// A root bound at least as tight as [`Self::root_bound`]: the minimum of
    /// the Cauchy and Fujiwara bounds. Used to size exact scans.
    pub fn scan_bound(&self) -> Result<BigUint> {
        let cauchy = self.root_bound()?;
        let (degree, gaps) = self.cleared()?;
        let lead = gaps[0].1.abs();
        let mut fujiwara = BigUint::zero();
        for (gap, c) in &gaps[1..] {
            let mut ratio = c.abs() / &lead;
            if *gap == degree {
                ratio /= Rational::from_integer(BigInt::from(2));
            }
            fujiwara = fujiwara.max(ceil_root(&ratio, *gap));
        }
        let fujiwara = fujiwara * BigUint::from(2u32) + BigUint::one();
        Ok(cauchy.min(fujiwara))
    }
}

impl Add for &GPoly {
    type Output = GPoly;
    fn add(self, rhs: &GPoly) -> GPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &GPoly {
    type Output = GPoly;
    fn sub(self, rhs: &GPoly) -> GPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &GPoly {
    type Output = GPoly;
    fn mul(self, rhs: &GPoly) -> GPoly {
        self.product(rhs)
    }
}

impl Neg for &GPoly {
    type Output = GPoly;
    fn neg(self) -> GPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GPoly {
            type Output = GPoly;
            fn $m(self, rhs: GPoly) -> GPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GPoly {
    type Output = GPoly;
    fn neg(self) -> GPoly {
        -&self
    }
}

pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    exp: &Rational,
    coef_abs: &Rational,
) -> fmt::Result {
    if exp.is_zero() {
        return write!(f, "{}", fmt_rational(coef_abs));
    }
    if !coef_abs.is_one() {
        write!(f, "{}*", fmt_rational(coef_abs))?;
    }
    if exp.is_one() {
        write!(f, "w")
    } else if exp.is_integer() && exp.is_positive() {
        write!(f, "w^{}", exp.numer())
    } else {
        write!(f, "w^({})", fmt_rational(exp))
    }
}

/// `2*w^2 + w - 1/2`, `w^(1/2)`, `-w^(-1)`; `0` for the zero polynomial.
impl fmt::Display for GPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coef.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, &t.exp, &t.coef.abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(terms: &[(Rational, i64)]) -> GPoly {
        GPoly::from_terms(terms.iter().map(|(e, c)| (e.clone(), int(*c))))
    }

    fn w() -> GPoly {
        GPoly::monomial(int(1), int(1))
    }

    #[test]
    fn add_cancels_and_combines() {
        let a = p(&[(int(1), 1), (int(0), 1)]);
        assert_eq!(&a + &GPoly::constant(int(-1)), w());
        let half = GPoly::monomial(frac(1, 2), int(1));
        assert_eq!(&GPoly::zero() + &half, half);
        let x = p(&[(int(2), 2), (int(1), 1)]);
        let y = p(&[(int(2), 3), (int(1), -1)]);
        assert_eq!(&x + &y, p(&[(int(2), 5)]));
        // at ω = 10 both sides agree
        assert_eq!(
            x.eval(10, 1).unwrap() + y.eval(10, 1).unwrap(),
            (&x + &y).eval(10, 1).unwrap()
        );
    }

    #[test]
    fn mul_examples() {
        let half = GPoly::monomial(frac(1, 2), int(1));
        assert_eq!(&half * &half, w());
        let a = p(&[(int(1), 1), (int(0), 1)]);
        let b = p(&[(int(1), 1), (int(0), -1)]);
        let prod = &a * &b;
        assert_eq!(prod, p(&[(int(2), 1), (int(0), -1)]));
        assert_eq!(prod.eval(7, 1).unwrap(), int(48));
        assert!((&a * &GPoly::zero()).is_zero());
    }

    #[test]
    fn leading_terms() {
        let a = p(&[(int(2), 3), (int(1), 1)]);
        assert_eq!(
            a.leading().unwrap(),
            &Term {
                exp: int(2),
                coef: int(3)
            }
        );
        assert_eq!(GPoly::constant(int(5)).leading().unwrap().exp, int(0));
        let b = p(&[(frac(-1, 3), 1), (int(-2), -7)]);
        assert_eq!(
            b.leading().unwrap(),
            &Term {
                exp: frac(-1, 3),
                coef: int(1)
            }
        );
        assert_eq!(GPoly::zero().leading(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[(int(1), 1), (int(0), 1)]).eval(4, 1).unwrap(), int(5));
        assert_eq!(
            GPoly::monomial(frac(1, 2), int(1)).eval(3, 2).unwrap(),
            int(3)
        );
        assert_eq!(p(&[(int(2), 2), (int(1), -1)]).eval(5, 1).unwrap(), int(45));
        assert!(matches!(
            GPoly::monomial(frac(1, 2), int(1)).eval(3, 1),
            Err(Error::NonIntegralExponent(_))
        ));
        assert_eq!(
            GPoly::monomial(int(-2), int(1)).eval(2, 1).unwrap(),
            frac(1, 4)
        );
    }

    #[test]
    fn root_bound_examples() {
        let a = p(&[(int(1), 1), (int(0), -10)]);
        let n0 = a.root_bound().unwrap();
        assert!(n0 >= BigUint::from(11u32));
        let b = p(&[(int(2), 1), (int(0), 1)]);
        assert!(b.root_bound().unwrap() >= BigUint::one());
        let c = p(&[(int(1), 2), (int(0), -7)]);
        assert_eq!(c.root_bound().unwrap(), BigUint::from(5u32));
        assert!(c.eval(4, 1).unwrap() > int(0));
        assert!(c.eval(5, 1).unwrap() > int(0));
        assert_eq!(GPoly::zero().root_bound(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn scan_bound_is_tighter_and_sound() {
        // 1 - n²/10⁴: Cauchy gives 10⁴+1, Fujiwara about 2·100.
        let a = GPoly::from_terms([(int(2), frac(-1, 10_000)), (int(0), int(1))]);
        let s = a.scan_bound().unwrap();
        assert!(s <= BigUint::from(201u32));
        assert!(s > BigUint::from(100u32));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(int(2), 1), (int(0), -1)]);
        let b = p(&[(int(1), 1), (int(0), 1)]);
        assert_eq!(
            a.exact_div(&b).unwrap(),
            Some(p(&[(int(1), 1), (int(0), -1)]))
        );
        assert_eq!(
            b.exact_div(&w()).unwrap(),
            Some(p(&[(int(0), 1), (int(-1), 1)]))
        );
        assert_eq!(w().exact_div(&b).unwrap(), None);
    }

    #[test]
    fn display() {
        let a = GPoly::from_terms([
            (int(2), int(2)),
            (int(1), int(1)),
            (frac(1, 2), int(-3)),
            (int(0), frac(-1, 2)),
            (int(-1), int(1)),
        ]);
        assert_eq!(a.to_string(), "2*w^2 + w - 3*w^(1/2) - 1/2 + w^(-1)");
        assert_eq!(GPoly::zero().to_string(), "0");
    }
}
