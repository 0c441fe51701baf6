//! Monads, galaxies and the infinite + standard + infinitesimal split.
//!
//! `monad(t) = t + monad(0)` and `Gal(t) = t + Gal(0)`; both are decided
//! behaviourally through the magnitude class of a difference, never as
//! enumerated sets.

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::gpoly::GPoly;
use crate::hyper::Hyper;
use crate::rational::Rational;

pub fn is_infinitesimal(x: &Hyper) -> bool {
    x.is_infinitesimal()
}

/// Inclusive "finite": infinitesimals are finite too.
pub fn is_finite(x: &Hyper) -> bool {
    x.is_finite()
}

pub fn is_infinitely_large(x: &Hyper) -> bool {
    x.is_infinitely_large()
}

/// `x` and `y` lie in the same monad.
pub fn same_monad(x: &Hyper, y: &Hyper) -> bool {
    (x - y).is_infinitesimal()
}

/// `x` and `y` lie in the same galaxy.
pub fn same_galaxy(x: &Hyper, y: &Hyper) -> bool {
    (x - y).is_finite()
}

/// `x = infinite_part + standard_part + infinitesimal_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Zero or a sum of positive-exponent monomials.
    pub infinite_part: Hyper,
    pub standard_part: Rational,
    pub infinitesimal_part: Hyper,
}

impl Decomposition {
    pub fn recompose(&self) -> Hyper {
        &(&self.infinite_part + &Hyper::from_rational(self.standard_part.clone()))
            + &self.infinitesimal_part
    }
}

/// Splits `x` by long division of numerator by denominator down to the
/// exponent-0 quotient term; the remainder fraction has negative degree.
pub fn decompose(x: &Hyper) -> Result<Decomposition> {
    let (quotient, rem) = x.num().div_rem_down_to(x.den(), &Rational::zero())?;
    let mut infinite = Vec::new();
    let mut standard = Rational::zero();
    for t in quotient.terms() {
        if t.exp.is_positive() {
            infinite.push((t.exp.clone(), t.coef.clone()));
        } else {
            debug_assert!(t.exp.is_zero());
            standard = t.coef.clone();
        }
    }
    Ok(Decomposition {
        infinite_part: Hyper::from_gpoly(GPoly::from_terms(infinite)),
        standard_part: standard,
        infinitesimal_part: Hyper::from_parts(rem, x.den().clone())?,
    })
}
