//! Random element generators for property checks and benchmarks.

use rand::Rng;

use crate::gpoly::GPoly;
use crate::hyper::{Hyper, Sign};
use crate::rational::{frac, Rational};
use crate::worlds::World;

/// Shape limits for generated elements.
#[derive(Debug, Clone, Copy)]
pub struct Sampler {
    pub max_terms: usize,
    /// Exponents are `p/q` with `1 <= q <= max_exp_den`.
    pub max_exp_den: i64,
    /// Exponents lie in `[-max_exp, max_exp]`.
    pub max_exp: i64,
    /// Coefficient numerators lie in `[-max_coef, max_coef]`.
    pub max_coef: i64,
    pub max_coef_den: i64,
}

impl Default for Sampler {
    fn default() -> Self {
        Self {
            max_terms: 4,
            max_exp_den: 3,
            max_exp: 3,
            max_coef: 1000,
            max_coef_den: 4,
        }
    }
}

impl Sampler {
    /// Integer exponents only, so elements read as sequences of `n`.
    pub fn integer_exponents() -> Self {
        Self {
            max_exp_den: 1,
            ..Self::default()
        }
    }

    pub fn exponent(&self, rng: &mut impl Rng) -> Rational {
        let q = rng.gen_range(1..=self.max_exp_den);
        let p = rng.gen_range(-self.max_exp * q..=self.max_exp * q);
        frac(p, q)
    }

    pub fn coefficient(&self, rng: &mut impl Rng) -> Rational {
        loop {
            let p = rng.gen_range(-self.max_coef..=self.max_coef);
            if p != 0 {
                return frac(p, rng.gen_range(1..=self.max_coef_den));
            }
        }
    }

    pub fn nonzero_gpoly(&self, rng: &mut impl Rng) -> GPoly {
        loop {
            let count = rng.gen_range(1..=self.max_terms);
            let p =
                GPoly::from_terms((0..count).map(|_| (self.exponent(rng), self.coefficient(rng))));
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A random element; zero with small probability.
    pub fn hyper(&self, rng: &mut impl Rng) -> Hyper {
        let num = if rng.gen_ratio(1, 20) {
            GPoly::zero()
        } else {
            self.nonzero_gpoly(rng)
        };
        let den = if rng.gen_bool(0.3) {
            GPoly::one()
        } else {
            self.nonzero_gpoly(rng)
        };
        Hyper::from_parts(num, den).expect("denominator is nonzero")
    }

    pub fn nonzero_hyper(&self, rng: &mut impl Rng) -> Hyper {
        loop {
            let h = self.hyper(rng);
            if !h.is_zero() {
                return h;
            }
        }
    }

    pub fn positive_hyper(&self, rng: &mut impl Rng) -> Hyper {
        self.nonzero_hyper(rng).abs()
    }

    /// Positive and infinitely large.
    pub fn positive_infinite(&self, rng: &mut impl Rng) -> Hyper {
        loop {
            let h = self.positive_hyper(rng);
            if h.is_infinitely_large() {
                return h;
            }
        }
    }

    pub fn world(&self, rng: &mut impl Rng) -> World {
        World::new(self.hyper(rng), self.positive_hyper(rng)).expect("step is positive")
    }

    pub fn rational(&self, rng: &mut impl Rng) -> Rational {
        if rng.gen_ratio(1, 10) {
            return Rational::from_integer(0.into());
        }
        self.coefficient(rng)
    }
}

/// `|x| >= u` for the generated `x`; used for translated reciprocals.
pub fn outside_open_interval(sampler: &Sampler, rng: &mut impl Rng, u: &Hyper) -> Hyper {
    loop {
        let x = sampler.nonzero_hyper(rng);
        if x.abs().compare(u) != Sign::Negative {
            return x;
        }
        // scale toward infinity until outside (-u, u)
        let grown = &x * &(&(u * &Hyper::omega()) * &x.abs().inv().expect("nonzero"));
        if grown.abs().compare(u) != Sign::Negative {
            return grown;
        }
    }
}
