//! Filters, ideals and reduced powers over a finite index set
//! `Λ = {0, …, N−1}`, where every construction is decidable.
//!
//! Subsets of `Λ` are bitmasks (`bit i` set ⇔ `i ∈ S`). On a finite set
//! every filter is principal and every ultrafilter is fixed; the reduced
//! power `ℚ^Λ / ≈_F` is a field exactly when `F` is an ultrafilter.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::batch;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Subset = u32;

/// Largest universe accepted by the set-family checks.
pub const MAX_UNIVERSE: usize = 16;
/// Largest universe for exhaustive enumeration of all families.
pub const MAX_ENUMERATION: usize = 4;

fn full(n: usize) -> Subset {
    if n >= 32 {
        Subset::MAX
    } else {
        (1 << n) - 1
    }
}

/// Elements of a subset in increasing order.
pub fn elements(s: Subset) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| s & (1 << i) != 0)
}

/// A family of subsets of `Λ`, not yet known to be a filter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    universe: usize,
    sets: BTreeSet<Subset>,
}

impl Family {
    pub fn new(universe: usize, sets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        if universe == 0 || universe > MAX_UNIVERSE {
            return Err(Error::PreconditionViolated(format!(
                "universe size must be in 1..={MAX_UNIVERSE}"
            )));
        }
        let sets: BTreeSet<Subset> = sets.into_iter().collect();
        if let Some(bad) = sets.iter().find(|&&s| s & !full(universe) != 0) {
            return Err(Error::PreconditionViolated(format!(
                "subset {bad:#b} is not inside a universe of size {universe}"
            )));
        }
        Ok(Self { universe, sets })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &BTreeSet<Subset> {
        &self.sets
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.sets.contains(&s)
    }

    fn full(&self) -> Subset {
        full(self.universe)
    }

    /// Filter axioms: nonempty, no empty set, closed under pairwise
    /// intersection, upward closed.
    pub fn is_filter(&self) -> bool {
        let nonempty = !self.sets.is_empty();
        let proper = !self.contains(0);
        let meets = self
            .sets
            .iter()
            .all(|&a| self.sets.iter().all(|&b| self.contains(a & b)));
        let all = self.full();
        let upward = self.sets.iter().all(|&a| {
            // every superset of a: a | t for t ranging over subsets of the complement
            let rest = all & !a;
            let mut t = rest;
            loop {
                if !self.contains(a | t) {
                    return false;
                }
                if t == 0 {
                    return true;
                }
                t = (t - 1) & rest;
            }
        });
        nonempty && proper && meets && upward
    }

    /// A filter containing every subset or its complement.
    pub fn is_ultrafilter(&self) -> bool {
        let all = self.full();
        self.is_filter() && (0..=all).all(|s| self.contains(s) || self.contains(all & !s))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &s in &self.sets {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            let items: Vec<String> = elements(s).map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// Parses `{0},{0,1},{}` into subsets; the universe is given separately.
pub fn parse_subsets(text: &str) -> Result<Vec<Subset>> {
    let bad = |msg: &str| Error::PreconditionViolated(format!("bad family syntax: {msg}"));
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
        let close = open.find('}').ok_or_else(|| bad("missing '}'"))?;
        let mut set: Subset = 0;
        for item in open[..close]
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let i: u32 = item
                .parse()
                .map_err(|_| bad("element is not a natural number"))?;
            if i >= 32 {
                return Err(bad("element out of range"));
            }
            set |= 1 << i;
        }
        out.push(set);
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        }
    }
    Ok(out)
}

/// Smallest universe containing every element mentioned.
pub fn implied_universe(sets: &[Subset]) -> usize {
    sets.iter()
        .map(|&s| 32 - s.leading_zeros() as usize)
        .max()
        .unwrap_or(0)
        .max(1)
}

impl FromStr for Family {
    type Err = Error;

    /// Family text with the universe inferred from the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let sets = parse_subsets(s)?;
        Family::new(implied_universe(&sets), sets)
    }
}

/// A family known to satisfy the filter axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFilter(Family);

impl TryFrom<Family> for FiniteFilter {
    type Error = Error;

    fn try_from(family: Family) -> Result<Self> {
        if family.is_filter() {
            Ok(Self(family))
        } else {
            Err(Error::NotAFilter)
        }
    }
}

impl FiniteFilter {
    /// All sets containing `generator`.
    pub fn principal(universe: usize, generator: Subset) -> Result<Self> {
        let all = full(universe.min(MAX_UNIVERSE));
        let sets = (0..=all).filter(|s| s & generator == generator);
        Self::try_from(Family::new(universe, sets)?)
    }

    /// `{Λ}`.
    pub fn trivial(universe: usize) -> Result<Self> {
        Self::principal(universe, full(universe))
    }

    /// The cofinite sets. On a finite universe every subset is cofinite,
    /// including ∅, so the construction never yields a filter.
    pub fn frechet(universe: usize) -> Result<Self> {
        let all = full(universe.min(MAX_UNIVERSE));
        let cofinite: Vec<Subset> = (0..=all).collect();
        if cofinite.contains(&0) {
            return Err(Error::FrechetNeedsInfinite);
        }
        Self::try_from(Family::new(universe, cofinite)?)
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn universe(&self) -> usize {
        self.0.universe
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.0.contains(s)
    }

    pub fn is_ultrafilter(&self) -> bool {
        self.0.is_ultrafilter()
    }

    /// Intersection of all members; the filter is the principal filter it
    /// generates.
    pub fn generator(&self) -> Subset {
        self.0.sets.iter().fold(self.0.full(), |acc, &s| acc & s)
    }
}

impl fmt::Display for FiniteFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A function `Λ → ℚ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteVector(Vec<Rational>);

impl FiniteVector {
    pub fn new(values: Vec<Rational>) -> Self {
        Self(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self(
            values
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn constant(universe: usize, r: Rational) -> Self {
        Self(vec![r; universe])
    }

    /// 1 on `s`, 0 elsewhere.
    pub fn indicator(universe: usize, s: Subset) -> Self {
        Self(
            (0..universe)
                .map(|i| {
                    if s & (1 << i) != 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        )
    }

    /// A vector whose zero set is exactly `z`: `λ + 1` off `z`.
    pub fn with_zero_set(universe: usize, z: Subset) -> Self {
        Self(
            (0..universe)
                .map(|i| {
                    if z & (1 << i) != 0 {
                        Rational::zero()
                    } else {
                        Rational::from_integer((i as i64 + 1).into())
                    }
                })
                .collect(),
        )
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Z(x) = {λ : x(λ) = 0}`.
    pub fn zero_set(&self) -> Subset {
        self.where_true(|v| v.is_zero())
    }

    fn where_true(&self, pred: impl Fn(&Rational) -> bool) -> Subset {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| pred(v))
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// Pointwise reciprocal, 0 where the entry is 0.
    pub fn pseudo_inverse(&self) -> Self {
        Self(
            self.0
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        Rational::zero()
                    } else {
                        v.recip()
                    }
                })
                .collect(),
        )
    }
}

fn check_len(f: &FiniteFilter, xs: &[&FiniteVector]) -> Result<()> {
    if xs.iter().any(|x| x.len() != f.universe()) {
        return Err(Error::PreconditionViolated(
            "vector length differs from universe size".into(),
        ));
    }
    Ok(())
}

fn agreement_set(
    x: &FiniteVector,
    y: &FiniteVector,
    pred: impl Fn(&Rational, &Rational) -> bool,
) -> Subset {
    x.0.iter()
        .zip(&y.0)
        .enumerate()
        .filter(|(_, (a, b))| pred(a, b))
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// `x ≈_F y`: the agreement set belongs to `F`.
pub fn rp_equal(f: &FiniteFilter, x: &FiniteVector, y: &FiniteVector) -> Result<bool> {
    check_len(f, &[x, y])?;
    Ok(f.contains(agreement_set(x, y, |a, b| a == b)))
}

/// `(x)_F <= (y)_F`: the dominance set belongs to `F`.
pub fn rp_leq(f: &FiniteFilter, x: &FiniteVector, y: &FiniteVector) -> Result<bool> {
    check_len(f, &[x, y])?;
    Ok(f.contains(agreement_set(x, y, |a, b| a <= b)))
}

/// Ideal of `ℚ^Λ`, stored as its zero-set family `{Z(x) : x ∈ I}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteIdeal {
    zero_sets: FiniteFilter,
}

impl FiniteIdeal {
    pub fn universe(&self) -> usize {
        self.zero_sets.universe()
    }

    pub fn zero_set_family(&self) -> &FiniteFilter {
        &self.zero_sets
    }

    pub fn contains(&self, x: &FiniteVector) -> bool {
        x.len() == self.universe() && self.zero_sets.contains(x.zero_set())
    }
}

/// `F ↦ I_F = {x : Z(x) ∈ F}`.
pub fn filter_to_ideal(f: &FiniteFilter) -> FiniteIdeal {
    FiniteIdeal {
        zero_sets: f.clone(),
    }
}

/// `I ↦ F_I = {Z(x) : x ∈ I}`, collected by testing one vector per zero
/// pattern; membership in an ideal of this form depends only on `Z(x)`.
pub fn ideal_to_filter(ideal: &FiniteIdeal) -> Result<FiniteFilter> {
    let n = ideal.universe();
    let sets = (0..=full(n)).filter(|&z| ideal.contains(&FiniteVector::with_zero_set(n, z)));
    FiniteFilter::try_from(Family::new(n, sets)?)
}

/// Whether every `x` with `Z(x) ∉ F` has an inverse modulo `≈_F`.
///
/// For any `y`, `{x·y = 1} ⊆ Λ ∖ Z(x)`, and the pointwise pseudo-inverse
/// attains that bound, so testing it on one representative per zero
/// pattern decides the question for all of `ℚ^Λ`.
pub fn quotient_is_field(f: &FiniteFilter) -> bool {
    let n = f.universe();
    let one = FiniteVector::constant(n, Rational::one());
    let zero = FiniteVector::constant(n, Rational::zero());
    (0..=full(n)).all(|z| {
        let x = FiniteVector::with_zero_set(n, z);
        if rp_equal(f, &x, &zero).expect("lengths match") {
            return true;
        }
        rp_equal(f, &x.mul(&x.pseudo_inverse()), &one).expect("lengths match")
    })
}

/// Two vectors incomparable under the reduced-power order of a filter
/// that is not an ultrafilter.
pub fn incomparable_witness(f: &FiniteFilter) -> Result<(FiniteVector, FiniteVector)> {
    let n = f.universe();
    let all = full(n);
    let a = (0..=all)
        .find(|&a| !f.contains(a) && !f.contains(all & !a))
        .ok_or(Error::IsUltrafilter)?;
    Ok((
        FiniteVector::indicator(n, a),
        FiniteVector::indicator(n, all & !a),
    ))
}

fn decode_family(universe: usize, code: u64) -> Family {
    let sets = (0..(1u64 << universe))
        .filter(|s| code & (1 << s) != 0)
        .map(|s| s as Subset);
    Family {
        universe,
        sets: sets.collect(),
    }
}

fn check_budget(universe: usize) -> Result<()> {
    if universe == 0 {
        return Err(Error::PreconditionViolated(
            "universe must be nonempty".into(),
        ));
    }
    if universe > MAX_ENUMERATION {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive enumeration supports N <= {MAX_ENUMERATION}"
        )));
    }
    Ok(())
}

/// Every filter on `Λ`, found by testing all `2^(2^N)` families.
pub fn enumerate_filters(universe: usize) -> Result<Vec<FiniteFilter>> {
    check_budget(universe)?;
    let families = 1u64 << (1u64 << universe);
    let mut out = batch::filter_map_range(families, |code| {
        let fam = decode_family(universe, code);
        fam.is_filter().then_some(FiniteFilter(fam))
    });
    out.sort();
    Ok(out)
}

pub fn enumerate_ultrafilters(universe: usize) -> Result<Vec<FiniteFilter>> {
    Ok(enumerate_filters(universe)?
        .into_iter()
        .filter(FiniteFilter::is_ultrafilter)
        .collect())
}
