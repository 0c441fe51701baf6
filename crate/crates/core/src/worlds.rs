//! Walkable worlds `WW(t, u)`: the points reachable from `t` by finitely
//! many steps of length `u`.
//!
//! Worlds are intensional handles `(center, step)`. Set-level facts
//! (equality, disjointness, nesting) are decided by [`ww_relation`], never
//! by comparing the handles.

use num_traits::One;

use crate::error::{Error, Result};
use crate::hyper::{Hyper, MagnitudeClass, Sign};
use crate::rational::Rational;

/// Default number of probe points `center + k·step`, `k ∈ −10..=10`.
pub const DEFAULT_PROBES: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct World {
    center: Hyper,
    step: Hyper,
}

impl World {
    pub fn new(center: Hyper, step: Hyper) -> Result<Self> {
        if step.signum() != Sign::Positive {
            return Err(Error::PreconditionViolated(
                "world step must be positive".into(),
            ));
        }
        Ok(Self { center, step })
    }

    /// `WW(0, 1)`, which is `Gal(0)`.
    pub fn unit() -> Self {
        Self {
            center: Hyper::zero(),
            step: Hyper::one(),
        }
    }

    pub fn center(&self) -> &Hyper {
        &self.center
    }

    pub fn step(&self) -> &Hyper {
        &self.step
    }

    /// `center + k·step`.
    pub fn point(&self, k: i64) -> Hyper {
        &self.center + &self.step.scale(&Rational::from_integer(k.into()))
    }

    /// `count` points `center + k·step` with `k` running symmetrically
    /// around 0.
    pub fn probes(&self, count: usize) -> impl Iterator<Item = Hyper> + '_ {
        let lo = -((count / 2) as i64);
        (0..count as i64).map(move |i| self.point(lo + i))
    }
}

/// Relation between two worlds. Overlapping-but-not-nested is impossible,
/// so there is no variant for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WorldRelation {
    Same,
    Disjoint,
    FirstInsideSecond,
    SecondInsideFirst,
}

impl WorldRelation {
    pub fn swapped(self) -> Self {
        match self {
            WorldRelation::FirstInsideSecond => WorldRelation::SecondInsideFirst,
            WorldRelation::SecondInsideFirst => WorldRelation::FirstInsideSecond,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WorldRelation::Same => "same",
            WorldRelation::Disjoint => "disjoint",
            WorldRelation::FirstInsideSecond => "first-inside-second",
            WorldRelation::SecondInsideFirst => "second-inside-first",
        }
    }
}

/// Magnitude pairing of two steps `v <= u`: 1 both infinitesimal, 2 finite/infinitesimal, 3 both finite,
/// 4 infinite/infinitesimal, 5 infinite/finite, 6 both infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepSituation {
    BothInfinitesimal,
    FiniteInfinitesimal,
    BothFinite,
    InfiniteInfinitesimal,
    InfiniteFinite,
    BothInfinite,
}

impl StepSituation {
    pub fn index(self) -> u8 {
        match self {
            StepSituation::BothInfinitesimal => 1,
            StepSituation::FiniteInfinitesimal => 2,
            StepSituation::BothFinite => 3,
            StepSituation::InfiniteInfinitesimal => 4,
            StepSituation::InfiniteFinite => 5,
            StepSituation::BothInfinite => 6,
        }
    }
}

fn finite_steps(gap: &Hyper, step: &Hyper) -> bool {
    gap.ratio_class(step).expect("step is positive") != MagnitudeClass::InfinitelyLarge
}

pub fn ww_contains(world: &World, s: &Hyper) -> bool {
    finite_steps(&(s - &world.center), &world.step)
}

pub fn ww_relation(first: &World, second: &World) -> WorldRelation {
    let ratio = first
        .step
        .ratio_class(&second.step)
        .expect("step is positive");
    let gap = &first.center - &second.center;
    let in_first_steps = || finite_steps(&gap, &first.step);
    let in_second_steps = || finite_steps(&gap, &second.step);
    let (reachable, nested) = match ratio {
        MagnitudeClass::Appreciable => (in_first_steps(), WorldRelation::Same),
        MagnitudeClass::InfinitelyLarge => (in_first_steps(), WorldRelation::SecondInsideFirst),
        MagnitudeClass::Infinitesimal => (in_second_steps(), WorldRelation::FirstInsideSecond),
    };
    if reachable {
        nested
    } else {
        WorldRelation::Disjoint
    }
}

/// Requires `0 < v <= u`.
pub fn step_situation(u: &Hyper, v: &Hyper) -> Result<StepSituation> {
    if v.signum() != Sign::Positive || v > u {
        return Err(Error::PreconditionViolated(
            "step situation needs 0 < v <= u".into(),
        ));
    }
    use MagnitudeClass::*;
    use StepSituation::*;
    Ok(match (u.classify(), v.classify()) {
        (Infinitesimal, Infinitesimal) => BothInfinitesimal,
        (Appreciable, Infinitesimal) => FiniteInfinitesimal,
        (Appreciable, Appreciable) => BothFinite,
        (InfinitelyLarge, Infinitesimal) => InfiniteInfinitesimal,
        (InfinitelyLarge, Appreciable) => InfiniteFinite,
        (InfinitelyLarge, InfinitelyLarge) => BothInfinite,
        _ => unreachable!("v <= u forces class(v) <= class(u)"),
    })
}

/// The order isomorphism `WW(t, u) → WW(0, 1)`, `s ↦ (s − t)/u`.
pub fn ww_map_to_unit(world: &World, s: &Hyper) -> Result<Hyper> {
    let image = (s - &world.center).div(&world.step)?;
    if image.is_finite() {
        Ok(image)
    } else {
        Err(Error::NotMember)
    }
}

fn confirm_inside(inner: &World, outer: &World, probes: usize) -> bool {
    inner.probes(probes).all(|p| ww_contains(outer, &p))
        && (1..=2).any(|k| !ww_contains(inner, &outer.point(k)))
}

/// Checks every pair of the family: the computed relation is never an
/// overlap without nesting (by construction), and each relation is
/// confirmed on probe points. Nested pairs are also checked to be strict.
pub fn is_nesting(family: &[World], probes: usize) -> bool {
    family.iter().enumerate().all(|(i, a)| {
        family[i + 1..].iter().all(|b| match ww_relation(a, b) {
            WorldRelation::Same => {
                a.probes(probes).all(|p| ww_contains(b, &p))
                    && b.probes(probes).all(|p| ww_contains(a, &p))
            }
            WorldRelation::FirstInsideSecond => confirm_inside(a, b, probes),
            WorldRelation::SecondInsideFirst => confirm_inside(b, a, probes),
            WorldRelation::Disjoint => {
                a.probes(probes).all(|p| !ww_contains(b, &p))
                    && b.probes(probes).all(|p| !ww_contains(a, &p))
            }
        })
    })
}

/// `W₀ = world`, `Wᵢ₊₁ = WW(center, stepᵢ · ε)`; returns `k + 1` worlds.
pub fn nested_chain(world: &World, k: usize) -> Vec<World> {
    let eps = Hyper::eps();
    let mut out = Vec::with_capacity(k + 1);
    out.push(world.clone());
    for i in 0..k {
        let step = &out[i].step * &eps;
        out.push(World {
            center: world.center.clone(),
            step,
        });
    }
    out
}

/// An element of the symmetric difference of `monad(0)` and `world`.
pub fn monad_world_witness(world: &World) -> Hyper {
    if !ww_contains(world, &Hyper::zero()) {
        return Hyper::zero();
    }
    if world.step.is_infinitesimal() {
        // ω^{d/2} is infinitesimal but infinitely many steps away from 0.
        let d = world.step.degree().expect("step is nonzero");
        return Hyper::monomial(d / Rational::from_integer(2.into()), Rational::one());
    }
    // The world holds all of monad(0); at most one of c ± u is infinitesimal.
    let up = world.point(1);
    if up.is_infinitesimal() {
        world.point(-1)
    } else {
        up
    }
}

/// `center + step·ω`, a point outside `world`.
pub fn outside_point(world: &World) -> Hyper {
    &world.center + &(&world.step * &Hyper::omega())
}

/// True when `x` belongs to exactly one of `monad(0)` and `world`.
pub fn is_symmetric_difference_witness(world: &World, x: &Hyper) -> bool {
    x.is_infinitesimal() != ww_contains(world, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn w() -> Hyper {
        Hyper::omega()
    }

    fn e() -> Hyper {
        Hyper::eps()
    }

    fn c(n: i64) -> Hyper {
        Hyper::from_int(n)
    }

    fn ww(t: Hyper, u: Hyper) -> World {
        World::new(t, u).unwrap()
    }

    #[test]
    fn step_must_be_positive() {
        assert!(World::new(c(0), c(0)).is_err());
        assert!(World::new(c(0), -e()).is_err());
    }

    #[test]
    fn membership() {
        assert!(ww_contains(&World::unit(), &c(1_000_000_000)));
        assert!(!ww_contains(&World::unit(), &w()));
        assert!(ww_contains(&ww(w(), e()), &(w() + e().scale(&int(5)))));
    }

    #[test]
    fn relations() {
        assert_eq!(
            ww_relation(&World::unit(), &ww(c(5), c(3))),
            WorldRelation::Same
        );
        assert_eq!(
            ww_relation(&World::unit(), &ww(w(), c(1))),
            WorldRelation::Disjoint
        );
        assert_eq!(
            ww_relation(&World::unit(), &ww(c(0), e())),
            WorldRelation::SecondInsideFirst
        );
        assert_eq!(
            ww_relation(&ww(c(0), e()), &World::unit()),
            WorldRelation::FirstInsideSecond
        );
    }

    #[test]
    fn situations() {
        assert_eq!(step_situation(&c(1), &e()).unwrap().index(), 2);
        assert_eq!(step_situation(&w(), &e()).unwrap().index(), 4);
        assert_eq!(step_situation(&e(), &(e() * e())).unwrap().index(), 1);
        assert_eq!(step_situation(&c(3), &c(2)).unwrap().index(), 3);
        assert_eq!(step_situation(&w(), &c(2)).unwrap().index(), 5);
        assert_eq!(step_situation(&(w() * w()), &w()).unwrap().index(), 6);
        assert!(step_situation(&e(), &c(1)).is_err());
        assert!(step_situation(&c(1), &c(0)).is_err());
    }

    #[test]
    fn map_to_unit() {
        let world = ww(w(), e());
        assert_eq!(
            ww_map_to_unit(&world, &(w() + e().scale(&int(3)))).unwrap(),
            c(3)
        );
        assert!(ww_map_to_unit(&world, &w()).unwrap().is_zero());
        let a = ww_map_to_unit(&world, &(w() - e())).unwrap();
        let b = ww_map_to_unit(&world, &(w() + e() * e())).unwrap();
        assert!(a < b);
        assert_eq!(ww_map_to_unit(&world, &c(0)), Err(Error::NotMember));
    }

    #[test]
    fn nestings() {
        let fam = [World::unit(), ww(c(0), e()), ww(c(0), e() * e())];
        assert!(is_nesting(&fam, DEFAULT_PROBES));
        assert!(is_nesting(&[World::unit(), ww(w(), c(1))], DEFAULT_PROBES));
        assert!(is_nesting(&[World::unit(), ww(c(5), c(2))], DEFAULT_PROBES));
    }

    #[test]
    fn chains() {
        let chain = nested_chain(&World::unit(), 3);
        assert_eq!(chain.len(), 4);
        assert_eq!(chain[3].step(), &(e() * e() * e()));
        for pair in chain.windows(2) {
            assert_eq!(
                ww_relation(&pair[1], &pair[0]),
                WorldRelation::FirstInsideSecond
            );
        }
        assert!(chain[3]
            .probes(DEFAULT_PROBES)
            .all(|p| ww_contains(&chain[0], &p)));
    }

    #[test]
    fn witnesses() {
        assert_eq!(monad_world_witness(&World::unit()), c(1));
        let x = monad_world_witness(&ww(c(0), e()));
        assert_eq!(x, Hyper::monomial(frac(-1, 2), int(1)));
        assert_eq!(monad_world_witness(&ww(w(), c(1))), c(0));
        let odd = ww(c(-1) + e(), c(1));
        assert!(is_symmetric_difference_witness(
            &odd,
            &monad_world_witness(&odd)
        ));
        assert!(!ww_contains(&odd, &outside_point(&odd)));
    }
}
