//! Self-similarity maps between the infinitely large and the infinitesimal
//! parts of the field, and the classification of the target intervals
//! `J = [t0 − 1/u, t0 + 1/u] ∖ {t0}`.

use crate::error::{Error, Result};
use crate::hyper::{Hyper, MagnitudeClass, Sign};
use crate::monads::same_monad;

/// `t ↦ 1/t` from infinitely large elements onto nonzero infinitesimals.
/// Order reversing on each sign component.
pub fn reciprocal_map(x: &Hyper) -> Result<Hyper> {
    if !x.is_infinitely_large() {
        return Err(Error::DomainViolation(
            "reciprocal map needs an infinitely large input".into(),
        ));
    }
    x.inv()
}

/// `t ↦ 1/t + t0` on `|t| >= u`, landing in `J`.
pub fn translated_reciprocal(t: &Hyper, t0: &Hyper, u: &Hyper) -> Result<Hyper> {
    if u.signum() != Sign::Positive {
        return Err(Error::PreconditionViolated(
            "scale u must be positive".into(),
        ));
    }
    if t.abs() < *u {
        return Err(Error::DomainViolation("t lies inside (-u, u)".into()));
    }
    Ok(&t.inv()? + t0)
}

/// Endpoints `(t0 − 1/u, t0 + 1/u)` of the closed hull of `J`.
pub fn interval_endpoints(t0: &Hyper, u: &Hyper) -> Result<(Hyper, Hyper)> {
    let r = u.inv()?;
    Ok((t0 - &r, t0 + &r))
}

/// Classification of `J` for concrete `(t0, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCase {
    /// 1..=9, from `(class(t0), class(u))`.
    pub case_id: u8,
    /// 1..=6; cases 4, 5, 6 coincide with 1, 2, 3.
    pub outcome_id: u8,
    pub subset_of_gal0: bool,
    pub contains_gal0_minus_center: bool,
    pub disjoint_from_gal0: bool,
    pub intersects_gal0: bool,
    /// `J ⊆ monad(t0)`.
    pub subset_of_monad_center: bool,
    /// Class of the length `2/u`.
    pub length_class: MagnitudeClass,
}

fn class_rank(c: MagnitudeClass) -> u8 {
    match c {
        MagnitudeClass::Appreciable => 0,
        MagnitudeClass::Infinitesimal => 1,
        MagnitudeClass::InfinitelyLarge => 2,
    }
}

fn outcome_for(case_id: u8) -> u8 {
    match case_id {
        1 | 4 => 1,
        2 | 5 => 2,
        3 | 6 => 3,
        7 => 4,
        8 => 5,
        _ => 6,
    }
}

pub fn interval_case(t0: &Hyper, u: &Hyper) -> Result<IntervalCase> {
    if u.signum() != Sign::Positive {
        return Err(Error::PreconditionViolated(
            "scale u must be positive".into(),
        ));
    }
    let case_id = 3 * class_rank(t0.classify()) + class_rank(u.classify()) + 1;
    let (lo, hi) = interval_endpoints(t0, u)?;
    let positive_infinite = |x: &Hyper| x.is_infinitely_large() && x.signum() == Sign::Positive;
    let negative_infinite = |x: &Hyper| x.is_infinitely_large() && x.signum() == Sign::Negative;
    // Gal(0) is convex with no least or greatest element, so the hull
    // meets it iff it is not entirely above or below it; removing the
    // single point t0 cannot empty that intersection.
    let intersects = !positive_infinite(&lo) && !negative_infinite(&hi);
    let length = Hyper::from_int(2).div(u)?;
    Ok(IntervalCase {
        case_id,
        outcome_id: outcome_for(case_id),
        subset_of_gal0: lo.is_finite() && hi.is_finite(),
        contains_gal0_minus_center: negative_infinite(&lo) && positive_infinite(&hi),
        disjoint_from_gal0: !intersects,
        intersects_gal0: intersects,
        subset_of_monad_center: same_monad(&lo, t0) && same_monad(&hi, t0),
        length_class: length.classify(),
    })
}

/// Canonical `(t0, u)` representatives of the nine cases, in case order.
pub fn canonical_inputs() -> [(Hyper, Hyper); 9] {
    let finite = Hyper::one;
    let small = Hyper::eps;
    let large = Hyper::omega;
    [
        (finite(), finite()),
        (finite(), small()),
        (finite(), large()),
        (small(), finite()),
        (small(), small()),
        (small(), large()),
        (large(), finite()),
        (large(), small()),
        (large(), large()),
    ]
}

/// The nine-row table for [`canonical_inputs`].
pub fn cases_table() -> Vec<(Hyper, Hyper, IntervalCase)> {
    canonical_inputs()
        .into_iter()
        .map(|(t0, u)| {
            let case = interval_case(&t0, &u).expect("canonical u is positive");
            (t0, u, case)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::same_galaxy;
    use crate::rational::frac;

    fn w() -> Hyper {
        Hyper::omega()
    }

    fn e() -> Hyper {
        Hyper::eps()
    }

    fn c(n: i64) -> Hyper {
        Hyper::from_int(n)
    }

    #[test]
    fn reciprocal() {
        assert_eq!(reciprocal_map(&w()).unwrap(), e());
        let (a, b) = (
            reciprocal_map(&w()).unwrap(),
            reciprocal_map(&(w() * w())).unwrap(),
        );
        assert_eq!(b, e() * e());
        assert!(w() < w() * w() && b < a);
        assert_eq!(reciprocal_map(&-w()).unwrap(), -e());
        assert!(matches!(
            reciprocal_map(&c(3)),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn translated() {
        let x = translated_reciprocal(&w(), &c(0), &c(1)).unwrap();
        assert_eq!(x, e());
        let y = translated_reciprocal(&c(2), &c(5), &c(1)).unwrap();
        assert_eq!(y, Hyper::from_rational(frac(11, 2)));
        let t0 = c(4);
        let a = translated_reciprocal(&w(), &t0, &c(1)).unwrap();
        let b = translated_reciprocal(&(w() * w()), &t0, &c(1)).unwrap();
        assert!(b < a);
        assert!(matches!(
            translated_reciprocal(&e(), &c(0), &c(1)),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn item_examples() {
        let one = interval_case(&c(1), &c(1)).unwrap();
        assert_eq!((one.case_id, one.outcome_id), (1, 1));
        assert!(one.subset_of_gal0);
        assert_eq!(one.length_class, MagnitudeClass::Appreciable);

        let two = interval_case(&c(1), &e()).unwrap();
        assert_eq!(two.case_id, 2);
        assert!(two.contains_gal0_minus_center && !two.subset_of_gal0);
        assert_eq!(two.length_class, MagnitudeClass::InfinitelyLarge);

        let nine = interval_case(&w(), &w()).unwrap();
        assert_eq!((nine.case_id, nine.outcome_id), (9, 6));
        assert!(nine.disjoint_from_gal0);
        assert_eq!(nine.length_class, MagnitudeClass::Infinitesimal);

        let eight = interval_case(&w(), &e()).unwrap();
        assert_eq!(eight.case_id, 8);
        assert!(eight.intersects_gal0);
        let far = interval_case(&(w() * w() * w()), &e()).unwrap();
        assert_eq!(far.case_id, 8);
        assert!(!far.intersects_gal0 && far.disjoint_from_gal0);
        assert_eq!(
            interval_case(&c(0), &c(0)).unwrap_err(),
            Error::PreconditionViolated("scale u must be positive".into())
        );
    }

    #[test]
    fn items_three_and_seven() {
        let (lo, hi) = interval_endpoints(&c(1), &w()).unwrap();
        assert!(same_monad(&lo, &c(1)) && same_monad(&hi, &c(1)));
        assert!(interval_case(&c(1), &w()).unwrap().subset_of_monad_center);
        let (lo, hi) = interval_endpoints(&w(), &c(1)).unwrap();
        for end in [lo, hi] {
            assert!(same_galaxy(&end, &w()) && !same_galaxy(&end, &c(0)));
        }
    }

    #[test]
    fn table_has_nine_rows() {
        let table = cases_table();
        let ids: Vec<u8> = table.iter().map(|r| r.2.case_id).collect();
        assert_eq!(ids, (1..=9).collect::<Vec<_>>());
        let outcomes: Vec<u8> = table.iter().map(|r| r.2.outcome_id).collect();
        assert_eq!(outcomes, vec![1, 2, 3, 1, 2, 3, 4, 5, 6]);
    }
}
