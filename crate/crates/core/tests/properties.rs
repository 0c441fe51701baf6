use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ultrafield::gpoly::GPoly;
use ultrafield::hyper::{Hyper, MagnitudeClass, Sign};
use ultrafield::limits::{self, LimitResult};
use ultrafield::monads::{decompose, is_finite, is_infinitesimal, same_galaxy, same_monad};
use ultrafield::rational::{frac, Rational};
use ultrafield::similarity::{interval_case, reciprocal_map, translated_reciprocal};
use ultrafield::worlds::{
    is_symmetric_difference_witness, monad_world_witness, nested_chain, outside_point, ww_contains,
    ww_relation, World, WorldRelation, DEFAULT_PROBES,
};

fn arb_rational(max: i64) -> impl Strategy<Value = Rational> {
    (-max..=max, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn arb_exponent(max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(|q| (-3 * q..=3 * q).prop_map(move |p| frac(p, q)))
}

fn arb_gpoly_with(max_den: i64) -> impl Strategy<Value = GPoly> {
    prop::collection::vec((arb_exponent(max_den), arb_rational(1000)), 0..=4)
        .prop_map(GPoly::from_terms)
}

fn arb_gpoly() -> impl Strategy<Value = GPoly> {
    arb_gpoly_with(3)
}

fn arb_hyper_with(max_den: i64) -> impl Strategy<Value = Hyper> {
    (arb_gpoly_with(max_den), arb_gpoly_with(max_den)).prop_map(|(n, d)| {
        Hyper::from_parts(n, if d.is_zero() { GPoly::one() } else { d }).unwrap()
    })
}

fn arb_hyper() -> impl Strategy<Value = Hyper> {
    arb_hyper_with(3)
}

fn arb_positive() -> impl Strategy<Value = Hyper> {
    arb_hyper()
        .prop_filter("nonzero", |h| !h.is_zero())
        .prop_map(|h| h.abs())
}

fn arb_world() -> impl Strategy<Value = World> {
    (arb_hyper(), arb_positive()).prop_map(|(c, s)| World::new(c, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gpoly_ring_laws(a in arb_gpoly(), b in arb_gpoly(), c in arb_gpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn gpoly_invariants_hold(a in arb_gpoly(), b in arb_gpoly()) {
        for p in [&a + &b, &a * &b, &a - &b] {
            let t = p.terms();
            prop_assert!(t.windows(2).all(|w| w[0].exp > w[1].exp));
            prop_assert!(t.iter().all(|t| !t.coef.is_zero()));
        }
    }

    #[test]
    fn eval_is_ring_homomorphism(a in arb_gpoly(), b in arb_gpoly(), n in 1u64..40) {
        let d = num_integer::Integer::lcm(&a.exponent_denominator(), &b.exponent_denominator());
        let d = u64::try_from(d).unwrap();
        let ev = |p: &GPoly| p.eval(n, d).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
    }

    #[test]
    fn root_bound_certifies_eventual_sign(a in arb_gpoly(), offsets in prop::collection::vec(0u64..1000, 10)) {
        prop_assume!(!a.is_zero());
        let d = a.exponent_denominator();
        let n0 = BigInt::from(a.root_bound().unwrap());
        let s0 = BigInt::from(a.scan_bound().unwrap());
        prop_assert!(s0 <= n0);
        let lead = a.lead_coef().unwrap().signum();
        for off in offsets {
            for start in [&n0, &s0] {
                let v = a.eval_at(&(start + BigInt::from(off)), &d).unwrap().unwrap();
                prop_assert_eq!(v.signum(), lead.clone());
            }
        }
    }

    #[test]
    fn field_axioms(x in arb_hyper(), y in arb_hyper(), z in arb_hyper()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), Hyper::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), Hyper::one());
        }
    }

    #[test]
    fn order_axioms(x in arb_hyper(), y in arb_hyper(), t in arb_hyper()) {
        let xy = x.compare(&y);
        prop_assert_eq!(xy == Sign::Zero, x == y);
        prop_assert_eq!(y.compare(&x), match xy {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
            Sign::Zero => Sign::Zero,
        });
        if x <= y {
            prop_assert!(&x + &t <= &y + &t);
            if t.signum() != Sign::Negative {
                prop_assert!(&x * &t <= &y * &t);
            }
        }
    }

    #[test]
    fn standard_part_is_homomorphism(x in arb_hyper(), y in arb_hyper()) {
        prop_assume!(is_finite(&x) && is_finite(&y));
        let (sx, sy) = (x.standard_part().unwrap(), y.standard_part().unwrap());
        prop_assert_eq!((&x + &y).standard_part().unwrap(), &sx + &sy);
        prop_assert_eq!((&x * &y).standard_part().unwrap(), &sx * &sy);
    }

    #[test]
    fn infinitesimal_means_inside_every_rational_interval(x in arb_hyper()) {
        let inside_all = (0..=6).all(|k| {
            let r = Hyper::from_rational(Rational::new(BigInt::one(), BigInt::from(10).pow(k)));
            -&r < x && x < r
        });
        prop_assert_eq!(is_infinitesimal(&x), inside_all);
    }

    #[test]
    fn oracle_agrees_on_integer_exponents(x in arb_hyper_with(1), y in arb_hyper_with(1)) {
        prop_assert!(x.oracle_agrees(&y, 5).unwrap());
    }

    #[test]
    fn oracle_agrees_on_rational_exponents(x in arb_hyper(), y in arb_hyper()) {
        prop_assert!(x.oracle_agrees(&y, 3).unwrap());
    }

    #[test]
    fn monad_and_galaxy_are_equivalences(x in arb_hyper(), y in arb_hyper(), z in arb_hyper()) {
        for rel in [same_monad as fn(&Hyper, &Hyper) -> bool, same_galaxy] {
            prop_assert!(rel(&x, &x));
            prop_assert_eq!(rel(&x, &y), rel(&y, &x));
            if rel(&x, &y) && rel(&y, &z) {
                prop_assert!(rel(&x, &z));
            }
        }
    }

    #[test]
    fn finite_elements_sit_in_a_standard_monad(x in arb_hyper()) {
        if is_finite(&x) {
            let st = Hyper::from_rational(x.standard_part().unwrap());
            prop_assert!(is_infinitesimal(&(&x - &st)));
        }
    }

    #[test]
    fn decompose_round_trip(x in arb_hyper()) {
        let d = decompose(&x).unwrap();
        prop_assert_eq!(d.recompose(), x);
        prop_assert!(d.infinite_part.is_zero() || d.infinite_part.is_infinitely_large());
        prop_assert!(d.infinite_part.den().is_one());
        prop_assert!(d.infinite_part.num().terms().iter().all(|t| t.exp.is_positive()));
        prop_assert!(d.infinitesimal_part.is_infinitesimal());
    }

    #[test]
    fn relation_symmetry(a in arb_world(), b in arb_world()) {
        prop_assert_eq!(ww_relation(&a, &b).swapped(), ww_relation(&b, &a));
    }

    #[test]
    fn relation_matches_probes(a in arb_world(), b in arb_world()) {
        match ww_relation(&a, &b) {
            WorldRelation::SecondInsideFirst => {
                prop_assert!(b.probes(DEFAULT_PROBES).all(|p| ww_contains(&a, &p)));
            }
            WorldRelation::FirstInsideSecond => {
                prop_assert!(a.probes(DEFAULT_PROBES).all(|p| ww_contains(&b, &p)));
            }
            WorldRelation::Same => {
                prop_assert!(b.probes(DEFAULT_PROBES).all(|p| ww_contains(&a, &p)));
                prop_assert!(a.probes(DEFAULT_PROBES).all(|p| ww_contains(&b, &p)));
            }
            WorldRelation::Disjoint => {
                prop_assert!(b.probes(DEFAULT_PROBES).all(|p| !ww_contains(&a, &p)));
                prop_assert!(a.probes(DEFAULT_PROBES).all(|p| !ww_contains(&b, &p)));
            }
        }
    }

    #[test]
    fn recentering_keeps_the_world(w in arb_world(), s in arb_hyper()) {
        if ww_contains(&w, &s) {
            let moved = World::new(s, w.step().clone()).unwrap();
            prop_assert_eq!(ww_relation(&moved, &w), WorldRelation::Same);
        }
        prop_assert!(ww_contains(&World::new(w.center().clone(), Hyper::one()).unwrap(), w.center()));
    }

    #[test]
    fn multiple_steps_give_the_same_world(t in arb_hyper(), u in arb_positive(), m in 1i64..=10) {
        let a = World::new(t.clone(), u.clone()).unwrap();
        let b = World::new(t, u.scale(&Rational::from_integer(m.into()))).unwrap();
        prop_assert_eq!(ww_relation(&a, &b), WorldRelation::Same);
    }

    #[test]
    fn standard_worlds_cover_the_rationals(t in arb_rational(100), u in arb_rational(100), s in arb_rational(100)) {
        prop_assume!(u.is_positive());
        let w = World::new(Hyper::from_rational(t), Hyper::from_rational(u)).unwrap();
        prop_assert!(ww_contains(&w, &Hyper::from_rational(s)));
    }

    #[test]
    fn witnesses_are_valid(w in arb_world()) {
        prop_assert!(is_symmetric_difference_witness(&w, &monad_world_witness(&w)));
        prop_assert!(!ww_contains(&w, &outside_point(&w)));
    }

    #[test]
    fn chains_nest(w in arb_world()) {
        let chain = nested_chain(&w, 5);
        for pair in chain.windows(2) {
            prop_assert_eq!(ww_relation(&pair[1], &pair[0]), WorldRelation::FirstInsideSecond);
        }
        prop_assert!(chain[5].probes(DEFAULT_PROBES).all(|p| ww_contains(&chain[0], &p)));
    }

    #[test]
    fn reciprocal_reverses_order(x in arb_positive(), y in arb_positive()) {
        prop_assume!(x.is_infinitely_large() && y.is_infinitely_large() && x < y);
        let (rx, ry) = (reciprocal_map(&x).unwrap(), reciprocal_map(&y).unwrap());
        prop_assert_eq!(ry.compare(&rx), Sign::Negative);
        prop_assert!(rx.is_infinitesimal() && !rx.is_zero());
        prop_assert_eq!(rx.inv().unwrap(), x);
    }

    #[test]
    fn translated_reciprocal_lands_in_interval(t in arb_hyper(), t0 in arb_hyper(), u in arb_positive()) {
        prop_assume!(t.abs() >= u);
        let img = translated_reciprocal(&t, &t0, &u).unwrap();
        let r = u.inv().unwrap();
        prop_assert!(&t0 - &r <= img && img <= &t0 + &r);
        prop_assert!(img != t0);
    }

    #[test]
    fn case_flags_are_consistent(t0 in arb_hyper(), u in arb_positive()) {
        let c = interval_case(&t0, &u).unwrap();
        prop_assert!(!(c.disjoint_from_gal0 && c.intersects_gal0));
        prop_assert!(!c.subset_of_gal0 || c.intersects_gal0);
        prop_assert_eq!(c.length_class, Hyper::from_int(2).div(&u).unwrap().classify());
        if t0.classify() == MagnitudeClass::Infinitesimal {
            let shifted = interval_case(&(&t0 + &Hyper::one()), &u).unwrap();
            prop_assert_eq!(shifted.outcome_id, c.outcome_id);
        }
    }

    #[test]
    fn limit_is_monad_membership(x in arb_hyper_with(1)) {
        match limits::ns_limit(&x).unwrap() {
            LimitResult::Converges(l) => {
                prop_assert!(same_monad(&x, &Hyper::from_rational(l)));
                prop_assert!(limits::cauchy_index(&x, &frac(1, 10)).is_ok());
            }
            _ => {
                prop_assert!(!is_finite(&x));
                prop_assert!(limits::cauchy_index(&x, &frac(1, 10)).is_err());
            }
        }
    }
}
