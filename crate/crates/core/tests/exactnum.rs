use proptest::prelude::*;
use slopeforge::exactnum::{frac, padic_valuation, ExactScalar, ExtendedValuation};
use slopeforge::{Cyclotomic, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !num_traits::Zero::is_zero(q))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u64, 3, 4, 5, 6, 8, 12]), prop::collection::vec((0u64..12, rational()), 0..4))
        .prop_map(|(n, terms)| Cyclotomic::from_exponents(n, &terms))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert!(ExactScalar::fract(&a) >= frac(0, 1) && ExactScalar::fract(&a) < frac(1, 1));
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Cyclotomic::from_int(0), a.clone());
        if let Ok(inv) = c.try_inv() {
            prop_assert_eq!(&c * &inv, Cyclotomic::from_int(1));
        }
    }

    #[test]
    fn valuation_is_additive(a in nonzero_rational(), b in nonzero_rational(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let va = padic_valuation(&a, p).unwrap().finite().unwrap();
        let vb = padic_valuation(&b, p).unwrap().finite().unwrap();
        let vab = padic_valuation(&(&a * &b), p).unwrap().finite().unwrap();
        prop_assert_eq!(vab, va + vb);
    }

    #[test]
    fn rational_values_have_conductor_one(a in cyclotomic()) {
        let n = a.conductor();
        let trace = (1..=n)
            .filter(|k| num_integer::gcd(*k, n) == 1)
            .fold(Cyclotomic::from_int(0), |acc, k| &acc + &a.galois(k));
        let norm = a.norm();
        prop_assert!(trace.is_rational());
        prop_assert_eq!(trace.minimal().conductor(), 1);
        prop_assert_eq!(Cyclotomic::from_scalar(norm).conductor(), 1);
    }

    #[test]
    fn json_round_trip(a in cyclotomic()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn valuation_examples() {
    assert_eq!(padic_valuation(&frac::<Rational>(3, 4), 2).unwrap(), ExtendedValuation::Finite(-2));
    assert_eq!(padic_valuation(&frac::<Rational>(0, 5), 5).unwrap(), ExtendedValuation::Infinite);
    assert_eq!(padic_valuation(&frac::<Rational>(9, 5), 3).unwrap(), ExtendedValuation::Finite(2));
    assert!(padic_valuation(&frac::<Rational>(1, 1), 4).is_err());
}

#[test]
fn root_of_unity_identities() {
    let z3 = Cyclotomic::root_of_unity(3, 1);
    assert_eq!(&z3 + &Cyclotomic::root_of_unity(3, 2), Cyclotomic::from_int(-1));
    let i = Cyclotomic::root_of_unity(4, 1);
    let minus_one = &i * &i;
    assert_eq!(minus_one, Cyclotomic::from_int(-1));
    assert_eq!(minus_one.conductor(), 1);
    let mixed = &z3 * &i;
    assert_eq!(mixed.conductor(), 12);
    assert_eq!(&mixed * &mixed.conj(), Cyclotomic::from_int(1));
}

#[test]
fn rational_parsing() {
    assert_eq!(Rational::parse("6/4"), Some(frac(3, 2)));
    assert_eq!(Rational::parse("-7"), Some(frac(-7, 1)));
    assert_eq!(Rational::parse("1/0"), None);
    assert_eq!(Rational::parse("x"), None);
    assert_eq!(frac::<Rational>(0, 3).to_string(), "0");
}
